/*
   Copyright 2026 The exalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EXALG_FIELD_DESCRIPTOR_HPP
#define EXALG_FIELD_DESCRIPTOR_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "exalg/domain.hpp"
#include "exalg/gf.hpp"
#include "exalg/poly_factor.hpp"
#include "exalg/quaternion.hpp"
#include "exalg/rational.hpp"

namespace exalg {

// Runtime description of the ground arithmetic, as it appears in job files:
//   {"field":"Q"} | {"field":"GF","p":7} |
//   {"field":"GFext","p":2,"modulus":[1,1,1]} | {"field":"H"}
struct FieldDescriptor {
  DomainKind kind = DomainKind::rationals;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> modulus;  // ascending coefficients, monic

  bool operator==(const FieldDescriptor&) const = default;
};

using DomainVariant = std::variant<RationalField, GFpField, GFextField, QuaternionRing>;

// Validates the descriptor (primality of p, irreducibility of the modulus)
// and builds the arithmetic domain.
inline DomainVariant make_domain(const FieldDescriptor& fd) {
  switch (fd.kind) {
    case DomainKind::rationals:
      return RationalField{};
    case DomainKind::prime_field:
      return GFpField(fd.p);  // ctor rejects non-primes
    case DomainKind::extension_field:
      return make_extension_field(fd.p, fd.modulus);
    case DomainKind::quaternions:
      return QuaternionRing{};
  }
  throw std::invalid_argument("unknown field kind");
}

template <class D>
FieldDescriptor descriptor_of(const D& dom) {
  FieldDescriptor fd;
  fd.kind = D::kind;
  if constexpr (D::kind == DomainKind::prime_field) {
    fd.p = dom.p();
  } else if constexpr (D::kind == DomainKind::extension_field) {
    fd.p = dom.p();
    fd.modulus = dom.modulus();
  }
  return fd;
}

}  // namespace exalg

#endif  // EXALG_FIELD_DESCRIPTOR_HPP
