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

#ifndef EXALG_DOMAIN_HPP
#define EXALG_DOMAIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exalg {

// Every scalar domain is a small value object carrying its runtime data
// (the prime p, the extension modulus, ...) and mediating all arithmetic:
//
//   using Scalar = ...;                value type of elements
//   using Center = ...;                domain of the center subfield F
//   static constexpr bool commutative;
//   static constexpr std::size_t center_dim;   // dim over F (1, or 4 for H)
//   Scalar zero()/one()/from_int(long long);
//   add/sub/neg/mul/inv, is_zero/eq, conj (identity on fields);
//   Center center(); center_coords/from_center_coords/embed_center;
//   str/parse; sample(SplitMix64&).
//
// Matrices act on the left of column vectors and scalars act on the right,
// so elimination code must multiply by inverses on the stated side; over the
// commutative fields both sides coincide.
enum class DomainKind { rationals, prime_field, extension_field, quaternions };

inline const char* domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::rationals: return "Q";
    case DomainKind::prime_field: return "GF";
    case DomainKind::extension_field: return "GFext";
    case DomainKind::quaternions: return "H";
  }
  return "?";
}

// Deterministic trial-division primality, valid for p < 2^31.
inline bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

struct domain_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace exalg

#endif  // EXALG_DOMAIN_HPP
