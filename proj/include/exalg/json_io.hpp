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

#ifndef EXALG_JSON_IO_HPP
#define EXALG_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "exalg/field_descriptor.hpp"
#include "exalg/matrix.hpp"
#include "exalg/polynomial.hpp"
#include "exalg/subspace.hpp"

namespace exalg {

using Json = nlohmann::json;

// Scalars serialize as strings ("a", "a/b", "c0,c1,...") except quaternions,
// which are objects of four rational strings. Numbers stay strings end to
// end so no precision is ever lost.
template <class D>
Json scalar_to_json(const D& dom, const typename D::Scalar& s) {
  if constexpr (D::kind == DomainKind::quaternions) {
    return Json{{"a", rational_str(s.a)},
                {"b", rational_str(s.b)},
                {"c", rational_str(s.c)},
                {"d", rational_str(s.d)}};
  } else {
    return dom.str(s);
  }
}

template <class D>
typename D::Scalar scalar_from_json(const D& dom, const Json& j) {
  if constexpr (D::kind == DomainKind::quaternions) {
    if (!j.is_object()) throw std::invalid_argument("quaternion entry must be an object");
    Quaternion q;
    q.a = parse_rational(j.value("a", std::string("0")));
    q.b = parse_rational(j.value("b", std::string("0")));
    q.c = parse_rational(j.value("c", std::string("0")));
    q.d = parse_rational(j.value("d", std::string("0")));
    return q;
  } else {
    if (j.is_number_integer())
      return dom.from_int(j.template get<long long>());
    if (!j.is_string()) throw std::invalid_argument("scalar entry must be a string");
    return dom.parse(j.template get<std::string>());
  }
}

template <class D>
Json matrix_to_json(const Matrix<D>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_json(m.domain(), m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class D>
Matrix<D> matrix_from_json(const D& dom, const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix needs rows, cols and entries");
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    throw std::invalid_argument("entries must hold one array per row");
  Matrix<D> m(dom, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries.at(i);
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(dom, row.at(c));
  }
  return m;
}

template <class D>
Json poly_to_json(const Polynomial<D>& f) {
  Json coeffs = Json::array();
  for (int i = 0; i <= f.deg(); ++i)
    coeffs.push_back(scalar_to_json(f.domain(), f.coeff(static_cast<std::size_t>(i))));
  return Json{{"coefficients", std::move(coeffs)}, {"pretty", f.str()}};
}

template <class D>
Json subspace_to_json(const Subspace<D>& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) {
    Json vec = Json::array();
    for (const auto& x : v) vec.push_back(scalar_to_json(s.domain(), x));
    basis.push_back(std::move(vec));
  }
  return Json{{"ambientDim", s.ambient()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

inline Json field_to_json(const FieldDescriptor& fd) {
  switch (fd.kind) {
    case DomainKind::rationals:
      return Json{{"field", "Q"}};
    case DomainKind::prime_field:
      return Json{{"field", "GF"}, {"p", fd.p}};
    case DomainKind::extension_field:
      return Json{{"field", "GFext"}, {"p", fd.p}, {"modulus", fd.modulus}};
    case DomainKind::quaternions:
      return Json{{"field", "H"}};
  }
  throw std::invalid_argument("unknown field kind");
}

inline FieldDescriptor field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw std::invalid_argument("field descriptor needs a \"field\" tag");
  const std::string tag = j.at("field").get<std::string>();
  FieldDescriptor fd;
  if (tag == "Q") {
    fd.kind = DomainKind::rationals;
  } else if (tag == "GF") {
    fd.kind = DomainKind::prime_field;
    fd.p = j.at("p").get<std::uint64_t>();
  } else if (tag == "GFext") {
    fd.kind = DomainKind::extension_field;
    fd.p = j.at("p").get<std::uint64_t>();
    fd.modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  } else if (tag == "H") {
    fd.kind = DomainKind::quaternions;
  } else {
    throw std::invalid_argument("unknown field tag: " + tag);
  }
  return fd;
}

}  // namespace exalg

#endif  // EXALG_JSON_IO_HPP
