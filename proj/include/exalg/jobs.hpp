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

#ifndef EXALG_JOBS_HPP
#define EXALG_JOBS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "exalg/json_io.hpp"
#include "exalg/module.hpp"
#include "exalg/theorems.hpp"
#include "exalg/version.hpp"

namespace exalg {

// One job per invocation, fully described by a JSON document. Reports are
// deterministic: identical jobs with identical seeds produce byte-identical
// output (the report embeds tool version, job hash and seed for replay).
struct Job {
  std::string command;
  FieldDescriptor field;
  std::size_t n = 0;
  Json generators = Json::array();
  Json ideal_generators = Json::array();
  std::size_t k = 0;  // divisor for the counterexample construction
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t cap = 10000;
  bool unital = false;
  std::string mode = "span";  // wedderburn: "span" | "algebra"
};

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> cmds = {
      "close",   "irr",           "tri",        "comm",       "nil",  "burnside",
      "audit-field", "counterexample", "wedderburn", "audit-ideal", "hyper"};
  return cmds;
}

inline Job parse_job(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("job must be a JSON object");
  Job job;
  job.command = doc.value("command", std::string());
  bool known = false;
  for (const auto& c : known_commands()) known = known || c == job.command;
  if (!known) throw std::invalid_argument("unknown command: \"" + job.command + "\"");
  if (!doc.contains("field")) throw std::invalid_argument("job needs a field descriptor");
  job.field = field_from_json(doc.at("field"));

  Json opts = doc.value("options", Json::object());
  auto opt = [&](const char* key, const Json& fallback) -> Json {
    if (opts.contains(key)) return opts.at(key);
    if (doc.contains(key)) return doc.at(key);
    return fallback;
  };
  job.seed = opt("seed", 0).get<std::uint64_t>();
  job.trials = opt("trials", 100).get<std::size_t>();
  job.cap = opt("cap", 10000).get<std::size_t>();
  job.unital = opt("unital", false).get<bool>();
  job.k = opt("k", 0).get<std::size_t>();
  job.mode = opt("mode", "span").get<std::string>();

  job.generators = doc.value("generators", Json::array());
  if (!job.generators.is_array())
    throw std::invalid_argument("generators must be an array of matrices");
  job.ideal_generators = doc.value("idealGenerators", Json::array());

  if (doc.contains("n")) {
    job.n = doc.at("n").get<std::size_t>();
  } else if (!job.generators.empty()) {
    job.n = job.generators.front().value("rows", 0);
  }
  if (job.n == 0) throw std::invalid_argument("job needs a positive matrix size n");
  return job;
}

inline Job parse_job_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("job is not valid JSON: ") + e.what());
  }
  return parse_job(doc);
}

struct RunResult {
  Json report;
  std::string summary;  // one-paragraph human text for standard error
  int exit_code = 0;    // 0 completed, 1 input error (set by caller), 2 inconclusive
};

namespace jobdetail {

template <class D>
std::vector<Matrix<D>> parse_matrices(const D& dom, std::size_t n, const Json& arr,
                                      const char* what) {
  std::vector<Matrix<D>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Matrix<D> m = matrix_from_json(dom, arr.at(i));
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument(std::string(what) + "[" + std::to_string(i) +
                                  "] is not " + std::to_string(n) + "x" +
                                  std::to_string(n));
    out.push_back(std::move(m));
  }
  return out;
}

// Canonical job document used for the embedded hash: options normalized,
// scalars re-serialized in canonical form.
template <class D>
Json canonical_job(const Job& job, const D& dom) {
  Json doc{{"command", job.command}, {"field", field_to_json(job.field)},
           {"n", job.n},           {"seed", job.seed},
           {"trials", job.trials}, {"cap", job.cap},
           {"unital", job.unital}, {"k", job.k},
           {"mode", job.mode}};
  Json gens = Json::array();
  for (const auto& g : job.generators)
    gens.push_back(matrix_to_json(matrix_from_json(dom, g)));
  doc["generators"] = std::move(gens);
  Json jgens = Json::array();
  for (const auto& g : job.ideal_generators)
    jgens.push_back(matrix_to_json(matrix_from_json(dom, g)));
  doc["idealGenerators"] = std::move(jgens);
  return doc;
}

inline std::string hash_hex(const Json& doc) {
  const std::string bytes = doc.dump();
  std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

template <class D>
Json verdict_to_json(const IrreducibilityVerdict<D>& v) {
  Json j{{"status", v.irreducible()   ? "irreducible"
                  : v.reducible()     ? "reducible"
                                      : "inconclusive"},
         {"certificate",
          Json{{"method", v.method},
               {"seed", v.seed},
               {"closureDim", v.closure_dim},
               {"exhaustive", v.exhaustive},
               {"kernelVectorsSpun", v.kernel_vectors_spun},
               {"dualSpinChecked", v.dual_spin_checked}}}};
  if (v.zero_collection) j["zeroCollection"] = true;
  if (v.witness) j["witness"] = subspace_to_json(*v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

template <class D>
RunResult run_typed(const Job& job, const D& dom) {
  const std::size_t n = job.n;
  RunResult out;
  Json& rep = out.report;
  rep["version"] = kVersion;
  rep["command"] = job.command;
  rep["field"] = field_to_json(job.field);
  rep["n"] = n;
  rep["seed"] = job.seed;
  rep["jobHash"] = hash_hex(canonical_job(job, dom));
  std::ostringstream text;

  auto gens = parse_matrices(dom, n, job.generators, "generators");

  if (job.command == "close") {
    AlgebraBasis<D> alg = close(gens, job.unital, dom, n);
    auto nil = is_nilpotent_algebra(alg);
    rep["status"] = "ok";
    rep["dimension"] = alg.dim();
    rep["unital"] = job.unital;
    Json basis = Json::array();
    for (const auto& b : alg.basis()) basis.push_back(matrix_to_json(b));
    rep["basis"] = std::move(basis);
    rep["nilpotent"] = Json{{"verdict", nil.nilpotent},
                            {"index", nil.index},
                            {"dims", nil.dims}};
    text << "algebra closure of " << gens.size() << " generator(s) in M_" << n << "("
         << dom.name() << "): dimension " << alg.dim()
         << (nil.nilpotent ? ", nilpotent of index " + std::to_string(nil.index)
                           : ", not nilpotent")
         << "; seed " << job.seed << ".";
  } else if (job.command == "irr") {
    auto v = is_irreducible(gens, dom, n, job.seed);
    Json vj = verdict_to_json(v);
    for (auto& [key, val] : vj.items()) rep[key] = val;
    if (v.inconclusive()) out.exit_code = 2;
    text << "irreducibility of " << gens.size() << " generator(s) in M_" << n << "("
         << dom.name() << "): " << rep["status"].get<std::string>();
    if (v.witness)
      text << "; invariant subspace of dim " << v.witness->dim() << " found";
    text << " (method " << v.method << ", seed " << job.seed << ").";
  } else if (job.command == "tri") {
    auto r = triangularize(gens, dom, n, job.seed);
    using Status = typename TriangularizationReport<D>::Status;
    rep["status"] = r.status == Status::triangularized ? "triangularized"
                    : r.status == Status::obstructed   ? "obstructed"
                                                       : "inconclusive";
    rep["chainDims"] = r.chain_dims;
    if (r.p) rep["P"] = matrix_to_json(*r.p);
    if (r.status == Status::triangularized) {
      Json inner = Json::object();
      Json forms = Json::array();
      for (std::size_t g = 0; g < r.inner_eigenvalues.size(); ++g) {
        Json diag = Json::array();
        for (const auto& s : r.inner_eigenvalues[g])
          diag.push_back(scalar_to_json(dom, s));
        inner["gen" + std::to_string(g)] = std::move(diag);
        forms.push_back(matrix_to_json(r.triangular_forms[g]));
      }
      rep["innerEigenvalues"] = std::move(inner);
      rep["triangularForms"] = std::move(forms);
    }
    if (r.status == Status::obstructed) rep["obstructionDim"] = r.obstruction_dim;
    if (r.status == Status::inconclusive) out.exit_code = 2;
    if (!r.note.empty()) rep["note"] = r.note;
    text << "triangularization in M_" << n << "(" << dom.name()
         << "): " << rep["status"].get<std::string>() << "; chain";
    for (auto d : r.chain_dims) text << " " << d;
    text << "; seed " << job.seed << ".";
  } else if (job.command == "comm") {
    AlgebraBasis<D> c = commutant(gens, dom, n);
    rep["status"] = "ok";
    rep["dimension"] = c.dim();
    Json basis = Json::array();
    for (const auto& b : c.basis()) basis.push_back(matrix_to_json(b));
    rep["basis"] = std::move(basis);
    text << "commutant of " << gens.size() << " generator(s) in M_" << n << "("
         << dom.name() << "): dimension " << c.dim() << ".";
  } else if (job.command == "nil") {
    AlgebraBasis<D> alg = close(gens, job.unital, dom, n);
    auto nil = is_nilpotent_algebra(alg);
    rep["status"] = "ok";
    rep["dimension"] = alg.dim();
    rep["dims"] = nil.dims;
    rep["nilpotent"] = nil.nilpotent;
    rep["index"] = nil.index;
    text << "nilpotency of the generated algebra (dim " << alg.dim() << ") in M_" << n
         << "(" << dom.name() << "): "
         << (nil.nilpotent ? "nilpotent, index " + std::to_string(nil.index)
                           : "not nilpotent")
         << "; power dims";
    for (auto d : nil.dims) text << " " << d;
    text << ".";
  } else if (job.command == "burnside") {
    auto r = burnside_certify(gens, dom, n, job.seed);
    using Status = typename BurnsideReport<D>::Status;
    rep["status"] = r.status == Status::certified      ? "certified"
                    : r.status == Status::inapplicable ? "inapplicable"
                                                       : "inconclusive";
    rep["closureDim"] = r.closure_dim;
    rep["expectedDim"] = r.expected_dim;
    rep["allTriangularizable"] = r.all_triangularizable;
    if (r.failing_basis_index) rep["failingBasisIndex"] = *r.failing_basis_index;
    if (r.irreducibility) rep["irreducibility"] = verdict_to_json(*r.irreducibility);
    if (r.units) {
      Json uj{{"relationsOk", r.units->relations_ok},
              {"membershipOk", r.units->membership_ok},
              {"spanOk", r.units->span_ok},
              {"entriesInCenter", r.units->entries_in_center}};
      if (r.units->similarity) uj["similarity"] = matrix_to_json(*r.units->similarity);
      rep["units"] = std::move(uj);
    }
    if (!r.note.empty()) rep["note"] = r.note;
    if (r.status == Status::inconclusive) out.exit_code = 2;
    text << "burnside certification in M_" << n << "(" << dom.name()
         << "): " << rep["status"].get<std::string>() << "; closure dim "
         << r.closure_dim << " vs n^2 = " << r.expected_dim << "; seed " << job.seed
         << ".";
  } else if (job.command == "counterexample") {
    if constexpr (!D::commutative) {
      throw std::invalid_argument("counterexample construction needs a field domain");
    } else {
      auto r = counterexample_algebra(dom, n, job.k, job.seed);
      rep["status"] = "ok";
      rep["polynomial"] = poly_to_json(r.poly);
      rep["A"] = matrix_to_json(r.element);
      rep["dimension"] = r.dim;
      rep["expectedDim"] = r.expected_dim;
      rep["proper"] = r.proper;
      rep["minPolyMatches"] = r.min_poly_matches;
      rep["irreducibility"] = verdict_to_json(r.irreducibility);
      Json basis = Json::array();
      for (const auto& b : r.algebra.basis()) basis.push_back(matrix_to_json(b));
      rep["basis"] = std::move(basis);
      text << "counterexample algebra in M_" << n << "(" << dom.name() << ") with k = "
           << job.k << ": dimension " << r.dim << " (expected " << r.expected_dim
           << "), " << (r.irreducibility.irreducible() ? "irreducible" : "NOT irreducible")
           << ", proper " << (r.proper ? "yes" : "no") << ".";
    }
  } else if (job.command == "audit-field") {
    if constexpr (!D::commutative) {
      throw std::invalid_argument("field audit needs a field domain");
    } else {
      auto r = burnside_field_audit(dom, n, job.seed);
      rep["status"] = "completed";
      rep["divisors"] = r.divisors;
      Json ws = Json::array();
      for (const auto& w : r.witnesses) ws.push_back(poly_to_json(w));
      rep["witnesses"] = std::move(ws);
      rep["witnessK"] = r.witness_k;
      rep["conditionsFail"] = Json{{"onlyFullIrreducible", r.only_full_irreducible_fails},
                                   {"absoluteIrreducibility", r.absolute_irreducibility_fails},
                                   {"scalarCommutant", r.scalar_commutant_fails},
                                   {"hyperinvariantExists", r.hyperinvariant_exists_fails},
                                   {"kClosed", r.k_closed_fails}};
      rep["commutantDim"] = r.commutant_dim;
      if (r.counterexample) {
        rep["counterexample"] = Json{{"dimension", r.counterexample->dim},
                                     {"expectedDim", r.counterexample->expected_dim},
                                     {"irreducible",
                                      r.counterexample->irreducibility.irreducible()},
                                     {"proper", r.counterexample->proper}};
      }
      const bool all_fail = r.only_full_irreducible_fails &&
                            r.absolute_irreducibility_fails && r.scalar_commutant_fails &&
                            r.hyperinvariant_exists_fails && r.k_closed_fails;
      text << "field audit of " << dom.name() << " at n = " << n
           << ": burnside conditions (i)-(v) " << (all_fail ? "all fail" : "NOT all failing")
           << "; witness k = " << r.witness_k << "; counterexample dim "
           << (r.counterexample ? r.counterexample->dim : 0) << ", commutant dim "
           << r.commutant_dim << ".";
    }
  } else if (job.command == "wedderburn") {
    if (job.mode == "algebra") {
      AlgebraBasis<D> alg = close(gens, job.unital, dom, n);
      auto r = wedderburn_matrix_verify(alg, job.seed);
      using Status = typename WedderburnAlgebraReport<D>::Status;
      rep["status"] = r.status == Status::certified         ? "certified"
                      : r.status == Status::hypothesis_fails ? "refuted-hypothesis"
                                                             : "inconclusive";
      rep["splitHypothesis"] = r.split_hypothesis;
      rep["nilpotentSpanDim"] = r.nilpotent_span_dim;
      rep["spannedByNilpotents"] = r.spanned_by_nilpotents;
      rep["algebraDim"] = alg.dim();
      if (r.failing_index) rep["failingBasisIndex"] = *r.failing_index;
      if (!r.chain_dims.empty()) rep["chainDims"] = r.chain_dims;
      rep["index"] = r.index;
      rep["powerNZero"] = r.power_n_zero;
      if (!r.note.empty()) rep["note"] = r.note;
      if (r.status == Status::not_verified) out.exit_code = 2;
      text << "wedderburn (algebra mode) in M_" << n << "(" << dom.name()
           << "): " << rep["status"].get<std::string>() << "; algebra dim " << alg.dim()
           << ", nilpotent span dim " << r.nilpotent_span_dim << ", index " << r.index
           << ".";
    } else {
      auto r = wedderburn_verify(gens, dom, n);
      using Status = typename WedderburnSpanReport<D>::Status;
      rep["status"] = r.status == Status::nilpotent ? "certified" : "refuted-hypothesis";
      rep["spanDim"] = r.span_dim;
      if (r.status == Status::non_nilpotent_member) rep["reason"] = "non-nilpotent-member";
      if (r.status == Status::not_an_algebra) rep["reason"] = "not-an-algebra";
      if (r.witness) rep["witness"] = matrix_to_json(*r.witness);
      if (!r.chain_dims.empty()) rep["chainDims"] = r.chain_dims;
      rep["index"] = r.index;
      rep["indexWithinBounds"] = r.index_within_bounds;
      text << "wedderburn (span mode) on " << gens.size() << " matrices in M_" << n
           << "(" << dom.name() << "): " << rep["status"].get<std::string>();
      if (r.status == Status::nilpotent)
        text << "; nilpotent of index " << r.index << " (span dim " << r.span_dim << ")";
      text << ".";
    }
  } else if (job.command == "audit-ideal") {
    if constexpr (!D::commutative) {
      throw std::invalid_argument("the semigroup ideal audit needs a field domain");
    } else {
      auto jgens = parse_matrices(dom, n, job.ideal_generators, "idealGenerators");
      auto r = semigroup_ideal_audit(gens, jgens, dom, n, job.trials, job.seed, job.cap);
      using Status = typename IdealAuditReport<D>::Status;
      rep["status"] = r.status == Status::ok                        ? "certified"
                      : r.status == Status::cap_exceeded            ? "cap-exceeded"
                      : r.status == Status::non_irreducible_semigroup ? "inapplicable"
                      : r.status == Status::zero_ideal              ? "inapplicable"
                      : r.status == Status::theorem_violation       ? "refuted"
                                                                     : "inconclusive";
      rep["semigroupSize"] = r.semigroup_size;
      rep["idealSize"] = r.ideal_size;
      rep["trials"] = r.trials;
      rep["zeroSatisfies"] = r.zero_satisfies;
      rep["nonzeroFailures"] = r.nonzero_failures;
      if (r.semigroup_irreducibility)
        rep["semigroupIrreducibility"] = verdict_to_json(*r.semigroup_irreducibility);
      if (!r.note.empty()) rep["note"] = r.note;
      if (r.status == Status::cap_exceeded || r.status == Status::inconclusive)
        out.exit_code = 2;
      text << "semigroup ideal audit in M_" << n << "(" << dom.name()
           << "): " << rep["status"].get<std::string>() << "; |S| = " << r.semigroup_size
           << ", |J| = " << r.ideal_size << ", trials " << r.trials << ", seed "
           << job.seed << ".";
    }
  } else if (job.command == "hyper") {
    if constexpr (!D::commutative) {
      throw std::invalid_argument("the hyperinvariant check needs a field domain");
    } else {
      if (gens.empty()) throw std::invalid_argument("hyper needs one matrix");
      auto r = hyperinvariant_check(gens.front(), dom, job.seed);
      using Status = typename HyperinvariantReport<D>::Status;
      rep["status"] = r.status == Status::none          ? "no-hyperinvariant"
                      : r.status == Status::witness_found ? "witness"
                                                          : "inconclusive";
      rep["minPoly"] = poly_to_json(r.minimal);
      rep["minPolyIrreducible"] = r.min_poly_verdict == PolyVerdict::irreducible;
      rep["commutantDim"] = r.commutant_dim;
      rep["lemmaConsistent"] = r.lemma_consistent;
      if (r.witness) rep["witness"] = subspace_to_json(*r.witness);
      if (!r.note.empty()) rep["note"] = r.note;
      if (r.status == Status::inconclusive) out.exit_code = 2;
      text << "hyperinvariant subspaces of A in M_" << n << "(" << dom.name()
           << "): " << rep["status"].get<std::string>() << "; min poly "
           << r.minimal.str() << "; commutant dim " << r.commutant_dim << ".";
    }
  } else {
    throw std::invalid_argument("unknown command: " + job.command);
  }
  out.summary = text.str();
  return out;
}

}  // namespace jobdetail

inline RunResult run_job(const Job& job) {
  DomainVariant dom = make_domain(job.field);
  return std::visit([&](const auto& d) { return jobdetail::run_typed(job, d); }, dom);
}

}  // namespace exalg

#endif  // EXALG_JOBS_HPP
