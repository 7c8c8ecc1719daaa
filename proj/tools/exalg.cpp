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

// Command-line front end: reads one JSON job (file or standard input), runs
// it, prints exactly one JSON report on standard output and a one-paragraph
// summary on standard error. Exit codes: 0 completed (any mathematical
// verdict), 1 input error, 2 inconclusive or budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "exalg/jobs.hpp"

namespace {

exalg::FieldDescriptor parse_field_flag(const std::string& s) {
  if (!s.empty() && s.front() == '{')
    return exalg::field_from_json(exalg::Json::parse(s));
  if (s == "Q") return {exalg::DomainKind::rationals, 0, {}};
  if (s == "H") return {exalg::DomainKind::quaternions, 0, {}};
  if (s.rfind("GF", 0) == 0 && s.size() > 2) {
    exalg::FieldDescriptor fd;
    fd.kind = exalg::DomainKind::prime_field;
    fd.p = std::stoull(s.substr(2));
    return fd;
  }
  throw std::invalid_argument(
      "unrecognized --field value (use Q, H, GF<p>, or a JSON descriptor)");
}

struct Flags {
  std::string in_path;
  std::string field;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t cap = 0;
  std::size_t k = 0;
  bool unital = false;
  std::string mode;

  bool has_field = false, has_n = false, has_seed = false, has_trials = false,
       has_cap = false, has_k = false, has_unital = false, has_mode = false;
};

int run_command(const std::string& command, const Flags& flags) {
  exalg::Json doc = exalg::Json::object();
  if (!flags.in_path.empty() && flags.in_path != "-") {
    std::ifstream in(flags.in_path);
    if (!in) {
      std::cerr << "error: cannot open job file: " << flags.in_path << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      doc = exalg::Json::parse(buf.str());
    } catch (const exalg::Json::parse_error& e) {
      std::cerr << "error: job file is not valid JSON: " << e.what() << "\n";
      return 1;
    }
  } else if (!isatty(0)) {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    const std::string text = buf.str();
    if (!text.empty()) {
      try {
        doc = exalg::Json::parse(text);
      } catch (const exalg::Json::parse_error& e) {
        std::cerr << "error: standard input is not valid JSON: " << e.what() << "\n";
        return 1;
      }
    }
  }
  if (doc.contains("command") && doc.at("command") != command) {
    std::cerr << "error: job file names command \"" << doc.at("command").get<std::string>()
              << "\" but the subcommand is \"" << command << "\"\n";
    return 1;
  }
  doc["command"] = command;
  if (flags.has_field) doc["field"] = exalg::field_to_json(parse_field_flag(flags.field));
  if (flags.has_n) doc["n"] = flags.n;
  if (flags.has_seed) doc["seed"] = flags.seed;
  if (flags.has_trials) doc["trials"] = flags.trials;
  if (flags.has_cap) doc["cap"] = flags.cap;
  if (flags.has_k) doc["k"] = flags.k;
  if (flags.has_unital) doc["unital"] = flags.unital;
  if (flags.has_mode) doc["mode"] = flags.mode;

  exalg::RunResult result;
  try {
    exalg::Job job = exalg::parse_job(doc);
    result = exalg::run_job(job);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << result.report.dump(2) << "\n";
  std::cerr << result.summary << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matrix-algebra structure toolkit"};
  app.require_subcommand(1);
  Flags flags;

  static const struct {
    const char* name;
    const char* help;
  } kCommands[] = {
      {"close", "compute the generated algebra (dimension, basis, nilpotency)"},
      {"irr", "decide irreducibility with a witness or certificate"},
      {"tri", "simultaneous triangularization with chain and inner eigenvalues"},
      {"comm", "commutant of the generators"},
      {"nil", "nilpotency of the generated algebra"},
      {"burnside", "certify the Burnside-type full-algebra conclusion"},
      {"audit-field", "audit the five Burnside field conditions at size n"},
      {"counterexample", "build the proper irreducible commutant algebra for k | n"},
      {"wedderburn", "verify nilpotency of spans/algebras of nilpotents"},
      {"audit-ideal", "audit the semigroup-ideal nilpotency conditions"},
      {"hyper", "hyperinvariant subspaces of a single matrix"},
  };

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--in", flags.in_path, "job file (JSON); '-' or absent reads stdin");
    sub->add_option("--field", flags.field, "field: Q, H, GF<p>, or JSON descriptor")
        ->each([&](const std::string&) { flags.has_field = true; });
    sub->add_option("--n", flags.n, "matrix size")->each([&](const std::string&) {
      flags.has_n = true;
    });
    sub->add_option("--seed", flags.seed, "master seed (default 0)")
        ->each([&](const std::string&) { flags.has_seed = true; });
    sub->add_option("--trials", flags.trials, "trial count for audits")
        ->each([&](const std::string&) { flags.has_trials = true; });
    sub->add_option("--cap", flags.cap, "semigroup/ideal closure cap")
        ->each([&](const std::string&) { flags.has_cap = true; });
    sub->add_option("--k", flags.k, "divisor of n for the counterexample")
        ->each([&](const std::string&) { flags.has_k = true; });
    sub->add_flag("--unital", flags.unital, "adjoin the identity before closing")
        ->each([&](const std::string&) { flags.has_unital = true; });
    sub->add_option("--mode", flags.mode, "wedderburn mode: span | algebra")
        ->each([&](const std::string&) { flags.has_mode = true; });
  }

  CLI11_PARSE(app, argc, argv);
  for (const auto& c : kCommands)
    if (app.got_subcommand(c.name)) return run_command(c.name, flags);
  std::cerr << "error: no subcommand\n";
  return 1;
}
