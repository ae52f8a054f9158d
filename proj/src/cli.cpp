// Copyright 2026 quasiorth developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quasiorth/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasiorth/constructions.hpp"
#include "quasiorth/entropy.hpp"
#include "quasiorth/four_level.hpp"
#include "quasiorth/json_io.hpp"
#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth {
namespace {

using nlohmann::json;

json report_conditions(const ComplementarityReport& r) {
  json v = json::object();
  v["cond_i"] = r.cond_i.ok;
  v["cond_ii"] = r.cond_ii.ok;
  v["cond_iii"] = r.cond_iii.ok;
  v["cond_iv"] = r.cond_iv.ok;
  v["verdict"] = r.verdict;
  return v;
}

json word_triple(const std::array<PauliWord, 3>& t) {
  return json::array({t[0].name(), t[1].name(), t[2].name()});
}

// Walks one level of the verdict object; every boolean must hold.
bool all_verdicts_true(const json& verdicts) {
  for (const auto& item : verdicts.items()) {
    if (item.value().is_boolean() && !item.value().get<bool>()) return false;
  }
  return true;
}

void render_text(const json& report, std::ostream& out) {
  out << "command: " << report.at("command").get<std::string>() << "\n";
  const json& args = report.at("arguments");
  if (!args.empty()) {
    out << "arguments:\n";
    for (const auto& item : args.items())
      out << "  " << item.key() << ": " << item.value().dump() << "\n";
  }
  out << "seed: " << report.at("seed").get<std::uint64_t>() << "\n";
  out << "verdicts:\n";
  for (const auto& item : report.at("verdicts").items())
    out << "  " << item.key() << ": " << item.value().dump() << "\n";
  const json& artifacts = report.at("artifacts");
  if (!artifacts.empty()) {
    out << "artifacts: " << artifacts.size()
        << " entries (rerun with --json for the payloads)\n";
  }
  if (report.contains("elapsed_ms"))
    out << "elapsed_ms: " << report.at("elapsed_ms").get<double>() << "\n";
}

struct Outcome {
  json arguments = json::object();
  json verdicts = json::object();
  json artifacts = json::object();
};

Outcome run_mub(int dim) {
  Outcome o;
  o.arguments["dim"] = dim;
  const cmat v = quantum_fourier(dim);
  const cmat eye = cmat::Identity(dim, dim);
  const HadamardResult had = transition_is_hadamard(eye, v);
  o.verdicts["unitary"] = is_unitary(v);
  o.verdicts["hadamard"] = had.ok;
  o.verdicts["hadamard_residual"] = had.residual;
  o.artifacts["fourier"] = matrix_to_json(v);
  return o;
}

Outcome run_weyl(int p, const std::vector<int>& uu, const std::vector<int>& vv) {
  Outcome o;
  o.arguments["p"] = p;
  o.arguments["u"] = uu;
  o.arguments["v"] = vv;
  const PhasePoint u{uu[0], uu[1], uu[2], uu[3]};
  const PhasePoint v{vv[0], vv[1], vv[2], vv[3]};
  const Subalgebra alg = weyl_subalgebra(u, v, p);
  const int n = p * p;
  std::vector<cmat> left_gens, right_gens;
  const WeylSystem w = weyl_system(p);
  left_gens.push_back(tensor(w.x, cmat::Identity(p, p)));
  left_gens.push_back(tensor(w.z, cmat::Identity(p, p)));
  right_gens.push_back(tensor(cmat::Identity(p, p), w.x));
  right_gens.push_back(tensor(cmat::Identity(p, p), w.z));
  const Subalgebra left = from_generators(n, left_gens);
  const Subalgebra right = from_generators(n, right_gens);
  o.verdicts["factor"] = alg.kind == AlgKind::Factor;
  o.verdicts["complementary_to_left_factor"] =
      complementarity_report(alg, left).verdict;
  o.verdicts["complementary_to_right_factor"] =
      complementarity_report(alg, right).verdict;
  o.verdicts["symplectic_form"] = symplectic(u, v, p);
  o.artifacts["subalgebra"] = subalgebra_to_json(alg);
  return o;
}

Outcome run_check(const std::string& a_path, const std::string& b_path) {
  Outcome o;
  o.arguments["a"] = a_path;
  o.arguments["b"] = b_path;
  const Subalgebra a = subalgebra_from_json(load_json_file(a_path));
  const Subalgebra b = subalgebra_from_json(load_json_file(b_path));
  const ComplementarityReport r = complementarity_report(a, b);
  o.verdicts = report_conditions(r);
  o.artifacts["report"] = report_to_json(r);
  return o;
}

Outcome run_entropy(const std::string& a_path, const std::string& b_path,
                    int restarts, std::uint64_t seed) {
  Outcome o;
  o.arguments["a"] = a_path;
  o.arguments["b"] = b_path;
  o.arguments["restarts"] = restarts;
  const Subalgebra a = subalgebra_from_json(load_json_file(a_path));
  const Subalgebra b = subalgebra_from_json(load_json_file(b_path));
  EstimateOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  const EntropyEstimate est = estimate(a, b, opts);
  o.verdicts["value_nats"] = est.value;
  if (est.bound) {
    o.verdicts["bound_nats"] = *est.bound;
    o.verdicts["gap_nats"] = *est.gap;
    o.verdicts["within_bound"] = est.value <= *est.bound + 1e-8;
  }
  o.artifacts["possible_inclusion"] = est.possible_inclusion;
  o.artifacts["estimate"] = estimate_to_json(est);
  return o;
}

Outcome run_bell_factorize(const std::string& a_path,
                           const std::string& triplet_path) {
  Outcome o;
  o.arguments["a"] = a_path;
  o.arguments["triplet"] = triplet_path;
  const Subalgebra a = subalgebra_from_json(load_json_file(a_path));
  const Triplet t = triplet_from_json(load_json_file(triplet_path));
  const BellFactorization f = bell_factorize(a, t);
  o.verdicts["factorized"] = f.residual < 1e-9;
  o.verdicts["residual"] = f.residual;
  o.verdicts["both_triplets_f_kind"] = f.a_triplet.kind == TripletKind::F &&
                                       f.b_triplet.kind == TripletKind::F;
  o.artifacts["a_triplet"] = triplet_to_json(f.a_triplet);
  o.artifacts["b_triplet"] = triplet_to_json(f.b_triplet);
  return o;
}

Outcome run_catalog() {
  Outcome o;
  const PauliCatalog cat = enumerate_pauli_subalgebras();
  o.verdicts["masa_count"] = static_cast<int>(cat.masas.size());
  o.verdicts["factor_count"] = static_cast<int>(cat.factors.size());
  o.verdicts["counts_ok"] = cat.masas.size() == 15 && cat.factors.size() == 20;
  json masas = json::array(), factors = json::array();
  for (const auto& m : cat.masas) masas.push_back(word_triple(m.words));
  for (const auto& f : cat.factors) factors.push_back(word_triple(f.words));
  o.artifacts["masas"] = masas;
  o.artifacts["factors"] = factors;
  return o;
}

Outcome run_families() {
  Outcome o;
  const std::vector<DecompositionFamily> fams = complementary_family_search();
  std::set<int> ells;
  bool pairwise = true;
  json arr = json::array();
  for (const auto& f : fams) {
    ells.insert(f.ell);
    pairwise = pairwise && f.pairwise_ok;
    arr.push_back(family_to_json(f));
  }
  o.verdicts["family_count"] = static_cast<int>(fams.size());
  o.verdicts["ell_values_are_0_2_4"] = ells == std::set<int>{0, 2, 4};
  o.verdicts["all_pairwise_complementary"] = pairwise;
  o.artifacts["families"] = arr;
  return o;
}

Outcome run_appendix(double beta) {
  Outcome o;
  o.arguments["beta"] = beta;
  const AppendixProbe probe = appendix_probe(beta);
  o.verdicts["refuted"] = probe.refuted;
  o.verdicts["closed_form_value"] = probe.C;
  o.verdicts["f_prime_0"] = probe.f_prime_0;
  if (probe.witness_t) {
    o.verdicts["witness_t"] = *probe.witness_t;
    o.verdicts["margin"] = *probe.margin;
  }
  return o;
}

Outcome run_car() {
  Outcome o;
  const CarModel car = car_model();
  o.verdicts["car_identities"] = car.car_residual < 1e-12;
  o.verdicts["car_residual"] = car.car_residual;
  o.verdicts["algebras_complementary"] =
      complementarity_report(car.alg1, car.alg2).verdict;
  std::vector<cmat> bell_gens;
  for (int k = 1; k < 4; ++k) bell_gens.push_back(PauliWord{k, k}.realize());
  const Subalgebra bell = from_generators(4, bell_gens);
  o.verdicts["bell_masa_complementary_to_alg1"] =
      complementarity_report(bell, car.alg1).verdict;
  o.verdicts["bell_masa_complementary_to_alg2"] =
      complementarity_report(bell, car.alg2).verdict;
  bool parity_fixes = true;
  const std::vector<cmat> bell_projs = minimal_projections(bell);
  for (const cmat& pr : bell_projs)
    parity_fixes = parity_fixes &&
                   (car.parity * pr * car.parity.adjoint() - pr).norm() < kTol;
  o.verdicts["parity_fixes_bell_projections"] = parity_fixes;
  json bases = json::array();
  for (const auto& tuple : car.even_bases) {
    json names = json::array();
    for (const auto& w : tuple) names.push_back(w.name());
    bases.push_back(names);
  }
  o.artifacts["a1"] = matrix_to_json(car.a1);
  o.artifacts["a2"] = matrix_to_json(car.a2);
  o.artifacts["parity"] = matrix_to_json(car.parity);
  o.artifacts["even_bases"] = bases;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Complementary-subalgebra toolkit for finite matrix algebras"};
  app.name("quasiorth");

  bool json_out = false;
  bool no_timing = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json_out, "Emit the report as JSON");
  app.add_flag("--no-timing", no_timing, "Omit elapsed_ms from the report");
  app.add_option("--seed", seed, "Random seed echoed in every report")
      ->capture_default_str();
  app.require_subcommand(1);

  auto* mub = app.add_subcommand(
      "mub", "Quantum Fourier matrix and the unbiasedness check");
  int dim = 0;
  mub->add_option("--dim", dim, "Ambient dimension")->required();
  mub->fallthrough();

  auto* weyl = app.add_subcommand(
      "weyl", "Weyl-operator subalgebra of M_p (x) M_p and its complements");
  int p = 3;
  std::vector<int> u_coords{1, 0, 1, 0};
  std::vector<int> v_coords{0, 1, 0, 1};
  weyl->add_option("--p", p, "Odd prime")->capture_default_str();
  weyl->add_option("--u", u_coords, "Phase-space point k1,l1,k2,l2")
      ->delimiter(',')
      ->expected(4);
  weyl->add_option("--v", v_coords, "Phase-space point k1,l1,k2,l2")
      ->delimiter(',')
      ->expected(4);
  weyl->fallthrough();

  auto* check = app.add_subcommand(
      "check", "Complementarity report for two subalgebra files");
  std::string a_path, b_path, triplet_path;
  check->add_option("--a", a_path, "Subalgebra JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--b", b_path, "Subalgebra JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  check->fallthrough();

  auto* entropy = app.add_subcommand(
      "entropy", "Conditional-entropy ascent for two subalgebra files");
  int restarts = 8;
  entropy->add_option("--a", a_path, "Subalgebra JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  entropy->add_option("--b", b_path, "Subalgebra JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  entropy->add_option("--restarts", restarts, "Randomized restarts")
      ->capture_default_str();
  entropy->fallthrough();

  auto* bell = app.add_subcommand(
      "bell-factorize", "Split an anticommuting triplet across a factor");
  bell->add_option("--a", a_path, "Factor subalgebra JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  bell->add_option("--triplet", triplet_path, "Triplet JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  bell->fallthrough();

  auto* catalog = app.add_subcommand(
      "catalog", "Pauli-triple subalgebras of the four-level system");
  catalog->fallthrough();

  auto* families = app.add_subcommand(
      "families", "Complementary five-member decompositions of M_4");
  families->fallthrough();

  auto* appendix = app.add_subcommand(
      "appendix", "One-parameter probe of the closed-form entropy value");
  double beta = 0.0;
  appendix->add_option("--beta", beta, "Angle between the two lines")
      ->required();
  appendix->fallthrough();

  auto* car = app.add_subcommand(
      "car", "Fermion pair on C^4: algebras, parity, and the even part");
  car->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quasiorth");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string command;
  try {
    if (app.got_subcommand(mub)) {
      command = "mub";
      o = run_mub(dim);
    } else if (app.got_subcommand(weyl)) {
      command = "weyl";
      o = run_weyl(p, u_coords, v_coords);
    } else if (app.got_subcommand(check)) {
      command = "check";
      o = run_check(a_path, b_path);
    } else if (app.got_subcommand(entropy)) {
      command = "entropy";
      o = run_entropy(a_path, b_path, restarts, seed);
    } else if (app.got_subcommand(bell)) {
      command = "bell-factorize";
      o = run_bell_factorize(a_path, triplet_path);
    } else if (app.got_subcommand(catalog)) {
      command = "catalog";
      o = run_catalog();
    } else if (app.got_subcommand(families)) {
      command = "families";
      o = run_families();
    } else if (app.got_subcommand(appendix)) {
      command = "appendix";
      o = run_appendix(beta);
    } else if (app.got_subcommand(car)) {
      command = "car";
      o = run_car();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const auto stop = std::chrono::steady_clock::now();

  json report;
  report["command"] = command;
  report["arguments"] = o.arguments;
  report["verdicts"] = o.verdicts;
  report["artifacts"] = o.artifacts;
  report["seed"] = seed;
  if (!no_timing) {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }

  if (json_out) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out);
  }
  return all_verdicts_true(o.verdicts) ? 0 : 1;
}

}  // namespace quasiorth
