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

#include "quasiorth/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace quasiorth {

namespace {

nlohmann::json condition_to_json(const ConditionResult& c) {
  nlohmann::json j;
  j["ok"] = c.ok;
  j["residual"] = c.residual;
  j["computed"] = c.computed;
  return j;
}

}  // namespace

nlohmann::json matrix_to_json(const cmat& m) {
  const int n = static_cast<int>(m.rows());
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int r = 0; r < n; ++r) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int c = 0; c < static_cast<int>(m.cols()); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

cmat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
      !j.contains("im"))
    throw std::invalid_argument(
        "matrix JSON must carry \"dim\", \"re\" and \"im\"");
  const int n = j.at("dim").get<int>();
  if (n < 1) throw std::invalid_argument("matrix JSON: dim must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::invalid_argument("matrix JSON: row count does not match dim");
  cmat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(re.at(r).size()) != n ||
        static_cast<int>(im.at(r).size()) != n)
      throw std::invalid_argument(
          "matrix JSON: column count does not match dim");
    for (int c = 0; c < n; ++c)
      m(r, c) = cplx(re.at(r).at(c).get<double>(),
                     im.at(r).at(c).get<double>());
  }
  return m;
}

nlohmann::json subalgebra_to_json(const Subalgebra& a) {
  nlohmann::json basis = nlohmann::json::array();
  for (const cmat& b : a.basis) basis.push_back(matrix_to_json(b));
  return {{"ambient_dim", a.ambient_dim},
          {"basis", std::move(basis)},
          {"kind", to_string(a.kind)}};
}

Subalgebra subalgebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis"))
    throw std::invalid_argument(
        "subalgebra JSON must carry \"ambient_dim\" and \"basis\"");
  const int n = j.at("ambient_dim").get<int>();
  std::vector<cmat> gens;
  for (const auto& entry : j.at("basis"))
    gens.push_back(matrix_from_json(entry));
  if (gens.empty()) gens.push_back(cmat::Identity(n, n));
  return from_generators(n, gens);
}

nlohmann::json report_to_json(const ComplementarityReport& r) {
  nlohmann::json j;
  j["cond_i"] = condition_to_json(r.cond_i);
  j["cond_ii"] = condition_to_json(r.cond_ii);
  j["cond_iii"] = condition_to_json(r.cond_iii);
  j["cond_iv"] = condition_to_json(r.cond_iv);
  j["verdict"] = r.verdict;
  j["d_a"] = r.d_a ? nlohmann::json(*r.d_a) : nlohmann::json(nullptr);
  j["d_b"] = r.d_b ? nlohmann::json(*r.d_b) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json estimate_to_json(const EntropyEstimate& e) {
  nlohmann::json dec = nlohmann::json::array();
  for (const DecTerm& term : e.decomposition.terms)
    dec.push_back(
        {{"weight", term.weight}, {"rho", matrix_to_json(term.rho)}});
  nlohmann::json j;
  j["value_nats"] = e.value;
  j["bound_nats"] = e.bound ? nlohmann::json(*e.bound) : nlohmann::json(nullptr);
  j["gap"] = e.gap ? nlohmann::json(*e.gap) : nlohmann::json(nullptr);
  j["seed"] = e.seed;
  j["decomposition"] = std::move(dec);
  return j;
}

nlohmann::json triplet_to_json(const Triplet& t) {
  nlohmann::json j;
  j["s1"] = matrix_to_json(t.s[0]);
  j["s2"] = matrix_to_json(t.s[1]);
  j["s3"] = matrix_to_json(t.s[2]);
  j["kind"] = to_string(t.kind);
  j["sign"] = t.sign;
  return j;
}

Triplet triplet_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("s1") || !j.contains("s2") ||
      !j.contains("s3"))
    throw std::invalid_argument(
        "triplet JSON must carry \"s1\", \"s2\" and \"s3\"");
  return classify_triplet(matrix_from_json(j.at("s1")),
                          matrix_from_json(j.at("s2")),
                          matrix_from_json(j.at("s3")));
}

nlohmann::json family_to_json(const DecompositionFamily& f) {
  nlohmann::json triples = nlohmann::json::array();
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    nlohmann::json words = nlohmann::json::array();
    for (const PauliWord& w : f.triples[i]) words.push_back(w.name());
    triples.push_back(
        {{"words", std::move(words)}, {"kind", to_string(f.kinds[i])}});
  }
  return {{"ell", f.ell},
          {"pairwise_ok", f.pairwise_ok},
          {"triples", std::move(triples)}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " +
                                e.what());
  }
}

}  // namespace quasiorth
