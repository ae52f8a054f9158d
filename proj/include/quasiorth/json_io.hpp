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

#ifndef QUASIORTH_JSON_IO_HPP_
#define QUASIORTH_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "quasiorth/entropy.hpp"
#include "quasiorth/four_level.hpp"
#include "quasiorth/matrix_core.hpp"
#include "quasiorth/subalgebra.hpp"

namespace quasiorth {

// Matrices travel as {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const cmat& m);
cmat matrix_from_json(const nlohmann::json& j);

// Subalgebras travel as {"ambient_dim": n, "basis": [matrix...],
// "kind": "abelian|factor|general"}. Reading re-closes the span and
// recomputes the kind, so a stale tag cannot poison downstream checks.
nlohmann::json subalgebra_to_json(const Subalgebra& a);
Subalgebra subalgebra_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ComplementarityReport& r);

// {"value_nats": x, "bound_nats": y|null, "gap": z|null, "seed": s,
//  "decomposition": [{"weight": w, "rho": matrix}...]}
nlohmann::json estimate_to_json(const EntropyEstimate& e);

// Triplets travel as {"s1": matrix, "s2": matrix, "s3": matrix}; reading
// re-classifies, so kind and sign are derived rather than trusted.
nlohmann::json triplet_to_json(const Triplet& t);
Triplet triplet_from_json(const nlohmann::json& j);

// [{"words": ["s12","s23","s31"], "kind": ...}...] plus ell/pairwise_ok.
nlohmann::json family_to_json(const DecompositionFamily& f);

// Parses the file at `path`; errors mention the path.
nlohmann::json load_json_file(const std::string& path);

}  // namespace quasiorth

#endif  // QUASIORTH_JSON_IO_HPP_
