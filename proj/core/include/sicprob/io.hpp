// Copyright 2026 The sicprob Authors
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

#ifndef SICPROB_IO_HPP_
#define SICPROB_IO_HPP_

// JSON file formats.
//
//   matrix       {"rows": n, "cols": n, "re": [[...]], "im": [[...]]}
//   fiducial     {"d": n, "re": [...], "im": [...]}  (+ "sic_error" on export)
//   distribution {"p": [...]}
//   conditional  {"J": j, "N": n, "R": [[...]]}       (J x N, row-major)
//   povm         {"effects": [matrix, ...]}
//   count table  {"labels": [...], "counts": [...], "total": n, "seed": s}
//
// Parsers throw ParseError naming the offending field. Values that parse but
// break a type invariant (a vector that does not sum to one, ...) raise
// InvalidArgument from the type itself.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sicprob/coherence.hpp"
#include "sicprob/experiments.hpp"
#include "sicprob/linalg.hpp"
#include "sicprob/qplex.hpp"
#include "sicprob/repr.hpp"
#include "sicprob/sic.hpp"

namespace sicprob::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& value);

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Fiducial& f);
json to_json(const SicSystem& sic);
Fiducial fiducial_from_json(const json& j);

json to_json(const Distribution& p);
json distribution_json(const RealVector& p);
RealVector vector_from_json(const json& j, const std::string& key);
Distribution distribution_from_json(const json& j);

json to_json(const CondMatrix& r);
CondMatrix cond_from_json(const json& j);

json povm_to_json(const std::vector<ComplexMatrix>& effects);
std::vector<ComplexMatrix> povm_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const QplexGeometry& g);
json to_json(const MmdResult& m);
json to_json(const DutchBookWitness& w);

json to_json(const CountTable& t);
CountTable count_table_from_json(const json& j);

std::map<std::string, double> prices_from_json(const json& j);
std::vector<ProbState> states_from_json(const json& j);
std::vector<LinearSample> samples_from_json(const json& j);

}  // namespace sicprob::io

#endif  // SICPROB_IO_HPP_
