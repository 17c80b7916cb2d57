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

#include "sicprob/io.hpp"

#include <fstream>
#include <sstream>

#include "sicprob/error.hpp"

namespace sicprob::io {

namespace {

const json& field(const json& j, const std::string& key) {
  if (!j.is_object()) throw ParseError(key, "expected a JSON object containing '" + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(key, "missing field '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "field '" + where + "' must be a number");
  return v.get<double>();
}

long long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(where, "field '" + where + "' must be an integer");
  }
  return v.get<long long>();
}

std::uint64_t unsigned_integer(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::uint64_t>();
  throw ParseError(where, "field '" + where + "' must be a non-negative integer");
}

std::vector<double> number_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "field '" + where + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(number(v[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

RealMatrix number_grid(const json& v, long long rows, long long cols, const std::string& where) {
  if (!v.is_array() || static_cast<long long>(v.size()) != rows) {
    throw ParseError(where, "field '" + where + "' must be an array of " + std::to_string(rows) +
                                " rows");
  }
  RealMatrix m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const std::string row_name = where + "[" + std::to_string(r) + "]";
    const auto row = number_array(v[static_cast<std::size_t>(r)], row_name);
    if (static_cast<long long>(row.size()) != cols) {
      throw ParseError(row_name, "row '" + row_name + "' must have " + std::to_string(cols) +
                                     " entries");
    }
    for (long long c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

json grid(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json array(const RealVector& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
  return a;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), "malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string(), "cannot write '" + path.string() + "'");
  out << value.dump(2) << '\n';
  if (!out) throw ParseError(path.string(), "write to '" + path.string() + "' failed");
}

json to_json(const ComplexMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", grid(m.real())}, {"im", grid(m.imag())}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const long long rows = integer(field(j, "rows"), "rows");
  const long long cols = integer(field(j, "cols"), "cols");
  if (rows < 1 || cols < 1) throw ParseError("rows", "matrix dimensions must be positive");
  const RealMatrix re = number_grid(field(j, "re"), rows, cols, "re");
  const RealMatrix im = number_grid(field(j, "im"), rows, cols, "im");
  ComplexMatrix m(rows, cols);
  m.real() = re;
  m.imag() = im;
  return m;
}

json to_json(const Fiducial& f) {
  const ComplexVector& a = f.amplitudes();
  return {{"d", f.dimension()}, {"re", array(a.real())}, {"im", array(a.imag())}};
}

json to_json(const SicSystem& sic) {
  json j = to_json(sic.fiducial());
  j["sic_error"] = sic.sic_error();
  return j;
}

Fiducial fiducial_from_json(const json& j) {
  const long long d = integer(field(j, "d"), "d");
  const auto re = number_array(field(j, "re"), "re");
  const auto im = number_array(field(j, "im"), "im");
  if (d < 1) throw ParseError("d", "field 'd' must be positive");
  if (static_cast<long long>(re.size()) != d) throw ParseError("re", "field 're' must have d entries");
  if (static_cast<long long>(im.size()) != d) throw ParseError("im", "field 'im' must have d entries");
  ComplexVector a(d);
  for (long long k = 0; k < d; ++k) a(k) = {re[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k)]};
  return Fiducial::from_amplitudes(a);
}

json to_json(const Distribution& p) { return distribution_json(p.values()); }

json distribution_json(const RealVector& p) { return {{"p", array(p)}}; }

RealVector vector_from_json(const json& j, const std::string& key) {
  const auto v = number_array(field(j, key), key);
  if (v.empty()) throw ParseError(key, "field '" + key + "' must not be empty");
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Distribution distribution_from_json(const json& j) { return Distribution(vector_from_json(j, "p")); }

json to_json(const CondMatrix& r) {
  return {{"J", r.outcomes()}, {"N", r.inputs()}, {"R", grid(r.matrix())}};
}

CondMatrix cond_from_json(const json& j) {
  const long long rows = integer(field(j, "J"), "J");
  const long long cols = integer(field(j, "N"), "N");
  if (rows < 1) throw ParseError("J", "field 'J' must be positive");
  if (cols < 1) throw ParseError("N", "field 'N' must be positive");
  return CondMatrix(number_grid(field(j, "R"), rows, cols, "R"));
}

json povm_to_json(const std::vector<ComplexMatrix>& effects) {
  json list = json::array();
  for (const auto& e : effects) list.push_back(to_json(e));
  return {{"effects", std::move(list)}};
}

std::vector<ComplexMatrix> povm_from_json(const json& j) {
  const json& list = field(j, "effects");
  if (!list.is_array() || list.empty()) {
    throw ParseError("effects", "field 'effects' must be a non-empty array");
  }
  std::vector<ComplexMatrix> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    try {
      out.push_back(matrix_from_json(list[k]));
    } catch (const ParseError& e) {
      const std::string where = "effects[" + std::to_string(k) + "]." + e.field();
      throw ParseError(where, std::string(e.what()) + " (in " + where + ")");
    }
  }
  return out;
}

json to_json(const ValidationReport& report) {
  return {{"ok", report.ok}, {"max_violation", report.max_violation}, {"messages", report.messages}};
}

json to_json(const QplexGeometry& g) {
  return {{"d", g.d},         {"N", g.N},         {"L", g.L},
          {"U", g.U},         {"Lprime", g.Lprime}, {"Uprime", g.Uprime},
          {"r_in", g.r_in},   {"r_out", g.r_out}, {"mmd_bound", mmd_bound(g.N, g.L, g.U)}};
}

json to_json(const MmdResult& m) {
  return {{"indices", m.indices}, {"size", m.size}, {"certified", m.certified}};
}

json to_json(const DutchBookWitness& w) {
  json txs = json::array();
  for (const auto& tx : w.transactions) {
    const Ticket& t = tx.ticket;
    json ticket = {{"description", t.description}, {"event", t.event},
                   {"pays_on", t.pays_on},         {"payout", t.payout},
                   {"price", t.price}};
    if (t.refund_event) {
      ticket["refund_if"] = *t.refund_event;
      ticket["refund_on"] = t.refund_on;
    }
    txs.push_back({{"dir", to_string(tx.direction)}, {"ticket", std::move(ticket)}});
  }
  json table = json::object();
  for (const auto& [outcome, payoff] : w.outcome_table) table[outcome] = payoff;
  json j = {{"transactions", std::move(txs)},
            {"guaranteed_loss", w.guaranteed_loss},
            {"outcome_table", std::move(table)}};
  if (!w.notes.empty()) j["notes"] = w.notes;
  return j;
}

json to_json(const CountTable& t) {
  return {{"labels", t.labels}, {"counts", t.counts}, {"total", t.total}, {"seed", t.seed}};
}

CountTable count_table_from_json(const json& j) {
  CountTable t;
  const json& labels = field(j, "labels");
  const json& counts = field(j, "counts");
  if (!labels.is_array()) throw ParseError("labels", "field 'labels' must be an array");
  if (!counts.is_array()) throw ParseError("counts", "field 'counts' must be an array");
  if (labels.size() != counts.size()) {
    throw ParseError("counts", "fields 'labels' and 'counts' differ in length");
  }
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!labels[k].is_string()) throw ParseError("labels", "labels must be strings");
    t.labels.push_back(labels[k].get<std::string>());
    t.counts.push_back(unsigned_integer(counts[k], "counts[" + std::to_string(k) + "]"));
  }
  t.total = unsigned_integer(field(j, "total"), "total");
  t.seed = unsigned_integer(field(j, "seed"), "seed");
  std::uint64_t sum = 0;
  for (auto c : t.counts) sum += c;
  if (sum != t.total) throw ParseError("total", "field 'total' must equal the sum of counts");
  return t;
}

std::map<std::string, double> prices_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("prices", "prices must be a JSON object event -> price");
  std::map<std::string, double> out;
  for (const auto& [event, price] : j.items()) out[event] = number(price, event);
  return out;
}

std::vector<ProbState> states_from_json(const json& j) {
  const json& list = field(j, "states");
  if (!list.is_array()) throw ParseError("states", "field 'states' must be an array");
  std::vector<ProbState> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto v = number_array(list[k], "states[" + std::to_string(k) + "]");
    out.emplace_back(Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  return out;
}

std::vector<LinearSample> samples_from_json(const json& j) {
  const json& list = field(j, "samples");
  if (!list.is_array()) throw ParseError("samples", "field 'samples' must be an array");
  std::vector<LinearSample> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "samples[" + std::to_string(k) + "]";
    if (!list[k].contains("v")) throw ParseError(where + ".v", "missing field '" + where + ".v'");
    if (!list[k].contains("value")) {
      throw ParseError(where + ".value", "missing field '" + where + ".value'");
    }
    const auto v = number_array(list[k]["v"], where + ".v");
    LinearSample s;
    s.vector = Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
    s.value = number(list[k]["value"], where + ".value");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sicprob::io
