// Copyright 2026 The gibbsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gibbsforge/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace gibbsforge::io {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

int checked_n(const json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) throw InputError("\"n\" must be non-negative");
  return n;
}

// Bitstrings in lexicographic order of their text form.
std::vector<std::pair<std::string, std::uint64_t>> sorted_strings(std::vector<std::uint64_t> values, int n) {
  std::vector<std::pair<std::string, std::uint64_t>> rows;
  rows.reserve(values.size());
  for (auto v : values) rows.emplace_back(bitstring(v, n), v);
  std::sort(rows.begin(), rows.end());
  return rows;
}

void write_count_records(std::ostream& out, const Distribution& dist) {
  std::vector<std::uint64_t> keys;
  for (const auto& [s, c] : dist.counts()) keys.push_back(s);
  for (const auto& [text, s] : sorted_strings(std::move(keys), dist.num_bits())) {
    json rec;
    rec["s"] = text;
    rec["count"] = dist.counts().at(s);
    out << rec.dump() << '\n';
  }
}

}  // namespace

std::string bitstring(std::uint64_t s, int n) {
  std::string text(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((s >> i) & 1u) text[static_cast<std::size_t>(i)] = '1';
  }
  return text;
}

std::uint64_t parse_bitstring(const std::string& text) {
  if (text.size() > 64) throw InputError("bitstring longer than 64 bits");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      s |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw InputError("bitstring \"" + text + "\" has a character other than 0/1");
    }
  }
  return s;
}

json to_json(const PauliSum& op) {
  json j;
  j["n"] = op.num_qubits();
  json terms = json::array();
  for (const auto& [key, coeff] : op.terms()) {
    terms.push_back({{"x", key.first.to_hex()}, {"z", key.second.to_hex()}, {"coeff", coeff}});
  }
  j["terms"] = std::move(terms);
  return j;
}

PauliSum pauli_sum_from_json(const json& j) {
  const int n = checked_n(j);
  const auto terms = field<json>(j, "terms");
  if (!terms.is_array()) throw InputError("\"terms\" must be an array");
  PauliSum op(n);
  for (const auto& t : terms) {
    const auto nbits = static_cast<std::size_t>(n);
    BitMask x = BitMask::from_hex(nbits, field<std::string>(t, "x"));
    BitMask z = BitMask::from_hex(nbits, field<std::string>(t, "z"));
    op.add(PauliKey{std::move(x), std::move(z)}, field<double>(t, "coeff"));
  }
  return op;
}

json to_json(const XProgram& program) {
  json j;
  j["n"] = program.n;
  json monomials = json::array();
  for (const auto& m : program.monomials) monomials.push_back({{"qubits", m.qubits}, {"k", m.k}});
  j["monomials"] = std::move(monomials);
  json prefix = json::array();
  for (const auto& [c, t] : program.cnot_prefix) prefix.push_back({c, t});
  j["cnot_prefix"] = std::move(prefix);
  j["meta"] = {{"family", program.meta.family}, {"L", program.meta.L}, {"layers", program.meta.layers}};
  return j;
}

XProgram program_from_json(const json& j) {
  XProgram p;
  p.n = checked_n(j);
  const auto monomials = field<json>(j, "monomials");
  if (!monomials.is_array()) throw InputError("\"monomials\" must be an array");
  for (const auto& m : monomials) {
    p.monomials.push_back({field<std::vector<int>>(m, "qubits"), field<int>(m, "k")});
  }
  if (j.contains("cnot_prefix")) {
    for (const auto& pair : field<std::vector<std::vector<int>>>(j, "cnot_prefix")) {
      if (pair.size() != 2) throw InputError("cnot_prefix entries must be [control, target]");
      p.cnot_prefix.emplace_back(pair[0], pair[1]);
    }
  }
  if (j.contains("meta")) {
    const auto meta = field<json>(j, "meta");
    if (meta.contains("family")) p.meta.family = field<std::string>(meta, "family");
    if (meta.contains("L")) p.meta.L = field<int>(meta, "L");
    if (meta.contains("layers")) p.meta.layers = field<std::vector<std::vector<int>>>(meta, "layers");
  }
  validate(p);
  return p;
}

json to_json(const ParentHamiltonian& h) {
  json j;
  j["n"] = h.n;
  json terms = json::array();
  for (const auto& t : h.terms) terms.push_back({{"origin", t.origin}, {"pauli_sum", to_json(t.term)}});
  j["terms"] = std::move(terms);
  return j;
}

ParentHamiltonian parent_from_json(const json& j) {
  ParentHamiltonian h;
  h.n = checked_n(j);
  for (const auto& t : field<json>(j, "terms")) {
    PauliSum term = pauli_sum_from_json(field<json>(t, "pauli_sum"));
    if (term.num_qubits() != h.n) throw InputError("term size does not match \"n\"");
    h.terms.push_back({field<int>(t, "origin"), std::move(term)});
  }
  return h;
}

json to_json(const InteractionProfile& profile) {
  return {{"k", profile.locality_k},
          {"delta", profile.degree},
          {"delta_excluding_own", profile.degree_excluding_own},
          {"supports", profile.per_term_supports}};
}

void write_exact_csv(std::ostream& out, const Distribution& dist) {
  const Eigen::VectorXd p = dist.to_vector();
  std::vector<std::uint64_t> keys(static_cast<std::size_t>(p.size()));
  for (std::size_t s = 0; s < keys.size(); ++s) keys[s] = s;
  out << "bitstring,probability\n";
  for (const auto& [text, s] : sorted_strings(std::move(keys), dist.num_bits())) {
    out << text << ',' << format_double(p(static_cast<Eigen::Index>(s))) << '\n';
  }
}

Distribution read_exact_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "bitstring,probability") {
    throw InputError("exact CSV must start with \"bitstring,probability\"");
  }
  std::vector<std::pair<std::uint64_t, double>> rows;
  int n = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("malformed CSV row \"" + line + "\"");
    const std::string bits = line.substr(0, comma);
    if (n < 0) n = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != n) throw InputError("CSV rows have differing bit lengths");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(line.substr(comma + 1), &used);
    } catch (const std::exception&) {
      throw InputError("malformed probability in row \"" + line + "\"");
    }
    rows.emplace_back(parse_bitstring(bits), value);
  }
  if (n < 0) throw InputError("exact CSV has no rows");
  if (n > 30) throw ResourceError("exact CSV wider than 30 bits");
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(Eigen::Index{1} << n);
  for (const auto& [s, v] : rows) probs(static_cast<Eigen::Index>(s)) = v;
  return Distribution::exact(n, std::move(probs));
}

void write_empirical_jsonl(std::ostream& out, const Distribution& dist, const SampleHeader& header) {
  json head;
  head["shots"] = header.shots;
  head["seed"] = header.seed;
  head["q"] = header.q;
  out << head.dump() << '\n';
  write_count_records(out, dist);
}

Distribution read_empirical_jsonl(std::istream& in, SampleHeader* header) {
  std::string line;
  bool have_header = false;
  int n = -1;
  std::map<std::uint64_t, std::uint64_t> counts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed JSONL record: ") + e.what());
    }
    if (!have_header) {
      if (!rec.contains("shots")) throw InputError("sample file must start with a {\"shots\", ...} header");
      if (header) {
        header->shots = field<std::uint64_t>(rec, "shots");
        header->seed = rec.contains("seed") ? field<std::uint64_t>(rec, "seed") : 0;
        header->q = rec.contains("q") ? field<double>(rec, "q") : 0.0;
      }
      have_header = true;
      continue;
    }
    const auto text = field<std::string>(rec, "s");
    if (n < 0) n = static_cast<int>(text.size());
    if (static_cast<int>(text.size()) != n) throw InputError("sample records have differing bit lengths");
    counts[parse_bitstring(text)] += field<std::uint64_t>(rec, "count");
  }
  if (!have_header) throw InputError("sample file is empty");
  return Distribution::empirical(std::max(n, 0), std::move(counts));
}

void write_decoded_jsonl(std::ostream& out, const Distribution& logical, const BlockLayout& layout, TieRule rule,
                         EncodedForm form) {
  json head;
  head["layout"] = {{"n", layout.n_logical}, {"r", layout.r}};
  head["tie_rule"] = to_string(rule);
  head["form"] = to_string(form);
  if (logical.is_exact()) {
    out << head.dump() << '\n';
    const Eigen::VectorXd p = logical.to_vector();
    std::vector<std::uint64_t> keys;
    for (Eigen::Index s = 0; s < p.size(); ++s) {
      if (p(s) != 0.0) keys.push_back(static_cast<std::uint64_t>(s));
    }
    for (const auto& [text, s] : sorted_strings(std::move(keys), logical.num_bits())) {
      json rec;
      rec["s"] = text;
      rec["probability"] = p(static_cast<Eigen::Index>(s));
      out << rec.dump() << '\n';
    }
    return;
  }
  head["shots"] = logical.shots();
  out << head.dump() << '\n';
  write_count_records(out, logical);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write \"" + path + "\"");
    out << contents;
    if (!out.flush()) throw InputError("write to \"" + path + "\" failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot move output into \"" + path + "\"");
  }
}

}  // namespace gibbsforge::io
