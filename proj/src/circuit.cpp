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

#include "gibbsforge/circuit.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace gibbsforge {

namespace {

bool is_two_qubit(const Monomial& m) { return m.qubits.size() == 2; }

std::vector<std::vector<int>> greedy_layers(const XProgram& program) {
  std::vector<std::vector<int>> layers;
  std::vector<std::set<int>> busy;
  for (int idx = 0; idx < static_cast<int>(program.monomials.size()); ++idx) {
    const auto& m = program.monomials[idx];
    if (!is_two_qubit(m)) continue;
    std::size_t l = 0;
    while (l < layers.size() && (busy[l].count(m.qubits[0]) || busy[l].count(m.qubits[1]))) ++l;
    if (l == layers.size()) {
      layers.emplace_back();
      busy.emplace_back();
    }
    layers[l].push_back(idx);
    busy[l].insert(m.qubits[0]);
    busy[l].insert(m.qubits[1]);
  }
  return layers;
}

}  // namespace

void validate(const XProgram& program) {
  if (program.n < 1) throw InputError("program needs at least one qubit");
  for (const auto& m : program.monomials) {
    if (m.qubits.empty()) throw InputError("monomial with empty support");
    std::set<int> seen;
    for (int q : m.qubits) {
      if (q < 0 || q >= program.n) throw InputError("monomial qubit " + std::to_string(q) + " out of range");
      if (!seen.insert(q).second) throw InputError("monomial repeats qubit " + std::to_string(q));
    }
  }
  for (const auto& [c, t] : program.cnot_prefix) {
    if (c < 0 || c >= program.n || t < 0 || t >= program.n) throw InputError("CNOT qubit out of range");
    if (c == t) throw InputError("CNOT control equals target");
  }
  if (!program.meta.layers.empty() && !layers_are_matchings(program)) {
    throw InputError("meta.layers is not a matching partition of the two-qubit monomials");
  }
}

bool layers_are_matchings(const XProgram& program) {
  const int m = static_cast<int>(program.monomials.size());
  std::vector<int> hits(m, 0);
  for (const auto& layer : program.meta.layers) {
    std::set<int> used;
    for (int idx : layer) {
      if (idx < 0 || idx >= m) return false;
      const auto& mono = program.monomials[idx];
      if (!is_two_qubit(mono)) return false;
      for (int q : mono.qubits) {
        if (!used.insert(q).second) return false;
      }
      ++hits[idx];
    }
  }
  for (int idx = 0; idx < m; ++idx) {
    if (is_two_qubit(program.monomials[idx]) && hits[idx] != 1) return false;
  }
  return true;
}

int two_qubit_depth(const XProgram& program) {
  if (!program.meta.layers.empty() && layers_are_matchings(program)) {
    return static_cast<int>(program.meta.layers.size());
  }
  return static_cast<int>(greedy_layers(program).size());
}

XProgram canonicalize(XProgram program) {
  for (auto& m : program.monomials) std::sort(m.qubits.begin(), m.qubits.end());
  std::vector<int> order(program.monomials.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return program.monomials[a] < program.monomials[b]; });
  std::vector<int> new_index(order.size());
  std::vector<Monomial> sorted;
  sorted.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    sorted.push_back(program.monomials[order[i]]);
  }
  program.monomials = std::move(sorted);
  for (auto& layer : program.meta.layers) {
    for (int& idx : layer) idx = new_index.at(idx);
    std::sort(layer.begin(), layer.end());
  }
  return program;
}

XProgram restrict_to(const XProgram& program, const std::vector<int>& qubits) {
  std::map<int, int> relabel;
  for (int q : qubits) {
    if (q < 0 || q >= program.n) throw InputError("restrict_to: qubit out of range");
    if (!relabel.emplace(q, static_cast<int>(relabel.size())).second) throw InputError("restrict_to: repeated qubit");
  }
  XProgram out;
  out.n = static_cast<int>(qubits.size());
  out.meta.family = program.meta.family;
  out.meta.L = program.meta.L;
  std::vector<int> kept(program.monomials.size(), -1);
  for (std::size_t i = 0; i < program.monomials.size(); ++i) {
    const auto& m = program.monomials[i];
    Monomial mapped{{}, m.k};
    bool inside = true;
    for (int q : m.qubits) {
      auto it = relabel.find(q);
      if (it == relabel.end()) {
        inside = false;
        break;
      }
      mapped.qubits.push_back(it->second);
    }
    if (!inside) continue;
    kept[i] = static_cast<int>(out.monomials.size());
    out.monomials.push_back(std::move(mapped));
  }
  for (const auto& [c, t] : program.cnot_prefix) {
    auto ic = relabel.find(c), it = relabel.find(t);
    if (ic != relabel.end() && it != relabel.end()) out.cnot_prefix.emplace_back(ic->second, it->second);
  }
  for (const auto& layer : program.meta.layers) {
    std::vector<int> mapped;
    for (int idx : layer) {
      if (kept[idx] >= 0) mapped.push_back(kept[idx]);
    }
    if (!mapped.empty()) out.meta.layers.push_back(std::move(mapped));
  }
  return canonicalize(std::move(out));
}

std::string to_string(LatticeFamily f) {
  switch (f) {
    case LatticeFamily::raussendorf3d: return "raussendorf3d";
    case LatticeFamily::brickwork2d: return "brickwork2d";
  }
  return "unknown";
}

LatticeFamily parse_family(const std::string& name) {
  if (name == "raussendorf3d") return LatticeFamily::raussendorf3d;
  if (name == "brickwork2d") return LatticeFamily::brickwork2d;
  throw InputError("unknown lattice family: " + name);
}

LatticeGraph raussendorf_graph(int L) {
  if (L < 1) throw InputError("lattice size L must be >= 1");
  using Cell = std::array<int, 4>;  // axis, x, y, z
  std::map<Cell, int> edge_index, face_index;
  LatticeGraph g;
  // Edge along `axis` starting at vertex v.
  for (int axis = 0; axis < 3; ++axis) {
    for (int x = 0; x <= L; ++x)
      for (int y = 0; y <= L; ++y)
        for (int z = 0; z <= L; ++z) {
          const std::array<int, 3> v{x, y, z};
          if (v[axis] >= L) continue;
          edge_index[{axis, x, y, z}] = g.n++;
        }
  }
  const int num_edges = g.n;
  // Face with normal `axis`, spanned from vertex v by the two other unit vectors.
  for (int axis = 0; axis < 3; ++axis) {
    for (int x = 0; x <= L; ++x)
      for (int y = 0; y <= L; ++y)
        for (int z = 0; z <= L; ++z) {
          const std::array<int, 3> v{x, y, z};
          const int b = (axis + 1) % 3, c = (axis + 2) % 3;
          if (v[b] >= L || v[c] >= L) continue;
          face_index[{axis, x, y, z}] = g.n++;
        }
  }
  g.side.assign(g.n, 0);
  for (int q = num_edges; q < g.n; ++q) g.side[q] = 1;
  for (const auto& [cell, f] : face_index) {
    const int axis = cell[0];
    const std::array<int, 3> v{cell[1], cell[2], cell[3]};
    const int b = (axis + 1) % 3, c = (axis + 2) % 3;
    auto shifted = [&](int dir) {
      std::array<int, 3> w = v;
      ++w[dir];
      return w;
    };
    const std::array<std::pair<int, std::array<int, 3>>, 4> boundary{
        {{b, v}, {b, shifted(c)}, {c, v}, {c, shifted(b)}}};
    for (const auto& [dir, w] : boundary) {
      const int e = edge_index.at({dir, w[0], w[1], w[2]});
      g.edges.emplace_back(e, f);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

LatticeGraph square_grid_graph(int L) {
  if (L < 1) throw InputError("lattice size L must be >= 1");
  LatticeGraph g;
  g.n = L * L;
  g.side.resize(g.n);
  for (int row = 0; row < L; ++row) {
    for (int col = 0; col < L; ++col) {
      const int q = row * L + col;
      g.side[q] = (row + col) % 2;
      if (col + 1 < L) g.edges.emplace_back(q, q + 1);
      if (row + 1 < L) g.edges.emplace_back(q, q + L);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<std::vector<int>> bipartite_edge_coloring(const LatticeGraph& graph) {
  std::vector<int> degree(graph.n, 0);
  for (const auto& [u, v] : graph.edges) {
    if (graph.side.at(u) == graph.side.at(v)) throw InternalError("edge inside one side of the bipartition");
    ++degree[u];
    ++degree[v];
  }
  const int colors = graph.n ? *std::max_element(degree.begin(), degree.end()) : 0;
  // at[v][c] = index of the edge at v with color c, or -1.
  std::vector<std::vector<int>> at(graph.n, std::vector<int>(colors, -1));
  std::vector<int> color(graph.edges.size(), -1);
  auto other = [&](int e, int v) { return graph.edges[e].first == v ? graph.edges[e].second : graph.edges[e].first; };
  auto free_color = [&](int v) {
    for (int c = 0; c < colors; ++c) {
      if (at[v][c] < 0) return c;
    }
    throw InternalError("no free color at vertex");
  };
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    const auto [u, v] = graph.edges[e];
    const int a = free_color(u);
    if (at[v][a] >= 0) {
      // Swap colors a and b along the alternating path leaving v; bipartiteness
      // keeps the path away from u.
      const int b = free_color(v);
      std::vector<int> path;
      int w = v, c = a;
      while (at[w][c] >= 0) {
        const int pe = at[w][c];
        path.push_back(pe);
        w = other(pe, w);
        c = (c == a) ? b : a;
      }
      for (int pe : path) {
        const auto [p, q] = graph.edges[pe];
        at[p][color[pe]] = -1;
        at[q][color[pe]] = -1;
      }
      for (int pe : path) {
        const auto [p, q] = graph.edges[pe];
        color[pe] = (color[pe] == a) ? b : a;
        at[p][color[pe]] = pe;
        at[q][color[pe]] = pe;
      }
      if (at[v][a] >= 0 || at[u][a] >= 0) throw InternalError("edge coloring: alternating path failed");
    }
    color[e] = a;
    at[u][a] = e;
    at[v][a] = e;
  }
  std::vector<std::vector<int>> classes(colors);
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) classes[color[e]].push_back(e);
  std::erase_if(classes, [](const auto& cls) { return cls.empty(); });
  return classes;
}

XProgram generate_family(const LatticeSpec& spec) {
  if (spec.L < 1) throw InputError("lattice size L must be >= 1");
  const LatticeGraph graph =
      spec.family == LatticeFamily::raussendorf3d ? raussendorf_graph(spec.L) : square_grid_graph(spec.L);
  const auto classes = bipartite_edge_coloring(graph);
  if (classes.size() > 4) throw InternalError("lattice edge coloring needs more than 4 layers");

  XProgram program;
  program.n = graph.n;
  program.meta.family = to_string(spec.family);
  program.meta.L = spec.L;

  std::vector<int> designated;
  if (spec.phase_pattern.designated) {
    designated = *spec.phase_pattern.designated;
  } else {
    designated.resize(graph.n);
    std::iota(designated.begin(), designated.end(), 0);
  }
  for (int q : designated) {
    if (q < 0 || q >= graph.n) throw InputError("designated qubit out of range");
    program.monomials.push_back({{q}, spec.phase_pattern.single_k});
  }
  const int offset = static_cast<int>(program.monomials.size());
  for (const auto& [u, v] : graph.edges) {
    program.monomials.push_back({{std::min(u, v), std::max(u, v)}, spec.phase_pattern.edge_k});
  }
  for (const auto& cls : classes) {
    std::vector<int> layer;
    for (int e : cls) layer.push_back(offset + e);
    program.meta.layers.push_back(std::move(layer));
  }
  program = canonicalize(std::move(program));
  validate(program);
  return program;
}

XProgram random_program(int n, int depth, std::uint64_t seed, double single_density) {
  if (n < 1 || depth < 0) throw InputError("random_program: need n >= 1 and depth >= 0");
  std::mt19937_64 rng(seed);
  auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  XProgram program;
  program.n = n;
  program.meta.family = "random";
  for (int q = 0; q < n; ++q) {
    if (uniform01() < single_density) program.monomials.push_back({{q}, 1 + static_cast<int>(rng() % 7)});
  }
  for (int l = 0; l < depth; ++l) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<int> layer;
    for (int i = 0; i + 1 < n; i += 2) {
      if (uniform01() >= 0.8) continue;
      const int a = std::min(perm[i], perm[i + 1]), b = std::max(perm[i], perm[i + 1]);
      layer.push_back(static_cast<int>(program.monomials.size()));
      program.monomials.push_back({{a, b}, 1 + static_cast<int>(rng() % 7)});
    }
    if (!layer.empty()) program.meta.layers.push_back(std::move(layer));
  }
  return canonicalize(std::move(program));
}

XProgram encode_bms(const XProgram& program, int r) {
  if (r < 1) throw InputError("repetition count r must be >= 1");
  if (!program.cnot_prefix.empty()) throw InputError("encode_bms: program already has a CNOT prefix");
  validate(program);
  XProgram out;
  out.n = program.n * r;
  out.meta = program.meta;
  for (const auto& m : program.monomials) {
    Monomial enc{{}, m.k};
    for (int q : m.qubits) {
      for (int j = 0; j < r; ++j) enc.qubits.push_back(physical_index(q, j, r));
    }
    out.monomials.push_back(std::move(enc));
  }
  // Layers only describe two-qubit monomials; the encoded supports are 2r-local.
  if (r > 1) out.meta.layers.clear();
  return canonicalize(std::move(out));
}

XProgram encode_cnot(const XProgram& program, int r) {
  if (r < 1) throw InputError("repetition count r must be >= 1");
  if (!program.cnot_prefix.empty()) throw InputError("encode_cnot: program already has a CNOT prefix");
  validate(program);
  XProgram out;
  out.n = program.n * r;
  out.meta = program.meta;
  for (const auto& m : program.monomials) {
    Monomial enc{{}, m.k};
    for (int q : m.qubits) enc.qubits.push_back(physical_index(q, 0, r));
    out.monomials.push_back(std::move(enc));
  }
  for (int i = 0; i < program.n; ++i) {
    for (int j = 1; j < r; ++j) out.cnot_prefix.emplace_back(physical_index(i, 0, r), physical_index(i, j, r));
  }
  return canonicalize(std::move(out));
}

std::uint64_t apply_cnot_prefix(const XProgram& program, std::uint64_t basis) {
  for (const auto& [c, t] : program.cnot_prefix) {
    if ((basis >> c) & 1u) basis ^= std::uint64_t{1} << t;
  }
  return basis;
}

std::vector<int> diagonal_phase_units(const XProgram& program) {
  if (program.n > 30) throw ResourceError("diagonal table needs n <= 30");
  std::vector<std::pair<std::uint64_t, int>> masks;
  for (const auto& m : program.monomials) {
    std::uint64_t s = 0;
    for (int q : m.qubits) s |= std::uint64_t{1} << q;
    masks.emplace_back(s, m.k);
  }
  const std::uint64_t dim = std::uint64_t{1} << program.n;
  std::vector<int> units(dim, 0);
  for (std::uint64_t y = 0; y < dim; ++y) {
    int total = 0;
    for (const auto& [s, k] : masks) total += (std::popcount(y & s) & 1) ? -k : k;
    units[y] = total;
  }
  return units;
}

}  // namespace gibbsforge
