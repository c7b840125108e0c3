#ifndef HUMBERT_GRAPHS_HPP
#define HUMBERT_GRAPHS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "humbert/error.hpp"

namespace humbert {

using Edge = std::pair<unsigned, unsigned>;

/// d-regular looped multigraph on the vertices 1..6. Edges are stored with
/// i < j and sorted; loops are sorted vertex labels (repeats = multiple loops).
struct ConfigGraph {
  unsigned degree = 0;
  std::vector<Edge> edges;
  std::vector<unsigned> loops;

  friend bool operator==(const ConfigGraph&, const ConfigGraph&) = default;
};

inline ConfigGraph make_graph(unsigned d, std::vector<Edge> edges, std::vector<unsigned> loops) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > 6 || e.first == e.second) throw DomainError("edge endpoints must be distinct vertices in 1..6");
  }
  for (unsigned v : loops)
    if (v < 1 || v > 6) throw DomainError("loop vertex must be in 1..6");
  std::sort(edges.begin(), edges.end());
  std::sort(loops.begin(), loops.end());
  return {d, std::move(edges), std::move(loops)};
}

/// Valence of v: incident edges plus 2 per loop.
inline unsigned valence(const ConfigGraph& g, unsigned v) {
  unsigned n = 0;
  for (auto [i, j] : g.edges) n += (i == v) + (j == v);
  for (unsigned l : g.loops) n += 2 * (l == v);
  return n;
}

inline bool is_regular(const ConfigGraph& g) {
  for (unsigned v = 1; v <= 6; ++v)
    if (valence(g, v) != g.degree) return false;
  return g.edges.size() + g.loops.size() == 3 * g.degree;
}

/// Bipartite test on the edges; a loop is an odd cycle.
inline bool is_bipartite(const ConfigGraph& g) {
  if (!g.loops.empty()) return false;
  std::array<int, 7> colour{};
  for (unsigned s = 1; s <= 6; ++s) {
    if (colour[s] != 0) continue;
    colour[s] = 1;
    std::vector<unsigned> stack{s};
    while (!stack.empty()) {
      unsigned u = stack.back();
      stack.pop_back();
      for (auto [i, j] : g.edges) {
        if (i != u && j != u) continue;
        unsigned w = i == u ? j : i;
        if (colour[w] == 0) {
          colour[w] = -colour[u];
          stack.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Connectivity of the six vertices through edges (loops ignored).
inline bool is_connected(const ConfigGraph& g) {
  std::array<unsigned, 7> parent{};
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : g.edges) parent[find(i)] = find(j);
  for (unsigned v = 2; v <= 6; ++v)
    if (find(v) != find(1)) return false;
  return true;
}

namespace detail {

// Upper triangle (with diagonal = loop count) of the multiplicity matrix.
using GraphCode = std::array<std::uint8_t, 21>;

inline GraphCode encode(const ConfigGraph& g, const std::array<unsigned, 7>& perm) {
  std::array<std::array<std::uint8_t, 6>, 6> m{};
  for (auto [i, j] : g.edges) {
    unsigned a = perm[i] - 1, b = perm[j] - 1;
    if (a > b) std::swap(a, b);
    ++m[a][b];
  }
  for (unsigned v : g.loops) ++m[perm[v] - 1][perm[v] - 1];
  GraphCode code{};
  std::size_t k = 0;
  for (unsigned a = 0; a < 6; ++a)
    for (unsigned b = a; b < 6; ++b) code[k++] = m[a][b];
  return code;
}

inline const std::vector<std::array<unsigned, 7>>& all_permutations() {
  static const auto perms = [] {
    std::vector<std::array<unsigned, 7>> out;
    std::array<unsigned, 6> p{1, 2, 3, 4, 5, 6};
    do {
      std::array<unsigned, 7> q{};
      for (unsigned i = 0; i < 6; ++i) q[i + 1] = p[i];
      out.push_back(q);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

inline ConfigGraph decode(unsigned d, const GraphCode& code) {
  ConfigGraph g{d, {}, {}};
  std::size_t k = 0;
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = a; b <= 6; ++b) {
      for (unsigned r = 0; r < code[k]; ++r) {
        if (a == b)
          g.loops.push_back(a);
        else
          g.edges.emplace_back(a, b);
      }
      ++k;
    }
  std::sort(g.edges.begin(), g.edges.end());
  std::sort(g.loops.begin(), g.loops.end());
  return g;
}

} // namespace detail

/// Canonical form: the lexicographically largest code over all 720 relabelings.
inline detail::GraphCode canonical_code(const ConfigGraph& g) {
  detail::GraphCode best{};
  bool first = true;
  for (const auto& p : detail::all_permutations()) {
    auto c = detail::encode(g, p);
    if (first || c > best) best = c;
    first = false;
  }
  return best;
}

inline bool isomorphic(const ConfigGraph& a, const ConfigGraph& b) {
  return a.degree == b.degree && canonical_code(a) == canonical_code(b);
}

/// Relabels vertices by perm (perm[v] is the new name of v).
inline ConfigGraph relabel(const ConfigGraph& g, const std::array<unsigned, 7>& perm) {
  return detail::decode(g.degree, detail::encode(g, perm));
}

struct TupleSpec {
  std::vector<Edge> points;   // q_ij
  std::vector<unsigned> tangent_lines;
};

inline TupleSpec tuple_of(const ConfigGraph& g) { return {g.edges, g.loops}; }

inline ConfigGraph graph_of(unsigned d, const TupleSpec& t) { return make_graph(d, t.points, t.tangent_lines); }

/// Case I (d + k odd): 2d^2 + 7 - 2k; Case II (d + k even): 2d^2 + 8 - 2k.
inline int delta_of(int d, int k) {
  if (k < 3 || k > 12 || k > 3 * d) throw DomainError("delta_of needs 3 <= k <= 12 and k <= 3d");
  return (d + k) % 2 != 0 ? 2 * d * d + 7 - 2 * k : 2 * d * d + 8 - 2 * k;
}

/// Vertex multisets of the given size (non-decreasing lists) covering every
/// edge; loops are ignored.
inline std::vector<std::vector<unsigned>> vertex_covers(const ConfigGraph& g, unsigned size) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned from) -> void {
    if (cur.size() == size) {
      for (auto [i, j] : g.edges)
        if (std::find(cur.begin(), cur.end(), i) == cur.end() && std::find(cur.begin(), cur.end(), j) == cur.end())
          return;
      out.push_back(cur);
      return;
    }
    for (unsigned v = from; v <= 6; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

struct ConfigClass {
  std::string label;        // "(k,3d-k)" with a/b suffix when shared
  ConfigGraph representative;
  unsigned count = 0;       // classes sharing the label
  unsigned orbit_size = 0;  // labeled graphs in the class
  bool bipartite = false;
  bool connected = false;
  bool pipeline_supported = false;
};

/// Labeled graphs used by the worked cases (vertex names as in the case
/// listings); keyed by class label.
inline const std::map<std::string, ConfigGraph>& paper_representatives() {
  static const std::map<std::string, ConfigGraph> reps = {
      {"(5,1)", make_graph(2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, {6})},
      {"(4,2)", make_graph(2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {5, 6})},
      {"(3,3)", make_graph(2, {{1, 2}, {2, 3}, {1, 3}}, {4, 5, 6})},
      {"(9,0)a", make_graph(3, {{1, 2}, {1, 4}, {1, 6}, {2, 3}, {3, 4}, {3, 6}, {2, 5}, {4, 5}, {5, 6}}, {})},
      {"(9,0)b", make_graph(3, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}}, {})},
      {"(8,1)", make_graph(3, {{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}}, {6})},
      {"(7,2)a", make_graph(3, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}, {5, 6})},
      {"(7,2)b", make_graph(3, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 6}}, {5, 6})},
      {"(6,3)", make_graph(3, {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {1, 6}, {3, 4}}, {4, 5, 6})},
      {"(5,4)", make_graph(3, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 4}}, {3, 4, 5, 6})},
      {"(4,5)", make_graph(3, {{1, 2}, {1, 3}, {1, 4}, {5, 6}}, {2, 3, 4, 5, 6})},
      {"(3,6)", make_graph(3, {{1, 2}, {3, 4}, {5, 6}}, {1, 2, 3, 4, 5, 6})},
  };
  return reps;
}

namespace detail {

inline void enumerate_labeled(unsigned d, bool multi_edges, const std::function<void(const ConfigGraph&)>& emit) {
  static const std::array<Edge, 15> all_edges = [] {
    std::array<Edge, 15> e{};
    std::size_t k = 0;
    for (unsigned i = 1; i <= 6; ++i)
      for (unsigned j = i + 1; j <= 6; ++j) e[k++] = {i, j};
    return e;
  }();
  std::array<unsigned, 7> used{};
  std::vector<Edge> edges;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == all_edges.size()) {
      std::vector<unsigned> loops;
      for (unsigned v = 1; v <= 6; ++v) {
        unsigned rest = d - used[v];
        if (rest % 2 != 0) return;
        for (unsigned r = 0; r < rest / 2; ++r) loops.push_back(v);
      }
      emit(make_graph(d, edges, loops));
      return;
    }
    auto [i, j] = all_edges[idx];
    unsigned max_mult = multi_edges ? std::min(d - used[i], d - used[j]) : (used[i] < d && used[j] < d ? 1u : 0u);
    for (unsigned m = 0; m <= max_mult; ++m) {
      for (unsigned r = 0; r < m; ++r) edges.push_back({i, j});
      used[i] += m;
      used[j] += m;
      self(self, idx + 1);
      used[i] -= m;
      used[j] -= m;
      for (unsigned r = 0; r < m; ++r) edges.pop_back();
    }
  };
  rec(rec, 0);
}

} // namespace detail

/// Isomorphism classes of d-regular looped graphs on six vertices. Multiple
/// edges are excluded unless requested (they never occur for d <= 3 in the
/// worked cases). Within a label, classes are ordered bipartite first, then
/// connected first, then by canonical code.
inline std::vector<ConfigClass> enumerate_classes(unsigned d, bool multi_edges = false) {
  if (d == 0) throw DomainError("degree must be positive");
  std::map<detail::GraphCode, unsigned> orbit;
  detail::enumerate_labeled(d, multi_edges, [&](const ConfigGraph& g) { ++orbit[canonical_code(g)]; });
  std::vector<ConfigClass> classes;
  for (const auto& [code, size] : orbit) {
    ConfigClass c;
    c.representative = detail::decode(d, code);
    c.orbit_size = size;
    c.bipartite = is_bipartite(c.representative);
    c.connected = is_connected(c.representative);
    c.label = "(" + std::to_string(c.representative.edges.size()) + "," +
              std::to_string(c.representative.loops.size()) + ")";
    classes.push_back(std::move(c));
  }
  auto key = [](const ConfigClass& c) {
    return std::tuple(-static_cast<long>(c.representative.edges.size()), !c.bipartite, !c.connected,
                      canonical_code(c.representative));
  };
  std::sort(classes.begin(), classes.end(), [&](const ConfigClass& a, const ConfigClass& b) { return key(a) < key(b); });
  std::map<std::string, unsigned> per_label;
  for (const auto& c : classes) ++per_label[c.label];
  std::map<std::string, unsigned> seen;
  for (auto& c : classes) {
    c.count = per_label[c.label];
    if (c.count > 1) c.label += static_cast<char>('a' + seen[c.label]++);
    auto it = paper_representatives().find(c.label);
    if (it != paper_representatives().end() && it->second.degree == d && isomorphic(it->second, c.representative))
      c.representative = it->second;
    std::size_t k = c.representative.edges.size();
    // Pipelines exist for conics with 3 <= k <= 5 and for every cubic tuple.
    c.pipeline_supported = (d == 2 && k >= 3 && k <= 5) || d == 3;
  }
  return classes;
}

/// Class label of an arbitrary d-regular graph (relabelings map to the same
/// label).
inline std::string classify(const ConfigGraph& g) {
  auto code = canonical_code(g);
  for (const auto& c : enumerate_classes(g.degree))
    if (canonical_code(c.representative) == code) return c.label;
  throw DomainError("graph is not a d-regular configuration");
}

/// Representative for a label such as "(7,2)a" or "7,2a".
inline ConfigGraph graph_for_label(unsigned d, std::string label) {
  if (label.empty() || label.front() != '(') {
    auto pos = label.find_first_not_of("0123456789,");
    std::string head = label.substr(0, pos), tail = pos == std::string::npos ? "" : label.substr(pos);
    label = "(" + head + ")" + tail;
  }
  for (const auto& c : enumerate_classes(d))
    if (c.label == label) return c.representative;
  throw DomainError("unknown configuration label " + label);
}

} // namespace humbert

#endif // HUMBERT_GRAPHS_HPP
