#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "ecc_spectra/errors.hpp"
#include "ecc_spectra/matrix.hpp"
#include "ecc_spectra/sequence.hpp"

namespace ecc_spectra {

/// Undirected simple graph on vertices 0..n-1, stored as a dense adjacency
/// matrix. Every vertex carries a part label (1-based): for C-graphs this is
/// the construction step that introduced it, otherwise 1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n * n, 0), parts_(n, 1) {}

  static SimpleGraph empty(std::size_t n) { return SimpleGraph(n); }

  static SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const noexcept { return n_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    adj_[u * n_ + v] = 1;
    adj_[v * n_ + u] = 1;
  }

  void remove_edge(std::size_t u, std::size_t v) {
    adj_[u * n_ + v] = 0;
    adj_[v * n_ + u] = 0;
  }

  std::size_t degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count(adj_.begin() + static_cast<std::ptrdiff_t>(v * n_),
                   adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * n_), 1));
  }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
  }

  int part_of(std::size_t v) const { return parts_[v]; }
  void set_part(std::size_t v, int part) { parts_[v] = part; }
  int part_count() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

  /// Index of v within its part, 1-based, counting in vertex order.
  std::size_t index_in_part(std::size_t v) const {
    return static_cast<std::size_t>(
               std::count(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(v), parts_[v])) +
           1;
  }

  IntMatrix adjacency_matrix() const {
    IntMatrix a(n_, n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v) a(u, v) = adjacent(u, v) ? 1 : 0;
    return a;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> parts_;
};

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out.set_part(v, g.part_of(v));
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Block-diagonal union; b's vertices follow a's and its part labels are
/// shifted past a's largest label.
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t na = a.order();
  SimpleGraph out(na + b.order());
  const int shift = a.part_count();
  for (std::size_t v = 0; v < na; ++v) out.set_part(v, a.part_of(v));
  for (std::size_t v = 0; v < b.order(); ++v) out.set_part(na + v, b.part_of(v) + shift);
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = u + 1; v < na; ++v)
      if (a.adjacent(u, v)) out.add_edge(u, v);
  for (std::size_t u = 0; u < b.order(); ++u)
    for (std::size_t v = u + 1; v < b.order(); ++v)
      if (b.adjacent(u, v)) out.add_edge(na + u, na + v);
  return out;
}

/// C(a1) = complement of K_{a1}; C(a1..ai) = complement(C(a1..a(i-1)) U K_{ai}).
/// Part i occupies the contiguous index range starting at seq.part_offset(i).
inline SimpleGraph build_cograph(const GeneratingSequence& seq) {
  SimpleGraph g = complement(SimpleGraph::complete(static_cast<std::size_t>(seq.part_size(1))));
  for (std::size_t i = 2; i <= seq.length(); ++i) {
    SimpleGraph clique = SimpleGraph::complete(static_cast<std::size_t>(seq.part_size(i)));
    g = complement(disjoint_union(g, clique));
  }
  return g;
}

/// Adjacency matrix A_m of the antiregular graph C(1,1,...,1) with m ones.
inline IntMatrix antiregular_adjacency(std::size_t m) {
  if (m == 0) throw InvalidSequence("antiregular graph needs m >= 1");
  return build_cograph(GeneratingSequence(std::vector<int>(m, 1))).adjacency_matrix();
}

/// Connected-component id per vertex (ids are 0.. in order of first vertex).
template <typename Adjacent>
std::vector<std::size_t> connected_components(std::size_t n, Adjacent&& adjacent) {
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unseen);
  std::size_t next = 0;
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != unseen) continue;
    comp[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] == unseen && adjacent(u, v)) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const SimpleGraph& g) {
  const auto comp = connected_components(g.order(), [&](std::size_t u, std::size_t v) { return g.adjacent(u, v); });
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// All-pairs distances by one BFS per vertex.
inline IntMatrix distance_matrix(const SimpleGraph& g) {
  const std::size_t n = g.order();
  IntMatrix d(n, n, -1);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    queue.clear();
    d(s, s) = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v = 0; v < n; ++v) {
        if (d(s, v) < 0 && g.adjacent(u, v)) {
          d(s, v) = d(s, u) + 1;
          queue.push_back(v);
        }
      }
    }
    if (queue.size() != n) {
      throw DisconnectedGraph("graph is disconnected: vertex " + std::to_string(s) + " reaches only " +
                              std::to_string(queue.size()) + " of " + std::to_string(n) + " vertices");
    }
  }
  return d;
}

/// e(v) = max_u d(v, u), i.e. the row maxima of d.
inline std::vector<std::int64_t> eccentricities(const IntMatrix& d) {
  std::vector<std::int64_t> ecc(d.rows(), 0);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) ecc[i] = std::max(ecc[i], d(i, j));
  return ecc;
}

}  // namespace ecc_spectra
