#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/matrix.hpp"
#include "ecc_spectra/sequence.hpp"

namespace ecc_spectra {

/// Eccentricity matrix: entry (i,j) keeps d(i,j) when it equals
/// min(e(i), e(j)) and is zero otherwise.
class EccMatrix {
 public:
  EccMatrix() = default;
  explicit EccMatrix(IntMatrix m) : m_(std::move(m)) {}

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t order() const noexcept { return m_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const EccMatrix&, const EccMatrix&) = default;

 private:
  IntMatrix m_;
};

inline EccMatrix eccentricity_matrix(const IntMatrix& d) {
  const auto ecc = eccentricities(d);
  IntMatrix e(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      e(i, j) = d(i, j) == std::min(ecc[i], ecc[j]) ? d(i, j) : 0;
  return EccMatrix(std::move(e));
}

inline EccMatrix eccentricity_matrix(const SimpleGraph& g) { return eccentricity_matrix(distance_matrix(g)); }

/// Block form of the eccentricity matrix of C(a1..a2k), k >= 2, a2k >= 2,
/// written down from the part structure alone (no distances involved):
///   odd/odd distinct parts     2J
///   odd o / even e             2J if o > e, else 0
///   even/even distinct parts   0
///   even diagonal block        2(J - I)
///   odd diagonal block         0
///   anything touching part 2k  0, except its own diagonal block 2(J - I)
inline EccMatrix closed_form_eccentricity_matrix(const GeneratingSequence& seq) {
  require_main_scope(seq);
  const std::size_t l = seq.length();
  const std::size_t n = seq.order();
  auto block_value = [l](std::size_t p, std::size_t q) -> std::int64_t {
    if (p == q) return p % 2 == 0 ? 2 : 0;
    if (p == l || q == l) return 0;
    const bool p_odd = p % 2 == 1;
    const bool q_odd = q % 2 == 1;
    if (p_odd && q_odd) return 2;
    if (!p_odd && !q_odd) return 0;
    const std::size_t odd = p_odd ? p : q;
    const std::size_t even = p_odd ? q : p;
    return odd > even ? 2 : 0;
  };
  IntMatrix e(n, n);
  for (std::size_t p = 1; p <= l; ++p) {
    const std::size_t rp = seq.part_offset(p);
    for (std::size_t q = 1; q <= l; ++q) {
      const std::int64_t value = block_value(p, q);
      if (value == 0) continue;
      const std::size_t cq = seq.part_offset(q);
      for (std::size_t i = 0; i < static_cast<std::size_t>(seq.part_size(p)); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(seq.part_size(q)); ++j)
          if (p != q || i != j) e(rp + i, cq + j) = value;
    }
  }
  return EccMatrix(std::move(e));
}

/// G^e: same vertices (and part labels) as g, u ~ v iff d(u,v) = min(e(u), e(v)).
inline SimpleGraph eccentric_graph(const SimpleGraph& g) {
  const EccMatrix e = eccentricity_matrix(g);
  SimpleGraph out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out.set_part(v, g.part_of(v));
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (e(u, v) != 0) out.add_edge(u, v);
  return out;
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  /// When reducible: the vertices of one connected block of the nonzero pattern.
  /// Permuting them to the front gives a zero off-diagonal block.
  std::vector<std::size_t> witness;
};

namespace detail {

/// Irreducibility via the Boolean closure of (I + pattern): the matrix is
/// irreducible iff (I + |N|)^(n-1) has no zero entry. Uses repeated squaring.
inline bool irreducible_by_boolean_power(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n <= 1) return true;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = i == j || m(i, j) != 0;
  for (std::size_t power = 1; power < n - 1; power *= 2) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!reach[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) next[i][j] = true;
      }
    reach = std::move(next);
  }
  for (const auto& row : reach)
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  return true;
}

/// Checks the reducibility witness against the permutation definition: with
/// the witness rows first, the lower-left block of P N P^T vanishes.
inline bool witness_gives_block_form(const IntMatrix& m, const std::vector<std::size_t>& witness) {
  const std::size_t n = m.rows();
  if (witness.empty() || witness.size() >= n) return false;
  std::vector<bool> in_block(n, false);
  for (std::size_t v : witness) in_block[v] = true;
  std::vector<std::size_t> perm(witness);
  for (std::size_t v = 0; v < n; ++v)
    if (!in_block[v]) perm.push_back(v);
  const IntMatrix p = m.principal_submatrix(perm);
  const std::size_t r = witness.size();
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (p(i, j) != 0) return false;
  return true;
}

}  // namespace detail

/// Decided on the connectivity of the nonzero pattern (the eccentric graph),
/// then validated against the Boolean-power criterion and, for reducible
/// inputs, the permutation block form.
inline IrreducibilityVerdict is_irreducible(const EccMatrix& e) {
  const IntMatrix& m = e.matrix();
  const std::size_t n = m.rows();
  const auto comp =
      connected_components(n, [&](std::size_t u, std::size_t v) { return m(u, v) != 0 || m(v, u) != 0; });
  IrreducibilityVerdict verdict;
  verdict.irreducible = std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
  if (!verdict.irreducible) {
    // Report the block that does not contain vertex 0 when possible, so that
    // for C-graphs the witness is the last part.
    const std::size_t target = comp.back();
    for (std::size_t v = 0; v < n; ++v)
      if (comp[v] == target) verdict.witness.push_back(v);
  }
  if (verdict.irreducible != detail::irreducible_by_boolean_power(m)) {
    throw std::logic_error("irreducibility: pattern connectivity and Boolean power criterion disagree");
  }
  if (!verdict.irreducible && !detail::witness_gives_block_form(m, verdict.witness)) {
    throw std::logic_error("irreducibility: witness does not produce a block-triangular form");
  }
  return verdict;
}

}  // namespace ecc_spectra
