#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecc_spectra/ecc_matrix.hpp"
#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/linalg/bareiss.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/linalg/inertia.hpp"
#include "ecc_spectra/quotient.hpp"
#include "ecc_spectra/sequence.hpp"

namespace ecc_spectra {

/// Outcome of one executable check: what the closed form predicts, what was
/// computed directly, and whether they agree.
struct TheoremReport {
  std::string theorem;
  std::string sequence;
  nlohmann::json predicted;
  nlohmann::json computed;
  bool pass = false;
  /// 0 for exact integer comparisons.
  double tolerance = 0.0;
  std::string note;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

inline void to_json(nlohmann::json& j, const TheoremReport& r) {
  j = nlohmann::json{{"theorem", r.theorem},     {"sequence", r.sequence}, {"predicted", r.predicted},
                     {"computed", r.computed},   {"verdict", r.pass ? "PASS" : "FAIL"},
                     {"tolerance", r.tolerance}, {"note", r.note}};
}

inline void from_json(const nlohmann::json& j, TheoremReport& r) {
  j.at("theorem").get_to(r.theorem);
  j.at("sequence").get_to(r.sequence);
  r.predicted = j.at("predicted");
  r.computed = j.at("computed");
  r.pass = j.at("verdict").get<std::string>() == "PASS";
  j.at("tolerance").get_to(r.tolerance);
  j.at("note").get_to(r.note);
}

namespace theorem_id {
inline constexpr const char* kIrreducibility = "irreducibility";
inline constexpr const char* kK1ClosedForm = "k1_closed_form";
inline constexpr const char* kStructuralEigs = "structural_eigenvalues";
inline constexpr const char* kExactMultiplicities = "exact_multiplicities";
inline constexpr const char* kInertia = "inertia";
inline constexpr const char* kInterval = "eigenvalue_free_interval";
inline constexpr const char* kAssembly = "spectrum_assembly";
inline constexpr const char* kDistinctCount = "distinct_eigenvalue_bound";
inline constexpr const char* kAntiregular = "antiregular_lemmas";
inline constexpr const char* kClosedForms = "closed_form_equivalence";
inline constexpr const char* kQuotientReductions = "quotient_reductions";
inline constexpr const char* kInterlacing = "quotient_interlacing";
}  // namespace theorem_id

/// Absolute tolerance for comparing assembled and direct spectra.
inline constexpr double kAssemblyTolerance = 1e-7;
/// Absolute tolerance for the two-part closed form and the interlacing checks.
inline constexpr double kFineTolerance = 1e-8;
/// Tolerance for R against its antiregular factorization.
inline constexpr double kIdentityTolerance = 1e-12;

inline const double kIntervalLeft = -1.0 - std::sqrt(2.0);

inline constexpr const char* kZeroMultiplicityNote =
    "zero multiplicity is (sum of odd parts) - k, plus 1 when a2 = 1; the swapped split (+1 when a2 != 1) "
    "contradicts the inertia and the reference spectra";

/// Direct-path data for one C-graph: the graph, its distances, the
/// definitional eccentricity matrix and its full spectrum.
struct Analysis {
  GeneratingSequence seq;
  SimpleGraph graph;
  IntMatrix distances;
  EccMatrix ecc;
  Spectrum spectrum;
};

inline Analysis analyze(const GeneratingSequence& seq) {
  Analysis a{seq, build_cograph(seq), {}, {}, {}};
  a.distances = distance_matrix(a.graph);
  a.ecc = eccentricity_matrix(a.distances);
  a.spectrum = eigen_sym(a.ecc.matrix());
  return a;
}

namespace detail {

inline TheoremReport make_report(const char* id, const GeneratingSequence& seq) {
  TheoremReport r;
  r.theorem = id;
  r.sequence = seq.to_string();
  return r;
}

inline nlohmann::json inertia_json(const Inertia& in) { return nlohmann::json::array({in.negative, in.zero, in.positive}); }

/// max_i |a_i - b_i| of two sorted lists (infinity if their sizes differ).
inline double sorted_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Every value of `sub` matched to a distinct value of `super` within tol.
inline bool multiset_contains(const std::vector<double>& super, const std::vector<double>& sub, double tol) {
  std::vector<bool> used(super.size(), false);
  for (double x : sub) {
    bool found = false;
    for (std::size_t i = 0; i < super.size() && !found; ++i) {
      if (!used[i] && std::abs(super[i] - x) <= tol) {
        used[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline std::int64_t max_abs(const std::vector<std::int64_t>& v) {
  std::int64_t m = 0;
  for (auto x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

inline std::size_t predicted_zero_multiplicity(const GeneratingSequence& seq) {
  const auto k = static_cast<std::int64_t>(seq.half_length());
  return static_cast<std::size_t>(seq.odd_part_sum() - k + (seq.part_size(2) == 1 ? 1 : 0));
}

inline std::size_t predicted_minus_two_multiplicity(const GeneratingSequence& seq) {
  return static_cast<std::size_t>(seq.even_part_sum() - static_cast<std::int64_t>(seq.half_length()));
}

/// Inertia of Q2k: signs from Spec(R) plus the explicit eigenvalue 2(a_2k - 1),
/// zero count from the exact rank of Q~.
inline Inertia quotient_inertia(const GeneratingSequence& seq) {
  const IntMatrix qtilde = build_qtilde(seq);
  const Spectrum r = eigen_sym(symmetrize_r(seq));
  Inertia in = inertia_from_values(r.eigenvalues, qtilde.rows() - integer_rank(qtilde), r.tol_used);
  const std::int64_t last = 2 * (static_cast<std::int64_t>(seq.last_part_size()) - 1);
  if (last > 0)
    ++in.positive;
  else if (last == 0)
    ++in.zero;
  else
    ++in.negative;
  return in;
}

}  // namespace detail

/// eps(G) is irreducible iff a_2k = 1 (l = 2k, k >= 2).
inline TheoremReport check_irreducibility(const GeneratingSequence& seq) {
  if (!seq.is_even_length() || seq.half_length() < 2) {
    throw OutOfScope("irreducibility check needs an even-length sequence with k >= 2, got " + seq.to_string());
  }
  TheoremReport r = detail::make_report(theorem_id::kIrreducibility, seq);
  const bool predicted = seq.last_part_size() == 1;
  const IrreducibilityVerdict verdict = is_irreducible(eccentricity_matrix(build_cograph(seq)));
  r.predicted = {{"irreducible", predicted}};
  r.computed = {{"irreducible", verdict.irreducible}};
  bool witness_ok = true;
  if (!verdict.irreducible) {
    r.computed["witness"] = verdict.witness;
    // The separated block must be exactly the last part.
    const std::size_t first = seq.part_offset(seq.length());
    witness_ok = verdict.witness.size() == static_cast<std::size_t>(seq.last_part_size()) &&
                 verdict.witness.front() == first;
    r.computed["witness_is_last_part"] = witness_ok;
  }
  r.pass = predicted == verdict.irreducible && witness_ok;
  return r;
}

/// Spectrum of eps(K_a1 v a2 K_1) = eps(C(a1, a2)):
/// -1^(a1-1), -2^(a2-1), c +- sqrt((a1 - a2 - (a1-1)/2)^2 + a1 a2), c = a1 + a2 - 2 - (a1-1)/2.
inline std::vector<double> k1_closed_form_spectrum(int a1, int a2) {
  std::vector<double> values;
  values.insert(values.end(), static_cast<std::size_t>(a1 - 1), -1.0);
  values.insert(values.end(), static_cast<std::size_t>(a2 - 1), -2.0);
  const double half = (a1 - 1) / 2.0;
  const double centre = a1 + a2 - 2 - half;
  const double root = std::sqrt((a1 - a2 - half) * (a1 - a2 - half) + static_cast<double>(a1) * a2);
  values.push_back(centre - root);
  values.push_back(centre + root);
  std::sort(values.begin(), values.end());
  return values;
}

inline TheoremReport check_k1_closed_form(int a1, int a2) {
  const GeneratingSequence seq({a1, a2});
  TheoremReport r = detail::make_report(theorem_id::kK1ClosedForm, seq);
  const auto predicted = k1_closed_form_spectrum(a1, a2);
  const Spectrum direct = eigen_sym(eccentricity_matrix(build_cograph(seq)).matrix());
  const double distance = detail::sorted_distance(predicted, direct.eigenvalues);
  r.predicted = predicted;
  r.computed = {{"eigenvalues", direct.eigenvalues}, {"max_abs_difference", distance}};
  r.tolerance = kFineTolerance;
  r.pass = distance <= kFineTolerance;
  return r;
}

/// -2 (mult >= sum of even parts - k), 0 (mult >= sum of odd parts - k) and
/// 2(a_2k - 1) are eigenvalues; the explicit eigenvectors are checked exactly.
inline TheoremReport check_structural_eigs(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kStructuralEigs, seq);
  const IntMatrix& e = a.ecc.matrix();
  const std::size_t n = seq.order();
  const auto k = static_cast<std::int64_t>(seq.half_length());
  const std::int64_t top = 2 * (static_cast<std::int64_t>(seq.last_part_size()) - 1);

  const std::size_t m_minus2 = eigenvalue_multiplicity_exact(e, -2);
  const std::size_t m_zero = eigenvalue_multiplicity_exact(e, 0);
  const std::size_t top_count = a.spectrum.count_near(static_cast<double>(top));

  // x(2i, l) = e_first - e_l inside even part 2i: eps x = -2x.
  // y(2j-1, s) likewise inside odd parts: eps y = 0.
  // z = indicator of the last part: eps z = 2(a_2k - 1) z.
  std::int64_t worst_residual = 0;
  std::size_t minus2_vectors = 0;
  std::size_t zero_vectors = 0;
  for (std::size_t part = 1; part <= seq.length(); ++part) {
    const std::size_t first = seq.part_offset(part);
    for (std::size_t s = 1; s < static_cast<std::size_t>(seq.part_size(part)); ++s) {
      std::vector<std::int64_t> x(n, 0);
      x[first] = 1;
      x[first + s] = -1;
      std::vector<std::int64_t> ex = e * std::span<const std::int64_t>(x);
      const std::int64_t eigen = part % 2 == 0 ? -2 : 0;
      for (std::size_t i = 0; i < n; ++i) ex[i] -= eigen * x[i];
      worst_residual = std::max(worst_residual, detail::max_abs(ex));
      (part % 2 == 0 ? minus2_vectors : zero_vectors) += 1;
    }
  }
  std::vector<std::int64_t> z(n, 0);
  for (std::size_t i = seq.part_offset(seq.length()); i < n; ++i) z[i] = 1;
  std::vector<std::int64_t> ez = e * std::span<const std::int64_t>(z);
  for (std::size_t i = 0; i < n; ++i) ez[i] -= top * z[i];
  worst_residual = std::max(worst_residual, detail::max_abs(ez));

  const std::int64_t minus2_bound = seq.even_part_sum() - k;
  const std::int64_t zero_bound = seq.odd_part_sum() - k;
  r.predicted = {{"min_mult_minus2", minus2_bound}, {"min_mult_zero", zero_bound}, {"top_eigenvalue", top}};
  r.computed = {{"mult_minus2", m_minus2},
                {"mult_zero", m_zero},
                {"top_eigenvalue_count", top_count},
                {"minus2_eigenvectors", minus2_vectors},
                {"zero_eigenvectors", zero_vectors},
                {"max_integer_residual", worst_residual}};
  r.pass = static_cast<std::int64_t>(m_minus2) >= minus2_bound && static_cast<std::int64_t>(m_zero) >= zero_bound &&
           top_count >= 1 && worst_residual == 0 && static_cast<std::int64_t>(minus2_vectors) == minus2_bound &&
           static_cast<std::int64_t>(zero_vectors) == zero_bound;
  return r;
}

/// m_-2 = sum of even parts - k; m_0 = sum of odd parts - k, plus 1 iff a2 = 1.
inline TheoremReport check_exact_multiplicities(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kExactMultiplicities, seq);
  const std::size_t m_minus2 = eigenvalue_multiplicity_exact(a.ecc.matrix(), -2);
  const std::size_t m_zero = eigenvalue_multiplicity_exact(a.ecc.matrix(), 0);
  const std::size_t p_minus2 = detail::predicted_minus_two_multiplicity(seq);
  const std::size_t p_zero = detail::predicted_zero_multiplicity(seq);
  // Swapped case split, +1 when a2 != 1; reported for comparison only.
  const std::size_t swapped_zero = static_cast<std::size_t>(
      seq.odd_part_sum() - static_cast<std::int64_t>(seq.half_length()) + (seq.part_size(2) != 1 ? 1 : 0));
  r.predicted = {{"mult_minus2", p_minus2}, {"mult_zero", p_zero}, {"mult_zero_swapped", swapped_zero}};
  r.computed = {{"mult_minus2", m_minus2}, {"mult_zero", m_zero}};
  r.pass = m_minus2 == p_minus2 && m_zero == p_zero;
  r.note = kZeroMultiplicityNote;
  return r;
}

/// Inertia of eps(G):
///   a2 != 1: (sum even - 1, sum odd - k, k + 1)
///   a2 == 1: (sum even - 1, sum odd - k + 1, k)
/// and of Q2k: (k-1, 0, k+1) or (k-1, 1, k).
inline TheoremReport check_inertia(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kInertia, seq);
  const std::size_t k = seq.half_length();
  const bool a2_is_one = seq.part_size(2) == 1;
  const auto even = static_cast<std::size_t>(seq.even_part_sum());
  const auto odd = static_cast<std::size_t>(seq.odd_part_sum());
  const Inertia predicted_e = a2_is_one ? Inertia{even - 1, odd - k + 1, k} : Inertia{even - 1, odd - k, k + 1};
  const Inertia predicted_q = a2_is_one ? Inertia{k - 1, 1, k} : Inertia{k - 1, 0, k + 1};
  const Inertia computed_e = inertia_of(a.ecc.matrix());
  const Inertia computed_q = detail::quotient_inertia(seq);
  r.predicted = {{"eccentricity", detail::inertia_json(predicted_e)}, {"quotient", detail::inertia_json(predicted_q)}};
  r.computed = {{"eccentricity", detail::inertia_json(computed_e)}, {"quotient", detail::inertia_json(computed_q)}};
  r.pass = predicted_e == computed_e && predicted_q == computed_q;
  return r;
}

struct IntervalMargins {
  /// (-1 - sqrt2) - lambda_{k-1}(Q2k): how far the largest eigenvalue below -2 sits under the interval.
  double lower = 0.0;
  /// Smallest positive eigenvalue of eps(G) (distance above the interval).
  double upper = 0.0;
  /// lambda^-(eps(G)) = lambda_{k-1}(Q2k).
  double lambda_minus = 0.0;
};

/// No eigenvalue of Q2k in (-1 - sqrt2, 0) and none of eps(G) in
/// (-1 - sqrt2, -2) U (-2, 0). Values within the grouping tolerance of -2 or
/// 0 are accepted only when their count equals the exact multiplicity.
inline TheoremReport check_interval(const Analysis& a, IntervalMargins* margins_out = nullptr) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kInterval, seq);
  const std::size_t k = seq.half_length();
  const Spectrum q = quotient_spectrum(seq);
  const IntMatrix qtilde = build_qtilde(seq);
  const std::size_t q_exact_zeros = qtilde.rows() - integer_rank(qtilde);

  std::vector<double> q_violations;
  std::size_t q_near_zero = 0;
  for (double x : q.eigenvalues) {
    if (std::abs(x) <= q.tol_used)
      ++q_near_zero;
    else if (x > kIntervalLeft && x < 0.0)
      q_violations.push_back(x);
  }

  const Spectrum& s = a.spectrum;
  const std::size_t m_minus2 = eigenvalue_multiplicity_exact(a.ecc.matrix(), -2);
  const std::size_t m_zero = eigenvalue_multiplicity_exact(a.ecc.matrix(), 0);
  std::vector<double> e_violations;
  std::size_t near_minus2 = 0;
  std::size_t near_zero = 0;
  double upper = std::numeric_limits<double>::infinity();
  for (double x : s.eigenvalues) {
    if (std::abs(x + 2.0) <= s.tol_used)
      ++near_minus2;
    else if (std::abs(x) <= s.tol_used)
      ++near_zero;
    else if (x > kIntervalLeft && x < 0.0)
      e_violations.push_back(x);
    else if (x > 0.0)
      upper = std::min(upper, x);
  }

  IntervalMargins margins;
  margins.lambda_minus = q.eigenvalues[k - 2];
  margins.lower = kIntervalLeft - margins.lambda_minus;
  margins.upper = upper;
  if (margins_out) *margins_out = margins;

  r.predicted = {{"interval_left", kIntervalLeft}, {"violations", 0}};
  r.computed = {{"quotient_violations", q_violations},
                {"eccentricity_violations", e_violations},
                {"quotient_near_zero", q_near_zero},
                {"quotient_exact_zeros", q_exact_zeros},
                {"near_minus2", near_minus2},
                {"exact_minus2", m_minus2},
                {"near_zero", near_zero},
                {"exact_zero", m_zero},
                {"lambda_minus", margins.lambda_minus},
                {"lower_margin", margins.lower},
                {"upper_margin", margins.upper}};
  r.tolerance = s.tol_used;
  r.pass = q_violations.empty() && e_violations.empty() && q_near_zero == q_exact_zeros && near_minus2 == m_minus2 &&
           near_zero == m_zero && margins.lower > 0.0;
  return r;
}

/// Spec eps(G) = Spec Q2k  U  {-2^(sum even - k)}  U  {0^(sum odd - k)}, with
/// lambda_{k-1}(Q) < -1 - sqrt2 < -2 < 0 < lambda_k(Q) (a2 != 1) or
/// lambda_k(Q) = 0 < lambda_{k+1}(Q) (a2 = 1).
inline std::vector<double> assembled_spectrum(const GeneratingSequence& seq) {
  require_main_scope(seq);
  std::vector<double> values = quotient_spectrum(seq).eigenvalues;
  const auto k = static_cast<std::int64_t>(seq.half_length());
  values.insert(values.end(), static_cast<std::size_t>(seq.even_part_sum() - k), -2.0);
  values.insert(values.end(), static_cast<std::size_t>(seq.odd_part_sum() - k), 0.0);
  std::sort(values.begin(), values.end());
  return values;
}

inline TheoremReport check_spectrum_assembly(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kAssembly, seq);
  const std::size_t k = seq.half_length();
  const auto assembled = assembled_spectrum(seq);
  const double distance = detail::sorted_distance(assembled, a.spectrum.eigenvalues);

  const Spectrum q = quotient_spectrum(seq);
  const auto& lam = q.eigenvalues;  // lam[i] = lambda_{i+1}
  bool chain = lam[k - 2] < kIntervalLeft;
  if (seq.part_size(2) != 1) {
    chain = chain && lam[k - 1] > q.tol_used;
  } else {
    chain = chain && std::abs(lam[k - 1]) <= q.tol_used && lam[k] > q.tol_used;
  }

  const auto groups = group_eigenvalues(assembled, a.spectrum.tol_used);
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < groups.size(); ++i) min_gap = std::min(min_gap, groups[i].value - groups[i - 1].value);

  r.predicted = {{"eigenvalues", assembled}};
  r.computed = {{"eigenvalues", a.spectrum.eigenvalues},
                {"max_abs_difference", distance},
                {"ordering_chain", chain},
                {"min_predicted_gap", min_gap}};
  r.tolerance = kAssemblyTolerance;
  r.pass = distance < kAssemblyTolerance && chain;
  return r;
}

/// At most 2k + 2 distinct eigenvalues.
inline TheoremReport check_distinct_count(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kDistinctCount, seq);
  const std::size_t bound = 2 * seq.half_length() + 2;
  r.predicted = {{"max_distinct", bound}};
  r.computed = {{"distinct", a.spectrum.distinct_count()}};
  r.tolerance = a.spectrum.tol_used;
  r.pass = a.spectrum.distinct_count() <= bound;
  return r;
}

/// For odd m >= 3: inertia(A_m) = ((m-1)/2, 1, (m-1)/2), -1 is not an
/// eigenvalue, and no eigenvalue other than 0 and -1 lies in
/// [(-1 - sqrt2)/2, (-1 + sqrt2)/2].
inline TheoremReport check_antiregular_lemmas(std::size_t m) {
  if (m < 3 || m % 2 == 0) throw OutOfScope("antiregular lemmas need odd m >= 3, got " + std::to_string(m));
  TheoremReport r;
  r.theorem = theorem_id::kAntiregular;
  r.sequence = GeneratingSequence(std::vector<int>(m, 1)).to_string();
  const IntMatrix a = antiregular_adjacency(m);
  const Inertia predicted{(m - 1) / 2, 1, (m - 1) / 2};
  const Inertia computed = inertia_of(a);
  const bool minus_one_absent = integer_rank(shifted(a, -1)) == m;
  const Spectrum s = eigen_sym(a);
  const double lo = (-1.0 - std::sqrt(2.0)) / 2.0;
  const double hi = (-1.0 + std::sqrt(2.0)) / 2.0;
  std::vector<double> inside;
  double margin = std::numeric_limits<double>::infinity();
  for (double x : s.eigenvalues) {
    if (std::abs(x) <= s.tol_used || std::abs(x + 1.0) <= s.tol_used) continue;
    if (x >= lo && x <= hi)
      inside.push_back(x);
    else
      margin = std::min(margin, x < lo ? lo - x : x - hi);
  }
  r.predicted = {{"inertia", detail::inertia_json(predicted)}, {"minus_one_eigenvalue", false}, {"inside", 0}};
  r.computed = {{"inertia", detail::inertia_json(computed)},
                {"minus_one_eigenvalue", !minus_one_absent},
                {"inside", inside},
                {"margin", margin}};
  r.pass = computed == predicted && minus_one_absent && inside.empty();
  return r;
}

/// Block closed form of eps(G) equals the definitional one, the canonical
/// partition is equitable, and its quotient equals the closed-form Q2k.
inline TheoremReport check_closed_forms(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kClosedForms, seq);
  const EccMatrix closed = closed_form_eccentricity_matrix(seq);
  std::size_t mismatched = 0;
  for (std::size_t i = 0; i < closed.order(); ++i)
    for (std::size_t j = 0; j < closed.order(); ++j)
      if (closed(i, j) != a.ecc(i, j)) ++mismatched;
  const QuotientMatrix quotient = quotient_matrix(a.ecc.matrix(), Partition::canonical(seq));
  bool quotient_matches = quotient.equitable;
  if (quotient_matches) {
    try {
      quotient_matches = quotient.to_integer() == build_q2k(seq);
    } catch (const NonIntegerAverage&) {
      quotient_matches = false;
    }
  }
  r.predicted = {{"mismatched_entries", 0}, {"equitable", true}, {"quotient_equals_closed_form", true}};
  r.computed = {{"mismatched_entries", mismatched},
                {"equitable", quotient.equitable},
                {"quotient_equals_closed_form", quotient_matches}};
  r.pass = mismatched == 0 && quotient.equitable && quotient_matches;
  return r;
}

/// R = D^(1/2) Q~ D^(-1/2) equals 2 D^(1/2)(A_{2k-1} + D~) D^(1/2); the
/// tridiagonal forms carry the ranks of Q~ and Q~ + 2I; rank T = 2k-2 iff
/// a2 = 1; rank S = 2k-1; Spec Q2k is contained in Spec eps(G).
inline TheoremReport check_quotient_reductions(const Analysis& a) {
  const GeneratingSequence& seq = a.seq;
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kQuotientReductions, seq);
  const std::size_t m = seq.length() - 1;
  const QuotientBundle b = make_quotient_bundle(seq);
  const Matrix<double> via_a = r_via_antiregular(seq);
  double r_gap = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r_gap = std::max(r_gap, std::abs(b.r(i, j) - via_a(i, j)));

  const std::size_t rank_q = integer_rank(b.qtilde);
  const std::size_t rank_q2 = integer_rank(shifted(b.qtilde, -2));
  const std::size_t rank_t = integer_rank(tridiagonal_t(seq));
  const std::size_t rank_s = integer_rank(tridiagonal_s(seq));
  const bool a2_is_one = seq.part_size(2) == 1;

  const Spectrum q = quotient_spectrum(seq);
  const bool contained = detail::multiset_contains(a.spectrum.eigenvalues, q.eigenvalues, a.spectrum.tol_used);
  double minus2_distance = std::numeric_limits<double>::infinity();
  for (double x : q.eigenvalues) minus2_distance = std::min(minus2_distance, std::abs(x + 2.0));

  r.predicted = {{"rank_t", a2_is_one ? m - 1 : m}, {"rank_s", m}, {"r_identity_gap_max", kIdentityTolerance}};
  r.computed = {{"rank_qtilde", rank_q},     {"rank_qtilde_plus_2i", rank_q2}, {"rank_t", rank_t},
                {"rank_s", rank_s},          {"r_identity_gap", r_gap},        {"spec_q_in_spec_e", contained},
                {"min_distance_to_minus2", minus2_distance}};
  r.tolerance = kIdentityTolerance;
  r.pass = r_gap <= kIdentityTolerance && rank_t == rank_q && rank_s == rank_q2 && rank_s == m &&
           (rank_t == m - 1) == a2_is_one && contained && minus2_distance > 0.4;
  return r;
}

/// For every leading principal submatrix C of Q2k of size t:
/// lambda_i(Q2k) <= mu_i(C) <= lambda_{i+2k-t}(Q2k), evaluated on the
/// symmetric images D_t^(1/2) C D_t^(-1/2).
inline TheoremReport check_quotient_interlacing(const GeneratingSequence& seq) {
  require_main_scope(seq);
  TheoremReport r = detail::make_report(theorem_id::kInterlacing, seq);
  const std::size_t size = seq.length();
  const IntMatrix q = build_q2k(seq);
  const RealSymMatrix full = symmetrized_q2k(seq);
  const std::vector<double> lambda = quotient_spectrum(seq).eigenvalues;
  std::size_t violations = 0;
  double worst_similarity_gap = 0.0;
  for (std::size_t t = 1; t < size; ++t) {
    const std::vector<std::int64_t> d(seq.alphas().begin(), seq.alphas().begin() + static_cast<std::ptrdiff_t>(t));
    const RealSymMatrix c = symmetrize(q.leading_block(t), d);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        worst_similarity_gap = std::max(worst_similarity_gap, std::abs(c(i, j) - full(i, j)));
    const std::vector<double> mu = eigen_sym(c).eigenvalues;
    for (std::size_t i = 0; i < t; ++i) {
      if (lambda[i] > mu[i] + kFineTolerance || mu[i] > lambda[i + size - t] + kFineTolerance) ++violations;
    }
  }
  r.predicted = {{"violations", 0}};
  r.computed = {{"violations", violations}, {"similarity_gap", worst_similarity_gap}};
  r.tolerance = kFineTolerance;
  r.pass = violations == 0 && worst_similarity_gap <= kIdentityTolerance;
  return r;
}

inline TheoremReport check_structural_eigs(const GeneratingSequence& s) { return check_structural_eigs(analyze(s)); }
inline TheoremReport check_exact_multiplicities(const GeneratingSequence& s) { return check_exact_multiplicities(analyze(s)); }
inline TheoremReport check_inertia(const GeneratingSequence& s) { return check_inertia(analyze(s)); }
inline TheoremReport check_interval(const GeneratingSequence& s) { return check_interval(analyze(s)); }
inline TheoremReport check_spectrum_assembly(const GeneratingSequence& s) { return check_spectrum_assembly(analyze(s)); }
inline TheoremReport check_distinct_count(const GeneratingSequence& s) { return check_distinct_count(analyze(s)); }
inline TheoremReport check_closed_forms(const GeneratingSequence& s) { return check_closed_forms(analyze(s)); }
inline TheoremReport check_quotient_reductions(const GeneratingSequence& s) { return check_quotient_reductions(analyze(s)); }

/// Every checker that applies to an in-scope sequence.
inline std::vector<TheoremReport> run_main_scope_checks(const Analysis& a, IntervalMargins* margins = nullptr) {
  std::vector<TheoremReport> out;
  out.push_back(check_irreducibility(a.seq));
  out.push_back(check_closed_forms(a));
  out.push_back(check_structural_eigs(a));
  out.push_back(check_exact_multiplicities(a));
  out.push_back(check_inertia(a));
  out.push_back(check_quotient_reductions(a));
  out.push_back(check_quotient_interlacing(a.seq));
  out.push_back(check_interval(a, margins));
  out.push_back(check_spectrum_assembly(a));
  out.push_back(check_distinct_count(a));
  return out;
}

}  // namespace ecc_spectra
