#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecc_spectra/ecc_matrix.hpp"
#include "ecc_spectra/format.hpp"
#include "ecc_spectra/linalg/bareiss.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/linalg/inertia.hpp"
#include "ecc_spectra/quotient.hpp"
#include "ecc_spectra/reference_table.hpp"
#include "ecc_spectra/sequence.hpp"
#include "ecc_spectra/theorems.hpp"

namespace ecc_spectra {

inline void to_json(nlohmann::json& j, const EigenGroup& g) { j = {{"value", g.value}, {"multiplicity", g.multiplicity}}; }
inline void from_json(const nlohmann::json& j, EigenGroup& g) {
  j.at("value").get_to(g.value);
  j.at("multiplicity").get_to(g.multiplicity);
}

inline void to_json(nlohmann::json& j, const Inertia& in) {
  j = {{"negative", in.negative}, {"zero", in.zero}, {"positive", in.positive}};
}
inline void from_json(const nlohmann::json& j, Inertia& in) {
  j.at("negative").get_to(in.negative);
  j.at("zero").get_to(in.zero);
  j.at("positive").get_to(in.positive);
}

/// Everything the `spectrum` command reports about one C-graph.
struct SpectralReport {
  std::vector<int> sequence;
  std::size_t n = 0;
  /// l / 2 for even-length sequences.
  std::optional<std::size_t> k;
  std::vector<double> eigenvalues;
  std::vector<EigenGroup> spectrum;
  Inertia inertia;
  std::size_t m_zero = 0;
  std::size_t m_minus2 = 0;
  bool irreducible = false;
  /// Present for in-scope sequences.
  std::optional<double> lambda_minus;
  std::optional<double> lower_margin;
  std::optional<double> upper_margin;
  std::vector<TheoremReport> theorems;
  /// Order-2k eigensolve plus exact ranks; in-scope sequences only.
  std::optional<double> closed_form_ms;
  /// Graph, distances, eccentricity matrix and order-n eigensolve.
  double direct_ms = 0.0;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& t : theorems)
      if (!t.pass) return false;
    return true;
  }

  friend bool operator==(const SpectralReport&, const SpectralReport&) = default;
};

namespace detail {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const SpectralReport& r) {
  j = nlohmann::json{{"sequence", r.sequence},
                     {"n", r.n},
                     {"k", detail::optional_json(r.k)},
                     {"eigenvalues", r.eigenvalues},
                     {"spectrum", r.spectrum},
                     {"inertia", r.inertia},
                     {"m_zero", r.m_zero},
                     {"m_minus2", r.m_minus2},
                     {"irreducible", r.irreducible},
                     {"lambda_minus", detail::optional_json(r.lambda_minus)},
                     {"interval_margins",
                      {{"lower", detail::optional_json(r.lower_margin)}, {"upper", detail::optional_json(r.upper_margin)}}},
                     {"theorems", r.theorems},
                     {"timing_ms", {{"closed_form", detail::optional_json(r.closed_form_ms)}, {"direct", r.direct_ms}}},
                     {"notes", r.notes}};
}

inline void from_json(const nlohmann::json& j, SpectralReport& r) {
  j.at("sequence").get_to(r.sequence);
  j.at("n").get_to(r.n);
  r.k = detail::optional_from<std::size_t>(j, "k");
  j.at("eigenvalues").get_to(r.eigenvalues);
  j.at("spectrum").get_to(r.spectrum);
  j.at("inertia").get_to(r.inertia);
  j.at("m_zero").get_to(r.m_zero);
  j.at("m_minus2").get_to(r.m_minus2);
  j.at("irreducible").get_to(r.irreducible);
  r.lambda_minus = detail::optional_from<double>(j, "lambda_minus");
  r.lower_margin = detail::optional_from<double>(j.at("interval_margins"), "lower");
  r.upper_margin = detail::optional_from<double>(j.at("interval_margins"), "upper");
  j.at("theorems").get_to(r.theorems);
  r.closed_form_ms = detail::optional_from<double>(j.at("timing_ms"), "closed_form");
  j.at("timing_ms").at("direct").get_to(r.direct_ms);
  j.at("notes").get_to(r.notes);
}

/// Builds the report. With `run_checks`, in-scope sequences get every
/// checker, l = 2 gets the two-part closed form, and other even sequences
/// with k >= 2 get the irreducibility check.
inline SpectralReport build_spectral_report(const GeneratingSequence& seq, bool run_checks = true) {
  SpectralReport r;
  r.sequence.assign(seq.alphas().begin(), seq.alphas().end());
  r.n = seq.order();
  if (seq.is_even_length()) r.k = seq.half_length();

  auto start = std::chrono::steady_clock::now();
  const Analysis a = analyze(seq);
  r.direct_ms = detail::elapsed_ms(start);

  r.eigenvalues = a.spectrum.eigenvalues;
  r.spectrum = a.spectrum.groups;
  r.inertia = inertia_of(a.ecc.matrix());
  r.m_zero = eigenvalue_multiplicity_exact(a.ecc.matrix(), 0);
  r.m_minus2 = eigenvalue_multiplicity_exact(a.ecc.matrix(), -2);
  r.irreducible = is_irreducible(a.ecc).irreducible;

  if (seq.in_main_scope()) {
    start = std::chrono::steady_clock::now();
    const Spectrum q = quotient_spectrum(seq);
    const IntMatrix qtilde = build_qtilde(seq);
    [[maybe_unused]] const std::size_t rank_q = integer_rank(qtilde);
    [[maybe_unused]] const std::size_t rank_t = integer_rank(tridiagonal_t(seq));
    r.closed_form_ms = detail::elapsed_ms(start);
    r.lambda_minus = q.eigenvalues[seq.half_length() - 2];
    r.notes.emplace_back(kZeroMultiplicityNote);
  }

  if (run_checks) {
    if (seq.in_main_scope()) {
      IntervalMargins margins;
      r.theorems = run_main_scope_checks(a, &margins);
      r.lower_margin = margins.lower;
      r.upper_margin = margins.upper;
    } else if (seq.length() == 2) {
      r.theorems.push_back(check_k1_closed_form(seq.part_size(1), seq.part_size(2)));
    } else if (seq.is_even_length() && seq.half_length() >= 2) {
      r.theorems.push_back(check_irreducibility(seq));
    }
  }
  return r;
}

inline std::string report_text(const SpectralReport& r) {
  const GeneratingSequence seq(r.sequence);
  std::string out = "C(" + seq.to_string() + ")  n=" + std::to_string(r.n);
  if (r.k) out += "  k=" + std::to_string(*r.k);
  out += "\n";
  out += "spectrum:    " + format_spectrum(r.spectrum) + "\n";
  out += "inertia:     " + r.inertia.to_string() + "\n";
  out += "m(0) = " + std::to_string(r.m_zero) + "   m(-2) = " + std::to_string(r.m_minus2) + "\n";
  out += std::string("irreducible: ") + (r.irreducible ? "yes" : "no") + "\n";
  if (r.lambda_minus) out += "lambda^-:    " + format_fixed(*r.lambda_minus, 6) + "\n";
  if (r.lower_margin && r.upper_margin) {
    out += "interval margins: below " + format_fixed(*r.lower_margin, 6) + ", above " + format_fixed(*r.upper_margin, 6) +
           "\n";
  }
  out += "timing (ms): direct " + format_fixed(r.direct_ms, 3);
  if (r.closed_form_ms) out += ", closed form " + format_fixed(*r.closed_form_ms, 3);
  out += "\n";
  if (!r.theorems.empty()) {
    out += "checks:\n";
    for (const auto& t : r.theorems) out += std::string("  ") + (t.pass ? "PASS " : "FAIL ") + t.theorem + "\n";
  }
  for (const auto& note : r.notes) out += "note: " + note + "\n";
  return out;
}

inline std::string report_csv_header() {
  return "sequence,n,k,n_minus,n_zero,n_plus,m_zero,m_minus2,irreducible,all_checks_pass,spectrum\n";
}

/// One CSV row; the spectrum cell is "value^mult" entries joined by ';'.
inline std::string report_csv_row(const SpectralReport& r) {
  const GeneratingSequence seq(r.sequence);
  std::string spectrum;
  for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
    if (i) spectrum += ';';
    spectrum += format_significant(r.spectrum[i].value, 12) + "^" + std::to_string(r.spectrum[i].multiplicity);
  }
  return "\"" + seq.to_string() + "\"," + std::to_string(r.n) + "," + (r.k ? std::to_string(*r.k) : "") + "," +
         std::to_string(r.inertia.negative) + "," + std::to_string(r.inertia.zero) + "," +
         std::to_string(r.inertia.positive) + "," + std::to_string(r.m_zero) + "," + std::to_string(r.m_minus2) + "," +
         (r.irreducible ? "true" : "false") + "," + (r.all_pass() ? "true" : "false") + ",\"" + spectrum + "\"\n";
}

}  // namespace ecc_spectra
