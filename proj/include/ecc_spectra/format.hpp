#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/matrix.hpp"

namespace ecc_spectra {

/// Shortest general-format rendering with `digits` significant digits.
/// Locale independent; -0 prints as 0.
inline std::string format_significant(double value, int digits = 12) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  std::string out(buf, end);
  if (out == "-0") out = "0";
  return out;
}

/// Fixed-point with `decimals` digits, trailing zeros stripped ("2", "-2.9624").
inline std::string format_fixed(double value, int decimals = 4) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  std::string out(buf, end);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

/// CSV with integers verbatim, ',' separators and '\n' after every row.
inline std::string matrix_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// CSV with reals at 12 significant digits.
inline std::string matrix_csv(const Matrix<double>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_significant(m(i, j), 12);
    }
    out += '\n';
  }
  return out;
}

/// "p<part>_<index>", both 1-based.
inline std::string dot_vertex_name(const SimpleGraph& g, std::size_t v) {
  return "p" + std::to_string(g.part_of(v)) + "_" + std::to_string(g.index_in_part(v));
}

inline std::string graph_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::string out = "graph \"" + name + "\" {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out += "  " + dot_vertex_name(g, v) + ";\n";
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) out += "  " + dot_vertex_name(g, u) + " -- " + dot_vertex_name(g, v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ecc_spectra
