#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ecc_spectra/ecc_matrix.hpp"
#include "ecc_spectra/format.hpp"
#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/sequence.hpp"

namespace ecc_spectra {

/// One published eccentricity spectrum, values as printed (4-5 significant digits).
struct ReferenceRow {
  std::vector<int> sequence;
  std::vector<EigenGroup> spectrum;
};

/// Published eccentricity spectra of eleven small C-graphs.
inline const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
      {{1, 1, 1, 2}, {{-2.8284, 1}, {-2, 1}, {0, 1}, {2, 1}, {2.8284, 1}}},
      {{2, 1, 1, 2}, {{-3.4641, 1}, {-2, 1}, {0, 2}, {2, 1}, {3.4641, 1}}},
      {{1, 1, 2, 2}, {{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}},
      {{1, 2, 1, 2}, {{-2.9624, 1}, {-2, 2}, {0.6222, 1}, {2, 1}, {4.3402, 1}}},
      {{1, 1, 1, 1, 1, 2}, {{-3.4982, 1}, {-2.5427, 1}, {-2, 1}, {0, 1}, {0.6698, 1}, {2, 1}, {5.3711, 1}}},
      {{1, 1, 3, 2}, {{-4.8990, 1}, {-2, 1}, {0, 3}, {2, 1}, {4.8990, 1}}},
      {{1, 3, 1, 2}, {{-3.0283, 1}, {-2, 3}, {0.8560, 1}, {2, 1}, {6.123, 1}}},
      {{1, 2, 2, 2}, {{-4.35488, 1}, {-2, 2}, {0, 1}, {0.6433, 1}, {2, 1}, {5.7115, 1}}},
      {{2, 1, 1, 3}, {{-3.4641, 1}, {-2, 2}, {0, 2}, {3.4641, 1}, {4, 1}}},
      {{1, 2, 1, 3}, {{-2.9624, 1}, {-2, 3}, {0.6222, 1}, {4, 1}, {4.3402, 1}}},
      {{1, 1, 1, 4}, {{-2.8284, 1}, {-2, 3}, {0, 1}, {2.8284, 1}, {6, 1}}},
  };
  return rows;
}

/// Absolute tolerance against the printed 4-decimal values.
inline constexpr double kReferenceTolerance = 1e-3;

struct ReferenceComparison {
  GeneratingSequence sequence;
  std::vector<EigenGroup> expected;
  std::vector<EigenGroup> computed;
  /// Human-readable description of every mismatched cell.
  std::vector<std::string> mismatches;

  bool pass() const noexcept { return mismatches.empty(); }
};

inline std::string format_spectrum(const std::vector<EigenGroup>& groups) {
  std::string out = "{";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += format_fixed(groups[i].value, 4);
    if (groups[i].multiplicity != 1) out += "^" + std::to_string(groups[i].multiplicity);
  }
  return out + "}";
}

/// Distinct values are matched in ascending order: same count, each value
/// within 1e-3 and each multiplicity equal.
inline ReferenceComparison compare_reference_row(const ReferenceRow& row) {
  const GeneratingSequence seq(row.sequence);
  ReferenceComparison cmp{seq, row.spectrum, eigen_sym(eccentricity_matrix(build_cograph(seq)).matrix()).groups, {}};
  if (cmp.computed.size() != cmp.expected.size()) {
    cmp.mismatches.push_back("distinct eigenvalue count: expected " + std::to_string(cmp.expected.size()) +
                             ", computed " + std::to_string(cmp.computed.size()));
    return cmp;
  }
  for (std::size_t i = 0; i < cmp.expected.size(); ++i) {
    const auto& e = cmp.expected[i];
    const auto& c = cmp.computed[i];
    if (std::abs(e.value - c.value) > kReferenceTolerance) {
      cmp.mismatches.push_back("value " + format_significant(e.value, 6) + ": computed " +
                               format_significant(c.value, 8) + " (|diff| = " +
                               format_significant(std::abs(e.value - c.value), 3) + ")");
    }
    if (e.multiplicity != c.multiplicity) {
      cmp.mismatches.push_back("multiplicity of " + format_significant(e.value, 6) + ": expected " +
                               std::to_string(e.multiplicity) + ", computed " + std::to_string(c.multiplicity));
    }
  }
  return cmp;
}

}  // namespace ecc_spectra
