// ecc_spectra: eccentricity spectra of C-graphs from the command line.
//
//   ecc_spectra spectrum 1,2,1,2 --format json
//   ecc_spectra table1
//   ecc_spectra verify --trials 500 --seed 42
//   ecc_spectra matrix 1,2,1,2 --which q2k
//   ecc_spectra dot 1,1,1,2 --which eccentric

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecc_spectra/ecc_spectra.hpp"

namespace es = ecc_spectra;

namespace {

enum Exit : int { kPass = 0, kTheoremFailure = 1, kUsage = 2, kOutOfScope = 3 };

int cmd_spectrum(const std::string& text, const std::string& format, bool check) {
  const auto seq = es::GeneratingSequence::parse(text);
  const bool has_checker =
      seq.in_main_scope() || seq.length() == 2 || (seq.is_even_length() && seq.half_length() >= 2);
  if (check && !has_checker) {
    std::cerr << "error: no theorem applies to C(" << seq.to_string() << "); checks need an even-length sequence\n";
    return kOutOfScope;
  }
  const es::SpectralReport report = es::build_spectral_report(seq, true);
  if (format == "json") {
    std::cout << nlohmann::json(report).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << es::report_csv_header() << es::report_csv_row(report);
  } else {
    std::cout << es::report_text(report);
  }
  return report.all_pass() ? kPass : kTheoremFailure;
}

int cmd_table1() {
  bool all = true;
  for (const auto& row : es::reference_table()) {
    const auto cmp = es::compare_reference_row(row);
    std::cout << (cmp.pass() ? "ok    " : "DIFF  ") << "C(" << cmp.sequence.to_string() << ")\n"
              << "      printed  " << es::format_spectrum(cmp.expected) << "\n"
              << "      computed " << es::format_spectrum(cmp.computed) << "\n";
    for (const auto& m : cmp.mismatches) std::cout << "      mismatch: " << m << "\n";
    all = all && cmp.pass();
  }
  std::cout << (all ? "all rows match" : "some rows differ") << " (tolerance " << es::kReferenceTolerance << ")\n";
  return all ? kPass : kTheoremFailure;
}

int cmd_verify(const es::VerifyOptions& opt) {
  const es::VerifySummary s = es::run_verify(opt);
  std::cout << "trials: " << s.trials << "  seed: " << opt.seed << "  max-k: " << opt.max_k
            << "  max-alpha: " << opt.max_alpha << "\n";
  for (const auto& [name, tally] : s.tallies)
    std::cout << "  " << name << ": " << tally.passed << "/" << tally.total << "\n";
  if (s.trials > 0) {
    std::cout << "min margin below the interval: " << es::format_fixed(s.min_lower_margin, 6) << " at C("
              << s.min_lower_margin_sequence << ")\n";
  }
  if (!s.all_pass()) {
    std::cout << "failures: " << s.failures << "\nfirst failure:\n" << nlohmann::json(*s.first_failure).dump(2) << "\n";
    return kTheoremFailure;
  }
  std::cout << "all checks passed\n";
  return kPass;
}

int cmd_matrix(const std::string& text, const std::string& which) {
  const auto seq = es::GeneratingSequence::parse(text);
  if (which == "adj") {
    std::cout << es::matrix_csv(es::build_cograph(seq).adjacency_matrix());
  } else if (which == "dist") {
    std::cout << es::matrix_csv(es::distance_matrix(es::build_cograph(seq)));
  } else if (which == "ecc") {
    std::cout << es::matrix_csv(es::eccentricity_matrix(es::build_cograph(seq)).matrix());
  } else {
    es::require_main_scope(seq);
    if (which == "q2k") std::cout << es::matrix_csv(es::build_q2k(seq));
    if (which == "qtilde") std::cout << es::matrix_csv(es::build_qtilde(seq));
    if (which == "r") std::cout << es::matrix_csv(es::symmetrize_r(seq).matrix());
    if (which == "t") std::cout << es::matrix_csv(es::tridiagonal_t(seq));
    if (which == "s") std::cout << es::matrix_csv(es::tridiagonal_s(seq));
  }
  return kPass;
}

int cmd_dot(const std::string& text, const std::string& which) {
  const auto seq = es::GeneratingSequence::parse(text);
  const es::SimpleGraph g = es::build_cograph(seq);
  const std::string name = "C(" + seq.to_string() + ")";
  if (which == "graph")
    std::cout << es::graph_dot(g, name);
  else
    std::cout << es::graph_dot(es::eccentric_graph(g), name + "^e");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentricity spectra of C-graphs"};
  app.require_subcommand(1);

  std::string seq_text;
  std::string format = "text";
  bool check = false;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum, inertia, multiplicities and theorem checks");
  spectrum->add_option("sequence", seq_text, "generating sequence, e.g. 1,2,1,2")->required();
  spectrum->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  spectrum->add_flag("--check", check, "exit 3 when no theorem applies to the sequence");

  auto* table1 = app.add_subcommand("table1", "Recompute the reference table of eleven spectra");

  es::VerifyOptions vopt;
  vopt.threads = es::sweep_thread_count();
  auto* verify = app.add_subcommand("verify", "Randomized sweep of every checker");
  verify->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber);
  verify->add_option("--max-k", vopt.max_k)->check(CLI::Range(2, 64));
  verify->add_option("--max-alpha", vopt.max_alpha)->check(CLI::Range(2, 64));
  verify->add_option("--seed", vopt.seed);

  std::string which;
  auto* matrix = app.add_subcommand("matrix", "Print a matrix as CSV");
  matrix->add_option("sequence", seq_text)->required();
  matrix->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"adj", "dist", "ecc", "q2k", "qtilde", "r", "t", "s"}));

  auto* dot = app.add_subcommand("dot", "Print a graph in DOT");
  dot->add_option("sequence", seq_text)->required();
  dot->add_option("--which", which)->default_val("graph")->check(CLI::IsMember({"graph", "eccentric"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(seq_text, format, check);
    if (*table1) return cmd_table1();
    if (*verify) return cmd_verify(vopt);
    if (*matrix) return cmd_matrix(seq_text, which);
    if (*dot) return cmd_dot(seq_text, which);
  } catch (const es::InvalidSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const es::OutOfScope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOutOfScope;
  } catch (const es::DisconnectedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOutOfScope;
  }
  return kUsage;
}
