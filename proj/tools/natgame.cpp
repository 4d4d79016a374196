#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "natgame/analytic.hpp"
#include "natgame/oracle.hpp"
#include "natgame/scenario.hpp"
#include "natgame/verify.hpp"

namespace fs = std::filesystem;
using namespace natgame;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCertification = 3;

struct Options {
  bool exact = false;
  bool oracle = false;
  bool relaxed = false;
  std::string tol;     // empty: mode default
  std::string format;  // empty: json for solve/certify, table for demo
  std::string batch_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ScenarioFormat format_of(const std::string& path) {
  const auto ext = fs::path(path).extension().string();
  return ext == ".csv" ? ScenarioFormat::csv : ScenarioFormat::json;
}

template <class T>
T certificate_tolerance(const Options& opt) {
  if (!opt.tol.empty()) return parse_number<T>(opt.tol);
  return scalar_traits<T>::certificate_tolerance();
}

template <class T>
std::string display_number(const T& v) {
  if constexpr (scalar_traits<T>::exact) {
    return format_rational(v);
  } else {
    return format_significant(v, 12);
  }
}

template <class T>
std::string table_report(const GameSolutionT<T>& sol, const SaddleCertificateT<T>& cert,
                         const std::vector<std::string>& names, const std::string& unit) {
  std::size_t width = 7;
  for (const auto& n : names) width = std::max(width, n.size());

  std::ostringstream out;
  out << "method            " << method_name(sol.method) << "\n";
  out << "mode              " << scalar_traits<T>::mode_name() << "\n";
  out << "support           " << sol.support << "\n";
  out << "value             " << display_number(sol.value);
  if (!unit.empty()) out << " " << unit;
  out << "\n\n";
  out << std::left << std::setw(static_cast<int>(width) + 2) << "program"
      << std::setw(18) << "allocation" << "worst-case mix\n";
  for (int j = 0; j < sol.y.size(); ++j) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << names[static_cast<std::size_t>(j)]
        << std::setw(18) << display_number(sol.y[j]);
    if (j < sol.x.size()) out << display_number(sol.x[j]);
    out << "\n";
  }
  out << "\ncertificate       " << (cert.valid ? "valid" : "INVALID")
      << " (tolerance " << display_number(cert.tolerance) << ")\n";
  out << "max row violation " << display_number(cert.max_row_violation) << "\n";
  out << "max col violation " << display_number(cert.max_col_violation) << "\n";
  return out.str();
}

struct SolveOutcome {
  int code;
  std::string report;  // stdout payload on success
  std::string error;   // stderr payload on failure
};

template <class T>
SolveOutcome solve_text(const std::string& text, ScenarioFormat fmt, const Options& opt) {
  try {
    ScenarioDocumentT<T> doc = parse_scenario<T>(text, fmt, opt.relaxed);

    std::optional<GameMatrixT<T>> H;
    std::optional<GameSolutionT<T>> sol;
    if (doc.is_losses()) {
      H.emplace(diagonal_matrix(*doc.losses));
      if (opt.oracle) {
        sol.emplace(lp_solve(*H));
      } else {
        sol.emplace(solve_diagonal(*doc.losses));
      }
    } else {
      H.emplace(build_matrix(*doc.scenario));
      std::optional<DiagonalPatternT<T>> pattern;
      if (!opt.oracle) pattern = detect_diagonal(*H);
      if (pattern) {
        // the matrix is ground truth here, so ties between rows are fine
        sol.emplace(solve_diagonal_sorted(pattern->losses, true).solution);
      } else {
        sol.emplace(lp_solve(*H));
      }
    }

    const T tol = certificate_tolerance<T>(opt);
    const SaddleCertificateT<T> cert = certify_saddle(*H, sol->x, sol->y, sol->value, tol);
    std::string report = opt.format == "table" ? table_report(*sol, cert, doc.programs, doc.unit)
                                               : emit_report(*sol, cert, doc.programs, doc.unit);
    if (!cert.valid)
      return {kExitCertification, std::move(report),
              "certification failed: max row violation " +
                  display_number(cert.max_row_violation) + ", max col violation " +
                  display_number(cert.max_col_violation)};
    return {kExitOk, std::move(report), ""};
  } catch (const Error& e) {
    return {kExitInput, "", e.what()};
  }
}

template <class T>
int run_solve(const std::string& path, const Options& opt) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    std::cerr << "natgame: " << e.what() << "\n";
    return kExitInput;
  }
  SolveOutcome outcome = solve_text<T>(text, format_of(path), opt);
  if (!outcome.report.empty()) std::cout << outcome.report;
  if (!outcome.error.empty()) std::cerr << "natgame: " << outcome.error << "\n";
  return outcome.code;
}

template <class T>
int run_batch(const Options& opt) {
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(opt.batch_dir)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = entry.path().extension().string();
      if (ext == ".json" || ext == ".csv") files.push_back(entry.path());
    }
  } catch (const fs::filesystem_error& e) {
    std::cerr << "natgame: " << e.what() << "\n";
    return kExitInput;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<SolveOutcome>> tasks;
  tasks.reserve(files.size());
  for (const auto& file : files) {
    tasks.push_back(std::async(std::launch::async, [file, &opt]() -> SolveOutcome {
      std::string text;
      try {
        text = read_file(file.string());
      } catch (const Error& e) {
        return {kExitInput, "", e.what()};
      }
      return solve_text<T>(text, format_of(file.string()), opt);
    }));
  }

  bool any_input_error = false;
  bool any_cert_failure = false;
  std::cout << "[";
  for (std::size_t i = 0; i < files.size(); ++i) {
    SolveOutcome outcome = tasks[i].get();
    if (i) std::cout << ",";
    std::cout << "\n{\"file\": \"" << detail::json_escape(files[i].filename().string())
              << "\", \"exit\": " << outcome.code;
    if (outcome.code == kExitInput) {
      any_input_error = true;
      std::cout << ", \"error\": \"" << detail::json_escape(outcome.error) << "\"}";
      continue;
    }
    if (outcome.code == kExitCertification) any_cert_failure = true;
    std::cout << ", \"report\": " << outcome.report << "}";
  }
  std::cout << "\n]\n";
  if (any_input_error) return kExitInput;
  if (any_cert_failure) return kExitCertification;
  return kExitOk;
}

template <class T>
int run_certify(const std::string& matrix_path, const std::string& solution_path,
                const Options& opt) {
  try {
    const MatrixDocumentT<T> matrix_doc = parse_matrix<T>(read_file(matrix_path));
    const ProposedSolutionT<T> proposed = parse_solution<T>(read_file(solution_path));
    const T tol = certificate_tolerance<T>(opt);
    const SaddleCertificateT<T> cert =
        certify_saddle(matrix_doc.matrix, proposed.x, proposed.y, proposed.value, tol);

    if (opt.format == "table") {
      std::cout << "certificate       " << (cert.valid ? "valid" : "INVALID")
                << " (tolerance " << display_number(cert.tolerance) << ")\n"
                << "value             " << display_number(cert.value) << "\n"
                << "max row violation " << display_number(cert.max_row_violation) << "\n"
                << "max col violation " << display_number(cert.max_col_violation) << "\n";
    } else {
      std::cout << emit_certificate(cert);
    }

    if (!cert.valid) {
      for (std::size_t i = 0; i < cert.row_payoffs.size(); ++i)
        if (cert.row_payoffs[i] > cert.value + cert.tolerance)
          std::cerr << "natgame: row " << i + 1 << " payoff "
                    << display_number(cert.row_payoffs[i]) << " exceeds claimed value\n";
      for (std::size_t j = 0; j < cert.col_payoffs.size(); ++j)
        if (cert.col_payoffs[j] < cert.value - cert.tolerance)
          std::cerr << "natgame: column " << j + 1 << " payoff "
                    << display_number(cert.col_payoffs[j]) << " falls below claimed value\n";
      return kExitCertification;
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "natgame: " << e.what() << "\n";
    return kExitInput;
  }
}

struct DemoFixture {
  std::string name;
  std::vector<std::string> programs;
  std::string unit;
  std::vector<std::string> losses;  // numeric text, parsed per mode
  // figures printed in the source material, kept for side-by-side comparison
  std::vector<double> reference_allocation;
  double reference_value;
  int reference_support;
};

const std::vector<DemoFixture>& demo_fixtures() {
  static const std::vector<DemoFixture> fixtures = {
      {"demographic-support",
       {"maternal_capital", "family_mortgage", "large_family_benefits", "preschool_development",
        "medical_support"},
       "thousand newborns",
       {"30", "28", "26", "24", "22"},
       {0.315, 0.266, 0.21, 0.143, 0.066},
       20.8,
       5},
      {"fractional-losses",
       {"program_1", "program_2", "program_3", "program_4", "program_5"},
       "",
       {"1/3", "1/3.5", "1/4", "1/4.5", "1/5"},
       {0.55, 0.31, 0.14, 0.0, 0.0},
       0.1656,
       3},
  };
  return fixtures;
}

template <class T>
int run_demo(const Options& opt) {
  bool internal_ok = true;
  std::ostringstream json_out;
  json_out << "[";

  bool first_fixture = true;
  for (const DemoFixture& fx : demo_fixtures()) {
    std::vector<T> losses;
    losses.reserve(fx.losses.size());
    for (const auto& text : fx.losses) losses.push_back(parse_number<T>(text));
    const LossVectorT<T> t(losses);

    const GameSolutionT<T> sol = solve_diagonal(t);
    const GameMatrixT<T> H = diagonal_matrix(t);
    const GameSolutionT<T> lp = lp_solve(H);
    const T tol = certificate_tolerance<T>(opt);
    const SaddleCertificateT<T> cert = certify_saddle(H, sol.x, sol.y, sol.value, tol);
    const SaddleCertificateT<T> lp_cert = certify_saddle(H, lp.x, lp.y, lp.value, tol);

    const double v = scalar_traits<T>::to_double(sol.value);
    bool oracle_agrees;
    if constexpr (scalar_traits<T>::exact) {
      oracle_agrees = sol.value == lp.value;
    } else {
      oracle_agrees = std::abs(sol.value - lp.value) <= 1e-9;
    }
    internal_ok = internal_ok && oracle_agrees && cert.valid && lp_cert.valid;

    // the reference prints 3 decimals, so one unit in the last place
    const bool value_matches_reference = std::abs(v - fx.reference_value) <= 1e-3;
    const bool support_matches_reference = sol.support == fx.reference_support;
    double allocation_gap = 0;
    for (int j = 0; j < sol.y.size(); ++j)
      allocation_gap = std::max(allocation_gap,
                                std::abs(scalar_traits<T>::to_double(sol.y[j]) -
                                         fx.reference_allocation[static_cast<std::size_t>(j)]));
    const bool allocation_matches_reference = allocation_gap <= 1e-3;

    if (opt.format == "json") {
      if (!first_fixture) json_out << ",";
      first_fixture = false;
      json_out << "\n{\n  \"fixture\": \"" << fx.name << "\",\n";
      json_out << "  \"computed_value\": " << detail::report_number(sol.value) << ",\n";
      json_out << "  \"reference_value\": " << format_significant(fx.reference_value, 12) << ",\n";
      json_out << "  \"value_matches_reference\": " << (value_matches_reference ? "true" : "false")
               << ",\n";
      json_out << "  \"computed_support\": " << sol.support << ",\n";
      json_out << "  \"reference_support\": " << fx.reference_support << ",\n";
      json_out << "  \"support_matches_reference\": "
               << (support_matches_reference ? "true" : "false") << ",\n";
      json_out << "  \"computed_allocation\": "
               << detail::number_array(sol.y.probabilities(), detail::report_number<T>) << ",\n";
      json_out << "  \"reference_allocation\": "
               << detail::number_array(fx.reference_allocation,
                                       [](double d) { return format_significant(d, 12); })
               << ",\n";
      json_out << "  \"allocation_matches_reference\": "
               << (allocation_matches_reference ? "true" : "false") << ",\n";
      json_out << "  \"lp_value\": " << detail::report_number(lp.value) << ",\n";
      json_out << "  \"oracle_agrees\": " << (oracle_agrees ? "true" : "false") << ",\n";
      json_out << "  \"certificate_valid\": " << (cert.valid ? "true" : "false") << "\n}";
    } else {
      std::cout << "fixture " << fx.name << "\n";
      std::cout << "  value        computed " << display_number(sol.value) << "   reference "
                << format_significant(fx.reference_value, 12) << "   "
                << (value_matches_reference ? "match" : "MISMATCH (documented)") << "\n";
      std::cout << "  support      computed " << sol.support << "   reference "
                << fx.reference_support << "   "
                << (support_matches_reference ? "match" : "MISMATCH (documented)") << "\n";
      std::cout << "  allocation   computed";
      for (int j = 0; j < sol.y.size(); ++j) std::cout << " " << display_number(sol.y[j]);
      std::cout << "\n               reference";
      for (double a : fx.reference_allocation) std::cout << " " << format_significant(a, 12);
      std::cout << "\n               max gap " << format_significant(allocation_gap, 6) << "  "
                << (allocation_matches_reference ? "match (print precision)"
                                                 : "MISMATCH (documented)")
                << "\n";
      std::cout << "  lp oracle    value " << display_number(lp.value) << "   "
                << (oracle_agrees ? "agrees (<= 1e-9)" : "DISAGREES") << "\n";
      std::cout << "  certificate  " << (cert.valid ? "valid" : "INVALID") << "\n\n";
    }
  }

  if (opt.format == "json") {
    json_out << "\n]\n";
    std::cout << json_out.str();
  }
  if (!internal_ok) {
    std::cerr << "natgame: demo internal oracle agreement failed\n";
    return kExitCertification;
  }
  return kExitOk;
}

template <class Fn>
int dispatch_mode(bool exact, Fn&& fn) {
  if (exact) return fn(Rational{});
  return fn(double{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for finite zero-sum games against nature"};
  app.require_subcommand(1);

  Options opt;
  std::string scenario_path;
  std::string matrix_path;
  std::string solution_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--exact", opt.exact, "exact rational arithmetic");
    cmd->add_option("--tol", opt.tol, "certificate tolerance (default 1e-9, exact mode 0)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a scenario file, certify, and report");
  solve->add_option("file", scenario_path, "scenario file (.json or .csv)");
  solve->add_flag("--oracle", opt.oracle, "force the LP solver even on diagonal input");
  solve->add_flag("--relaxed", opt.relaxed, "admit tied losses");
  solve->add_option("--batch", opt.batch_dir, "solve every .json/.csv file in a directory");
  add_common(solve);

  CLI::App* certify = app.add_subcommand("certify", "check a proposed solution for a matrix");
  certify->add_option("matrix", matrix_path, "matrix file")->required();
  certify->add_option("solution", solution_path, "proposed solution file")->required();
  add_common(certify);

  CLI::App* demo = app.add_subcommand("demo", "run the bundled fixtures against their reference figures");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      if (!opt.batch_dir.empty())
        return dispatch_mode(opt.exact, [&](auto tag) { return run_batch<decltype(tag)>(opt); });
      if (scenario_path.empty()) {
        std::cerr << "natgame: solve needs a file or --batch\n";
        return kExitInput;
      }
      return dispatch_mode(opt.exact, [&](auto tag) {
        return run_solve<decltype(tag)>(scenario_path, opt);
      });
    }
    if (certify->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return dispatch_mode(opt.exact, [&](auto tag) {
        return run_certify<decltype(tag)>(matrix_path, solution_path, opt);
      });
    }
    if (demo->parsed()) {
      if (opt.format.empty()) opt.format = "table";
      return dispatch_mode(opt.exact, [&](auto tag) { return run_demo<decltype(tag)>(opt); });
    }
  } catch (const Error& e) {
    std::cerr << "natgame: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "natgame: internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
