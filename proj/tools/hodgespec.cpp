// hodgespec: Hodge spectra of central hyperplane arrangements.
//
//   hodgespec spectrum FILE [--method formula|chow|both] [--s-policy dense|nnc|all] [--json]
//   hodgespec lattice FILE [--json]
//   hodgespec dense FILE [--json]
//   hodgespec verify FILE [--json]
//
// FILE holds one hyperplane per line as whitespace-separated rationals; "-"
// reads standard input. Exit status: 0 success, 1 failed check, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hodge/chow.hpp"
#include "hodge/formulas.hpp"
#include "hodge/io.hpp"
#include "hodge/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

bool is_input_error(hodge::ErrorCode code) {
  using hodge::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroForm:
    case ErrorCode::NotReduced:
    case ErrorCode::EmptyArrangement:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ParseError:
    case ErrorCode::RankTooHigh:
    case ErrorCode::NotEssential:
      return true;
    default:
      return false;
  }
}

int cmd_spectrum(const hodge::Arrangement& arr, const std::string& method, const std::string& policy_name,
                 bool json) {
  const auto policy = hodge::parse_edge_policy(policy_name);
  hodge::Spectrum sp;
  if (method == "formula") {
    sp = hodge::spectrum(arr, policy);
  } else if (method == "chow") {
    sp = hodge::chow::spectrum_via_chow_any(arr);
  } else {
    sp = hodge::spectrum(arr, policy);
    const auto other = hodge::chow::spectrum_via_chow_any(arr);
    if (!(sp == other)) {
      std::cerr << "formula and resolution spectra differ\n  formula: " << sp.to_polynomial_string()
                << "\n  chow:    " << other.to_polynomial_string() << "\n";
      return kCheckFailed;
    }
  }
  if (json)
    std::cout << hodge::io::spectrum_json(sp).dump() << "\n";
  else
    std::cout << hodge::io::spectrum_text(sp);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge spectra of reduced central hyperplane arrangements"};
  app.require_subcommand(1);

  std::string file, method = "formula", policy = "dense";
  bool json = false;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the Hodge spectrum");
  spectrum_cmd->add_option("file", file, "arrangement file ('-' for stdin)")->required();
  spectrum_cmd->add_option("--method", method, "formula, chow, or both")
      ->check(CLI::IsMember({"formula", "chow", "both"}));
  spectrum_cmd->add_option("--s-policy", policy, "edge set used by the closed form")
      ->check(CLI::IsMember({"dense", "nnc", "all"}));
  spectrum_cmd->add_flag("--json", json, "JSON output");

  auto* lattice_cmd = app.add_subcommand("lattice", "list the flats of the intersection lattice");
  lattice_cmd->add_option("file", file, "arrangement file ('-' for stdin)")->required();
  lattice_cmd->add_flag("--json", json, "JSON output");

  auto* dense_cmd = app.add_subcommand("dense", "classify codim >= 2 edges as dense / nnc");
  dense_cmd->add_option("file", file, "arrangement file ('-' for stdin)")->required();
  dense_cmd->add_flag("--json", json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "run every cross-check on one arrangement");
  verify_cmd->add_option("file", file, "arrangement file ('-' for stdin)")->required();
  verify_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kBadInput;
  }

  try {
    const auto arr = hodge::io::parse_arrangement(slurp(file));
    if (spectrum_cmd->parsed()) return cmd_spectrum(arr, method, policy, json);

    if (lattice_cmd->parsed() || dense_cmd->parsed()) {
      const auto lattice = hodge::build_lattice(arr);
      if (lattice_cmd->parsed())
        std::cout << (json ? hodge::io::lattice_json(arr, lattice).dump() + "\n" : hodge::io::lattice_text(lattice));
      else
        std::cout << (json ? hodge::io::dense_json(arr, lattice).dump() + "\n"
                           : hodge::io::dense_text(arr, lattice));
      return kOk;
    }

    const auto report = hodge::run_verify(arr);
    if (json)
      std::cout << hodge::report_json(report).dump() << "\n";
    else
      std::cout << hodge::report_text(report);
    return report.all_passed() ? kOk : kCheckFailed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const hodge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kBadInput : kCheckFailed;
  }
}
