// Command-line front end: factor, verify, bounds, oracle tables, selftest.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "unicomm/factor_sln.hpp"
#include "unicomm/io.hpp"
#include "unicomm/oracle.hpp"
#include "unicomm/selftest.hpp"

namespace {

using namespace unicomm;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::ParseError, "write failed for " + path);
}

std::string join_route(const std::vector<std::string>& route) {
  std::string s;
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (i) s += " ; ";
    s += route[i];
  }
  return s;
}

int cmd_factor(const std::string& field_spec, const std::string& input, const std::string& json_path) {
  const Matrix a = parse_matrix_file(read_input(input));
  if (!field_spec.empty() && parse_field(field_spec) != a.field()) {
    throw Error(ErrorCode::FieldMismatch,
                "--field " + field_spec + " does not match the matrix file field " + a.field().to_string());
  }
  const Factorization cert = factor(a);
  const std::string summary = "pairs: " + std::to_string(cert.size()) + "\nroute: " + join_route(cert.route) + "\n";
  if (json_path.empty()) {
    std::cout << dump_certificate(cert);
    std::cerr << summary;
  } else {
    write_output(json_path, dump_certificate(cert));
    std::cout << summary;
  }
  return kOk;
}

int cmd_verify(const std::string& cert_path) {
  const Factorization cert = parse_certificate(read_input(cert_path));
  const Report report = verify(cert);
  std::cout << report.to_string();
  return report.ok ? kOk : kCheckFailed;
}

int cmd_bounds(const std::string& field_spec, std::size_t n) {
  const Bound b = bound_for(parse_field(field_spec), n);
  std::cout << "pairs: " << b.pairs << "\nu2_factors: " << 2 * b.pairs << "\nreason: " << b.reason << "\n";
  return kOk;
}

int cmd_oracle(const std::string& which, const std::string& field_spec, std::size_t n, std::uint64_t budget) {
  const GroupTable t = GroupTable::build(parse_field(field_spec), n, budget);
  const LengthTable lengths = bfs_lengths(t);
  if (which == "lengths") {
    std::cout << lengths_csv(t, lengths);
    return kOk;
  }
  if (which == "derived") {
    const auto derived = derived_subgroup(t);
    std::vector<bool> member(t.order(), false);
    for (auto id : derived) member[id] = true;
    std::istringstream csv(lengths_csv(t, lengths));
    std::string line;
    std::getline(csv, line);
    std::cout << line << "\n";
    for (GroupTable::Id id = 0; std::getline(csv, line); ++id) {
      if (member[id]) std::cout << line << "\n";
    }
    std::cerr << "|G| = " << t.order() << ", |G'| = " << derived.size() << "\n";
    return kOk;
  }
  const TraceCheck check = check_trace_characterization(t, lengths);
  std::cout << "nonscalar_checked: " << check.nonscalar_checked << "\ncounterexamples: " << check.counterexamples.size()
            << "\n";
  for (auto id : check.counterexamples) std::cout << "  " << t.matrix(id).to_string() << "\n";
  return check.ok() ? kOk : kCheckFailed;
}

int cmd_selftest(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : run_selftest(seed)) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    ok = ok && r.ok;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor SL_n(F) matrices into commutators of unipotent index-2 matrices"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for sampled suites")->capture_default_str();

  std::string field_spec;
  std::string input;
  std::string json_path;
  std::string cert_path;
  std::size_t n = 0;
  std::uint64_t budget = kDefaultBudget;

  auto* factor_cmd = app.add_subcommand("factor", "Factor a matrix file and emit a certificate");
  factor_cmd->add_option("--field", field_spec, "Expected field (must match the file)");
  factor_cmd->add_option("--input", input, "Matrix file, or - for stdin")->required();
  factor_cmd->add_option("--json", json_path, "Write the certificate here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
  verify_cmd->add_option("--cert", cert_path, "Certificate JSON, or - for stdin")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Promised pair count for SL_n(F)");
  bounds_cmd->add_option("--field", field_spec)->required();
  bounds_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  std::vector<std::pair<std::string, CLI::App*>> oracle_cmds;
  const std::pair<const char*, const char*> oracle_kinds[] = {
      {"lengths", "CSV of minimal U2-commutator lengths by BFS"},
      {"derived", "CSV rows restricted to the derived subgroup"},
      {"check-trace", "Check the trace test for single commutators in SL_2"},
  };
  for (const auto& [which, about] : oracle_kinds) {
    auto* cmd = app.add_subcommand(std::string("oracle-") + which, about);
    cmd->add_option("--field", field_spec)->required();
    cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--budget", budget, "Largest group order to enumerate")->capture_default_str();
    oracle_cmds.emplace_back(which, cmd);
  }

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded reference examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (factor_cmd->parsed()) return cmd_factor(field_spec, input, json_path);
    if (verify_cmd->parsed()) return cmd_verify(cert_path);
    if (bounds_cmd->parsed()) return cmd_bounds(field_spec, n);
    if (selftest_cmd->parsed()) return cmd_selftest(seed);
    for (const auto& [which, cmd] : oracle_cmds) {
      if (cmd->parsed()) return cmd_oracle(which, field_spec, n, budget);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? kCheckFailed : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
