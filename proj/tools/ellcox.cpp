// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ellcox/checks.hpp"
#include "ellcox/errors.hpp"

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ellcox::VarietyType type_arg(const std::string& s) {
  try {
    return ellcox::parse_type(s);
  } catch (const ellcox::Error& e) {
    throw UsageError(e.what());
  }
}

ellcox::IntVector degree_arg(const std::string& s) {
  ellcox::IntVector out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    ellcox::Int v;
    if (item.empty() || v.set_str(item, 10) != 0) throw UsageError("--degree: '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.size() != 4) throw UsageError("--degree expects four comma-separated integers, e.g. 4,-3,-2,-1");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic elliptic varieties: tables, cones, Cox rings and classification"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 3;
  std::uint64_t seed = 0;
  std::string degree = "0,0,0,0";
  std::string format = "text";
  std::string out;
  app.add_option("--n", n, "Dimension parameter, at least 3")->check(CLI::Range(3, 12));
  app.add_option("--seed", seed, "Seed for the coefficient draws");
  app.add_option("--degree", degree, "Degree a,b,c,d for hilbert");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "Write the report to this path");

  std::string type, target, path;
  auto* catalog = app.add_subcommand("catalog", "List the seven types with their Mordell-Weil groups");
  auto* mw = app.add_subcommand("mw", "Mordell-Weil group of a type");
  mw->add_option("type", type)->required();
  auto* cones = app.add_subcommand("cones", "Mori, nef and moving cones of a type");
  cones->add_option("type", type)->required();
  auto* coxring = app.add_subcommand("coxring", "Cox ring presentation of an extremal type");
  coxring->add_option("type", type)->required();
  auto* hilbert = app.add_subcommand("hilbert", "Dimension of a graded piece of the Cox ring");
  hilbert->add_option("type", type)->required();
  auto* classify = app.add_subcommand("classify", "Classify a cubic and a line read from a file");
  classify->add_option("input", path)->required();
  auto* verify = app.add_subcommand("verify", "Run all checks for a type or for all types");
  verify->add_option("target", target, "type name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ellcox::Report report;
  try {
    if (catalog->parsed()) {
      report = ellcox::cmd_catalog();
    } else if (mw->parsed()) {
      report = ellcox::cmd_mw(type_arg(type));
    } else if (cones->parsed()) {
      report = ellcox::cmd_cones(type_arg(type));
    } else if (coxring->parsed()) {
      auto t = type_arg(type);
      if (!ellcox::is_extremal(t)) throw UsageError("coxring needs an extremal type (X3, XS, XS2, XSSS)");
      report = ellcox::cmd_coxring(t, n, seed);
    } else if (hilbert->parsed()) {
      auto t = type_arg(type);
      if (!ellcox::is_extremal(t)) throw UsageError("hilbert needs an extremal type (X3, XS, XS2, XSSS)");
      report = ellcox::cmd_hilbert(t, n, degree_arg(degree));
    } else if (classify->parsed()) {
      std::ifstream probe(path);
      if (!probe) throw UsageError("cannot read " + path);
      report = ellcox::cmd_classify(path);
    } else if (verify->parsed()) {
      if (target != "all") type_arg(target);
      report = ellcox::cmd_verify(target, n, seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ellcox::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ellcox::UnknownVariable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }

  const std::string text = format == "json" ? ellcox::to_json(report) : ellcox::to_text(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << '\n';
      return 2;
    }
    f << text;
  }
  return report.passed() ? 0 : 1;
}
