#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "shortroots/antichain.hpp"
#include "shortroots/config.hpp"
#include "shortroots/errors.hpp"
#include "shortroots/graded_character.hpp"
#include "shortroots/reduction.hpp"
#include "shortroots/report.hpp"
#include "shortroots/verify.hpp"

using namespace shortroots;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(bool asJson, const nlohmann::json& j, const std::string& text) {
  if (asJson) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortroots: little adjoint modules, simple reductions and their combinatorics"};
  app.require_subcommand(1);

  std::string type;
  bool asJson = false;
  bool timing = false;
  bool list = false;
  int maxDegree = -1;
  std::vector<std::string> checks;

  auto* info = app.add_subcommand("info", "root system constants, simple reduction and dimension ledger");
  info->add_option("type", type, "type and rank, e.g. C4")->required();
  info->add_flag("--json", asJson, "emit JSON");

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("type", type, "type and rank, e.g. F4")->required();
  verify->add_option("--check", checks, "run only this check id (repeatable)");
  verify->add_flag("--json", asJson, "emit JSON");
  verify->add_flag("--timing", timing, "record elapsed time per check (output is then not reproducible)");

  auto* table = app.add_subcommand("table1", "little adjoint table for C2..C6, B2..B6, F4, G2");
  table->add_flag("--json", asJson, "emit JSON");

  auto* anti = app.add_subcommand("antichains", "antichains in the short positive root poset");
  anti->add_option("type", type, "type and rank")->required();
  anti->add_flag("--list", list, "list every antichain");
  anti->add_flag("--json", asJson, "emit JSON");

  auto* nullcone = app.add_subcommand("nullcone-char", "truncated graded character of the null-cone");
  nullcone->add_option("type", type, "type and rank")->required();
  nullcone->add_option("--max-degree", maxDegree, "truncation degree")->required()->check(CLI::NonNegativeNumber);
  nullcone->add_flag("--json", asJson, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Limits limits = Limits::fromEnvironment();

    if (*table) {
      std::vector<Table1Row> rows;
      bool ok = true;
      for (const auto& spec : table1Systems()) {
        rows.push_back(table1(RootSystem::build(spec)));
        if (!(rows.back() == *table1Registry(spec))) ok = false;
      }
      emit(asJson, table1Json(rows), table1Text(rows));
      return ok ? kExitPass : kExitFail;
    }

    const RootSystem rs = RootSystem::build(parseSpec(type));
    if (*info) {
      emit(asJson, infoJson(rs), infoText(rs));
      return kExitPass;
    }
    if (*verify) {
      VerifyOptions opts;
      opts.only = checks;
      opts.limits = limits;
      opts.timing = timing;
      const VerificationReport report = runChecks(rs, opts);
      emit(asJson, reportJson(report), reportText(report));
      return report.allPassed() ? kExitPass : kExitFail;
    }
    if (*anti) {
      const AntichainReport r = antichainReport(rs, list);
      emit(asJson, antichainJson(rs, r), antichainText(rs, r));
      return kExitPass;
    }
    if (*nullcone) {
      if (maxDegree > limits.maxDegree)
        throw LimitExceeded("--max-degree " + std::to_string(maxDegree) + " exceeds SHORTROOTS_MAX_DEGREE = " +
                            std::to_string(limits.maxDegree));
      const GradedCharacter ch = nullconeCharacter(rs, maxDegree, limits.maxWeylOrder);
      const HilbertResult hr = hilbertCheck(rs, ch);
      emit(asJson, nullconeJson(rs, ch, hr), nullconeText(rs, ch, hr));
      return hr.passed ? kExitPass : kExitFail;
    }
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violated: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
