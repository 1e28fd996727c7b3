// commvar: command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "commvar/commvar.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kUnsupported = 3, kInconclusive = 4 };

int exit_for(commvar_status s) {
  switch (s) {
    case COMMVAR_OK: return kPass;
    case COMMVAR_ERR_INVALID_ARGUMENT: return kUsage;
    case COMMVAR_ERR_UNSUPPORTED: return kUnsupported;
    case COMMVAR_ERR_INCONCLUSIVE: return kInconclusive;
    case COMMVAR_ERR_INTERNAL: return kFail;
  }
  return kFail;
}

int report(commvar_status s) {
  std::cerr << "commvar: " << commvar_status_string(s) << ": " << commvar_last_error() << "\n";
  return exit_for(s);
}

struct AlgebraArgs {
  std::string type;
  int rank = 0;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& a) {
  cmd->add_option("--type", a.type, "Cartan type (A-G)")->required();
  cmd->add_option("--rank", a.rank, "rank")->required();
}

int open_algebra(const AlgebraArgs& a, commvar_algebra** g) {
  if (a.type.size() != 1) {
    std::cerr << "commvar: --type must be a single letter A-G\n";
    return kUsage;
  }
  const commvar_status s = commvar_algebra_create(a.type[0], a.rank, 0, g);
  return s == COMMVAR_OK ? kPass : report(s);
}

int run_info(const AlgebraArgs& a) {
  commvar_algebra* g = nullptr;
  if (int rc = open_algebra(a, &g); rc != kPass) return rc;
  commvar_info info;
  const commvar_status s = commvar_algebra_info(g, &info);
  commvar_algebra_destroy(g);
  if (s != COMMVAR_OK) return report(s);
  std::printf("%-22s %s\n", "algebra", info.label);
  std::printf("%-22s %d\n", "m = dim g", info.dim);
  std::printf("%-22s %d\n", "r = rank", info.rank);
  std::printf("%-22s %d\n", "positive roots", info.num_positive_roots);
  std::printf("%-22s %d\n", "lacety", info.lacety);
  std::printf("%-22s %d\n", "root length classes", info.root_length_classes);
  return kPass;
}

int run_irr_codim(const AlgebraArgs& a, bool json_out, const std::vector<int>& levi) {
  commvar_algebra* g = nullptr;
  if (int rc = open_algebra(a, &g); rc != kPass) return rc;
  int codim = 0;
  char* ledger = nullptr;
  const commvar_status s = levi.empty() ? commvar_irr_codim(g, &codim, &ledger)
                                        : commvar_class_ledger(g, levi.data(), levi.size(), &ledger);
  commvar_algebra_destroy(g);
  if (s != COMMVAR_OK) return report(s);
  const auto doc = nlohmann::json::parse(ledger);
  commvar_string_free(ledger);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
    return kPass;
  }
  std::printf("%-12s %-22s %-10s %-4s\n", "I", "rep", "dim s(I)_x", "c");
  for (const auto& e : doc["ledger"]) {
    std::string subset = "{";
    for (std::size_t i = 0; i < e["I"].size(); ++i) subset += (i ? "," : "") + std::to_string(e["I"][i].get<int>());
    subset += "}";
    std::string c = "-";
    if (!e["c"].is_null()) c = std::to_string(e["c"].get<int>()) + (e["c_exact"].get<bool>() ? "" : "+");
    std::printf("%-12s %-22s %-10d %-4s\n", subset.c_str(), e["rep"].get<std::string>().c_str(),
                e["dim_sIx"].get<int>(), c.c_str());
  }
  if (levi.empty())
    std::printf("codim %s (%s)\n", std::to_string(codim).c_str(), doc["reason"].get<std::string>().c_str());
  return kPass;
}

struct VerifyArgs {
  bool fast = false;
  std::string out;
  std::uint64_t seed = 0;
  int max_rank = 4;
  bool tamper = false;
};

int run_verify(const VerifyArgs& v) {
  commvar_verify_options opts{v.fast ? 1 : 0, v.seed, v.max_rank, 0, v.tamper ? 1 : 0};
  char* json_text = nullptr;
  char* first = nullptr;
  int code = 0;
  const commvar_status s = commvar_verify(&opts, &json_text, &code, &first);
  if (s != COMMVAR_OK) return report(s);
  const std::string text = json_text;
  const std::string first_id = first;
  commvar_string_free(json_text);
  commvar_string_free(first);

  std::ostream& summary = v.out.empty() ? std::cerr : std::cout;
  for (const auto& c : nlohmann::json::parse(text))
    summary << c["status"].get<std::string>() << "  " << c["check_id"].get<std::string>() << "\n";
  if (v.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(v.out);
    if (!f) {
      std::cerr << "commvar: cannot write " << v.out << "\n";
      return kUsage;
    }
    f << text << "\n";
  }
  if (!first_id.empty()) std::cerr << "first failing check: " << first_id << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on commuting varieties of simple Lie algebras"};
  app.require_subcommand(1);

  AlgebraArgs info_args;
  auto* info = app.add_subcommand("info", "rank, dimension and root data of a simple algebra");
  add_algebra_options(info, info_args);

  AlgebraArgs codim_args;
  bool json_out = false;
  auto* codim = app.add_subcommand("irr-codim", "codimension of the irregular part of the commuting variety");
  add_algebra_options(codim, codim_args);
  codim->add_flag("--json", json_out, "emit the class ledger as JSON");
  std::vector<int> levi;
  codim->add_option("--levi", levi, "only list the classes of this subset I of simple roots (1-based)")
      ->delimiter(',');

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  verify->add_flag("--fast", verify_args.fast, "use the primes 5 and 13 only");
  verify->add_option("--out", verify_args.out, "write the JSON report to this file");
  verify->add_option("--seed", verify_args.seed, "seed for randomized checks");
  verify->add_option("--max-rank", verify_args.max_rank, "rank cap for the classical series")
      ->check(CLI::Range(1, 8));
  verify->add_flag("--tamper-structure-table", verify_args.tamper)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (info->parsed()) return run_info(info_args);
  if (codim->parsed()) return run_irr_codim(codim_args, json_out, levi);
  return run_verify(verify_args);
}
