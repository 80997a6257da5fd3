// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieschur/lieschur.h"

namespace {

struct AlgebraDeleter {
  void operator()(lsc_algebra* a) const { lsc_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<lsc_algebra, AlgebraDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lsc_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int fail(lsc_status st) {
  std::cerr << "error: " << lsc_last_error() << "\n";
  return static_cast<int>(st);
}

int read_algebra(const std::string& path, AlgebraPtr& out) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open '" << path << "'\n";
      return LSC_ERR_SYNTAX;
    }
    buf << in.rdbuf();
  }
  lsc_algebra* raw = nullptr;
  const lsc_status st = lsc_algebra_parse(buf.str().c_str(), &raw);
  if (st != LSC_OK) return fail(st);
  out.reset(raw);
  return 0;
}

using ReportFn = lsc_status (*)(const lsc_algebra*, char**);

int run_report(const std::string& path, ReportFn fn) {
  AlgebraPtr L;
  if (int rc = read_algebra(path, L)) return rc;
  char* raw = nullptr;
  const lsc_status st = fn(L.get(), &raw);
  CString text(raw);
  if (text) std::cout << text.get();
  if (st != LSC_OK && st != LSC_SUITE_FAILED) return fail(st);
  return static_cast<int>(st);
}

bool parse_long(const std::string& s, long& out) {
  try {
    std::size_t used = 0;
    out = std::stol(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

// NAME [PARAMS...] [--plus NAME PARAMS...]... [-o FILE]
int run_catalog(const std::vector<std::string>& args) {
  std::string output;
  std::vector<std::pair<std::string, std::vector<long>>> parts;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-o" || a == "--output") {
      if (i + 1 >= args.size()) {
        std::cerr << "error: " << a << " needs a file name\n";
        return LSC_ERR_SYNTAX;
      }
      output = args[++i];
    } else if (a == "--plus") {
      if (i + 1 >= args.size()) {
        std::cerr << "error: --plus needs a catalog name\n";
        return LSC_ERR_SYNTAX;
      }
      parts.emplace_back(args[++i], std::vector<long>{});
    } else if (parts.empty()) {
      parts.emplace_back(a, std::vector<long>{});
    } else {
      long v = 0;
      if (!parse_long(a, v)) {
        std::cerr << "error: expected an integer parameter, got '" << a << "'\n";
        return LSC_ERR_SYNTAX;
      }
      parts.back().second.push_back(v);
    }
  }
  if (parts.empty()) {
    std::cerr << "error: catalog needs a NAME (A, H, L3414, L4524, HplusA, L4524plusA1)\n";
    return LSC_ERR_SYNTAX;
  }

  AlgebraPtr result;
  for (const auto& [name, params] : parts) {
    lsc_algebra* raw = nullptr;
    lsc_status st = lsc_algebra_catalog(name.c_str(), params.data(), params.size(), &raw);
    if (st != LSC_OK) return fail(st);
    AlgebraPtr piece(raw);
    if (!result) {
      result = std::move(piece);
      continue;
    }
    st = lsc_algebra_direct_sum(result.get(), piece.get(), &raw);
    if (st != LSC_OK) return fail(st);
    result.reset(raw);
  }

  char* raw = nullptr;
  if (lsc_status st = lsc_algebra_render(result.get(), &raw); st != LSC_OK) return fail(st);
  CString text(raw);
  if (output.empty()) {
    std::cout << text.get();
    return 0;
  }
  std::ofstream out(output);
  out << text.get();
  if (!out) {
    std::cerr << "error: cannot write '" << output << "'\n";
    return LSC_ERR_SYNTAX;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure constants, Schur multipliers and the s(L) classification of nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  auto* info = app.add_subcommand("info", "Dimensions of L^2, Z(L) and the lower central series");
  info->add_option("FILE", file, "lieconst file ('-' for stdin)")->required();
  auto* mult = app.add_subcommand("multiplier", "dim M(L) via H_2 of the Chevalley-Eilenberg complex, t and s");
  mult->add_option("FILE", file, "lieconst file ('-' for stdin)")->required();
  auto* cls = app.add_subcommand("classify", "Name the family of a nilpotent algebra with s <= 2");
  cls->add_option("FILE", file, "lieconst file ('-' for stdin)")->required();

  auto* cat = app.add_subcommand("catalog", "Write a catalog algebra: NAME [PARAMS] [--plus NAME PARAMS ...] [-o FILE]");
  cat->prefix_command();

  std::string suite;
  lsc_verify_options opts{nullptr, 4, 3, 10, 7};
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "formulas | bounds | kunneth | quotient | classification")
      ->required()
      ->check(CLI::IsMember({"formulas", "bounds", "kunneth", "quotient", "classification"}));
  ver->add_option("--max-m", opts.max_m, "largest Heisenberg rank m")->capture_default_str();
  ver->add_option("--max-k", opts.max_k, "largest abelian summand k")->capture_default_str();
  ver->add_option("--max-n", opts.max_n, "largest dimension in generated populations")->capture_default_str();
  ver->add_option("--seed", opts.seed, "generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : LSC_ERR_SYNTAX;
  }

  if (*info) return run_report(file, lsc_report_info);
  if (*mult) return run_report(file, lsc_report_multiplier);
  if (*cls) return run_report(file, lsc_report_classify);
  if (*cat) return run_catalog(cat->remaining());
  if (*ver) {
    opts.suite = suite.c_str();
    char* raw = nullptr;
    const lsc_status st = lsc_verify(&opts, &raw);
    CString text(raw);
    if (text) std::cout << text.get();
    if (st != LSC_OK && st != LSC_SUITE_FAILED) return fail(st);
    return static_cast<int>(st);
  }
  return LSC_ERR_SYNTAX;
}
