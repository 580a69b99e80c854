// relcat — command-line front end over the shared-library C API.
//
// Exit codes: 0 success / all properties hold, 1 property failure or
// fast-vs-oracle disagreement, 2 usage or lookup errors, 3 budget or size
// limits.  RELCAT_BUDGET overrides the search step budget.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relcat/relcat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(relcat_status status) {
  switch (status) {
    case RELCAT_OK:
      return kExitOk;
    case RELCAT_E_ORACLE_TOO_LARGE:
    case RELCAT_E_SEARCH_BUDGET_EXCEEDED:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

[[noreturn]] void fail(relcat_status status) {
  std::cerr << "relcat: error: " << relcat_last_error() << "\n";
  std::exit(exit_code_for(status));
}

struct FileHandle {
  relcat_file* file = nullptr;
  ~FileHandle() { relcat_file_free(file); }
};

void load_file(const std::string& path, bool strict, FileHandle& out) {
  if (relcat_status st = relcat_file_read(path.c_str(), strict ? 1 : 0, &out.file)) {
    fail(st);
  }
}

void print_text(char* text) {
  std::cout << text;
  relcat_string_free(text);
}

uint64_t budget_from_env() {
  const char* env = std::getenv("RELCAT_BUDGET");
  if (!env || !*env) return relcat_default_budget();
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    std::cerr << "relcat: error: RELCAT_BUDGET must be an unsigned integer\n";
    std::exit(kExitUsage);
  }
  return value;
}

std::vector<int64_t> parse_pool(const std::string& csv, bool strict) {
  std::vector<int64_t> pool;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string part = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                  : comma - pos);
    if (!part.empty()) {
      try {
        pool.push_back(std::stoll(part));
      } catch (const std::exception&) {
        std::cerr << "relcat: error: bad pool label '" << part << "'\n";
        std::exit(kExitUsage);
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  // Label validation (0 and, under strict, the units) happens in the kernel.
  relcat_carrier* probe = nullptr;
  if (relcat_status st =
          relcat_carrier_new(pool.data(), pool.size(), strict ? 1 : 0, &probe)) {
    fail(st);
  }
  relcat_carrier_free(probe);
  return pool;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite binary relations as category morphisms"};
  app.require_subcommand(1);

  bool no_strict = false;
  app.add_flag("--no-strict", no_strict,
               "allow labels 0, 1 and -1 (by default labels must be nonzero non-units)");

  std::string file_path, name, outer, inner;
  std::string e_class = "all", m_class = "all", mode = "necessary", pool_csv;
  std::size_t mid_max = 2, size_max = 2, arity_max = 2, oracle_cap = 12;
  bool paranoid = false, allow_large = false;

  auto* classify = app.add_subcommand("classify", "predicate report for one relation");
  classify->add_option("file", file_path)->required();
  classify->add_option("name", name)->required();
  classify->add_flag("--paranoid", paranoid,
                     "extend the extremal-epi mid bound by one");

  auto* compose = app.add_subcommand("compose", "print the relation block of outer∘inner");
  compose->add_option("file", file_path)->required();
  compose->add_option("outer", outer)->required();
  compose->add_option("inner", inner)->required();

  auto* factor = app.add_subcommand("factor", "enumerate factorizations through a class pair");
  factor->add_option("file", file_path)->required();
  factor->add_option("name", name)->required();
  factor->add_option("--mid-max", mid_max, "largest mid carrier size")->capture_default_str();
  factor->add_option("--e-class", e_class, "class of the e factor")->capture_default_str();
  factor->add_option("--m-class", m_class, "class of the m factor")->capture_default_str();
  factor->add_flag("--paranoid", paranoid);

  auto* verify = app.add_subcommand("verify-em",
                                    "check factorization-structure axioms or the necessary "
                                    "properties over a finite universe");
  verify->add_option("--pool", pool_csv, "comma-separated carrier labels")->required();
  verify->add_option("--size-max", size_max)->capture_default_str();
  verify->add_option("--arity-max", arity_max)->capture_default_str();
  verify->add_option("--e-class", e_class)->capture_default_str();
  verify->add_option("--m-class", m_class)->capture_default_str();
  verify->add_option("--mode", mode, "axioms | necessary")->capture_default_str();
  verify->add_flag("--allow-large", allow_large, "permit size-max above 3");
  verify->add_flag("--paranoid", paranoid);

  auto* oracle = app.add_subcommand("oracle", "fast criteria against the power-set oracles");
  oracle->add_option("file", file_path)->required();
  oracle->add_option("name", name)->required();
  oracle->add_option("--cap", oracle_cap, "oracle carrier-size cap")->capture_default_str();

  // --no-strict may appear after the subcommand as well.
  for (CLI::App* sub : {classify, compose, factor, verify, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool strict = !no_strict;
  const uint64_t budget = budget_from_env();

  if (*classify) {
    FileHandle f;
    load_file(file_path, strict, f);
    char* text = nullptr;
    if (relcat_status st =
            relcat_classify_report(f.file, name.c_str(), paranoid ? 1 : 0, &text)) {
      fail(st);
    }
    print_text(text);
    return kExitOk;
  }

  if (*compose) {
    FileHandle f;
    load_file(file_path, strict, f);
    char* text = nullptr;
    if (relcat_status st =
            relcat_compose_report(f.file, outer.c_str(), inner.c_str(), &text)) {
      fail(st);
    }
    print_text(text);
    return kExitOk;
  }

  if (*factor) {
    FileHandle f;
    load_file(file_path, strict, f);
    char* text = nullptr;
    if (relcat_status st =
            relcat_factor_report(f.file, name.c_str(), mid_max, e_class.c_str(),
                                 m_class.c_str(), paranoid ? 1 : 0, budget, &text)) {
      fail(st);
    }
    print_text(text);
    return kExitOk;
  }

  if (*verify) {
    if (size_max > 3 && !allow_large) {
      std::cerr << "relcat: error: --size-max above 3 needs --allow-large\n";
      return kExitUsage;
    }
    std::vector<int64_t> pool = parse_pool(pool_csv, strict);
    char* text = nullptr;
    int any_fail = 0;
    if (relcat_status st = relcat_verify_report(pool.data(), pool.size(), size_max,
                                                arity_max, e_class.c_str(), m_class.c_str(),
                                                mode.c_str(), paranoid ? 1 : 0, budget,
                                                &text, &any_fail)) {
      fail(st);
    }
    print_text(text);
    return any_fail ? kExitPropertyFailure : kExitOk;
  }

  if (*oracle) {
    FileHandle f;
    load_file(file_path, strict, f);
    char* text = nullptr;
    int agreement = 0;
    if (relcat_status st =
            relcat_oracle_report(f.file, name.c_str(), oracle_cap, &text, &agreement)) {
      fail(st);
    }
    print_text(text);
    return agreement ? kExitOk : kExitPropertyFailure;
  }

  return kExitUsage;
}
