// End-to-end acceptance checks, one PASS/FAIL line per criterion.
//
// Usage: relcat_acceptance <path-to-cli> <fixtures-dir>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/categorical.hpp"
#include "core/factorization.hpp"
#include "core/predicates.hpp"
#include "core/textio.hpp"
#include "core/verify.hpp"
#include "helpers.hpp"

using namespace relcat;

namespace {

std::string g_cli;
std::string g_fixtures;
int g_failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
  std::string problem;
  try {
    body();
  } catch (const std::exception& e) {
    problem = e.what();
  }
  if (problem.empty()) {
    std::cout << "PASS criterion " << n << ": " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAIL criterion " << n << ": " << what << " (" << problem << ")\n";
  }
}

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  expect(pipe != nullptr, "popen failed");
  CmdResult result;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) { return g_fixtures + "/" + name; }

Relation random_relation(std::mt19937_64& rng, std::size_t max_size) {
  std::size_t a = rng() % (max_size + 1);
  std::size_t b = rng() % (max_size + 1);
  Carrier x = rtest::x_carrier(a), y = rtest::y_carrier(b);
  std::uint64_t mask =
      (a * b) == 0 ? 0 : rng() & ((std::uint64_t{1} << (a * b)) - 1);
  return relation_from_mask(x, y, mask);
}

void check_worked_examples() {
  RelationFile tau1_file = parse_file(read_file(fixture("tau1.rel")), true);
  const Relation& t1 = tau1_file.require("tau1");
  PredicateReport rep = classify(t1);
  expect(rep.image == std::vector<Label>{2, 3, 5, 7}, "image of tau1");
  expect(rep.coimage == std::vector<Label>{2, 3}, "coimage of tau1");
  expect(rep.correspondence, "tau1 correspondence");
  expect(!rep.partial_function, "tau1 not a partial function");
  expect(rep.row_cardinalities.at(2) == 2, "card tau1[2] == 2");
  expect(rep.injective, "tau1 injective");
  expect(!rep.surjective, "tau1 not surjective");

  RelationFile chain_file = parse_file(read_file(fixture("tau2_chain.rel")), true);
  PredicateReport chain = classify(chain_file.require("chain"));
  expect(chain.partial_function, "chain partial function");
  expect(chain.injective, "chain injective");
  expect(!chain.surjective, "chain not surjective");
}

void check_section_retraction_theorem() {
  std::size_t checked = 0;
  rtest::for_all_relations(3, [&](const Relation& r) {
    bool left_identity = compose(r.inverse(), r) == Relation::identity(r.dom());
    expect(left_identity == (is_correspondence(r) && is_injective(r)),
           "section equivalence at " + relation_literal(r));
    bool right_identity = compose(r, r.inverse()) == Relation::identity(r.cod());
    expect(right_identity == (is_partial_function(r) && is_surjective(r)),
           "retraction equivalence at " + relation_literal(r));
    ++checked;
  });
  expect(checked > 500, "universe unexpectedly small");
}

void check_mono_epi_theorems() {
  rtest::for_all_relations(3, [&](const Relation& r) {
    bool mono_fast = is_mono(r).fast_result;
    bool epi_fast = is_epi(r).fast_result;
    expect(mono_fast == *ftau_injective_oracle(r).oracle_result,
           "mono criterion vs oracle at " + relation_literal(r));
    expect(epi_fast == *ftau_surjective_oracle(r).oracle_result,
           "epi criterion vs oracle at " + relation_literal(r));
    expect(cancellation_mono_oracle(r, 3).holds == mono_fast,
           "mono cancellation vs criterion at " + relation_literal(r));
    expect(cancellation_epi_oracle(r, 3).holds == epi_fast,
           "epi cancellation vs criterion at " + relation_literal(r));
  });
}

void check_iso_theorem() {
  rtest::for_all_relations(3, [&](const Relation& r) {
    bool iso = is_iso(r);
    expect(iso == (is_function(r) && is_bijective(r)),
           "iso vs bijective function at " + relation_literal(r));
    expect(iso == (is_section(r) && is_retraction(r)),
           "iso vs section+retraction at " + relation_literal(r));
  });
}

void check_implication_diagram() {
  rtest::for_all_relations(3, [&](const Relation& r) {
    bool mono = is_mono(r).fast_result;
    bool section = is_section(r);
    if (section) expect(mono, "section implies mono at " + relation_literal(r));
    expect(section == (is_correspondence(r) && is_injective(r)),
           "section equivalence at " + relation_literal(r));
    if (mono) expect(is_correspondence(r), "mono implies correspondence at " +
                                               relation_literal(r));
    bool epi = is_epi(r).fast_result;
    bool retraction = is_retraction(r);
    if (retraction) expect(epi, "retraction implies epi at " + relation_literal(r));
    expect(retraction == (is_partial_function(r) && is_surjective(r)),
           "retraction equivalence at " + relation_literal(r));
    if (epi) expect(is_surjective(r), "epi implies surjective at " + relation_literal(r));
  });
  // The converse of section => mono fails; keep a concrete witness on file.
  Relation witness =
      rtest::rel({2, 3}, {7, 11, 13}, {{2, 7}, {2, 11}, {3, 11}, {3, 13}});
  expect(is_mono(witness).fast_result && !is_section(witness),
         "stored mono-but-not-section counterexample");
  std::cout << "  note: mono does not imply section, witness "
            << relation_literal(witness) << "\n";
}

void check_mono_size_bound() {
  rtest::for_all_relations(3, [&](const Relation& r) {
    if (is_mono(r).fast_result) {
      expect(r.dom().size() <= r.cod().size(), "size bound at " + relation_literal(r));
    }
  });
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 1000; ++i) {
    Relation r = random_relation(rng, 4);
    if (is_mono(r).fast_result) {
      expect(r.dom().size() <= r.cod().size(),
             "size bound (random) at " + relation_literal(r));
    }
  }
}

void check_category_laws() {
  std::mt19937_64 rng(97);
  auto random_mask_relation = [&](const Carrier& d, const Carrier& c) {
    std::size_t bits = d.size() * c.size();
    std::uint64_t mask = bits == 0 ? 0 : rng() & ((std::uint64_t{1} << bits) - 1);
    return relation_from_mask(d, c, mask);
  };
  for (int i = 0; i < 10000; ++i) {
    Carrier x = rtest::x_carrier(rng() % 4), y = rtest::y_carrier(rng() % 4);
    Carrier z = rtest::z_carrier(rng() % 4), w = rtest::w_carrier(rng() % 4);
    Relation f = random_mask_relation(x, y);
    Relation g = random_mask_relation(y, z);
    Relation h = random_mask_relation(z, w);
    expect(compose(h, compose(g, f)) == compose(compose(h, g), f), "associativity");
    expect(compose(Relation::identity(y), f) == f, "left identity");
    expect(compose(f, Relation::identity(x)) == f, "right identity");
  }
}

void check_essential_uniqueness() {
  ClassSpec e_class = ClassSpec::parse("extremal_epi");
  ClassSpec m_class = ClassSpec::parse("mono");
  // Not every relation admits such a factorization (nested rows rule out a
  // mono generating set); whatever the search finds must be unique up to a
  // mid isomorphism.
  auto check_one = [&](const Relation& r) {
    auto fps = enumerate_factorizations(r, r.cod().size(), e_class, m_class);
    for (std::size_t i = 0; i < fps.size(); ++i) {
      for (std::size_t j = i + 1; j < fps.size(); ++j) {
        expect(essential_uniqueness(fps[i], fps[j]).has_value(),
               "non-isomorphic factorizations of " + relation_literal(r));
      }
    }
    return fps.size();
  };
  expect(check_one(rtest::rel({2, 3}, {4, 6}, {{2, 4}, {3, 6}})) == 1,
         "the two-singleton epi fixture should factor exactly once");
  std::mt19937_64 rng(4242);
  std::size_t with_factorizations = 0;
  for (int i = 0; i < 50; ++i) {
    if (check_one(random_relation(rng, 2)) > 0) ++with_factorizations;
  }
  expect(with_factorizations > 10, "sample unexpectedly thin");
}

void check_verifier_cli() {
  std::string args =
      "verify-em --pool 2,3,5 --size-max 2 --arity-max 2 "
      "--e-class extremal_epi --m-class mono --mode necessary";
  CmdResult first = run_cli(args);
  CmdResult second = run_cli(args);
  expect(first.exit_code == 0, "verify-em exit code " + std::to_string(first.exit_code));
  expect(first.out == second.out, "verify-em output differs between runs");
  for (const char* line : {"P1 holds", "P2 holds", "P5a holds", "P6 holds"}) {
    expect(first.out.find(line) != std::string::npos,
           std::string("missing line '") + line + "'");
  }
}

void check_cli_round_trip_and_exit_codes() {
  // Parse/serialize round trip over every fixture.
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(g_fixtures)) {
    if (entry.path().extension() == ".rel") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  expect(!files.empty(), "no fixtures found");
  for (const auto& path : files) {
    RelationFile parsed = parse_file(read_file(path), true);
    RelationFile again = parse_file(serialize_file(parsed), true);
    expect(again.relations == parsed.relations, "round trip failed for " + path.string());
  }

  // Determinism of repeated invocations.
  std::string classify_args = "classify " + fixture("tau1.rel") + " tau1";
  CmdResult c1 = run_cli(classify_args);
  CmdResult c2 = run_cli(classify_args);
  expect(c1.exit_code == 0, "classify exit code");
  expect(c1.out == c2.out && !c1.out.empty(), "classify output not reproducible");

  std::string oracle_args = "oracle " + fixture("tau1.rel") + " tau1";
  CmdResult o1 = run_cli(oracle_args);
  CmdResult o2 = run_cli(oracle_args);
  expect(o1.exit_code == 0, "oracle exit code");
  expect(o1.out == o2.out, "oracle output not reproducible");

  // Exit-code contract: 0 ok, 1 property failure, 2 lookup/usage, 3 size/budget.
  CmdResult unknown = run_cli("classify " + fixture("tau1.rel") + " tau9");
  expect(unknown.exit_code == 2, "unknown relation should exit 2, got " +
                                     std::to_string(unknown.exit_code));
  expect(unknown.out.empty(), "lookup errors must go to stderr");

  CmdResult too_large = run_cli("oracle " + fixture("big13.rel") + " big13");
  expect(too_large.exit_code == 3, "oracle cap should exit 3, got " +
                                       std::to_string(too_large.exit_code));

  CmdResult failing = run_cli(
      "verify-em --pool 2,3 --size-max 2 --arity-max 2 --e-class epi "
      "--m-class partial_function --mode necessary");
  expect(failing.exit_code == 1, "failing property should exit 1, got " +
                                     std::to_string(failing.exit_code));
  expect(failing.out.find("P1 fails") != std::string::npos, "P1 failure line missing");

  std::string budget_cmd = "RELCAT_BUDGET=1 " + g_cli + " factor " + fixture("tau1.rel") +
                           " tau1 --mid-max 2 --e-class all --m-class all 2>/dev/null";
  FILE* pipe = popen(budget_cmd.c_str(), "r");
  expect(pipe != nullptr, "popen failed");
  char buf[256];
  while (fread(buf, 1, sizeof buf, pipe) > 0) {
  }
  int status = pclose(pipe);
  expect(WIFEXITED(status) && WEXITSTATUS(status) == 3,
         "budget exhaustion should exit 3");

  // compose emits a reparsable relation block.
  CmdResult composed = run_cli("compose " + fixture("tau2_chain.rel") + " chain chain");
  expect(composed.exit_code == 0, "compose exit code");
  expect(composed.out.find("2 -> 8") != std::string::npos, "compose output pairs");
  RelationFile parsed_block = parse_file(composed.out, true);
  expect(parsed_block.relations.size() == 1, "compose block should reparse");

  // Empty pool: vacuous success.
  CmdResult vacuous = run_cli(
      "verify-em --pool '' --size-max 1 --arity-max 1 --e-class all --m-class iso "
      "--mode axioms");
  expect(vacuous.exit_code == 0, "empty pool should exit 0");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: relcat_acceptance <cli> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  criterion(1, "worked-example classifications reproduce exactly", check_worked_examples);
  criterion(2, "section/retraction theorem, exhaustive to 3x3",
            check_section_retraction_theorem);
  criterion(3, "mono/epi criteria match the oracles, exhaustive to 3x3",
            check_mono_epi_theorems);
  criterion(4, "iso characterizations agree, exhaustive to 3x3", check_iso_theorem);
  criterion(5, "implication diagram holds, with a stored counterexample",
            check_implication_diagram);
  criterion(6, "mono size bound, exhaustive plus 1000 random relations",
            check_mono_size_bound);
  criterion(7, "category laws on 10000 random composable triples", check_category_laws);
  criterion(8, "(extremal_epi, mono) factorizations are essentially unique",
            check_essential_uniqueness);
  criterion(9, "necessary-properties verifier via the CLI, reproducible",
            check_verifier_cli);
  criterion(10, "round trips, determinism and the exit-code contract",
            check_cli_round_trip_and_exit_codes);

  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
