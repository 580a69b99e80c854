#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "classspec.hpp"
#include "relation.hpp"

namespace relcat {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

// Shared step counter for the exhaustive searches; throws when exhausted so
// runaway enumerations fail loudly instead of hanging.
struct Budget {
  std::uint64_t remaining = kDefaultBudget;

  void spend(std::uint64_t n = 1) {
    if (n > remaining) {
      throw Error(Errc::search_budget_exceeded, "search budget exhausted");
    }
    remaining -= n;
  }
};

// A nonempty ordered family of relations sharing one codomain.
class Sink {
 public:
  explicit Sink(std::vector<Relation> components);
  static Sink singleton(Relation r) { return Sink({std::move(r)}); }

  const std::vector<Relation>& components() const { return components_; }
  const Relation& component(std::size_t i) const { return components_[i]; }
  const Carrier& codomain() const { return components_.front().cod(); }
  std::size_t arity() const { return components_.size(); }

  friend bool operator==(const Sink& a, const Sink& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Relation> components_;
};

std::string sink_literal(const Sink& s);

// s_i = m ∘ e_i for every component of the factored sink; mid is the common
// codomain of the e_i and the domain of m.
struct FactorizationPair {
  Carrier mid;
  Sink e;
  Relation m;
};

bool factorization_less(const FactorizationPair& a, const FactorizationPair& b);

// All f : t.dom -> m.dom with m∘f == t, in deterministic order (empty when
// no factorization through m exists).  Built on divide_left: each row of f
// ranges over the subsets of the residual's row whose image under m equals
// the target row.
std::vector<Relation> all_factor_solutions(const Relation& m, const Relation& t,
                                           Budget& budget);

// Every (e, m) with fresh mid carriers of size <= mid_max, m∘e_i == s_i,
// e in e_class, m in m_class; canonicalized up to mid relabeling and
// deduplicated, in deterministic order.
std::vector<FactorizationPair> enumerate_sink_factorizations(const Sink& s,
                                                             std::size_t mid_max,
                                                             const ClassSpec& e_class,
                                                             const ClassSpec& m_class,
                                                             Budget& budget);

std::vector<FactorizationPair> enumerate_factorizations(
    const Relation& t, std::size_t mid_max, const ClassSpec& e_class,
    const ClassSpec& m_class, std::uint64_t budget = kDefaultBudget);

bool has_sink_factorization(const Sink& s, std::size_t mid_max, const ClassSpec& e_class,
                            const ClassSpec& m_class, Budget& budget);

enum class DiagonalStatus { unique, none, non_unique };

struct DiagonalResult {
  DiagonalStatus status = DiagonalStatus::none;
  std::optional<Relation> diagonal;
  std::optional<Relation> second;  // set for non_unique
};

// Searches all d : cod(e) -> dom(m) with d∘e_i == r_i and m∘d == s in the
// square  s∘e_i == m∘r_i; validates shapes and commutativity first.
DiagonalResult check_diagonalization(const Sink& e, const Relation& s, const Sink& r,
                                     const Relation& m);

// An iso h : f1.mid -> f2.mid with h∘f1.e_i == f2.e_i and f2.m∘h == f1.m,
// if one exists.  The pairs must factor the same sink.
std::optional<Relation> essential_uniqueness(const FactorizationPair& f1,
                                             const FactorizationPair& f2);

}  // namespace relcat
