#pragma once

#include <optional>

#include "predicates.hpp"
#include "relation.hpp"

namespace relcat {

inline constexpr std::size_t kDefaultOracleCap = 12;
inline constexpr std::size_t kDefaultProbeMax = 3;

// Counterexample attached to a negative mono/epi verdict.  For mono
// failures: two distinct domain subsets with equal image.  For epi
// failures: a codomain subset no domain subset maps onto.
struct MonoEpiWitness {
  enum class Kind { image_collision, unreached_subset };
  Kind kind = Kind::image_collision;
  std::vector<Label> first;
  std::vector<Label> second;  // unused for unreached_subset
};

struct MonoEpiVerdict {
  bool fast_result = false;
  std::optional<bool> oracle_result;
  std::optional<MonoEpiWitness> witness;
};

// Polynomial criteria for injectivity/surjectivity of the power-set map of
// a relation.  Mono: no row is contained in the union of the other rows.
// Epi: every codomain element appears as a singleton row.  Both are
// validated exhaustively against the power-set oracles by the test suite;
// on disagreement the oracle is authoritative.
MonoEpiVerdict is_mono(const Relation& r);
MonoEpiVerdict is_epi(const Relation& r);

// Brute-force decisions over the power set.  The verdict carries both the
// fast and the oracle result so callers can compare them.  Witnesses are
// minimal in subset-mask order (bit i = i-th smallest label).
MonoEpiVerdict ftau_injective_oracle(const Relation& r, std::size_t cap = kDefaultOracleCap);
MonoEpiVerdict ftau_surjective_oracle(const Relation& r, std::size_t cap = kDefaultOracleCap);

// Iso <=> bijective function; the inverse then composes to the identity on
// both sides.
bool is_iso(const Relation& r);

struct CancellationResult {
  bool holds = true;
  std::optional<std::pair<Relation, Relation>> counterexample;
};

// Bounded check of the cancellation definitions: over all probe carriers W
// with |W| <= probe_size_max (fresh labels), composing with r separates
// every pair of distinct probes.  This approximates the universally
// quantified definition; is_mono/is_epi are the exact decision procedures.
CancellationResult cancellation_mono_oracle(const Relation& r,
                                            std::size_t probe_size_max = kDefaultProbeMax);
CancellationResult cancellation_epi_oracle(const Relation& r,
                                           std::size_t probe_size_max = kDefaultProbeMax);

// Greatest f with m∘f ⊆ t, given m.cod == t.cod:  x f u  <=>  m[u] ⊆ t[x].
// A factorization t = m∘f exists iff m∘divide_left(m,t) == t.
Relation divide_left(const Relation& m, const Relation& t);

// Epi such that every mono it factors through is an iso.  Mid carriers are
// synthesized fresh up to |cod| elements (monos cannot have larger domains;
// the bound is validated by the test suite).  Paranoid mode extends the
// bound by one as a falsification knob.
bool is_extremal_epi(const Relation& r, bool paranoid = false);

}  // namespace relcat
