#pragma once

#include <span>
#include <string>
#include <vector>

#include "factorization.hpp"

namespace relcat {

enum class PropertyStatus { holds, fails, skipped };

struct PropertyVerdict {
  std::string id;  // "A1".."A3", "P1".."P7" (P5 split into P5a/P5b)
  PropertyStatus status = PropertyStatus::holds;
  std::string witness;  // rendered counterexample; empty unless status == fails
};

// Verdicts over a finite universe: all carriers with labels drawn from the
// pool and size <= size_max, all relations between them, sinks up to
// arity_max.  A "holds" verdict is a statement about this universe only.
struct AxiomReport {
  std::string mode;  // "axioms" | "necessary"
  std::string e_class;
  std::string m_class;
  std::vector<Label> pool;
  std::size_t size_max = 0;
  std::size_t arity_max = 0;
  std::vector<PropertyVerdict> verdicts;

  bool any_fail() const;
  std::string to_text() const;
};

// The factorization-structure axioms: A1 closure of E and M under
// composition with isomorphisms, A2 every sink factors as m∘e with e in E
// and m in M, A3 unique diagonalization for every commuting square with
// e in E and m in M.
AxiomReport verify_em_axioms(std::span<const Label> pool, std::size_t size_max,
                             std::size_t arity_max, const ClassSpec& e_class,
                             const ClassSpec& m_class,
                             std::uint64_t budget = kDefaultBudget);

// The necessary properties any (E,M) factorization structure must satisfy:
//   P1  every M-member has an injective power-set map; every extremal epi
//       (as a singleton sink) lies in E
//   P2  every bijective function lies in M; M is closed under composition
//   P3  E is closed under postcomposition with E-morphisms
//   P4  (E,M)-factorizations are essentially unique
//   P5a M∩E contains every bijective function     P5b M∩E contains only isos
//   P6  n∘m in M and n in M imply m in M
//   P7  g∘f in E and f in E imply g in E (checked only when every
//       E-morphism in the universe is an epi; otherwise skipped)
AxiomReport verify_necessary_properties(std::span<const Label> pool, std::size_t size_max,
                                        std::size_t arity_max, const ClassSpec& e_class,
                                        const ClassSpec& m_class,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace relcat
