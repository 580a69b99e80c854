#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relation.hpp"

namespace relcat {

class Sink;

enum class MorphismClass {
  all,
  mono,
  epi,
  iso,
  section,
  retraction,
  extremal_epi,
  bijective_function,
  correspondence,
  partial_function,
};

const char* morphism_class_name(MorphismClass c);
std::string valid_class_names();

// A candidate E or M of a factorization structure, given as a conjunction
// of named predicates.  A sink belongs to the spec when its arity is within
// arity_max and every component satisfies the predicate.
class ClassSpec {
 public:
  explicit ClassSpec(std::vector<MorphismClass> conjuncts, std::size_t arity_max = 3);

  // "epi", "mono+correspondence", ...; throws BadClassName listing the
  // valid kinds.
  static ClassSpec parse(std::string_view text, std::size_t arity_max = 3);

  bool contains(const Relation& r) const;
  bool contains(const Sink& s) const;

  std::string name() const;
  std::size_t arity_max() const { return arity_max_; }

  void set_extremal_paranoid(bool on) { extremal_paranoid_ = on; }

 private:
  std::vector<MorphismClass> conjuncts_;
  std::size_t arity_max_;
  bool extremal_paranoid_ = false;
};

}  // namespace relcat
