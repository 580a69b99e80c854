#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "carrier.hpp"

namespace relcat {

// A morphism: a Boolean incidence matrix between two carriers.  Row i holds
// the codomain indices related to the i-th domain label.  Relations are
// immutable after construction; equality is bit-exact and requires equal
// domain and codomain (hom-sets are disjoint).
class Relation {
 public:
  Relation(Carrier dom, Carrier cod, std::span<const std::pair<Label, Label>> pairs);
  Relation(Carrier dom, Carrier cod, std::vector<Bitset> rows);

  static Relation empty(Carrier dom, Carrier cod);
  static Relation identity(Carrier c);
  // All of dom related to the single label x; x must belong to the carrier.
  static Relation constant(Carrier c, Label x);

  const Carrier& dom() const { return dom_; }
  const Carrier& cod() const { return cod_; }
  const std::vector<Bitset>& rows() const { return rows_; }
  const Bitset& row(std::size_t i) const { return rows_[i]; }

  bool contains(Label a, Label b) const;
  std::size_t pair_count() const;
  std::vector<std::pair<Label, Label>> pairs() const;

  Relation inverse() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.rows_ == b.rows_;
  }

 private:
  Carrier dom_;
  Carrier cod_;
  std::vector<Bitset> rows_;
};

// outer∘inner; requires inner.cod == outer.dom.
Relation compose(const Relation& outer, const Relation& inner);

// Deterministic total order for witness selection and report output.
bool relation_less(const Relation& a, const Relation& b);

// Builds the relation whose matrix is given by `mask`, bit (i*|cod| + j)
// relating dom[i] to cod[j].  Requires |dom|*|cod| <= 60.
Relation relation_from_mask(const Carrier& dom, const Carrier& cod, std::uint64_t mask);

// {2,3}->{4,6}:{(2,4),(3,6)}
std::string relation_literal(const Relation& r);

}  // namespace relcat
