#pragma once

#include <map>
#include <span>

#include "relation.hpp"

namespace relcat {

// All single-relation predicates at once, plus image data.
struct PredicateReport {
  std::vector<Label> image;
  std::vector<Label> coimage;
  std::map<Label, std::size_t> row_cardinalities;
  bool correspondence = false;
  bool partial_function = false;
  bool injective = false;
  bool surjective = false;
  bool function = false;
  bool bijective = false;
  bool section = false;
  bool retraction = false;
};

// Union of all rows, over codomain indices.
Bitset image_bits(const Relation& r);

std::vector<Label> image(const Relation& r);
std::vector<Label> coimage(const Relation& r);

// Im_tau(A) for A a subset of the domain labels; rejects labels outside it.
std::vector<Label> image_of_subset(const Relation& r, std::span<const Label> subset);

bool is_correspondence(const Relation& r);    // coimage == domain
bool is_partial_function(const Relation& r);  // every row has at most one entry
bool is_injective(const Relation& r);         // every column has at most one entry
bool is_surjective(const Relation& r);        // image == codomain
bool is_function(const Relation& r);
bool is_bijective(const Relation& r);

// Decided by composition: inverse(r)∘r == id_dom  /  r∘inverse(r) == id_cod.
bool is_section(const Relation& r);
bool is_retraction(const Relation& r);

PredicateReport classify(const Relation& r);

}  // namespace relcat
