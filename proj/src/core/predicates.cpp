#include "predicates.hpp"

namespace relcat {

namespace {

std::vector<Label> labels_of_bits(const Carrier& c, const Bitset& bits) {
  std::vector<Label> out;
  bits.for_each_set([&](std::size_t i) { out.push_back(c.label_at(i)); });
  return out;
}

std::vector<std::size_t> column_counts(const Relation& r) {
  std::vector<std::size_t> counts(r.cod().size(), 0);
  for (const auto& row : r.rows()) {
    row.for_each_set([&](std::size_t j) { ++counts[j]; });
  }
  return counts;
}

}  // namespace

Bitset image_bits(const Relation& r) {
  Bitset bits(r.cod().size());
  for (const auto& row : r.rows()) bits |= row;
  return bits;
}

std::vector<Label> image(const Relation& r) {
  return labels_of_bits(r.cod(), image_bits(r));
}

std::vector<Label> coimage(const Relation& r) {
  return image(r.inverse());
}

std::vector<Label> image_of_subset(const Relation& r, std::span<const Label> subset) {
  Bitset bits(r.cod().size());
  for (Label a : subset) {
    auto i = r.dom().index_of(a);
    if (!i) {
      throw Error(Errc::subset_out_of_domain,
                  std::to_string(a) + " not in domain " +
                      label_set_to_string(r.dom().labels()));
    }
    bits |= r.row(*i);
  }
  return labels_of_bits(r.cod(), bits);
}

bool is_correspondence(const Relation& r) {
  for (const auto& row : r.rows()) {
    if (row.none()) return false;
  }
  return true;
}

bool is_partial_function(const Relation& r) {
  for (const auto& row : r.rows()) {
    if (row.count() > 1) return false;
  }
  return true;
}

bool is_injective(const Relation& r) {
  for (std::size_t c : column_counts(r)) {
    if (c > 1) return false;
  }
  return true;
}

bool is_surjective(const Relation& r) {
  return image_bits(r).count() == r.cod().size();
}

bool is_function(const Relation& r) {
  return is_partial_function(r) && is_correspondence(r);
}

bool is_bijective(const Relation& r) {
  return is_injective(r) && is_surjective(r);
}

bool is_section(const Relation& r) {
  return compose(r.inverse(), r) == Relation::identity(r.dom());
}

bool is_retraction(const Relation& r) {
  return compose(r, r.inverse()) == Relation::identity(r.cod());
}

PredicateReport classify(const Relation& r) {
  PredicateReport rep;
  rep.image = image(r);
  rep.coimage = coimage(r);
  for (std::size_t i = 0; i < r.dom().size(); ++i) {
    rep.row_cardinalities[r.dom().label_at(i)] = r.row(i).count();
  }
  rep.correspondence = is_correspondence(r);
  rep.partial_function = is_partial_function(r);
  rep.injective = is_injective(r);
  rep.surjective = is_surjective(r);
  rep.function = rep.partial_function && rep.correspondence;
  rep.bijective = rep.injective && rep.surjective;
  rep.section = is_section(r);
  rep.retraction = is_retraction(r);
  return rep;
}

}  // namespace relcat
