#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace relcat {

using Label = std::int64_t;

// A finite object of the relation category: an ascending set of nonzero
// integer labels.  In strict mode the units 1 and -1 are rejected as well,
// so labels range over nonzero non-units.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<Label> labels, bool strict = false);

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  bool strict() const { return strict_; }

  Label label_at(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(Label x) const;
  bool contains(Label x) const { return index_of(x).has_value(); }

  // Object equality is label-set equality; the strict flag is metadata.
  friend bool operator==(const Carrier& a, const Carrier& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
  bool strict_ = false;
};

// Deterministic order used to enumerate universes: size first, then labels.
bool carrier_less(const Carrier& a, const Carrier& b);

// Renders {2,3,5} / {} for label sets.
std::string label_set_to_string(std::span<const Label> labels);

// `count` consecutive labels starting above both `above` and 1, so they are
// valid strict labels distinct from everything already in play.
std::vector<Label> fresh_labels(std::size_t count, Label above);

}  // namespace relcat
