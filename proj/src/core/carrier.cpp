#include "carrier.hpp"

#include <algorithm>

namespace relcat {

Carrier::Carrier(std::vector<Label> labels, bool strict)
    : labels_(std::move(labels)), strict_(strict) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (Label x : labels_) {
    if (x == 0) {
      throw Error(Errc::zero_label, "carrier label 0 is not allowed");
    }
    if (strict_ && (x == 1 || x == -1)) {
      throw Error(Errc::unit_label,
                  "carrier label " + std::to_string(x) + " is a unit (strict mode)");
    }
  }
}

std::optional<std::size_t> Carrier::index_of(Label x) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
  if (it == labels_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool carrier_less(const Carrier& a, const Carrier& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.labels() < b.labels();
}

std::string label_set_to_string(std::span<const Label> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  out += '}';
  return out;
}

std::vector<Label> fresh_labels(std::size_t count, Label above) {
  Label next = std::max<Label>(above + 1, 2);
  std::vector<Label> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next + static_cast<Label>(i));
  return out;
}

}  // namespace relcat
