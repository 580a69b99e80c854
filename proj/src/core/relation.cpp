#include "relation.hpp"

#include <algorithm>

namespace relcat {

Relation::Relation(Carrier dom, Carrier cod, std::span<const std::pair<Label, Label>> pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      rows_(dom_.size(), Bitset(cod_.size())) {
  for (const auto& [a, b] : pairs) {
    auto i = dom_.index_of(a);
    auto j = cod_.index_of(b);
    if (!i || !j) {
      throw Error(Errc::pair_out_of_carrier,
                  "pair (" + std::to_string(a) + "," + std::to_string(b) + "): " +
                      (!i ? std::to_string(a) + " not in domain " +
                                label_set_to_string(dom_.labels())
                          : std::to_string(b) + " not in codomain " +
                                label_set_to_string(cod_.labels())));
    }
    rows_[*i].set(*j);
  }
}

Relation::Relation(Carrier dom, Carrier cod, std::vector<Bitset> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {
  if (rows_.size() != dom_.size()) {
    throw Error(Errc::invalid_argument, "row count does not match domain size");
  }
  for (const auto& r : rows_) {
    if (r.width() != cod_.size()) {
      throw Error(Errc::invalid_argument, "row width does not match codomain size");
    }
  }
}

Relation Relation::empty(Carrier dom, Carrier cod) {
  std::size_t n = dom.size(), m = cod.size();
  return Relation(std::move(dom), std::move(cod), std::vector<Bitset>(n, Bitset(m)));
}

Relation Relation::identity(Carrier c) {
  std::vector<Bitset> rows(c.size(), Bitset(c.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].set(i);
  return Relation(c, c, std::move(rows));
}

Relation Relation::constant(Carrier c, Label x) {
  auto j = c.index_of(x);
  if (!j) {
    throw Error(Errc::label_not_in_carrier,
                std::to_string(x) + " not in carrier " + label_set_to_string(c.labels()));
  }
  std::vector<Bitset> rows(c.size(), Bitset(c.size()));
  for (auto& r : rows) r.set(*j);
  return Relation(c, c, std::move(rows));
}

bool Relation::contains(Label a, Label b) const {
  auto i = dom_.index_of(a);
  auto j = cod_.index_of(b);
  return i && j && rows_[*i].test(*j);
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::vector<std::pair<Label, Label>> Relation::pairs() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].for_each_set(
        [&](std::size_t j) { out.emplace_back(dom_.label_at(i), cod_.label_at(j)); });
  }
  return out;
}

Relation Relation::inverse() const {
  std::vector<Bitset> rows(cod_.size(), Bitset(dom_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i].for_each_set([&](std::size_t j) { rows[j].set(i); });
  }
  return Relation(cod_, dom_, std::move(rows));
}

Relation compose(const Relation& outer, const Relation& inner) {
  if (!(inner.cod() == outer.dom())) {
    throw Error(Errc::composition_mismatch,
                "inner codomain " + label_set_to_string(inner.cod().labels()) +
                    " != outer domain " + label_set_to_string(outer.dom().labels()));
  }
  std::vector<Bitset> rows(inner.dom().size(), Bitset(outer.cod().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    inner.row(i).for_each_set([&](std::size_t y) { rows[i] |= outer.row(y); });
  }
  return Relation(inner.dom(), outer.cod(), std::move(rows));
}

bool relation_less(const Relation& a, const Relation& b) {
  if (!(a.dom() == b.dom())) return a.dom().labels() < b.dom().labels();
  if (!(a.cod() == b.cod())) return a.cod().labels() < b.cod().labels();
  return lex_less(a.rows(), b.rows());
}

Relation relation_from_mask(const Carrier& dom, const Carrier& cod, std::uint64_t mask) {
  std::size_t n = dom.size(), m = cod.size();
  if (n * m > 60) {
    throw Error(Errc::invalid_argument, "matrix too large for mask enumeration");
  }
  std::vector<Bitset> rows(n, Bitset(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> (i * m + j)) & 1) rows[i].set(j);
    }
  }
  return Relation(dom, cod, std::move(rows));
}

std::string relation_literal(const Relation& r) {
  std::string out = label_set_to_string(r.dom().labels());
  out += "->";
  out += label_set_to_string(r.cod().labels());
  out += ":{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ',';
    first = false;
    out += '(' + std::to_string(a) + ',' + std::to_string(b) + ')';
  }
  out += '}';
  return out;
}

}  // namespace relcat
