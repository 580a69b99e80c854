#pragma once

#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "core/relation.hpp"

namespace rtest {

using relcat::Carrier;
using relcat::Label;
using relcat::Relation;

inline Carrier car(std::initializer_list<Label> labels, bool strict = false) {
  return Carrier(std::vector<Label>(labels), strict);
}

inline Relation rel(std::initializer_list<Label> dom, std::initializer_list<Label> cod,
                    std::initializer_list<std::pair<Label, Label>> pairs) {
  std::vector<std::pair<Label, Label>> ps(pairs);
  return Relation(car(dom), car(cod), ps);
}

// tau1 from the running example: {2,3} -> {2,3,5,7,11}.
inline Relation tau1() {
  return rel({2, 3}, {2, 3, 5, 7, 11}, {{2, 2}, {2, 3}, {3, 5}, {3, 7}});
}

// Doubling chain truncated to {2,4,8,16}.
inline Relation tau2_chain() {
  return rel({2, 4, 8, 16}, {2, 4, 8, 16}, {{2, 4}, {4, 8}, {8, 16}});
}

// Label pools for exhaustive enumeration; distinct per role so mismatched
// compositions are caught.
inline Carrier x_carrier(std::size_t n) {
  static const std::vector<Label> pool{2, 3, 5, 41};
  return Carrier(std::vector<Label>(pool.begin(), pool.begin() + n));
}
inline Carrier y_carrier(std::size_t n) {
  static const std::vector<Label> pool{7, 11, 13, 43};
  return Carrier(std::vector<Label>(pool.begin(), pool.begin() + n));
}
inline Carrier z_carrier(std::size_t n) {
  static const std::vector<Label> pool{17, 19, 23, 47};
  return Carrier(std::vector<Label>(pool.begin(), pool.begin() + n));
}
inline Carrier w_carrier(std::size_t n) {
  static const std::vector<Label> pool{29, 31, 37, 53};
  return Carrier(std::vector<Label>(pool.begin(), pool.begin() + n));
}

// Every relation between every carrier-size pair up to max_size.
inline void for_all_relations(std::size_t max_size,
                              const std::function<void(const Relation&)>& fn) {
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      Carrier x = x_carrier(a), y = y_carrier(b);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a * b)); ++mask) {
        fn(relcat::relation_from_mask(x, y, mask));
      }
    }
  }
}

// Every composable pair g∘f with f: X->Y, g: Y->Z at sizes up to max_size.
inline void for_all_composable_pairs(
    std::size_t max_size, const std::function<void(const Relation&, const Relation&)>& fn) {
  for (std::size_t a = 0; a <= max_size; ++a) {
    for (std::size_t b = 0; b <= max_size; ++b) {
      for (std::size_t c = 0; c <= max_size; ++c) {
        Carrier x = x_carrier(a), y = y_carrier(b), z = z_carrier(c);
        for (std::uint64_t mf = 0; mf < (std::uint64_t{1} << (a * b)); ++mf) {
          Relation f = relcat::relation_from_mask(x, y, mf);
          for (std::uint64_t mg = 0; mg < (std::uint64_t{1} << (b * c)); ++mg) {
            fn(relcat::relation_from_mask(y, z, mg), f);
          }
        }
      }
    }
  }
}

// Reference composition: relate (x, z) iff some mid label witnesses it.
inline Relation compose_oracle(const Relation& g, const Relation& f) {
  std::vector<std::pair<Label, Label>> pairs;
  for (Label x : f.dom().labels()) {
    for (Label z : g.cod().labels()) {
      bool related = false;
      for (Label y : f.cod().labels()) {
        if (f.contains(x, y) && g.contains(y, z)) {
          related = true;
          break;
        }
      }
      if (related) pairs.emplace_back(x, z);
    }
  }
  return Relation(f.dom(), g.cod(), pairs);
}

}  // namespace rtest
