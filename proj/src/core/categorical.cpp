#include "categorical.hpp"

#include <algorithm>
#include <unordered_map>

namespace relcat {

namespace {

std::vector<Label> mask_to_labels(const Carrier& c, std::uint64_t mask) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((mask >> i) & 1) out.push_back(c.label_at(i));
  }
  return out;
}

Label max_label(const Relation& r) {
  Label m = 1;
  if (!r.dom().empty()) m = std::max(m, r.dom().labels().back());
  if (!r.cod().empty()) m = std::max(m, r.cod().labels().back());
  return m;
}

// Union of all rows except row x, via prefix/suffix unions.
std::vector<Bitset> other_row_unions(const Relation& r) {
  std::size_t n = r.dom().size(), w = r.cod().size();
  std::vector<Bitset> prefix(n + 1, Bitset(w)), suffix(n + 1, Bitset(w));
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i];
    prefix[i + 1] |= r.row(i);
  }
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i] |= r.row(i);
  }
  std::vector<Bitset> others(n, Bitset(w));
  for (std::size_t i = 0; i < n; ++i) {
    others[i] = prefix[i];
    others[i] |= suffix[i + 1];
  }
  return others;
}

}  // namespace

MonoEpiVerdict is_mono(const Relation& r) {
  auto others = other_row_unions(r);
  for (std::size_t x = 0; x < r.dom().size(); ++x) {
    if (r.row(x).is_subset_of(others[x])) {
      // Im(dom \ {x}) == Im(dom), so those two subsets collide.
      MonoEpiWitness w;
      w.kind = MonoEpiWitness::Kind::image_collision;
      for (std::size_t y = 0; y < r.dom().size(); ++y) {
        if (y != x) w.first.push_back(r.dom().label_at(y));
      }
      w.second = r.dom().labels();
      return {false, std::nullopt, std::move(w)};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

MonoEpiVerdict is_epi(const Relation& r) {
  std::size_t m = r.cod().size();
  Bitset covered(m);
  for (const auto& row : r.rows()) {
    if (row.count() == 1) covered |= row;
  }
  for (std::size_t b = 0; b < m; ++b) {
    if (!covered.test(b)) {
      MonoEpiWitness w;
      w.kind = MonoEpiWitness::Kind::unreached_subset;
      w.first.push_back(r.cod().label_at(b));
      return {false, std::nullopt, std::move(w)};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

MonoEpiVerdict ftau_injective_oracle(const Relation& r, std::size_t cap) {
  std::size_t n = r.dom().size();
  if (n > cap || n > 60) {
    throw Error(Errc::oracle_too_large,
                "domain size " + std::to_string(n) + " exceeds oracle cap " +
                    std::to_string(std::min<std::size_t>(cap, 60)));
  }
  // Group the 2^n subsets by image; within a group masks arrive in
  // ascending order, so the first two are the group's minimal pair.  The
  // overall minimal collision is the minimum over groups.
  std::unordered_map<Bitset, std::pair<std::uint64_t, std::uint64_t>, BitsetHash> groups;
  groups.reserve(std::size_t{1} << n);
  bool injective = true;
  std::pair<std::uint64_t, std::uint64_t> best{0, 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset img(r.cod().size());
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) img |= r.row(i);
    }
    auto [it, fresh] = groups.try_emplace(img, mask, mask);
    if (!fresh && it->second.first == it->second.second) {
      it->second.second = mask;
      std::pair<std::uint64_t, std::uint64_t> cand{it->second.first, mask};
      if (injective || cand < best) best = cand;
      injective = false;
    }
  }
  MonoEpiVerdict v;
  v.fast_result = is_mono(r).fast_result;
  v.oracle_result = injective;
  if (!injective) {
    MonoEpiWitness w;
    w.kind = MonoEpiWitness::Kind::image_collision;
    w.first = mask_to_labels(r.dom(), best.first);
    w.second = mask_to_labels(r.dom(), best.second);
    v.witness = std::move(w);
  }
  return v;
}

MonoEpiVerdict ftau_surjective_oracle(const Relation& r, std::size_t cap) {
  std::size_t m = r.cod().size();
  if (m > cap || m > 24) {
    throw Error(Errc::oracle_too_large,
                "codomain size " + std::to_string(m) + " exceeds oracle cap " +
                    std::to_string(std::min<std::size_t>(cap, 24)));
  }
  // The images of domain subsets are exactly the closure of {∅} under
  // union with individual rows; enumerate that closure and look for the
  // first missing codomain subset.
  std::vector<std::uint64_t> row_masks;
  row_masks.reserve(r.dom().size());
  for (const auto& row : r.rows()) row_masks.push_back(row.low_word());
  std::vector<bool> reached(std::size_t{1} << m, false);
  std::vector<std::uint64_t> work{0};
  reached[0] = true;
  while (!work.empty()) {
    std::uint64_t v = work.back();
    work.pop_back();
    for (std::uint64_t rm : row_masks) {
      std::uint64_t nv = v | rm;
      if (!reached[nv]) {
        reached[nv] = true;
        work.push_back(nv);
      }
    }
  }
  MonoEpiVerdict v;
  v.fast_result = is_epi(r).fast_result;
  v.oracle_result = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!reached[mask]) {
      v.oracle_result = false;
      MonoEpiWitness w;
      w.kind = MonoEpiWitness::Kind::unreached_subset;
      w.first = mask_to_labels(r.cod(), mask);
      v.witness = std::move(w);
      break;
    }
  }
  return v;
}

bool is_iso(const Relation& r) {
  return is_function(r) && is_bijective(r);
}

namespace {

// Shared engine for both cancellation oracles.  `precompose` selects the
// mono direction (probes W -> X composed on the right of r); otherwise the
// epi direction (probes from r.cod composed on the left).  Probes are
// grouped by their composite with r; any group of two distinct probes with
// equal composites violates cancellation.  The reported pair is minimal in
// probe-mask order.
std::string matrix_key(const Relation& r) {
  std::string key;
  for (const auto& row : r.rows()) {
    for (std::uint64_t w : row.words()) {
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
    }
    key.push_back('|');
  }
  return key;
}

CancellationResult cancellation_oracle(const Relation& r, std::size_t probe_size_max,
                                       bool precompose) {
  const Carrier& side = precompose ? r.dom() : r.cod();
  for (std::size_t w = 1; w <= probe_size_max; ++w) {
    std::size_t bits = w * side.size();
    if (bits > 24) {
      throw Error(Errc::oracle_too_large,
                  "cancellation probe space 2^" + std::to_string(bits) + " too large");
    }
    Carrier probe(fresh_labels(w, max_label(r)));
    // Group probes by their composite with r; a group with two members is a
    // cancellation violation.  Masks arrive ascending, so the first two in
    // a group are that group's minimal pair.
    std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> groups;
    bool ok = true;
    std::pair<std::uint64_t, std::uint64_t> best{0, 0};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Relation tau = precompose ? relation_from_mask(probe, side, mask)
                                : relation_from_mask(side, probe, mask);
      Relation comp = precompose ? compose(r, tau) : compose(tau, r);
      auto [it, fresh] = groups.try_emplace(matrix_key(comp), mask, mask);
      if (!fresh && it->second.first == it->second.second) {
        it->second.second = mask;
        std::pair<std::uint64_t, std::uint64_t> cand{it->second.first, mask};
        if (ok || cand < best) best = cand;
        ok = false;
      }
    }
    if (!ok) {
      Relation a = precompose ? relation_from_mask(probe, side, best.first)
                              : relation_from_mask(side, probe, best.first);
      Relation b = precompose ? relation_from_mask(probe, side, best.second)
                              : relation_from_mask(side, probe, best.second);
      return {false, std::make_pair(std::move(a), std::move(b))};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

CancellationResult cancellation_mono_oracle(const Relation& r, std::size_t probe_size_max) {
  return cancellation_oracle(r, probe_size_max, true);
}

CancellationResult cancellation_epi_oracle(const Relation& r, std::size_t probe_size_max) {
  return cancellation_oracle(r, probe_size_max, false);
}

Relation divide_left(const Relation& m, const Relation& t) {
  if (!(m.cod() == t.cod())) {
    throw Error(Errc::composition_mismatch,
                "divisor codomain " + label_set_to_string(m.cod().labels()) +
                    " != target codomain " + label_set_to_string(t.cod().labels()));
  }
  std::vector<Bitset> rows(t.dom().size(), Bitset(m.dom().size()));
  for (std::size_t x = 0; x < t.dom().size(); ++x) {
    for (std::size_t u = 0; u < m.dom().size(); ++u) {
      if (m.row(u).is_subset_of(t.row(x))) rows[x].set(u);
    }
  }
  return Relation(t.dom(), m.dom(), std::move(rows));
}

bool is_extremal_epi(const Relation& r, bool paranoid) {
  if (!is_epi(r).fast_result) return false;
  std::size_t cols = r.cod().size();
  std::size_t bound = cols + (paranoid ? 1 : 0);
  if (bound * cols > 30) {
    throw Error(Errc::oracle_too_large,
                "extremal-epi search space 2^" + std::to_string(bound * cols) +
                    " too large");
  }
  // The candidate matrices fit one word, so the whole search runs on raw
  // row masks: enumerate every m : mid -> cod up to the bound, keep the
  // monos, test whether r factors through m (greatest-solution division),
  // and demand that any such m is an iso.
  std::uint64_t colmask = cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  // Only the set of distinct rows matters for the factorization test.
  std::vector<std::uint64_t> target;
  target.reserve(r.dom().size());
  for (const auto& row : r.rows()) target.push_back(row.low_word());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  std::uint64_t mrows[32];
  for (std::size_t k = 0; k <= bound; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * cols)); ++mask) {
      for (std::size_t j = 0; j < k; ++j) mrows[j] = (mask >> (j * cols)) & colmask;
      // mono: no row inside the union of the others
      bool mono = true;
      for (std::size_t j = 0; j < k && mono; ++j) {
        std::uint64_t others = 0;
        for (std::size_t l = 0; l < k; ++l) {
          if (l != j) others |= mrows[l];
        }
        if ((mrows[j] & ~others) == 0) mono = false;
      }
      if (!mono) continue;
      // factorization test: each target row must be the union of the
      // m-rows it contains
      bool factors = true;
      for (std::uint64_t t : target) {
        std::uint64_t covered = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if ((mrows[j] & ~t) == 0) covered |= mrows[j];
        }
        if (covered != t) {
          factors = false;
          break;
        }
      }
      if (!factors) continue;
      // iso means a bijective function: distinct singleton rows covering cod
      if (k != cols) return false;
      std::uint64_t seen = 0;
      bool iso = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (std::popcount(mrows[j]) != 1 || (seen & mrows[j])) {
          iso = false;
          break;
        }
        seen |= mrows[j];
      }
      if (!iso || seen != colmask) return false;
    }
  }
  return true;
}

}  // namespace relcat
