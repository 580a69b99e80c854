#include "factorization.hpp"

#include <algorithm>
#include <numeric>

#include "categorical.hpp"

namespace relcat {

Sink::Sink(std::vector<Relation> components) : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(Errc::invalid_argument, "a sink needs at least one component");
  }
  for (const auto& c : components_) {
    if (!(c.cod() == components_.front().cod())) {
      throw Error(Errc::shape_mismatch, "sink components must share one codomain");
    }
  }
}

std::string sink_literal(const Sink& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.arity(); ++i) {
    if (i) out += ", ";
    out += relation_literal(s.component(i));
  }
  out += ']';
  return out;
}

bool factorization_less(const FactorizationPair& a, const FactorizationPair& b) {
  if (a.mid.size() != b.mid.size()) return a.mid.size() < b.mid.size();
  if (a.e.arity() != b.e.arity()) return a.e.arity() < b.e.arity();
  for (std::size_t i = 0; i < a.e.arity(); ++i) {
    if (!(a.e.component(i) == b.e.component(i))) {
      return relation_less(a.e.component(i), b.e.component(i));
    }
  }
  return relation_less(a.m, b.m);
}

namespace {

// Ascending subset enumeration of the set bits of `bits`; ascending choice
// index yields ascending submask value.
std::vector<std::size_t> set_positions(const Bitset& bits) {
  std::vector<std::size_t> pos;
  bits.for_each_set([&](std::size_t i) { pos.push_back(i); });
  return pos;
}

Label max_label_of(const Sink& s) {
  Label m = 1;
  if (!s.codomain().empty()) m = std::max(m, s.codomain().labels().back());
  for (const auto& c : s.components()) {
    if (!c.dom().empty()) m = std::max(m, c.dom().labels().back());
  }
  return m;
}

std::vector<Bitset> flatten_pair(const FactorizationPair& fp) {
  std::vector<Bitset> key;
  for (const auto& c : fp.e.components()) {
    key.insert(key.end(), c.rows().begin(), c.rows().end());
  }
  key.insert(key.end(), fp.m.rows().begin(), fp.m.rows().end());
  return key;
}

// Relabels the mid so the flattened (e, m) matrices are lexicographically
// least over all permutations; "essentially unique" factorizations then
// collapse to one representative per mid relabeling class.
FactorizationPair canonicalize_mid(const FactorizationPair& fp) {
  std::size_t k = fp.mid.size();
  if (k <= 1) return fp;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<Bitset>> best_key;
  FactorizationPair best = fp;
  do {
    std::vector<Relation> e_parts;
    e_parts.reserve(fp.e.arity());
    for (const auto& c : fp.e.components()) {
      std::vector<Bitset> rows(c.dom().size(), Bitset(k));
      for (std::size_t x = 0; x < c.dom().size(); ++x) {
        c.row(x).for_each_set([&](std::size_t j) { rows[x].set(perm[j]); });
      }
      e_parts.emplace_back(c.dom(), fp.mid, std::move(rows));
    }
    std::vector<Bitset> m_rows(k, Bitset(fp.m.cod().size()));
    for (std::size_t j = 0; j < k; ++j) m_rows[perm[j]] = fp.m.row(j);
    FactorizationPair cand{fp.mid, Sink(std::move(e_parts)),
                           Relation(fp.mid, fp.m.cod(), std::move(m_rows))};
    auto key = flatten_pair(cand);
    if (!best_key || lex_less(key, *best_key)) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Visits every raw (e, m) factorization of `s` with mid size <= mid_max.
// The visitor returns false to stop the search.
void for_each_sink_factorization(const Sink& s, std::size_t mid_max,
                                 const ClassSpec& e_class, const ClassSpec& m_class,
                                 Budget& budget,
                                 const std::function<bool(FactorizationPair)>& visit) {
  const Carrier& y = s.codomain();
  Label base = max_label_of(s);
  for (std::size_t k = 0; k <= mid_max; ++k) {
    std::size_t bits = k * y.size();
    if (bits > 60) {
      throw Error(Errc::search_budget_exceeded,
                  "mid search space 2^" + std::to_string(bits) + " not enumerable");
    }
    Carrier mid(fresh_labels(k, base));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      budget.spend();
      Relation m = relation_from_mask(mid, y, mask);
      if (!m_class.contains(m)) continue;
      std::vector<std::vector<Relation>> solutions;
      solutions.reserve(s.arity());
      bool feasible = true;
      for (const auto& t : s.components()) {
        solutions.push_back(all_factor_solutions(m, t, budget));
        if (solutions.back().empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      // Odometer over per-component solution choices, first component
      // varying slowest.
      std::vector<std::size_t> idx(s.arity(), 0);
      while (true) {
        budget.spend();
        std::vector<Relation> e_parts;
        e_parts.reserve(s.arity());
        for (std::size_t i = 0; i < s.arity(); ++i) e_parts.push_back(solutions[i][idx[i]]);
        Sink e(std::move(e_parts));
        if (e_class.contains(e)) {
          if (!visit(FactorizationPair{mid, std::move(e), m})) return;
        }
        std::size_t pos = s.arity();
        while (pos > 0) {
          --pos;
          if (++idx[pos] < solutions[pos].size()) break;
          idx[pos] = 0;
          if (pos == 0) goto next_mask;
        }
      }
    next_mask:;
    }
  }
}

}  // namespace

std::vector<Relation> all_factor_solutions(const Relation& m, const Relation& t,
                                           Budget& budget) {
  Relation residual = divide_left(m, t);
  if (!(compose(m, residual) == t)) return {};
  std::size_t n = t.dom().size();
  std::size_t k = m.dom().size();
  // Row choices are independent: row x may be any subset of the residual's
  // row whose rows of m union to exactly t's row x.
  std::vector<std::vector<Bitset>> choices(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto pos = set_positions(residual.row(x));
    if (pos.size() > 20) {
      throw Error(Errc::search_budget_exceeded,
                  "residual row too wide to enumerate (" + std::to_string(pos.size()) +
                      " bits)");
    }
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << pos.size()); ++choice) {
      budget.spend();
      Bitset sub(k);
      Bitset img(t.cod().size());
      for (std::size_t b = 0; b < pos.size(); ++b) {
        if ((choice >> b) & 1) {
          sub.set(pos[b]);
          img |= m.row(pos[b]);
        }
      }
      if (img == t.row(x)) choices[x].push_back(std::move(sub));
    }
  }
  std::vector<Relation> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    budget.spend();
    std::vector<Bitset> rows;
    rows.reserve(n);
    for (std::size_t x = 0; x < n; ++x) rows.push_back(choices[x][idx[x]]);
    out.emplace_back(t.dom(), m.dom(), std::move(rows));
    std::size_t pos = n;
    bool done = n == 0;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

std::vector<FactorizationPair> enumerate_sink_factorizations(const Sink& s,
                                                             std::size_t mid_max,
                                                             const ClassSpec& e_class,
                                                             const ClassSpec& m_class,
                                                             Budget& budget) {
  std::vector<FactorizationPair> out;
  for_each_sink_factorization(s, mid_max, e_class, m_class, budget,
                              [&](FactorizationPair fp) {
                                out.push_back(canonicalize_mid(fp));
                                return true;
                              });
  std::sort(out.begin(), out.end(), factorization_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FactorizationPair& a, const FactorizationPair& b) {
                          return a.mid == b.mid && a.e == b.e && a.m == b.m;
                        }),
            out.end());
  return out;
}

std::vector<FactorizationPair> enumerate_factorizations(const Relation& t,
                                                        std::size_t mid_max,
                                                        const ClassSpec& e_class,
                                                        const ClassSpec& m_class,
                                                        std::uint64_t budget) {
  Budget meter{budget};
  return enumerate_sink_factorizations(Sink::singleton(t), mid_max, e_class, m_class, meter);
}

bool has_sink_factorization(const Sink& s, std::size_t mid_max, const ClassSpec& e_class,
                            const ClassSpec& m_class, Budget& budget) {
  bool found = false;
  for_each_sink_factorization(s, mid_max, e_class, m_class, budget,
                              [&](const FactorizationPair&) {
                                found = true;
                                return false;
                              });
  return found;
}

DiagonalResult check_diagonalization(const Sink& e, const Relation& s, const Sink& r,
                                     const Relation& m) {
  if (e.arity() != r.arity()) {
    throw Error(Errc::shape_mismatch, "sink arities differ");
  }
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (!(e.component(i).dom() == r.component(i).dom())) {
      throw Error(Errc::shape_mismatch, "component " + std::to_string(i) +
                                            " domains differ between the two sinks");
    }
  }
  if (!(s.dom() == e.codomain()) || !(m.dom() == r.codomain()) || !(s.cod() == m.cod())) {
    throw Error(Errc::shape_mismatch, "square sides do not line up");
  }
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (!(compose(m, r.component(i)) == compose(s, e.component(i)))) {
      throw Error(Errc::commutativity_violated,
                  "m∘r != s∘e at component " + std::to_string(i));
    }
  }
  const Carrier& y = e.codomain();
  const Carrier& mc = m.dom();
  std::size_t bits = y.size() * mc.size();
  if (bits > 30) {
    throw Error(Errc::search_budget_exceeded,
                "diagonal search space 2^" + std::to_string(bits) + " not enumerable");
  }
  DiagonalResult result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Relation d = relation_from_mask(y, mc, mask);
    if (!(compose(m, d) == s)) continue;
    bool fills = true;
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (!(compose(d, e.component(i)) == r.component(i))) {
        fills = false;
        break;
      }
    }
    if (!fills) continue;
    if (!result.diagonal) {
      result.diagonal = std::move(d);
      result.status = DiagonalStatus::unique;
    } else {
      result.second = std::move(d);
      result.status = DiagonalStatus::non_unique;
      break;
    }
  }
  return result;
}

std::optional<Relation> essential_uniqueness(const FactorizationPair& f1,
                                             const FactorizationPair& f2) {
  if (f1.e.arity() != f2.e.arity()) {
    throw Error(Errc::different_sink, "factorization arities differ");
  }
  for (std::size_t i = 0; i < f1.e.arity(); ++i) {
    if (!(compose(f1.m, f1.e.component(i)) == compose(f2.m, f2.e.component(i)))) {
      throw Error(Errc::different_sink,
                  "pairs recompose to different sinks at component " + std::to_string(i));
    }
  }
  std::size_t k = f1.mid.size();
  if (k != f2.mid.size()) return std::nullopt;
  // Isos between equal-size carriers are exactly the permutation bijections.
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Bitset> rows(k, Bitset(k));
    for (std::size_t j = 0; j < k; ++j) rows[j].set(perm[j]);
    Relation h(f1.mid, f2.mid, std::move(rows));
    bool ok = compose(f2.m, h) == f1.m;
    for (std::size_t i = 0; ok && i < f1.e.arity(); ++i) {
      if (!(compose(h, f1.e.component(i)) == f2.e.component(i))) ok = false;
    }
    if (ok) return h;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace relcat
