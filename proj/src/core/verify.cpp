#include "verify.hpp"

#include <algorithm>
#include <map>

#include "categorical.hpp"
#include "predicates.hpp"

namespace relcat {

bool AxiomReport::any_fail() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const PropertyVerdict& v) {
    return v.status == PropertyStatus::fails;
  });
}

std::string AxiomReport::to_text() const {
  std::string out;
  out += "mode: " + mode + "\n";
  out += "e_class: " + e_class + "\n";
  out += "m_class: " + m_class + "\n";
  out += "pool: " + label_set_to_string(pool) + "\n";
  out += "size_max: " + std::to_string(size_max) + "\n";
  out += "arity_max: " + std::to_string(arity_max) + "\n";
  for (const auto& v : verdicts) {
    out += v.id;
    switch (v.status) {
      case PropertyStatus::holds: out += " holds"; break;
      case PropertyStatus::fails: out += " fails"; break;
      case PropertyStatus::skipped: out += " skipped"; break;
    }
    if (!v.witness.empty()) out += " [witness: " + v.witness + "]";
    out += '\n';
  }
  return out;
}

namespace {

// All carriers over the pool, all relations between them, and per-relation
// class membership computed once.  Relations between universe carriers are
// stored in a flat vector ordered by (dom, cod, matrix mask), which makes
// composites addressable in O(1) and gives every scan a canonical order, so
// the first counterexample found is the minimal one.
struct Universe {
  std::vector<Carrier> carriers;
  std::vector<Relation> relations;
  std::vector<std::pair<std::size_t, std::size_t>> shape;   // relation -> (dom, cod) index
  std::vector<std::vector<std::size_t>> offset;             // [dom][cod] -> base index
  std::vector<std::vector<std::size_t>> by_cod;             // cod index -> relation indices

  struct Info {
    bool in_e = false;
    bool in_m = false;
    bool iso = false;
    bool epi = false;
    bool extremal = false;
    bool bijective_function = false;
  };
  std::vector<Info> info;

  std::size_t carrier_index(const Carrier& c) const {
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      if (carriers[i] == c) return i;
    }
    throw Error(Errc::invalid_argument, "carrier not in universe");
  }

  std::size_t index_of(const Relation& r) const {
    std::size_t di = carrier_index(r.dom());
    std::size_t ci = carrier_index(r.cod());
    std::uint64_t mask = 0;
    std::size_t m = r.cod().size();
    for (std::size_t i = 0; i < r.dom().size(); ++i) {
      r.row(i).for_each_set([&](std::size_t j) {
        mask |= std::uint64_t{1} << (i * m + j);
      });
    }
    return offset[di][ci] + static_cast<std::size_t>(mask);
  }
};

Universe build_universe(std::span<const Label> pool, std::size_t size_max,
                        const ClassSpec& e_class, const ClassSpec& m_class,
                        Budget& budget) {
  Universe u;
  std::vector<Label> base = Carrier(std::vector<Label>(pool.begin(), pool.end())).labels();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if ((mask >> i) & 1) labels.push_back(base[i]);
    }
    if (labels.size() <= size_max) u.carriers.emplace_back(std::move(labels));
  }
  std::sort(u.carriers.begin(), u.carriers.end(), carrier_less);

  std::size_t nc = u.carriers.size();
  u.offset.assign(nc, std::vector<std::size_t>(nc, 0));
  u.by_cod.assign(nc, {});
  for (std::size_t di = 0; di < nc; ++di) {
    for (std::size_t ci = 0; ci < nc; ++ci) {
      std::size_t bits = u.carriers[di].size() * u.carriers[ci].size();
      if (bits > 60) {
        throw Error(Errc::search_budget_exceeded, "universe too large to enumerate");
      }
      u.offset[di][ci] = u.relations.size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        budget.spend();
        u.by_cod[ci].push_back(u.relations.size());
        u.relations.push_back(relation_from_mask(u.carriers[di], u.carriers[ci], mask));
        u.shape.emplace_back(di, ci);
      }
    }
  }

  u.info.resize(u.relations.size());
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    budget.spend();
    const Relation& r = u.relations[i];
    auto& info = u.info[i];
    info.in_e = e_class.contains(r);
    info.in_m = m_class.contains(r);
    info.iso = is_iso(r);
    info.epi = is_epi(r).fast_result;
    info.extremal = is_extremal_epi(r);
    info.bijective_function = is_function(r) && is_bijective(r);
  }
  return u;
}

// Ascending combinations-with-repetition of relation indices sharing a
// codomain; factorization and closure checks are invariant under component
// permutation, so one ordered representative per multiset suffices.
template <class F>
void for_each_sink(const Universe& u, std::size_t arity_max, F f) {
  std::vector<std::size_t> picks;
  for (std::size_t ci = 0; ci < u.carriers.size(); ++ci) {
    const auto& pool = u.by_cod[ci];
    if (pool.empty()) continue;
    for (std::size_t arity = 1; arity <= arity_max; ++arity) {
      picks.assign(arity, 0);
      while (true) {
        if (!f(pool, picks)) return;
        std::size_t pos = arity;
        bool done = false;
        while (pos > 0) {
          --pos;
          if (++picks[pos] < pool.size()) {
            for (std::size_t q = pos + 1; q < arity; ++q) picks[q] = picks[pos];
            break;
          }
          if (pos == 0) done = true;
        }
        if (done || pool.empty()) break;
      }
    }
  }
}

Sink make_sink(const Universe& u, const std::vector<std::size_t>& pool,
               const std::vector<std::size_t>& picks) {
  std::vector<Relation> parts;
  parts.reserve(picks.size());
  for (std::size_t p : picks) parts.push_back(u.relations[pool[p]]);
  return Sink(std::move(parts));
}

std::string pair_literal(const FactorizationPair& fp) {
  return "e=" + sink_literal(fp.e) + " m=" + relation_literal(fp.m);
}

PropertyVerdict check_a1(const Universe& u, std::size_t arity_max, Budget& budget) {
  std::vector<std::size_t> isos;
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    if (u.info[i].iso) isos.push_back(i);
  }
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    if (!u.info[i].in_m) continue;
    const Relation& m = u.relations[i];
    for (std::size_t hi : isos) {
      budget.spend();
      const Relation& h = u.relations[hi];
      if (h.dom() == m.cod()) {
        std::size_t t = u.index_of(compose(h, m));
        if (!u.info[t].in_m) {
          return {"A1", PropertyStatus::fails,
                  "m=" + relation_literal(m) + "; h=" + relation_literal(h) +
                      "; h∘m=" + relation_literal(u.relations[t])};
        }
      }
      if (h.cod() == m.dom()) {
        std::size_t t = u.index_of(compose(m, h));
        if (!u.info[t].in_m) {
          return {"A1", PropertyStatus::fails,
                  "m=" + relation_literal(m) + "; h=" + relation_literal(h) +
                      "; m∘h=" + relation_literal(u.relations[t])};
        }
      }
    }
  }
  PropertyVerdict out{"A1", PropertyStatus::holds, ""};
  for_each_sink(u, arity_max, [&](const std::vector<std::size_t>& pool,
                                  const std::vector<std::size_t>& picks) {
    bool sink_in_e = std::all_of(picks.begin(), picks.end(), [&](std::size_t p) {
      return u.info[pool[p]].in_e;
    });
    if (!sink_in_e) return true;
    const Carrier& y = u.relations[pool[picks[0]]].cod();
    for (std::size_t hi : isos) {
      budget.spend();
      const Relation& h = u.relations[hi];
      if (!(h.dom() == y)) continue;
      for (std::size_t p : picks) {
        std::size_t t = u.index_of(compose(h, u.relations[pool[p]]));
        if (!u.info[t].in_e) {
          out = {"A1", PropertyStatus::fails,
                 "sink=" + sink_literal(make_sink(u, pool, picks)) +
                     "; h=" + relation_literal(h) +
                     "; h∘component=" + relation_literal(u.relations[t])};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

PropertyVerdict check_a2(const Universe& u, std::size_t size_max, std::size_t arity_max,
                         const ClassSpec& e_class, const ClassSpec& m_class,
                         Budget& budget) {
  PropertyVerdict out{"A2", PropertyStatus::holds, ""};
  for_each_sink(u, arity_max, [&](const std::vector<std::size_t>& pool,
                                  const std::vector<std::size_t>& picks) {
    budget.spend();
    Sink s = make_sink(u, pool, picks);
    if (!has_sink_factorization(s, size_max, e_class, m_class, budget)) {
      out = {"A2", PropertyStatus::fails, "sink=" + sink_literal(s)};
      return false;
    }
    return true;
  });
  return out;
}

PropertyVerdict check_a3(const Universe& u, std::size_t arity_max, Budget& budget) {
  PropertyVerdict out{"A3", PropertyStatus::holds, ""};
  for_each_sink(u, arity_max, [&](const std::vector<std::size_t>& pool,
                                  const std::vector<std::size_t>& picks) {
    bool sink_in_e = std::all_of(picks.begin(), picks.end(), [&](std::size_t p) {
      return u.info[pool[p]].in_e;
    });
    if (!sink_in_e) return true;
    Sink e = make_sink(u, pool, picks);
    const Carrier& y = e.codomain();
    for (std::size_t mi = 0; mi < u.relations.size(); ++mi) {
      if (!u.info[mi].in_m) continue;
      const Relation& m = u.relations[mi];
      for (std::size_t si = 0; si < u.relations.size(); ++si) {
        const Relation& s = u.relations[si];
        if (!(s.dom() == y) || !(s.cod() == m.cod())) continue;
        budget.spend();
        // r components must satisfy m∘r_i = s∘e_i; enumerate exactly the
        // solutions instead of all candidate sinks.
        std::vector<std::vector<Relation>> solutions;
        bool feasible = true;
        for (std::size_t i = 0; i < e.arity(); ++i) {
          solutions.push_back(all_factor_solutions(m, compose(s, e.component(i)), budget));
          if (solutions.back().empty()) {
            feasible = false;
            break;
          }
        }
        if (!feasible) continue;
        std::vector<std::size_t> idx(e.arity(), 0);
        while (true) {
          budget.spend();
          std::vector<Relation> parts;
          for (std::size_t i = 0; i < e.arity(); ++i) parts.push_back(solutions[i][idx[i]]);
          Sink r(std::move(parts));
          DiagonalResult dr = check_diagonalization(e, s, r, m);
          if (dr.status != DiagonalStatus::unique) {
            out = {"A3", PropertyStatus::fails,
                   std::string(dr.status == DiagonalStatus::none ? "no diagonal"
                                                                 : "two diagonals") +
                       " for e=" + sink_literal(e) + "; s=" + relation_literal(s) +
                       "; r=" + sink_literal(r) + "; m=" + relation_literal(m)};
            return false;
          }
          std::size_t pos = e.arity();
          bool done = false;
          while (pos > 0) {
            --pos;
            if (++idx[pos] < solutions[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    return true;
  });
  return out;
}

PropertyVerdict check_p1(const Universe& u, Budget& budget) {
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    budget.spend();
    if (u.info[i].in_m && !is_mono(u.relations[i]).fast_result) {
      return {"P1", PropertyStatus::fails,
              "non-mono member of M: " + relation_literal(u.relations[i])};
    }
    if (u.info[i].extremal && !u.info[i].in_e) {
      return {"P1", PropertyStatus::fails,
              "extremal epi outside E: " + relation_literal(u.relations[i])};
    }
  }
  return {"P1", PropertyStatus::holds, ""};
}

PropertyVerdict check_p2(const Universe& u, Budget& budget) {
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    budget.spend();
    if (u.info[i].bijective_function && !u.info[i].in_m) {
      return {"P2", PropertyStatus::fails,
              "bijective function outside M: " + relation_literal(u.relations[i])};
    }
  }
  for (std::size_t a = 0; a < u.relations.size(); ++a) {
    if (!u.info[a].in_m) continue;
    for (std::size_t b = 0; b < u.relations.size(); ++b) {
      if (!u.info[b].in_m) continue;
      const Relation& m1 = u.relations[a];
      const Relation& m2 = u.relations[b];
      if (!(m2.dom() == m1.cod())) continue;
      budget.spend();
      std::size_t t = u.index_of(compose(m2, m1));
      if (!u.info[t].in_m) {
        return {"P2", PropertyStatus::fails,
                "m1=" + relation_literal(m1) + "; m2=" + relation_literal(m2) +
                    "; m2∘m1=" + relation_literal(u.relations[t])};
      }
    }
  }
  return {"P2", PropertyStatus::holds, ""};
}

PropertyVerdict check_p3(const Universe& u, std::size_t arity_max, Budget& budget) {
  PropertyVerdict out{"P3", PropertyStatus::holds, ""};
  for_each_sink(u, arity_max, [&](const std::vector<std::size_t>& pool,
                                  const std::vector<std::size_t>& picks) {
    bool sink_in_e = std::all_of(picks.begin(), picks.end(), [&](std::size_t p) {
      return u.info[pool[p]].in_e;
    });
    if (!sink_in_e) return true;
    const Carrier& y = u.relations[pool[picks[0]]].cod();
    for (std::size_t fi = 0; fi < u.relations.size(); ++fi) {
      if (!u.info[fi].in_e) continue;
      const Relation& f = u.relations[fi];
      if (!(f.dom() == y)) continue;
      budget.spend();
      for (std::size_t p : picks) {
        std::size_t t = u.index_of(compose(f, u.relations[pool[p]]));
        if (!u.info[t].in_e) {
          out = {"P3", PropertyStatus::fails,
                 "sink=" + sink_literal(make_sink(u, pool, picks)) +
                     "; f=" + relation_literal(f) +
                     "; f∘component=" + relation_literal(u.relations[t])};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

PropertyVerdict check_p4(const Universe& u, std::size_t size_max, std::size_t arity_max,
                         const ClassSpec& e_class, const ClassSpec& m_class,
                         Budget& budget) {
  PropertyVerdict out{"P4", PropertyStatus::holds, ""};
  for_each_sink(u, arity_max, [&](const std::vector<std::size_t>& pool,
                                  const std::vector<std::size_t>& picks) {
    budget.spend();
    Sink s = make_sink(u, pool, picks);
    auto fps = enumerate_sink_factorizations(s, size_max, e_class, m_class, budget);
    for (std::size_t i = 0; i < fps.size(); ++i) {
      for (std::size_t j = i + 1; j < fps.size(); ++j) {
        budget.spend();
        if (!essential_uniqueness(fps[i], fps[j])) {
          out = {"P4", PropertyStatus::fails,
                 "sink=" + sink_literal(s) + "; f1=(" + pair_literal(fps[i]) +
                     "); f2=(" + pair_literal(fps[j]) + ")"};
          return false;
        }
      }
    }
    return true;
  });
  return out;
}

PropertyVerdict check_p5a(const Universe& u, Budget& budget) {
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    budget.spend();
    if (u.info[i].bijective_function && !(u.info[i].in_m && u.info[i].in_e)) {
      return {"P5a", PropertyStatus::fails,
              "bijective function outside M∩E: " + relation_literal(u.relations[i])};
    }
  }
  return {"P5a", PropertyStatus::holds, ""};
}

PropertyVerdict check_p5b(const Universe& u, Budget& budget) {
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    budget.spend();
    if (u.info[i].in_m && u.info[i].in_e && !u.info[i].iso) {
      return {"P5b", PropertyStatus::fails,
              "non-iso in M∩E: " + relation_literal(u.relations[i])};
    }
  }
  return {"P5b", PropertyStatus::holds, ""};
}

PropertyVerdict check_p6(const Universe& u, Budget& budget) {
  for (std::size_t a = 0; a < u.relations.size(); ++a) {
    const Relation& m = u.relations[a];
    for (std::size_t b = 0; b < u.relations.size(); ++b) {
      if (!u.info[b].in_m) continue;
      const Relation& n = u.relations[b];
      if (!(n.dom() == m.cod())) continue;
      budget.spend();
      std::size_t t = u.index_of(compose(n, m));
      if (u.info[t].in_m && !u.info[a].in_m) {
        return {"P6", PropertyStatus::fails,
                "m=" + relation_literal(m) + "; n=" + relation_literal(n) +
                    "; n∘m=" + relation_literal(u.relations[t])};
      }
    }
  }
  return {"P6", PropertyStatus::holds, ""};
}

PropertyVerdict check_p7(const Universe& u, Budget& budget) {
  // Second-factor closure presumes E consists of episinks; when some
  // E-morphism in the universe is not an epi the property is not
  // applicable and is reported as skipped.
  for (std::size_t i = 0; i < u.relations.size(); ++i) {
    if (u.info[i].in_e && !u.info[i].epi) {
      return {"P7", PropertyStatus::skipped, ""};
    }
  }
  for (std::size_t a = 0; a < u.relations.size(); ++a) {
    if (!u.info[a].in_e) continue;
    const Relation& f = u.relations[a];
    for (std::size_t b = 0; b < u.relations.size(); ++b) {
      const Relation& g = u.relations[b];
      if (!(g.dom() == f.cod())) continue;
      budget.spend();
      std::size_t t = u.index_of(compose(g, f));
      if (u.info[t].in_e && !u.info[b].in_e) {
        return {"P7", PropertyStatus::fails,
                "f=" + relation_literal(f) + "; g=" + relation_literal(g) +
                    "; g∘f=" + relation_literal(u.relations[t])};
      }
    }
  }
  return {"P7", PropertyStatus::holds, ""};
}

AxiomReport make_report(const char* mode, std::span<const Label> pool, std::size_t size_max,
                        std::size_t arity_max, const ClassSpec& e_class,
                        const ClassSpec& m_class) {
  AxiomReport rep;
  rep.mode = mode;
  rep.e_class = e_class.name();
  rep.m_class = m_class.name();
  rep.pool = Carrier(std::vector<Label>(pool.begin(), pool.end())).labels();
  rep.size_max = size_max;
  rep.arity_max = arity_max;
  return rep;
}

}  // namespace

AxiomReport verify_em_axioms(std::span<const Label> pool, std::size_t size_max,
                             std::size_t arity_max, const ClassSpec& e_class,
                             const ClassSpec& m_class, std::uint64_t budget) {
  AxiomReport rep = make_report("axioms", pool, size_max, arity_max, e_class, m_class);
  Budget meter{budget};
  Universe u = build_universe(pool, size_max, e_class, m_class, meter);
  rep.verdicts.push_back(check_a1(u, arity_max, meter));
  rep.verdicts.push_back(check_a2(u, size_max, arity_max, e_class, m_class, meter));
  rep.verdicts.push_back(check_a3(u, arity_max, meter));
  return rep;
}

AxiomReport verify_necessary_properties(std::span<const Label> pool, std::size_t size_max,
                                        std::size_t arity_max, const ClassSpec& e_class,
                                        const ClassSpec& m_class, std::uint64_t budget) {
  AxiomReport rep = make_report("necessary", pool, size_max, arity_max, e_class, m_class);
  Budget meter{budget};
  Universe u = build_universe(pool, size_max, e_class, m_class, meter);
  rep.verdicts.push_back(check_p1(u, meter));
  rep.verdicts.push_back(check_p2(u, meter));
  rep.verdicts.push_back(check_p3(u, arity_max, meter));
  rep.verdicts.push_back(check_p4(u, size_max, arity_max, e_class, m_class, meter));
  rep.verdicts.push_back(check_p5a(u, meter));
  rep.verdicts.push_back(check_p5b(u, meter));
  rep.verdicts.push_back(check_p6(u, meter));
  rep.verdicts.push_back(check_p7(u, meter));
  return rep;
}

}  // namespace relcat
