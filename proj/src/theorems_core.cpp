// Statements about a single ring: the (m,n) hierarchy, comparison and
// composition of expansions, intersections, unbreakable-zero elements.

#include <algorithm>

#include "theorem_support.hpp"

namespace ringlab::detail {

namespace {

using Fn = std::function<Outcomes(const Catalog&, const RingEntry&, const Ideal&, std::size_t)>;

/// One task per (catalog ring, proper ideal).
Builder per_ideal(Fn fn) {
  return [fn](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      for (std::size_t i : e.proper) {
        tasks.push_back([fn, cat = &ctx.catalog(), entry = &e, i] {
          return fn(*cat, *entry, (*entry->lattice)[i], i);
        });
      }
    }
    return tasks;
  };
}

std::vector<Index> witness_of(const Verdict& a, const Verdict& b) {
  return !a.holds ? a.witness : b.witness;
}

Outcomes t32a(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    for (int n = 1; n < cat.max_m; ++n) {
      const MNParams p{n + 1, n};
      const Verdict semi = is_semi_n_absorbing(I, n, &d, true);
      const Verdict mn = classify_mn(I, p, &d, true);
      out.push_back(equivalence(semi.holds, mn.holds, [&] {
        return make_cex(I, &d, p, witness_of(semi, mn),
                        sides("weakly semi-n-absorbing", semi.holds, "weakly (n+1,n)-closed",
                              mn.holds));
      }));
    }
  }
  return out;
}

Outcomes t32b(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    for (int n = 1; n <= cat.absorbing_max_n; ++n) {
      const bool hyp = is_n_absorbing_delta_primary(I, n, d, true).holds;
      const Verdict semi = hyp ? is_semi_n_absorbing(I, n, &d, true) : Verdict{};
      out.push_back(implication(hyp, semi.holds, [&] {
        return make_cex(I, &d, MNParams{n + 1, n}, semi.witness,
                        "weakly n-absorbing δ-primary but not weakly semi-n-absorbing");
      }));
    }
  }
  return out;
}

Outcomes t32c(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    for (MNParams p : mn_grid(cat)) {
      const bool hyp = weakly_closed(I, &d, p);
      for (int k = p.n + 1; k <= cat.max_m; ++k) {
        const MNParams q{p.m, k};
        const Verdict v = hyp ? classify_mn(I, q, &d, true) : Verdict{};
        out.push_back(implication(hyp, v.holds, [&] {
          return make_cex(I, &d, q, v.witness,
                          "weakly (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                              ")-closed but not weakly (m,k)-closed for k=" + std::to_string(k));
        }));
      }
    }
  }
  return out;
}

Outcomes t32d(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (int n = 1; n <= cat.absorbing_max_n; ++n) {
    const bool hyp = is_n_absorbing(I, n, true).holds;
    for (const auto& d : e.deltas) {
      if (!d.defined_at_index(idx)) continue;
      for (int m = 1; m <= cat.max_m; ++m) {
        const MNParams p{m, n};
        const Verdict v = hyp ? classify_mn(I, p, &d, true) : Verdict{};
        out.push_back(implication(hyp, v.holds, [&] {
          return make_cex(I, &d, p, v.witness, "weakly n-absorbing but not weakly (m,n)-closed");
        }));
      }
    }
  }
  return out;
}

Outcomes t37a(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (std::size_t a = 0; a < e.deltas.size(); ++a) {
    const ExpansionFn& d = e.deltas[a];
    if (!d.defined_at_index(idx)) continue;
    const Ideal di = d.eval(I);
    for (std::size_t b = 0; b < e.deltas.size(); ++b) {
      const ExpansionFn& g = e.deltas[b];
      if (a == b || !g.defined_at_index(idx) || !di.subset_of(g.eval(I))) continue;
      for (MNParams p : mn_grid(cat)) {
        const bool hyp = weakly_closed(I, &d, p);
        const Verdict v = hyp ? classify_mn(I, p, &g, true) : Verdict{};
        out.push_back(implication(hyp, v.holds, [&] {
          return make_cex(I, &g, p, v.witness,
                          "weakly closed for " + d.label() + " but not for larger " + g.label());
        }));
      }
    }
  }
  return out;
}

Outcomes t37b(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    const Ideal di = d.eval(I);
    if (!di.proper()) continue;
    for (MNParams p : mn_grid(cat)) {
      const bool hyp = weakly_closed(di, nullptr, p);
      const Verdict v = hyp ? classify_mn(I, p, &d, true) : Verdict{};
      out.push_back(implication(hyp, v.holds, [&] {
        return make_cex(I, &d, p, v.witness, "δ(I) weakly closed but I not weakly δ-closed");
      }));
    }
  }
  return out;
}

/// One task per ring; compositions are built once per ring.
Builder per_ring_compositions(bool comp) {
  return [comp](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      tasks.push_back([comp, cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const auto totals = entry->total_deltas();
        const IdealLattice& lat = *entry->lattice;
        for (const ExpansionFn* d : totals) {
          for (const ExpansionFn* g : totals) {
            if (comp) {
              // γ∘δ with δ(0) (m,n)-closed γ-primary.
              const ExpansionFn gd = delta_compose(*g, *d);
              const Ideal d0 = d->eval(lat[lat.zero_index()]);
              for (std::size_t i : entry->proper) {
                const Ideal& I = lat[i];
                for (MNParams p : mn_grid(*cat)) {
                  const bool hyp = d0.proper() && closed(d0, g, p);
                  const Verdict w = hyp ? classify_mn(I, p, &gd, true) : Verdict{};
                  const Verdict c = hyp ? classify_mn(I, p, &gd, false) : Verdict{};
                  if (!hyp) {
                    out.push_back(vacuous());
                    continue;
                  }
                  out.push_back(equivalence(w.holds, c.holds, [&] {
                    return make_cex(I, &gd, p, c.witness,
                                    sides("weakly", w.holds, "closed", c.holds) +
                                        "; δ(0) = " + d0.describe());
                  }));
                }
              }
            } else {
              // δ∘γ with γ(I) weakly (m,n)-closed δ-primary.
              const ExpansionFn dg = delta_compose(*d, *g);
              for (std::size_t i : entry->proper) {
                const Ideal& I = lat[i];
                const Ideal gi = g->eval(I);
                for (MNParams p : mn_grid(*cat)) {
                  const bool hyp = gi.proper() && weakly_closed(gi, d, p);
                  const Verdict v = hyp ? classify_mn(I, p, &dg, true) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(I, &dg, p, v.witness,
                                    "γ(I) = " + gi.describe() + " weakly δ-closed");
                  }));
                }
              }
            }
          }
        }
        return out;
      });
    }
    return tasks;
  };
}

Builder intersection() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      tasks.push_back([cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const IdealLattice& lat = *entry->lattice;
        for (const ExpansionFn* d : entry->total_deltas()) {
          if (!check_fip(*d).holds) {
            out.push_back(skipped());
            continue;
          }
          for (std::size_t x = 0; x < entry->proper.size(); ++x) {
            for (std::size_t y = x + 1; y < entry->proper.size(); ++y) {
              const std::size_t i1 = entry->proper[x];
              const std::size_t i2 = entry->proper[y];
              if (d->eval_index(i1) != d->eval_index(i2)) continue;
              const Ideal meet = ideal_intersect(lat[i1], lat[i2]);
              for (MNParams p : mn_grid(*cat)) {
                const bool hyp = weakly_closed(lat[i1], d, p) && weakly_closed(lat[i2], d, p);
                const Verdict v = hyp ? classify_mn(meet, p, d, true) : Verdict{};
                out.push_back(implication(hyp, v.holds, [&] {
                  return make_cex(meet, d, p, v.witness,
                                  "intersection of " + lat[i1].describe() + " and " +
                                      lat[i2].describe() + " with equal δ");
                }));
              }
            }
          }
        }
        return out;
      });
    }
    return tasks;
  };
}

Outcomes shift(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  const FiniteRing& r = e.ring;
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    for (MNParams p : mn_grid(cat)) {
      const auto unbreakable = unbreakable_zero_set(I, d, p);
      const bool hyp = !unbreakable.empty() && weakly_closed(I, &d, p);
      std::vector<Index> bad;
      if (hyp) {
        for (Index x : unbreakable) {
          for (Index i : I.members()) {
            if (r.pow(r.add(x, i), p.m) != r.zero()) {
              bad = {x, i};
              break;
            }
          }
          if (!bad.empty()) break;
        }
      }
      out.push_back(implication(hyp, bad.empty(), [&] {
        return make_cex(I, &d, p, bad, "(x+i)^m ≠ 0 for unbreakable x and i in I");
      }));
    }
  }
  return out;
}

Outcomes nil(const Catalog& cat, const RingEntry& e, const Ideal& I, std::size_t idx) {
  Outcomes out;
  const FiniteRing& r = e.ring;
  const Ideal nilrad = nilradical(r);
  const std::size_t ch = characteristic(r);
  for (const auto& d : e.deltas) {
    if (!d.defined_at_index(idx)) continue;
    for (MNParams p : mn_grid(cat)) {
      const bool hyp = weakly_not_closed(I, &d, p);
      std::vector<Index> bad;
      std::string why;
      if (hyp) {
        for (Index x : I.members()) {
          if (!nilrad.contains(x)) {
            bad = {x};
            why = "element of I outside Nil(R)";
            break;
          }
          if (ch == static_cast<std::size_t>(p.m) && is_prime_number(ch) &&
              r.pow(x, p.m) != r.zero()) {
            bad = {x};
            why = "char(R) = m prime but x^m ≠ 0";
            break;
          }
        }
      }
      out.push_back(implication(hyp, bad.empty(), [&] { return make_cex(I, &d, p, bad, why); }));
    }
  }
  return out;
}

}  // namespace

Builder jacobson_builder(bool restricted) {
  return [restricted](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      tasks.push_back([restricted, cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const FiniteRing& r = entry->ring;
        if (r.size() < 2) return out;
        const IdealLattice& lat = *entry->lattice;
        const Ideal jr = jacobson_radical(r);
        for (Index a : jr.members()) {
          for (int n = 1; n < cat->max_m; ++n) {
            const Index an1 = r.pow(a, n + 1);
            const Index gen[] = {an1};
            const Ideal I = ideal_closure(r, gen);
            const std::size_t idx = lat.index_of(I);
            for (const auto& d : entry->deltas) {
              if (!d.defined_at_index(idx)) continue;
              if (restricted && d.eval_index(idx) != idx) continue;
              const Verdict semi = is_semi_n_absorbing(I, n, &d, true);
              const bool zero = an1 == r.zero();
              out.push_back(equivalence(semi.holds, zero, [&] {
                std::vector<Index> w{a};
                w.insert(w.end(), semi.witness.begin(), semi.witness.end());
                return make_cex(I, &d, MNParams{n + 1, n}, w,
                                "a = " + r.label(a) + " in J(R): " +
                                    sides("weakly semi-n-absorbing", semi.holds,
                                          "a^{n+1} = 0", zero));
              }));
            }
          }
        }
        return out;
      });
    }
    return tasks;
  };
}

namespace {

Builder prime_power() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    const Catalog& cat = ctx.catalog();
    for (std::size_t p = 2; p * p <= cat.pk_limit; ++p) {
      if (!is_prime_number(p)) continue;
      std::size_t q = p * p;
      for (int c = 2; q <= cat.pk_limit; ++c, q *= p) {
        tasks.push_back([cat = &cat, p, c, q] {
          Outcomes out;
          const RingEntry entry = make_entry(zmod(q));
          const FiniteRing& r = entry.ring;
          Index pk = static_cast<Index>(p);
          for (int k = 1; k < c; ++k, pk = static_cast<Index>(pk * p)) {
            const Index gen[] = {pk};
            const Ideal I = ideal_closure(r, gen);
            const std::size_t idx = entry.lattice->index_of(I);
            for (int m = 2; m <= cat->max_m && m < k; ++m) {
              const int a = k / m;
              const int b = k % m;
              for (int n = 1; n < m; ++n) {
                const MNParams prm{m, n};
                for (const auto& d : entry.deltas) {
                  if (!d.defined_at_index(idx)) continue;
                  const bool hyp = weakly_not_closed(I, &d, prm);
                  const bool concl = b != 0 && k + 1 <= c && c <= m * (a + 1) && n * (a + 1) < k;
                  out.push_back(implication(hyp, concl, [&] {
                    return make_cex(I, &d, prm, {},
                                    "k=" + std::to_string(k) + ", c=" + std::to_string(c) +
                                        ", a=" + std::to_string(a) + ", b=" + std::to_string(b));
                  }));
                }
              }
            }
          }
          return out;
        });
      }
    }
    return tasks;
  };
}

}  // namespace

void register_core(std::vector<Registered>& out) {
  out.push_back({{"T-3.2a", "\"weakly (n+1,n)-closed δ-primary ideal\"",
                  "weakly semi-n-absorbing δ-primary ⇔ weakly (n+1,n)-closed δ-primary"},
                 per_ideal(t32a)});
  out.push_back({{"T-3.2b", "\"weakly n-absorbing δ-primary ideal of R, then I is a weakly semi\"",
                  "weakly n-absorbing δ-primary ⇒ weakly semi-n-absorbing δ-primary"},
                 per_ideal(t32b)});
  out.push_back({{"T-3.2c", "\"weakly (m,k)-closed δ-primary ideal of R for every positive integer\"",
                  "weakly (m,n)-closed δ-primary ⇒ weakly (m,k)-closed δ-primary for k ≥ n"},
                 per_ideal(t32c)});
  out.push_back({{"T-3.2d", "\"A weakly n-absorbing ideal of R\"",
                  "weakly n-absorbing ⇒ weakly (m,n)-closed δ-primary for every m"},
                 per_ideal(t32d)});
  out.push_back({{"T-3.7a", "\"δ(I)⊆γ(I)\"",
                  "δ(I) ⊆ γ(I) and weakly (m,n)-closed δ-primary ⇒ weakly (m,n)-closed γ-primary"},
                 per_ideal(t37a)});
  out.push_back({{"T-3.7b", "\"If δ(I) is a weakly (m,n)-closed ideal\"",
                  "δ(I) weakly (m,n)-closed ⇒ I weakly (m,n)-closed δ-primary"},
                 per_ideal(t37b)});
  out.push_back({{"T-COMP", "\"δ(0) be an (m,n)-closed γ-primary ideal\"",
                  "δ(0) (m,n)-closed γ-primary ⇒ (weakly ⇔ closed) for γ∘δ"},
                 per_ring_compositions(true)});
  out.push_back({{"T-GAMMA", "\"γ(I) be a weakly (m,n)-closed δ-primary ideal\"",
                  "γ(I) weakly (m,n)-closed δ-primary ⇒ I weakly (m,n)-closed δ∘γ-primary"},
                 per_ring_compositions(false)});
  out.push_back({{"T-INT", "\"P=δ(I_j) for all j\"",
                  "δ with the finite intersection property, weakly closed I1, I2 with "
                  "δ(I1)=δ(I2) ⇒ I1∩I2 weakly closed"},
                 intersection()});
  out.push_back({{"T-SHIFT", "\"(x+i)^m=0 for every i∈I\"",
                  "x unbreakable-zero for weakly closed I ⇒ (x+i)^m = 0 for all i in I"},
                 per_ideal(shift)});
  out.push_back({{"T-NIL", "\"then I⊆Nil(R)\" / \"char(R)=m is prime, then x^m=0\"",
                  "weakly but not (m,n)-closed δ-primary ⇒ I ⊆ Nil(R); char(R)=m prime ⇒ "
                  "x^m=0 on I"},
                 per_ideal(nil)});
  out.push_back({{"T-JRAD", "\"the ideal I=a^{n+1}R\"",
                  "a ∈ J(R), δ(I) = I: a^{n+1}R weakly semi-n-absorbing δ-primary ⇔ a^{n+1} = 0"},
                 jacobson_builder(true)});
  out.push_back({{"T-PK", "\"write k=ma+b for some integers\"",
                  "p^k Z/p^c Z weakly but not (m,n)-closed δ-primary, m<k<c ⇒ b≠0, "
                  "k+1≤c≤m(a+1), n(a+1)<k"},
                 prime_power()});
}

}  // namespace ringlab::detail
