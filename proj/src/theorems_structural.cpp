// Statements relating two rings: homomorphisms, quotients, localizations,
// direct products and trivial extensions.

#include <algorithm>
#include <set>

#include "theorem_support.hpp"

namespace ringlab::detail {

namespace {

// ---------------------------------------------------------------------------
// homomorphisms

using HomMaker = std::function<RingHom()>;

std::vector<HomMaker> hom_sources(const CatalogContext& ctx) {
  std::vector<HomMaker> out;
  for (const auto& e : ctx.entries()) {
    const FiniteRing r = e.ring;
    out.push_back([r] { return RingHom::identity(r); });
    if (r.is_quotient()) {
      out.push_back([r] {
        const auto& q = r.quotient_info();
        return RingHom(q.parent, r, q.projection);
      });
    }
    if (r.is_localization()) {
      out.push_back([r] {
        const auto& l = r.localization_info();
        return RingHom(l.parent, r, l.canonical);
      });
    }
    if (r.is_trivial_extension()) {
      out.push_back([r] { return trivial_extension_injection(r.trivial_extension_info().base, r); });
    }
    if (r.is_product()) {
      out.push_back([r] {
        const auto& p = r.product_info();
        std::vector<Index> map(r.size());
        for (Index x = 0; x < r.size(); ++x) map[x] = p.left_of(x);
        return RingHom(r, p.left, std::move(map));
      });
      out.push_back([r] {
        const auto& p = r.product_info();
        std::vector<Index> map(r.size());
        for (Index x = 0; x < r.size(); ++x) map[x] = p.right_of(x);
        return RingHom(r, p.right, std::move(map));
      });
    }
    if (r.is_amalgamation()) {
      out.push_back([r] {  // a ↦ (a, f(a))
        const Amalgam am(r);
        const RingHom f = am.f();
        std::vector<Index> map(am.A().size());
        for (Index a = 0; a < map.size(); ++a) map[a] = *am.element(a, f(a));
        return RingHom(am.A(), r, std::move(map));
      });
      out.push_back([r] {
        const Amalgam am(r);
        std::vector<Index> map(r.size());
        for (Index x = 0; x < r.size(); ++x) map[x] = am.a_of(x);
        return RingHom(r, am.A(), std::move(map));
      });
      out.push_back([r] { return subring_fA_plus_J(Amalgam(r)).embedding; });
    }
    if (r.is_zmod()) {
      for (std::size_t m = 2; m < r.size(); ++m) {
        if (r.size() % m == 0) out.push_back([r, m] { return canonical_zmod_hom(r, zmod(m)); });
      }
    }
    if (r.size() <= 16) {
      for (const Ideal& i : e.lattice->proper_ideals()) {
        if (!i.is_zero()) out.push_back([i] { return quotient_ring(i.ring(), i).projection; });
      }
    }
  }
  return out;
}

std::string hom_text(const RingHom& f) {
  return f.domain().expr() + " -> " + f.codomain().expr();
}

Builder homomorphism(bool injective_part) {
  return [injective_part](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (auto& make : hom_sources(ctx)) {
      tasks.push_back([injective_part, make, cat = &ctx.catalog()] {
        Outcomes out;
        const RingHom f = make();
        if (injective_part ? !f.injective() : !f.surjective()) return out;
        const RingEntry dom = make_entry(f.domain(), false);
        const RingEntry cod = make_entry(f.codomain(), false);
        const auto kernel = f.kernel();
        for (const ExpansionFn* d : dom.total_deltas()) {
          for (const ExpansionFn* g : cod.total_deltas()) {
            if (!is_delta_gamma_hom(f, *d, *g).holds) {
              out.push_back(skipped());
              continue;
            }
            if (injective_part) {
              for (std::size_t j : cod.proper) {
                const Ideal& J = (*cod.lattice)[j];
                const Ideal pre = hom_preimage(f, J);
                for (MNParams p : mn_grid(*cat)) {
                  const bool hyp = weakly_closed(J, g, p);
                  const Verdict v = hyp ? classify_mn(pre, p, d, true) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(pre, d, p, v.witness,
                                    "f: " + hom_text(f) + ", J = " + J.describe() + " under " +
                                        g->label());
                  }));
                }
              }
            } else {
              for (std::size_t i : dom.proper) {
                const Ideal& I = (*dom.lattice)[i];
                if (!std::all_of(kernel.begin(), kernel.end(),
                                 [&](Index k) { return I.contains(k); })) {
                  continue;
                }
                const Ideal img = hom_image(f, I).ideal;
                for (MNParams p : mn_grid(*cat)) {
                  const bool hyp = weakly_closed(I, d, p);
                  const Verdict v = hyp ? classify_mn(img, p, g, true) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(img, g, p, v.witness,
                                    "f: " + hom_text(f) + ", I = " + I.describe() + " under " +
                                        d->label());
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

// ---------------------------------------------------------------------------
// quotients

Builder quotient(int part) {
  return [part](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      for (std::size_t ii : e.proper) {
        tasks.push_back([part, cat = &ctx.catalog(), entry = &e, ii] {
          Outcomes out;
          const IdealLattice& lat = *entry->lattice;
          const Ideal& I = lat[ii];
          const QuotientResult q = quotient_ring(entry->ring, I);
          const LatticePtr qlat = enumerate_ideals(q.ring);
          for (const ExpansionFn* d : entry->total_deltas()) {
            const ExpansionFn dq = delta_quotient(*d, qlat);
            for (std::size_t jj : entry->proper) {
              const Ideal& J = lat[jj];
              if (!I.subset_of(J)) continue;
              const Ideal JI = hom_image(q.projection, J).ideal;
              for (MNParams p : mn_grid(*cat)) {
                if (part == 1) {
                  const bool hyp = weakly_closed(J, d, p);
                  const Verdict v = hyp ? classify_mn(JI, p, &dq, true) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(JI, &dq, p, v.witness, "J = " + J.describe() + " weakly closed");
                  }));
                } else {
                  const bool base = part == 2 ? closed(I, d, p) : weakly_closed(I, d, p);
                  const bool hyp = base && weakly_closed(JI, &dq, p);
                  const Verdict v = hyp ? classify_mn(J, p, d, part == 3) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(J, d, p, v.witness,
                                    "I = " + I.describe() + ", J/I weakly δ_q-closed");
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

// ---------------------------------------------------------------------------
// localization

std::vector<MultSet> mult_sets(const RingEntry& e) {
  std::vector<MultSet> out;
  std::set<std::vector<Index>> seen;
  auto add = [&](MultSet s) {
    if (seen.insert(s.members()).second) out.push_back(std::move(s));
  };
  const FiniteRing& r = e.ring;
  add(MultSet::generated_by(r, {}));
  add(MultSet::units(r));
  for (const Ideal& p : e.lattice->prime_ideals()) add(MultSet::complement_of(p));
  for (Index a = 0; a < r.size(); ++a) {
    if (r.is_nilpotent(a)) continue;
    const Index gen[] = {a};
    add(MultSet::generated_by(r, gen));
  }
  return out;
}

bool disjoint(const Ideal& i, const MultSet& s) {
  return std::none_of(i.members().begin(), i.members().end(),
                      [&](Index x) { return s.contains(x); });
}

Builder localization() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      if (e.ring.size() < 2) continue;
      for (MultSet& s : mult_sets(e)) {
        tasks.push_back([cat = &ctx.catalog(), entry = &e, s] {
          Outcomes out;
          const LocalizeResult loc = localize(entry->ring, s);
          const RingEntry local = make_entry(loc.ring, false);
          const IdealLattice& lat = *entry->lattice;
          for (std::size_t ii : entry->proper) {
            const Ideal& I = lat[ii];
            if (!disjoint(I, s)) continue;
            const Ideal is = hom_image(loc.canonical, I).ideal;
            for (const auto& d : entry->deltas) {
              if (!d.defined_at_index(ii)) continue;
              const Ideal dis = hom_image(loc.canonical, d.eval(I)).ideal;
              const auto gens = dis.generators();
              std::vector<ExpansionFn> candidates = local.deltas;
              candidates.push_back(addk_delta(local.lattice, gens));
              for (const auto& ds : candidates) {
                if (!(ds.eval(is) == dis)) {
                  out.push_back(skipped());
                  continue;
                }
                for (MNParams p : mn_grid(*cat)) {
                  const bool hyp = weakly_closed(I, &d, p);
                  const Verdict v = hyp ? classify_mn(is, p, &ds, true) : Verdict{};
                  out.push_back(implication(hyp, v.holds, [&] {
                    return make_cex(is, &ds, p, v.witness,
                                    "I = " + I.describe() + " weakly " + d.label() +
                                        "-closed in " + entry->ring.expr());
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

Builder localization_corollary() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      if (e.ring.size() < 2) continue;
      tasks.push_back([cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const IdealLattice& lat = *entry->lattice;
        const Ideal nil = nilradical(entry->ring);
        std::vector<LocalizeResult> locals;
        std::vector<LatticePtr> local_lattices;
        for (const Ideal& p : lat.prime_ideals()) {
          locals.push_back(localize(entry->ring, MultSet::complement_of(p)));
          local_lattices.push_back(enumerate_ideals(locals.back().ring));
        }
        for (std::size_t ii : entry->proper) {
          const Ideal& I = lat[ii];
          if (!I.subset_of(nil)) continue;
          for (const auto& d : entry->deltas) {
            if (!d.defined_at_index(ii)) continue;
            const Ideal di = d.eval(I);
            std::vector<Ideal> ips;
            std::vector<ExpansionFn> dps;
            for (std::size_t k = 0; k < locals.size(); ++k) {
              ips.push_back(hom_image(locals[k].canonical, I).ideal);
              const auto gens = hom_image(locals[k].canonical, di).ideal.generators();
              dps.push_back(addk_delta(local_lattices[k], gens));
            }
            for (MNParams p : mn_grid(*cat)) {
              const Verdict global = classify_mn(I, p, &d, true);
              bool every = true;
              std::size_t bad = 0;
              for (std::size_t k = 0; k < locals.size() && every; ++k) {
                every = weakly_closed(ips[k], &dps[k], p);
                bad = k;
              }
              out.push_back(equivalence(global.holds, every, [&] {
                std::string where = every ? "" : "; fails at " + locals[bad].ring.expr();
                return make_cex(I, &d, p, global.witness,
                                sides("weakly closed", global.holds, "weakly closed at every prime",
                                      every) +
                                    where);
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

// ---------------------------------------------------------------------------
// direct products

struct ProductSetup {
  RingEntry left;
  RingEntry right;
  std::vector<ExpansionFn> deltas;
  std::vector<std::pair<const ExpansionFn*, const ExpansionFn*>> factors;
};

ProductSetup product_setup(const RingEntry& e) {
  ProductSetup s{make_entry(e.ring.product_info().left, false),
                 make_entry(e.ring.product_info().right, false), {}, {}};
  for (const ExpansionFn* d1 : s.left.total_deltas()) {
    for (const ExpansionFn* d2 : s.right.total_deltas()) {
      s.deltas.push_back(delta_product(*d1, *d2, e.lattice));
      s.factors.emplace_back(d1, d2);
    }
  }
  return s;
}

std::pair<Ideal, Ideal> split_product_ideal(const FiniteRing& ring, const Ideal& ideal) {
  const auto& info = ring.product_info();
  std::vector<Index> l;
  std::vector<Index> r;
  for (Index x : ideal.members()) {
    l.push_back(info.left_of(x));
    r.push_back(info.right_of(x));
  }
  return {ideal_closure(info.left, l), ideal_closure(info.right, r)};
}

Builder product(int part) {
  return [part](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      if (!e.ring.is_product()) continue;
      tasks.push_back([part, cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const ProductSetup s = product_setup(*entry);
        const auto& info = entry->ring.product_info();
        for (std::size_t k = 0; k < s.deltas.size(); ++k) {
          const ExpansionFn& dx = s.deltas[k];
          const ExpansionFn& d1 = *s.factors[k].first;
          const ExpansionFn& d2 = *s.factors[k].second;
          if (part == 1) {
            for (std::size_t i1 : s.left.proper) {
              const Ideal& I1 = (*s.left.lattice)[i1];
              std::vector<Index> members;
              for (Index a : I1.members()) {
                for (Index b = 0; b < info.right.size(); ++b) members.push_back(info.pair(a, b));
              }
              std::sort(members.begin(), members.end());
              const Ideal I = Ideal::from_members(entry->ring, std::move(members));
              for (MNParams p : mn_grid(*cat)) {
                const Verdict w = classify_mn(I, p, &dx, true);
                const bool c1 = closed(I1, &d1, p);
                const Verdict c = classify_mn(I, p, &dx, false);
                if (!w.holds && !c1 && !c.holds) {
                  out.push_back(vacuous());
                } else if (w.holds == c1 && c1 == c.holds) {
                  out.push_back(pass());
                } else {
                  out.push_back(fail(make_cex(
                      I, &dx, p, !w.holds ? w.witness : c.witness,
                      "weakly=" + std::string(w.holds ? "true" : "false") +
                          ", I1 closed=" + (c1 ? "true" : "false") +
                          ", closed=" + (c.holds ? "true" : "false"))));
                }
              }
            }
          } else {
            for (std::size_t ii : entry->proper) {
              const Ideal& I = (*entry->lattice)[ii];
              const auto [j1, j2] = split_product_ideal(entry->ring, I);
              for (MNParams p : mn_grid(*cat)) {
                const bool lhs = weakly_not_closed(I, &dx, p);
                const bool rhs = j1.proper() && j2.proper() &&
                                 (product_branch(j1, d1, j2, d2, p) ||
                                  product_branch(j2, d2, j1, d1, p));
                out.push_back(equivalence(lhs, rhs, [&] {
                  return make_cex(I, &dx, p, {},
                                  sides("weakly not closed", lhs, "factor condition", rhs));
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

// ---------------------------------------------------------------------------
// trivial extensions

Builder idealization() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      if (!e.ring.is_trivial_extension()) continue;
      tasks.push_back([cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const auto& info = entry->ring.trivial_extension_info();
        const RingEntry base = make_entry(info.base, false);
        const RModule module(info.base, info.shape);
        const FiniteRing& r = info.base;
        for (const ExpansionFn* d : base.total_deltas()) {
          const ExpansionFn plus = delta_idealization(*d, entry->lattice);
          for (std::size_t ii : base.proper) {
            const Ideal& I = (*base.lattice)[ii];
            const Ideal IM = idealization_ideal(entry->ring, I);
            for (MNParams p : mn_grid(*cat)) {
              const bool lhs = weakly_not_closed(IM, &plus, p);
              bool annihilated = true;
              std::vector<Index> bad;
              for (Index x : unbreakable_zero_set(I, *d, p)) {
                const Index xm1 = r.pow(x, p.m - 1);
                for (Index u = 0; u < module.size() && annihilated; ++u) {
                  if (module.scale(p.m, module.act(xm1, u)) != 0) {
                    annihilated = false;
                    bad = {info.pair(x, u)};
                  }
                }
                if (!annihilated) break;
              }
              const bool rhs = weakly_not_closed(I, d, p) && annihilated;
              out.push_back(equivalence(lhs, rhs, [&] {
                return make_cex(IM, &plus, p, bad,
                                sides("I(+)M weakly not closed", lhs,
                                      "I weakly not closed and m(x^{m-1}M)=0", rhs));
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

}  // namespace

void register_structural(std::vector<Registered>& out) {
  out.push_back({{"T-HOM1", "\"then f^{-1}(J) is a weakly\"",
                  "f injective δγ-homomorphism, J weakly (m,n)-closed γ-primary ⇒ f⁻¹(J) weakly "
                  "(m,n)-closed δ-primary"},
                 homomorphism(true)});
  out.push_back({{"T-HOM2", "\"then f(I) is a weakly (m,n)-closed γ-primary ideal\"",
                  "f surjective δγ-homomorphism, I ⊇ Ker f weakly (m,n)-closed δ-primary ⇒ f(I) "
                  "weakly (m,n)-closed γ-primary"},
                 homomorphism(false)});
  out.push_back({{"T-QUOT1", "\"J/I is a weakly (m,n)-closed δ_q-primary\"",
                  "J weakly (m,n)-closed δ-primary ⇒ J/I weakly (m,n)-closed δ_q-primary"},
                 quotient(1)});
  out.push_back({{"T-QUOT2", "\"If I is an (m,n)-closed δ-primary ideal of R and J/I\"",
                  "I (m,n)-closed δ-primary and J/I weakly δ_q-closed ⇒ J (m,n)-closed "
                  "δ-primary"},
                 quotient(2)});
  out.push_back({{"T-QUOT3", "\"If I is a weakly (m,n)-closed δ-primary ideal of R and J/I\"",
                  "I and J/I weakly closed ⇒ J weakly (m,n)-closed δ-primary"},
                 quotient(3)});
  out.push_back({{"T-LOC", "\"I_S is a weakly (m,n)-closed δ_S-primary\"",
                  "I ∩ S = ∅, δ_S(I_S) = (δ(I))_S, I weakly closed ⇒ I_S weakly (m,n)-closed "
                  "δ_S-primary"},
                 localization()});
  out.push_back({{"T-LOC-COR", "\"for every prime (or maximal) ideal P of R\"",
                  "I ⊆ every prime: I weakly closed ⇔ I_P weakly closed for every prime P"},
                 localization_corollary()});
  out.push_back({{"T-PROD1", "\"I_1 is an (m,n)-closed δ_1-primary ideal of R_1\"",
                  "I1×R2 weakly closed ⇔ I1 closed ⇔ I1×R2 closed"},
                 product(1)});
  out.push_back({{"T-PROD2", "\"I=J_1×J_2 for some proper ideals\"",
                  "weakly but not closed in R1×R2 ⇔ J1×J2 with both proper and (a) or (b)"},
                 product(2)});
  out.push_back({{"T-IDEAL", "\"m(x^{m-1}M)=0\"",
                  "I(+)M weakly not closed ⇔ I weakly not closed and m(x^{m-1}M)=0 for every "
                  "unbreakable-zero x"},
                 idealization()});
}

}  // namespace ringlab::detail
