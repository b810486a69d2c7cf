// Statements about A⋈^f J and its ideals I⋈^f J and K̄^f.

#include <algorithm>

#include "theorem_support.hpp"

namespace ringlab::detail {

namespace {

bool power_is_zero(const Ideal& j, int m) {
  Ideal acc = j;
  for (int k = 2; k <= m; ++k) acc = ideal_product(acc, j);
  return acc.is_zero();
}

bool is_duplication(const Amalgam& am) {
  return am.A() == am.B() && am.carrier().amalgamation_info().hom_expr == "id";
}

/// First unbreakable a of I with (f(a)+j)^m ≠ 0 for some j in J, as (a, j).
std::vector<Index> shifted_power_violation(const AmalgamCase& c, const Ideal& I,
                                           const ExpansionFn& d, MNParams p) {
  const FiniteRing& b = c.amalgam.B();
  const RingHom f = c.amalgam.f();
  const Ideal J = c.amalgam.J();
  for (Index a : unbreakable_zero_set(I, d, p)) {
    for (Index j : J.members()) {
      if (b.pow(b.add(f(a), j), p.m) != b.zero()) return {a, j};
    }
  }
  return {};
}

Outcomes amalgam_checks(int part, const Catalog& cat, const FiniteRing& carrier) {
  Outcomes out;
  const AmalgamCase c = make_amalgam_case(carrier);
  const Amalgam& am = c.amalgam;
  if (part == 4 && !is_duplication(am)) return out;
  const IdealLattice& alat = *c.a.lattice;
  const std::size_t sub_char = characteristic(c.sub.ring);
  for (const ExpansionFn* d : c.a.total_deltas()) {
    for (const ExpansionFn& d1 : c.sub_deltas) {
      std::optional<ExpansionFn> bow;
      try {
        bow = delta_amalgam(*d, d1, c.lattice);
      } catch (const Error&) {
        out.push_back(skipped());
        continue;
      }
      if (part <= 4) {
        for (std::size_t ii : c.a.proper) {
          const Ideal& I = alat[ii];
          const Ideal IJ = amalgam_ideal_ij(am, I);
          if (!bow->defined_at(IJ)) {
            out.push_back(skipped());
            continue;
          }
          for (MNParams p : mn_grid(cat)) {
            if (part == 1) {
              const Verdict a = classify_mn(I, p, d, false);
              const Verdict b = classify_mn(IJ, p, &*bow, false);
              out.push_back(equivalence(a.holds, b.holds, [&] {
                return make_cex(IJ, &*bow, p, b.witness,
                                sides("I closed", a.holds, "I⋈J closed", b.holds));
              }));
              continue;
            }
            if (part == 3 && !(sub_char == static_cast<std::size_t>(p.m) &&
                               power_is_zero(am.J(), p.m))) {
              out.push_back(vacuous());
              continue;
            }
            const bool lhs = weakly_not_closed(IJ, &*bow, p);
            const bool base = weakly_not_closed(I, d, p);
            std::vector<Index> bad;
            if (part != 3 && base) bad = shifted_power_violation(c, I, *d, p);
            const bool rhs = base && bad.empty();
            out.push_back(equivalence(lhs, rhs, [&] {
              std::string text = sides("I⋈J weakly not closed", lhs, "condition on I", rhs);
              if (!bad.empty()) {
                text += "; (f(a)+j)^m ≠ 0 for a=" + am.A().label(bad[0]) +
                        ", j=" + am.B().label(bad[1]);
              }
              return make_cex(IJ, &*bow, p, {}, text);
            }));
          }
        }
      } else {
        const IdealLattice& slat = *c.sub_lattice;
        for (std::size_t kk = 0; kk < slat.size(); ++kk) {
          const Ideal& K = slat[kk];
          if (!K.proper()) continue;
          const Ideal Kb = amalgam_ideal_kbar(am, K);
          if (!bow->defined_at(Kb)) {
            out.push_back(skipped());
            continue;
          }
          for (MNParams p : mn_grid(cat)) {
            if (part == 6) {
              const Verdict a = classify_mn(K, p, &d1, false);
              const Verdict b = classify_mn(Kb, p, &*bow, false);
              out.push_back(equivalence(a.holds, b.holds, [&] {
                return make_cex(Kb, &*bow, p, b.witness,
                                sides("K closed", a.holds, "K̄ closed", b.holds));
              }));
              continue;
            }
            const bool lhs = weakly_not_closed(Kb, &*bow, p);
            const bool base = weakly_not_closed(K, &d1, p);
            std::vector<Index> bad;
            if (base) {
              const FiniteRing& A = am.A();
              for (Index s : unbreakable_zero_set(K, d1, p)) {
                const Index b = c.sub.embedding(s);
                for (Index a = 0; a < A.size() && bad.empty(); ++a) {
                  if (am.element(a, b) && A.pow(a, p.m) != A.zero()) bad = {*am.element(a, b)};
                }
                if (!bad.empty()) break;
              }
            }
            const bool rhs = base && bad.empty();
            out.push_back(equivalence(lhs, rhs, [&] {
              return make_cex(Kb, &*bow, p, bad,
                              sides("K̄ weakly not closed", lhs, "K weakly not closed, a^m=0", rhs));
            }));
          }
        }
      }
    }
  }
  return out;
}

Builder amalgam(int part) {
  return [part](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const FiniteRing& carrier : amalgam_sources(ctx)) {
      tasks.push_back([part, cat = &ctx.catalog(), carrier] {
        return amalgam_checks(part, *cat, carrier);
      });
    }
    return tasks;
  };
}

/// R(+)M against R⋈^f (0(+)M) along a ↦ (a,0).
Builder idealization_via_amalgam() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      if (!e.ring.is_trivial_extension()) continue;
      tasks.push_back([cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        const FiniteRing& t = entry->ring;
        const FiniteRing& base = t.trivial_extension_info().base;
        const Ideal j = idealization_ideal(t, zero_ideal(base));
        const AmalgamCase c = make_amalgam_case(
            amalgamate(base, t, trivial_extension_injection(base, t), j).carrier());
        const auto iso = find_isomorphism(t, c.amalgam.carrier());
        if (!iso) {
          Counterexample cex;
          cex.ring = t.expr();
          cex.ideal = "{}";
          cex.delta = "none";
          cex.detail = "no isomorphism onto " + c.amalgam.carrier().expr();
          cex.ring_size = t.size();
          out.push_back(fail(std::move(cex)));
          return out;
        }
        out.push_back(pass());
        std::vector<Index> sub_to_t(c.sub.ring.size());
        for (Index s = 0; s < sub_to_t.size(); ++s) sub_to_t[s] = c.sub.embedding(s);
        for (const ExpansionFn* d : c.a.total_deltas()) {
          const ExpansionFn plus = delta_idealization(*d, entry->lattice);
          const ExpansionFn d1 = transport_delta(plus, c.sub_lattice, sub_to_t);
          const ExpansionFn bow = delta_amalgam(*d, d1, c.lattice);
          for (std::size_t ii : c.a.proper) {
            const Ideal& I = (*c.a.lattice)[ii];
            const Ideal IM = idealization_ideal(t, I);
            const Ideal IJ = amalgam_ideal_ij(c.amalgam, I);
            if (!bow.defined_at(IJ)) {
              out.push_back(skipped());
              continue;
            }
            for (MNParams p : mn_grid(*cat)) {
              const bool w1 = weakly_closed(IM, &plus, p);
              const bool c1 = closed(IM, &plus, p);
              const bool w2 = weakly_closed(IJ, &bow, p);
              const bool c2 = closed(IJ, &bow, p);
              if (!w1 && !w2) {
                out.push_back(vacuous());
              } else if (w1 == w2 && c1 == c2) {
                out.push_back(pass());
              } else {
                out.push_back(fail(make_cex(
                    IM, &plus, p, {},
                    sides("I(+)M weakly", w1, "I⋈J weakly", w2) + "; " +
                        sides("I(+)M closed", c1, "I⋈J closed", c2))));
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

}  // namespace

void register_amalgam(std::vector<Registered>& out) {
  out.push_back({{"T-AM1", "\"I⋈^f J is an (m,n)-closed δ_⋈f-primary\"",
                  "I (m,n)-closed δ-primary ⇔ I⋈^f J (m,n)-closed δ_⋈-primary"},
                 amalgam(1)});
  out.push_back({{"T-AM2", "\"(f(a)+j)^m=0 for every j∈J\"",
                  "I⋈^f J weakly not closed ⇔ I weakly not closed and (f(a)+j)^m = 0 for every "
                  "unbreakable-zero a and j in J"},
                 amalgam(2)});
  out.push_back({{"T-AM3", "\"char(f(A)+J)=m and J^m=0\"",
                  "char(f(A)+J)=m and J^m=0 ⇒ (I⋈^f J weakly not closed ⇔ I weakly not closed)"},
                 amalgam(3)});
  out.push_back({{"T-AM4", "\"(a+i)^m=0 for every\"",
                  "K⋈I weakly not closed in A⋈I ⇔ K weakly not closed and (a+i)^m = 0 for every "
                  "unbreakable-zero a and i in I"},
                 amalgam(4)});
  out.push_back({{"T-AM5", "\"naturally isomorphic to A⋈^f J\"",
                  "R(+)M ≅ R⋈^f (0(+)M) and I(+)M, I⋈^f J classify alike"},
                 idealization_via_amalgam()});
  out.push_back({{"T-AM6", "\"K is (m,n)-closed δ_1-primary ideal of f(A)+J\"",
                  "K̄^f (m,n)-closed δ_⋈-primary ⇔ K (m,n)-closed δ_1-primary"},
                 amalgam(6)});
  out.push_back({{"T-AM7", "\"we have a^m=0\"",
                  "K̄^f weakly not closed ⇔ K weakly not closed and a^m = 0 for every "
                  "unbreakable-zero f(a)+j"},
                 amalgam(7)});
}

}  // namespace ringlab::detail
