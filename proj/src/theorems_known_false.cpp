// Claims expected to produce counterexamples.

#include "theorem_support.hpp"

namespace ringlab::detail {

namespace {

Builder weakly_implies_closed() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    for (const auto& e : ctx.entries()) {
      tasks.push_back([cat = &ctx.catalog(), entry = &e] {
        Outcomes out;
        for (std::size_t i : entry->proper) {
          const Ideal& I = (*entry->lattice)[i];
          for (const auto& d : entry->deltas) {
            if (!d.defined_at_index(i)) continue;
            for (MNParams p : mn_grid(*cat)) {
              const bool hyp = weakly_closed(I, &d, p);
              const Verdict c = hyp ? classify_mn(I, p, &d, false) : Verdict{};
              out.push_back(implication(hyp, c.holds, [&] {
                return make_cex(I, &d, p, c.witness, "weakly closed but not closed");
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

/// Least a with a^m ∈ I and a^n ∉ I: the element the prose argument uses.
std::optional<Index> prose_witness(const Ideal& I, MNParams p) {
  const FiniteRing& r = I.ring();
  for (Index a = 0; a < r.size(); ++a) {
    if (I.contains(r.pow(a, p.m)) && !I.contains(r.pow(a, p.n))) return a;
  }
  return std::nullopt;
}

std::string power_text(const FiniteRing& r, Index a, int n) {
  return n == 1 ? r.label(a) : r.label(a) + "^" + std::to_string(n);
}

std::string delta_text(const ExpansionFn& d, const Ideal& I) {
  if (d.label() == "rad") return "√(" + std::string(I.is_zero() ? "0" : I.describe()) + ")";
  return d.label() + "(" + (I.is_zero() ? std::string("0") : I.describe()) + ")";
}

/// (0) in Z_{2^{k+1}} is claimed not (k+1,k)-closed for δ ∈ {id, rad}, plus
/// the headline instance Z_8 at (3,1).
Builder zero_ideal_not_closed() {
  return [](const CatalogContext& ctx) {
    std::vector<Task> tasks;
    std::vector<std::pair<std::size_t, MNParams>> cases{{8, MNParams{3, 1}}};
    for (int k = 1; k + 1 <= ctx.catalog().max_m; ++k) {
      cases.push_back({std::size_t{1} << (k + 1), MNParams{k + 1, k}});
    }
    for (auto [size, p] : cases) {
      tasks.push_back([size, p] {
        Outcomes out;
        const RingEntry e = make_entry(zmod(size), false);
        const Ideal I = zero_ideal(e.ring);
        for (const ExpansionFn* d : {&e.deltas[0], &e.deltas[1]}) {
          const bool claim_holds = !closed(I, d, p);
          if (claim_holds) {
            out.push_back(pass());
            continue;
          }
          const auto a = prose_witness(I, p);
          std::vector<Index> w;
          std::string detail = "(0) is " + mn_entry_name(p, false, d->label()) + ": no witness";
          if (a) {
            w = {*a};
            detail = power_text(e.ring, *a, p.n) + " ∈ " + delta_text(*d, I) + " in " +
                     e.ring.expr();
          }
          out.push_back(fail(make_cex(I, d, p, w, detail)));
        }
        return out;
      });
    }
    return tasks;
  };
}

/// 0⋈^f (0(+)M) in Z_8⋈^f (Z_8(+)Z_8) claimed not weakly (3,1)-closed.
Builder amalgam_remark() {
  return [](const CatalogContext&) {
    std::vector<Task> tasks;
    tasks.push_back([] {
      Outcomes out;
      const FiniteRing a = zmod(8);
      const FiniteRing t = trivial_extension(a, RModule(a, {8}));
      const Ideal j = idealization_ideal(t, zero_ideal(a));
      const AmalgamCase c =
          make_amalgam_case(amalgamate(a, t, trivial_extension_injection(a, t), j).carrier());
      const FiniteRing& carrier = c.amalgam.carrier();
      const Ideal I0 = zero_ideal(a);
      const Ideal IJ = amalgam_ideal_ij(c.amalgam, I0);
      const MNParams p{3, 1};
      for (std::size_t k = 0; k < 2; ++k) {
        const ExpansionFn& d = c.a.deltas[k];
        const ExpansionFn bow = delta_amalgam(d, c.sub_deltas[k], c.lattice);
        const Verdict w = classify_mn(IJ, p, &bow, true);
        if (!w.holds) {
          out.push_back(pass());
          continue;
        }
        std::vector<Index> wit;
        for (Index x = 0; x < carrier.size(); ++x) {
          const Index x3 = carrier.pow(x, 3);
          if (x3 != carrier.zero() && IJ.contains(x3)) {
            wit = {x};
            break;
          }
        }
        std::string detail = "0⋈J is weakly (3,1)-closed under " + bow.label();
        if (!wit.empty()) {
          const Index av = c.amalgam.a_of(wit[0]);
          detail = a.label(av) + " ∈ " + delta_text(d, I0) + " in " + a.expr() + "; " +
                   carrier.label(wit[0]) + "^3 ≠ 0 lies in 0⋈J";
        }
        out.push_back(fail(make_cex(IJ, &bow, p, wit, detail)));
      }
      return out;
    });
    return tasks;
  };
}

/// {0,4} in Z_8 claimed not weakly (2,1)-closed for any δ.
Builder z8_four_not_weakly() {
  return [](const CatalogContext&) {
    std::vector<Task> tasks;
    tasks.push_back([] {
      Outcomes out;
      const RingEntry e = make_entry(zmod(8));
      const Index gen[] = {4};
      const Ideal I = ideal_closure(e.ring, gen);
      const MNParams p{2, 1};
      for (const auto& d : e.deltas) {
        if (!weakly_closed(I, &d, p)) {
          out.push_back(pass());
          continue;
        }
        out.push_back(fail(make_cex(I, &d, p, {2},
                                    "2 ∈ " + delta_text(d, I) + " although 0 ≠ 2^2 = 4 ∈ I")));
      }
      return out;
    });
    return tasks;
  };
}

}  // namespace

void register_known_false(std::vector<Registered>& out) {
  out.push_back({{"F-W2C", "\"The converse need not hold\"",
                  "every weakly (m,n)-closed δ-primary ideal is (m,n)-closed δ-primary", true},
                 weakly_implies_closed()});
  out.push_back({{"F-EX35", "\"is not (3,1)-closed δ_√I-primary ideal\"",
                  "(0) in Z_{2^{k+1}} is not (k+1,k)-closed δ-primary for δ = id and δ = rad",
                  true},
                 zero_ideal_not_closed()});
  out.push_back({{"F-RMK45", "\"Since 3(2^2)(0(+)M)≠0\"",
                  "0⋈^f (0(+)M) in Z_8⋈^f (Z_8(+)Z_8) is not weakly (3,1)-closed δ_⋈-primary, "
                  "for δ = id and δ = rad",
                  true},
                 amalgam_remark()});
  out.push_back({{"F-EX36", "\"0≠2^2=4∈I and 2∉I\"",
                  "{0,4} in Z_8 is not weakly (2,1)-closed δ-primary for any δ", true},
                 z8_four_not_weakly()});
  out.push_back({{"F-JRAD", "\"the ideal I=a^{n+1}R\"",
                  "a ∈ J(R): a^{n+1}R weakly semi-n-absorbing δ-primary ⇔ a^{n+1} = 0, for every δ",
                  true},
                 jacobson_builder(false)});
}

}  // namespace ringlab::detail
