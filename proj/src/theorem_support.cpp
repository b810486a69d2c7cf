#include "theorem_support.hpp"

#include <algorithm>
#include <set>

namespace ringlab::detail {

std::vector<MNParams> mn_grid(const Catalog& catalog) {
  std::vector<MNParams> out;
  for (int m = 2; m <= catalog.max_m; ++m) {
    for (int n = 1; n < m; ++n) out.push_back(MNParams{m, n});
  }
  return out;
}

bool is_prime_number(std::size_t x) {
  if (x < 2) return false;
  for (std::size_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

bool product_branch(const Ideal& x, const ExpansionFn& dx, const Ideal& y, const ExpansionFn& dy,
                    MNParams p) {
  if (!weakly_not_closed(x, &dx, p)) return false;
  const FiniteRing& ry = y.ring();
  for (Index b = 0; b < ry.size(); ++b) {
    const Index bm = ry.pow(b, p.m);
    if (bm != ry.zero() && y.contains(bm)) return false;
  }
  const FiniteRing& rx = x.ring();
  for (Index a = 0; a < rx.size(); ++a) {
    const Index am = rx.pow(a, p.m);
    if (am != rx.zero() && x.contains(am)) return closed(y, &dy, p);
  }
  return true;
}

Outcome pass() { return Outcome{Outcome::Kind::pass, std::nullopt}; }
Outcome vacuous() { return Outcome{Outcome::Kind::vacuous, std::nullopt}; }
Outcome skipped() { return Outcome{Outcome::Kind::skipped, std::nullopt}; }
Outcome fail(Counterexample c) { return Outcome{Outcome::Kind::fail, std::move(c)}; }

Counterexample make_cex(const Ideal& ideal, const ExpansionFn* delta, MNParams p,
                        std::vector<Index> witness, std::string detail) {
  Counterexample c;
  const FiniteRing& r = ideal.ring();
  c.ring = r.expr();
  c.ideal = ideal.gens_string();
  c.delta = delta != nullptr ? delta->label() : "none";
  c.m = p.m;
  c.n = p.n;
  for (Index w : witness) c.witness_labels.push_back(r.label(w));
  c.witness = std::move(witness);
  c.detail = std::move(detail);
  c.ring_size = r.size();
  return c;
}

Outcome implication(bool hyp, bool concl, const CexFn& cex) {
  if (!hyp) return vacuous();
  if (concl) return pass();
  return fail(cex());
}

Outcome equivalence(bool lhs, bool rhs, const CexFn& cex) {
  if (!lhs && !rhs) return vacuous();
  if (lhs == rhs) return pass();
  return fail(cex());
}

std::string sides(const std::string& lhs_name, bool lhs, const std::string& rhs_name, bool rhs) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return lhs_name + "=" + b(lhs) + ", " + rhs_name + "=" + b(rhs);
}

Ideal idealization_ideal(const FiniteRing& extension, const Ideal& base_ideal) {
  const auto& info = extension.trivial_extension_info();
  std::vector<Index> members;
  for (Index r : base_ideal.members()) {
    for (Index m = 0; m < info.module_size; ++m) members.push_back(info.pair(r, m));
  }
  std::sort(members.begin(), members.end());
  return Ideal::from_members(extension, std::move(members));
}

ExpansionFn transport_delta(const ExpansionFn& source, LatticePtr target,
                            const std::vector<Index>& iso) {
  const IdealLattice& src = *source.lattice();
  std::vector<Index> inverse(iso.size());
  for (Index s = 0; s < iso.size(); ++s) inverse[iso[s]] = s;
  auto move = [](std::span<const Index> members, const std::vector<Index>& map) {
    std::vector<Index> out;
    for (Index x : members) out.push_back(map[x]);
    std::sort(out.begin(), out.end());
    return out;
  };
  ExpansionFn::Table table(target->size());
  for (std::size_t k = 0; k < target->size(); ++k) {
    const std::size_t si = src.index_of_members(move((*target)[k].members(), inverse));
    if (!source.defined_at_index(si)) continue;
    table[k] = target->index_of_members(move(src[source.eval_index(si)].members(), iso));
  }
  return ExpansionFn(std::move(target), std::move(table), source.label());
}

std::vector<FiniteRing> amalgam_sources(const CatalogContext& context) {
  std::vector<FiniteRing> out;
  std::set<std::string> seen;
  auto add = [&](const FiniteRing& r) {
    if (seen.insert(r.expr()).second) out.push_back(r);
  };
  for (const auto& e : context.entries()) {
    if (e.ring.is_amalgamation()) add(e.ring);
  }
  for (const auto& e : context.entries()) {
    if (!e.ring.is_trivial_extension()) continue;
    const FiniteRing& base = e.ring.trivial_extension_info().base;
    const Ideal j = idealization_ideal(e.ring, zero_ideal(base));
    add(amalgamate(base, e.ring, trivial_extension_injection(base, e.ring), j).carrier());
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const FiniteRing zn = zmod(n);
    for (const Ideal& i : enumerate_ideals(zn)->proper_ideals()) {
      if (!i.is_zero()) add(duplicate(zn, i).carrier());
    }
    for (std::size_t m = 2; m < n; ++m) {
      if (n % m != 0) continue;
      const FiniteRing zm = zmod(m);
      for (const Ideal& j : enumerate_ideals(zm)->proper_ideals()) {
        if (!j.is_zero()) add(amalgamate(zn, zm, canonical_zmod_hom(zn, zm), j).carrier());
      }
    }
  }
  return out;
}

AmalgamCase make_amalgam_case(const FiniteRing& carrier) {
  Amalgam am(carrier);
  LatticePtr lattice = enumerate_ideals(carrier);
  RingEntry a = make_entry(am.A(), false);
  SubringResult sub = subring_fA_plus_J(am);
  LatticePtr sub_lattice = enumerate_ideals(sub.ring);
  std::vector<ExpansionFn> sub_deltas{identity_delta(sub_lattice), radical_delta(sub_lattice)};
  std::vector<Index> to_sub(am.B().size(), static_cast<Index>(sub.ring.size()));
  for (Index s = 0; s < sub.ring.size(); ++s) to_sub[sub.embedding(s)] = s;
  return AmalgamCase{std::move(am),       std::move(lattice),    std::move(a),
                     std::move(sub),      std::move(sub_lattice), std::move(sub_deltas),
                     std::move(to_sub)};
}

}  // namespace ringlab::detail
