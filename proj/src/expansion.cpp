#include "ringlab/expansion.hpp"

#include <algorithm>
#include <random>

#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kSampledPairs = 4096;

AxiomCheck validate_table(const IdealLattice& lattice, const ExpansionFn::Table& table,
                          const std::string& label) {
  AxiomCheck check;
  const std::size_t n = lattice.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i]) continue;
    if (!lattice[i].subset_of(lattice[*table[i]])) {
      check.holds = false;
      check.violation = AxiomViolation{"extensive", i, std::nullopt};
      return check;
    }
  }
  auto monotone_at = [&](std::size_t i, std::size_t j) {
    if (!table[i] || !table[j]) return true;
    if (!lattice[i].subset_of(lattice[j])) return true;
    return lattice[*table[i]].subset_of(lattice[*table[j]]);
  };
  if (lattice.ring().size() <= kExhaustiveAxiomLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!monotone_at(i, j)) {
          check.holds = false;
          check.violation = AxiomViolation{"monotone", i, j};
          return check;
        }
      }
    }
    return check;
  }
  check.sampled = true;
  std::mt19937_64 rng(std::hash<std::string>{}(label));
  for (std::size_t s = 0; s < kSampledPairs && n > 0; ++s) {
    const std::size_t i = rng() % n;
    const std::size_t j = rng() % n;
    if (!monotone_at(i, j)) {
      check.holds = false;
      check.violation = AxiomViolation{"monotone", i, j};
      return check;
    }
  }
  return check;
}

std::string describe_violation(const IdealLattice& lattice, const AxiomViolation& v) {
  std::string text = v.axiom + " fails at I=" + lattice[v.first].describe();
  if (v.second) text += ", J=" + lattice[*v.second].describe();
  return text;
}

void require_same_ring(const ExpansionFn& a, const ExpansionFn& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorKind::ring_mismatch,
                "expansions on " + a.ring().expr() + " and " + b.ring().expr());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ExpansionFn

ExpansionFn::ExpansionFn(LatticePtr lattice, Table table, std::string label,
                         ErrorKind undefined_kind)
    : lattice_(std::move(lattice)),
      table_(std::move(table)),
      label_(std::move(label)),
      undefined_kind_(undefined_kind) {
  if (table_.size() != lattice_->size()) {
    throw Error(ErrorKind::bad_config, "expansion table does not cover the lattice");
  }
  AxiomCheck check = validate_table(*lattice_, table_, label_);
  if (!check) {
    throw Error(ErrorKind::axiom_violation,
                label_ + " on " + ring().expr() + ": " +
                    describe_violation(*lattice_, *check.violation));
  }
  sampled_ = check.sampled;
}

bool ExpansionFn::total() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& e) { return e.has_value(); });
}

bool ExpansionFn::defined_at(const Ideal& ideal) const {
  return table_[lattice_->index_of(ideal)].has_value();
}

std::size_t ExpansionFn::eval_index(std::size_t i) const {
  if (!table_[i]) {
    throw Error(undefined_kind_, label_ + " is not defined at " + (*lattice_)[i].describe() +
                                     " in " + ring().expr());
  }
  return *table_[i];
}

Ideal ExpansionFn::eval(const Ideal& ideal) const {
  return (*lattice_)[eval_index(lattice_->index_of(ideal))];
}

AxiomCheck check_expansion_axioms(const IdealLattice& lattice, const IdealMap& candidate) {
  ExpansionFn::Table table(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::optional<Ideal> image = candidate(lattice[i]);
    if (image) table[i] = lattice.index_of(*image);
  }
  return validate_table(lattice, table, "candidate");
}

// ---------------------------------------------------------------------------
// builtins

ExpansionFn identity_delta(LatticePtr lattice) {
  ExpansionFn::Table table(lattice->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return ExpansionFn(std::move(lattice), std::move(table), "id");
}

ExpansionFn radical_delta(LatticePtr lattice) {
  ExpansionFn::Table table(lattice->size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = lattice->index_of(radical((*lattice)[i]));
  }
  return ExpansionFn(std::move(lattice), std::move(table), "rad");
}

ExpansionFn addk_delta(LatticePtr lattice, std::span<const Index> gens) {
  const Ideal k = ideal_closure(lattice->ring(), gens);
  ExpansionFn::Table table(lattice->size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = lattice->index_of(ideal_sum((*lattice)[i], k));
  }
  return ExpansionFn(std::move(lattice), std::move(table), "addk(" + k.gens_string() + ")");
}

ExpansionFn builtin_delta(LatticePtr lattice, BuiltinKind kind, std::span<const Index> gens) {
  switch (kind) {
    case BuiltinKind::identity: return identity_delta(std::move(lattice));
    case BuiltinKind::radical: return radical_delta(std::move(lattice));
    case BuiltinKind::addk: return addk_delta(std::move(lattice), gens);
  }
  return identity_delta(std::move(lattice));
}

ExpansionFn delta_compose(const ExpansionFn& outer, const ExpansionFn& inner) {
  require_same_ring(outer, inner);
  ExpansionFn::Table table(inner.lattice()->size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!inner.defined_at_index(i)) continue;
    const std::size_t mid = inner.eval_index(i);
    if (outer.defined_at_index(mid)) table[i] = outer.eval_index(mid);
  }
  return ExpansionFn(inner.lattice(), std::move(table),
                     "comp(" + outer.label() + "," + inner.label() + ")");
}

AxiomCheck check_fip(const ExpansionFn& delta) {
  AxiomCheck check;
  const IdealLattice& lattice = *delta.lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!delta.defined_at_index(i)) continue;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      if (!delta.defined_at_index(j)) continue;
      const std::size_t meet = lattice.index_of(ideal_intersect(lattice[i], lattice[j]));
      if (!delta.defined_at_index(meet)) continue;
      const Ideal lhs = lattice[delta.eval_index(meet)];
      const Ideal rhs =
          ideal_intersect(lattice[delta.eval_index(i)], lattice[delta.eval_index(j)]);
      if (!(lhs == rhs)) {
        check.holds = false;
        check.violation = AxiomViolation{"finite-intersection", i, j};
        return check;
      }
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// derived expansions

ExpansionFn delta_quotient(const ExpansionFn& delta, LatticePtr quotient_lattice) {
  const FiniteRing& q = quotient_lattice->ring();
  const QuotientInfo& info = q.quotient_info();
  if (!(info.parent == delta.ring())) {
    throw Error(ErrorKind::shape_mismatch,
                q.expr() + " is not a quotient of " + delta.ring().expr());
  }
  const IdealLattice& parent = *delta.lattice();
  ExpansionFn::Table table(quotient_lattice->size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Ideal& target = (*quotient_lattice)[x];
    std::vector<Index> preimage;
    for (Index a = 0; a < info.projection.size(); ++a) {
      if (target.contains(info.projection[a])) preimage.push_back(a);
    }
    const std::size_t j = parent.index_of_members(preimage);
    if (!delta.defined_at_index(j)) continue;
    std::vector<Index> image;
    for (Index a : parent[delta.eval_index(j)].members()) image.push_back(info.projection[a]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    table[x] = quotient_lattice->index_of_members(image);
  }
  return ExpansionFn(std::move(quotient_lattice), std::move(table), "q(" + delta.label() + ")");
}

ExpansionFn delta_product(const ExpansionFn& left, const ExpansionFn& right,
                          LatticePtr product_lattice) {
  const FiniteRing& r = product_lattice->ring();
  const ProductInfo& info = r.product_info();
  if (!(info.left == left.ring()) || !(info.right == right.ring())) {
    throw Error(ErrorKind::shape_mismatch, "prod(" + left.label() + "," + right.label() +
                                               ") does not match the factors of " + r.expr());
  }
  ExpansionFn::Table table(product_lattice->size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Ideal& target = (*product_lattice)[x];
    std::vector<Index> l, rr;
    for (Index e : target.members()) {
      l.push_back(info.left_of(e));
      rr.push_back(info.right_of(e));
    }
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    std::sort(rr.begin(), rr.end());
    rr.erase(std::unique(rr.begin(), rr.end()), rr.end());
    if (l.size() * rr.size() != target.size()) continue;  // not a product ideal
    const std::size_t li = left.lattice()->index_of_members(l);
    const std::size_t ri = right.lattice()->index_of_members(rr);
    if (!left.defined_at_index(li) || !right.defined_at_index(ri)) continue;
    const Ideal& dl = (*left.lattice())[left.eval_index(li)];
    const Ideal& dr = (*right.lattice())[right.eval_index(ri)];
    std::vector<Index> members;
    for (Index a : dl.members()) {
      for (Index b : dr.members()) members.push_back(info.pair(a, b));
    }
    std::sort(members.begin(), members.end());
    table[x] = product_lattice->index_of_members(members);
  }
  return ExpansionFn(std::move(product_lattice), std::move(table),
                     "prod(" + left.label() + "," + right.label() + ")");
}

ExpansionFn delta_idealization(const ExpansionFn& delta, LatticePtr trivial_extension_lattice) {
  const FiniteRing& r = trivial_extension_lattice->ring();
  const TrivialExtensionInfo& info = r.trivial_extension_info();
  if (!(info.base == delta.ring())) {
    throw Error(ErrorKind::shape_mismatch,
                "plus(" + delta.label() + ") does not act on the base of " + r.expr());
  }
  const auto msize = static_cast<Index>(info.module_size);
  ExpansionFn::Table table(trivial_extension_lattice->size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Ideal& target = (*trivial_extension_lattice)[x];
    std::vector<Index> ring_part;
    std::vector<Index> submodule;
    for (Index e : target.members()) {
      ring_part.push_back(info.ring_part(e));
      if (info.ring_part(e) == info.base.zero()) submodule.push_back(info.module_part(e));
    }
    std::sort(ring_part.begin(), ring_part.end());
    ring_part.erase(std::unique(ring_part.begin(), ring_part.end()), ring_part.end());
    // Homogeneous iff the ideal is exactly I × N.
    if (ring_part.size() * submodule.size() != target.size()) continue;
    const std::size_t i = delta.lattice()->index_of_members(ring_part);
    if (!delta.defined_at_index(i)) continue;
    std::vector<Index> members;
    for (Index a : (*delta.lattice())[delta.eval_index(i)].members()) {
      for (Index m = 0; m < msize; ++m) members.push_back(info.pair(a, m));
    }
    std::sort(members.begin(), members.end());
    table[x] = trivial_extension_lattice->index_of_members(members);
  }
  return ExpansionFn(std::move(trivial_extension_lattice), std::move(table),
                     "plus(" + delta.label() + ")", ErrorKind::non_homogeneous_ideal);
}

ExpansionFn delta_amalgam(const ExpansionFn& delta, const ExpansionFn& inner,
                          LatticePtr amalgam_lattice) {
  const Amalgam amalgam(amalgam_lattice->ring());
  if (!(amalgam.A() == delta.ring())) {
    throw Error(ErrorKind::shape_mismatch,
                "bow: " + delta.label() + " does not act on " + amalgam.A().expr());
  }
  const SubringResult sub = subring_fA_plus_J(amalgam);
  if (!(sub.ring == inner.ring())) {
    throw Error(ErrorKind::shape_mismatch,
                "bow: " + inner.label() + " does not act on f(A)+J = " + sub.ring.expr());
  }
  // Subring element for each B element in f(A)+J.
  std::vector<std::optional<Index>> to_sub(amalgam.B().size());
  for (Index s = 0; s < sub.ring.size(); ++s) to_sub[sub.embedding(s)] = s;

  const IdealLattice& lat = *amalgam_lattice;
  ExpansionFn::Table table(lat.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const Ideal& target = lat[x];
    std::optional<std::size_t> via_ij;
    std::optional<std::size_t> via_kbar;

    std::vector<Index> first;
    for (Index e : target.members()) first.push_back(amalgam.a_of(e));
    std::sort(first.begin(), first.end());
    first.erase(std::unique(first.begin(), first.end()), first.end());
    if (is_ideal(amalgam.A(), first)) {
      const Ideal i = make_ideal_unchecked(amalgam.A(), first);
      if (amalgam_ideal_ij(amalgam, i) == target) {
        const std::size_t ii = delta.lattice()->index_of(i);
        if (delta.defined_at_index(ii)) {
          via_ij = lat.index_of(amalgam_ideal_ij(amalgam, (*delta.lattice())[delta.eval_index(ii)]));
        } else {
          continue;
        }
      }
    }

    std::vector<Index> second;
    for (Index e : target.members()) second.push_back(*to_sub[amalgam.b_of(e)]);
    std::sort(second.begin(), second.end());
    second.erase(std::unique(second.begin(), second.end()), second.end());
    if (is_ideal(sub.ring, second)) {
      const Ideal k = make_ideal_unchecked(sub.ring, second);
      if (amalgam_ideal_kbar(amalgam, k) == target) {
        const std::size_t ki = inner.lattice()->index_of(k);
        if (inner.defined_at_index(ki)) {
          via_kbar =
              lat.index_of(amalgam_ideal_kbar(amalgam, (*inner.lattice())[inner.eval_index(ki)]));
        } else {
          continue;
        }
      }
    }

    if (via_ij && via_kbar) {
      if (*via_ij == *via_kbar) table[x] = via_ij;
    } else if (via_ij) {
      table[x] = via_ij;
    } else if (via_kbar) {
      table[x] = via_kbar;
    }
  }
  return ExpansionFn(std::move(amalgam_lattice), std::move(table),
                     "bow(" + delta.label() + "," + inner.label() + ")");
}

}  // namespace ringlab
