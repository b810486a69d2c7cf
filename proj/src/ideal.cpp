#include "ringlab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ringlab/config.hpp"

namespace ringlab {

namespace {

std::vector<unsigned char> mask_of(std::size_t n, std::span<const Index> members) {
  std::vector<unsigned char> mask(n, 0);
  for (Index m : members) mask[m] = 1;
  return mask;
}

std::vector<Index> members_of(const std::vector<unsigned char>& mask) {
  std::vector<Index> out;
  for (Index i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorKind::ring_mismatch,
                "ideals of " + a.ring().expr() + " and " + b.ring().expr());
  }
}

// Sum of two additive subgroups given as masks.
std::vector<unsigned char> subgroup_sum(const FiniteRing& ring, const std::vector<Index>& a,
                                        const std::vector<Index>& b) {
  std::vector<unsigned char> mask(ring.size(), 0);
  for (Index x : a) {
    for (Index y : b) mask[ring.add(x, y)] = 1;
  }
  return mask;
}

std::vector<Index> principal(const FiniteRing& ring, Index g) {
  std::vector<unsigned char> mask(ring.size(), 0);
  for (Index r = 0; r < ring.size(); ++r) mask[ring.mul(r, g)] = 1;
  return members_of(mask);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(FiniteRing ring, std::vector<Index> members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_ = mask_of(ring_.size(), members_);
}

Ideal make_ideal_unchecked(FiniteRing ring, std::vector<Index> members) {
  return Ideal(std::move(ring), std::move(members));
}

Ideal Ideal::from_members(FiniteRing ring, std::vector<Index> members) {
  for (Index m : members) ring.require_element(m);
  Ideal candidate(std::move(ring), std::move(members));
  if (!is_ideal(candidate.ring_, candidate.members_)) {
    throw Error(ErrorKind::not_an_ideal,
                format_elements(candidate.members_) + " is not an ideal of " +
                    candidate.ring_.expr());
  }
  return candidate;
}

bool Ideal::subset_of(const Ideal& other) const {
  for (Index m : members_) {
    if (!other.contains(m)) return false;
  }
  return true;
}

std::vector<Index> Ideal::generators() const {
  std::vector<Index> gens;
  std::vector<Index> current{ring_.zero()};
  std::vector<unsigned char> covered = mask_of(ring_.size(), current);
  for (Index m : members_) {
    if (covered[m]) continue;
    gens.push_back(m);
    covered = subgroup_sum(ring_, current, principal(ring_, m));
    current = members_of(covered);
  }
  if (gens.empty()) gens.push_back(ring_.zero());
  return gens;
}

std::string Ideal::gens_string() const { return format_elements(generators()); }

std::string Ideal::describe() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << ring_.label(members_[i]);
  }
  out << '}';
  return out.str();
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
  return a.members_ < b.members_;
}

bool is_ideal(const FiniteRing& ring, std::span<const Index> members) {
  if (members.empty()) return false;
  std::vector<unsigned char> mask(ring.size(), 0);
  for (Index m : members) {
    if (m >= ring.size()) return false;
    mask[m] = 1;
  }
  if (!mask[ring.zero()]) return false;
  for (Index x : members) {
    if (!mask[ring.neg(x)]) return false;
    for (Index y : members) {
      if (!mask[ring.add(x, y)]) return false;
    }
    for (Index r = 0; r < ring.size(); ++r) {
      if (!mask[ring.mul(r, x)]) return false;
    }
  }
  return true;
}

Ideal ideal_closure(const FiniteRing& ring, std::span<const Index> gens) {
  std::vector<Index> current{ring.zero()};
  for (Index g : gens) {
    ring.require_element(g);
    current = members_of(subgroup_sum(ring, current, principal(ring, g)));
  }
  return make_ideal_unchecked(ring, std::move(current));
}

Ideal zero_ideal(const FiniteRing& ring) { return make_ideal_unchecked(ring, {ring.zero()}); }

Ideal unit_ideal(const FiniteRing& ring) {
  std::vector<Index> all(ring.size());
  for (Index i = 0; i < ring.size(); ++i) all[i] = i;
  return make_ideal_unchecked(ring, std::move(all));
}

// ---------------------------------------------------------------------------
// IdealLattice

IdealLattice::IdealLattice(FiniteRing ring, std::vector<Ideal> ideals)
    : ring_(std::move(ring)), ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end());
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    std::vector<Index> key(ideals_[i].members().begin(), ideals_[i].members().end());
    lookup_.emplace(std::move(key), i);
  }
}

std::size_t IdealLattice::index_of(const Ideal& ideal) const {
  if (!(ideal.ring() == ring_)) {
    throw Error(ErrorKind::ring_mismatch,
                "ideal of " + ideal.ring().expr() + " looked up in lattice of " + ring_.expr());
  }
  return index_of_members(ideal.members());
}

std::size_t IdealLattice::index_of_members(std::span<const Index> members) const {
  auto it = lookup_.find(std::vector<Index>(members.begin(), members.end()));
  if (it == lookup_.end()) {
    throw Error(ErrorKind::not_an_ideal,
                format_elements(members) + " is not an ideal of " + ring_.expr());
  }
  return it->second;
}

std::vector<Ideal> IdealLattice::proper_ideals() const {
  std::vector<Ideal> out;
  for (const auto& i : ideals_) {
    if (i.proper()) out.push_back(i);
  }
  return out;
}

std::vector<Ideal> IdealLattice::prime_ideals() const {
  std::vector<Ideal> out;
  const FiniteRing& r = ring_;
  for (const auto& p : ideals_) {
    if (!p.proper()) continue;
    bool prime = true;
    for (Index x = 0; x < r.size() && prime; ++x) {
      if (p.contains(x)) continue;
      for (Index y = 0; y < r.size(); ++y) {
        if (!p.contains(y) && p.contains(r.mul(x, y))) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<Ideal> IdealLattice::maximal_ideals() const {
  std::vector<Ideal> out;
  for (const auto& m : ideals_) {
    if (!m.proper()) continue;
    bool maximal = true;
    for (const auto& other : ideals_) {
      if (other.proper() && other.size() > m.size() && m.subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

LatticePtr enumerate_ideals(const FiniteRing& ring) {
  if (ring.size() > size_bound()) {
    throw Error(ErrorKind::size_bound_exceeded,
                ring.expr() + " exceeds bound " + std::to_string(size_bound()));
  }
  std::vector<std::vector<Index>> principals(ring.size());
  for (Index g = 0; g < ring.size(); ++g) principals[g] = principal(ring, g);

  std::set<std::vector<Index>> seen;
  std::deque<std::vector<Index>> queue;
  std::vector<Index> start{ring.zero()};
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    std::vector<Index> current = std::move(queue.front());
    queue.pop_front();
    std::vector<unsigned char> mask = mask_of(ring.size(), current);
    for (Index g = 0; g < ring.size(); ++g) {
      if (mask[g]) continue;
      std::vector<Index> next = members_of(subgroup_sum(ring, current, principals[g]));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Ideal> ideals;
  ideals.reserve(seen.size());
  for (const auto& members : seen) ideals.push_back(make_ideal_unchecked(ring, members));
  return std::make_shared<const IdealLattice>(ring, std::move(ideals));
}

// ---------------------------------------------------------------------------
// ideal algebra

Ideal radical(const Ideal& ideal) {
  const FiniteRing& r = ideal.ring();
  std::vector<Index> members;
  for (Index x = 0; x < r.size(); ++x) {
    Index p = x;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (ideal.contains(p)) {
        members.push_back(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return make_ideal_unchecked(r, std::move(members));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Index> am(a.members().begin(), a.members().end());
  std::vector<Index> bm(b.members().begin(), b.members().end());
  return make_ideal_unchecked(a.ring(), members_of(subgroup_sum(a.ring(), am, bm)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<unsigned char> mask(a.ring().size(), 0);
  for (Index x : a.members()) {
    for (Index y : b.members()) mask[a.ring().mul(x, y)] = 1;
  }
  std::vector<Index> products = members_of(mask);
  return ideal_closure(a.ring(), products);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Index> members;
  for (Index x : a.members()) {
    if (b.contains(x)) members.push_back(x);
  }
  return make_ideal_unchecked(a.ring(), std::move(members));
}

Ideal ideal_algebra(IdealOp op, const Ideal& a, const Ideal& b) {
  switch (op) {
    case IdealOp::sum: return ideal_sum(a, b);
    case IdealOp::product: return ideal_product(a, b);
    case IdealOp::intersect: return ideal_intersect(a, b);
  }
  return ideal_sum(a, b);
}

QuotientResult quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  if (!(ideal.ring() == ring)) {
    throw Error(ErrorKind::ring_mismatch, "ideal of " + ideal.ring().expr() +
                                              " used to form a quotient of " + ring.expr());
  }
  const std::size_t n = ring.size();
  QuotientInfo info;
  info.parent = ring;
  info.ideal.assign(ideal.members().begin(), ideal.members().end());
  info.projection.assign(n, 0);
  std::vector<int> coset(n, -1);
  for (Index a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const auto id = static_cast<int>(info.representative.size());
    info.representative.push_back(a);  // a is the least member of its coset
    for (Index i : ideal.members()) coset[ring.add(a, i)] = id;
  }
  for (Index a = 0; a < n; ++a) info.projection[a] = static_cast<Index>(coset[a]);

  const std::size_t q = info.representative.size();
  RingTables t;
  t.size = q;
  t.zero = info.projection[ring.zero()];
  t.one = info.projection[ring.one()];
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (Index x = 0; x < q; ++x) {
    const Index rx = info.representative[x];
    for (Index y = 0; y < q; ++y) {
      const Index ry = info.representative[y];
      t.add[x * q + y] = info.projection[ring.add(rx, ry)];
      t.mul[x * q + y] = info.projection[ring.mul(rx, ry)];
    }
    t.labels.push_back("[" + ring.label(rx) + "]");
  }
  std::string expr = "quot(" + ring.expr() + "," + ideal.gens_string() + ")";
  std::vector<Index> projection = info.projection;
  FiniteRing quotient = FiniteRing::from_tables(std::move(t), std::move(expr), std::move(info));
  RingHom hom(ring, quotient, std::move(projection));
  return QuotientResult{std::move(quotient), std::move(hom)};
}

}  // namespace ringlab
