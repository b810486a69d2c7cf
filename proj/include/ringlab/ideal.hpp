#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// An ideal of a FiniteRing, held as its sorted member list plus a
/// membership mask. Ideals are only produced by closure operations or
/// after re-verification, so every value satisfies the ideal laws.
class Ideal {
 public:
  /// Verifies that `members` is an ideal of `ring`; throws not_an_ideal otherwise.
  static Ideal from_members(FiniteRing ring, std::vector<Index> members);

  const FiniteRing& ring() const { return ring_; }
  std::span<const Index> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index a) const { return mask_[a] != 0; }
  bool proper() const { return !contains(ring_.one()); }
  bool is_zero() const { return members_.size() == 1; }
  bool subset_of(const Ideal& other) const;

  /// A small generating set, chosen greedily in index order.
  std::vector<Index> generators() const;
  /// `{g1,g2}` using generators().
  std::string gens_string() const;
  /// `{m1,m2,...}` listing all members by label.
  std::string describe() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
  /// Lattice order: cardinality, then lexicographic members.
  friend bool operator<(const Ideal& a, const Ideal& b);

 private:
  Ideal(FiniteRing ring, std::vector<Index> members);
  friend Ideal make_ideal_unchecked(FiniteRing ring, std::vector<Index> members);

  FiniteRing ring_;
  std::vector<Index> members_;
  std::vector<unsigned char> mask_;
};

/// Builds an ideal from a member list already known to be an ideal.
Ideal make_ideal_unchecked(FiniteRing ring, std::vector<Index> members);

/// True iff `members` is closed under +, negation and multiplication by R.
bool is_ideal(const FiniteRing& ring, std::span<const Index> members);

Ideal ideal_closure(const FiniteRing& ring, std::span<const Index> gens);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

/// All ideals of a ring, ordered by (cardinality, members).
class IdealLattice {
 public:
  explicit IdealLattice(FiniteRing ring, std::vector<Ideal> ideals);

  const FiniteRing& ring() const { return ring_; }
  std::span<const Ideal> all() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }

  /// Position of `ideal` in all(); throws not_an_ideal if absent.
  std::size_t index_of(const Ideal& ideal) const;
  std::size_t index_of_members(std::span<const Index> members) const;
  std::size_t zero_index() const { return 0; }
  std::size_t unit_index() const { return ideals_.size() - 1; }

  std::vector<Ideal> proper_ideals() const;
  std::vector<Ideal> prime_ideals() const;
  std::vector<Ideal> maximal_ideals() const;

 private:
  FiniteRing ring_;
  std::vector<Ideal> ideals_;
  std::map<std::vector<Index>, std::size_t> lookup_;
};

using LatticePtr = std::shared_ptr<const IdealLattice>;

/// Closure BFS from (0). Throws size_bound_exceeded above size_bound().
LatticePtr enumerate_ideals(const FiniteRing& ring);

Ideal radical(const Ideal& ideal);

enum class IdealOp { sum, product, intersect };
Ideal ideal_algebra(IdealOp op, const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

struct QuotientResult {
  FiniteRing ring;
  RingHom projection;
};

QuotientResult quotient_ring(const FiniteRing& ring, const Ideal& ideal);

}  // namespace ringlab
