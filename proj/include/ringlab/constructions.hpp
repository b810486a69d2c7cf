#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/expansion.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A direct sum of cyclic groups Z_{d_1} ⊕ ... ⊕ Z_{d_r} viewed as a module
/// over a ring whose additive group is generated by 1 (Z_n and its quotients
/// and localizations). Element indices are mixed-radix, first coordinate most
/// significant.
class RModule {
 public:
  RModule(FiniteRing base, std::vector<std::size_t> shape);

  const FiniteRing& base() const { return base_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return size_; }

  std::vector<std::size_t> decode(Index m) const;
  Index encode(const std::vector<std::size_t>& coords) const;
  Index add(Index x, Index y) const;
  Index act(Index r, Index m) const;
  /// k·m for an integer k.
  Index scale(std::uint64_t k, Index m) const;
  std::string label(Index m) const;
  /// `M[d1,...]`
  std::string expr() const;

 private:
  FiniteRing base_;
  std::vector<std::size_t> shape_;
  std::size_t size_ = 1;
  std::vector<std::size_t> integer_value_;  // r = integer_value_[r]·1
};

/// Multiplicatively closed subset containing 1 and not containing 0.
class MultSet {
 public:
  MultSet(FiniteRing ring, std::vector<Index> members);

  const FiniteRing& ring() const { return ring_; }
  const std::vector<Index>& members() const { return members_; }
  bool contains(Index a) const;

  static MultSet complement_of(const Ideal& prime);
  static MultSet units(const FiniteRing& ring);
  /// Smallest multiplicative set containing `gens` and 1; throws if it hits 0.
  static MultSet generated_by(const FiniteRing& ring, std::span<const Index> gens);

 private:
  FiniteRing ring_;
  std::vector<Index> members_;
};

struct LocalizeResult {
  FiniteRing ring;
  RingHom canonical;  // r ↦ r/1
};

LocalizeResult localize(const FiniteRing& ring, const MultSet& s);

FiniteRing trivial_extension(const FiniteRing& ring, const RModule& module);

/// a ↦ (a, 0) into R(+)M.
RingHom trivial_extension_injection(const FiniteRing& base, const FiniteRing& extension);

/// Canonical reduction Z_n → Z_m for m | n.
RingHom canonical_zmod_hom(const FiniteRing& from, const FiniteRing& to);

/// View of an amalgamation A⋈^f J carrier together with its data.
class Amalgam {
 public:
  explicit Amalgam(FiniteRing carrier);

  const FiniteRing& carrier() const { return carrier_; }
  const FiniteRing& A() const;
  const FiniteRing& B() const;
  RingHom f() const;
  Ideal J() const;
  Index a_of(Index x) const;
  Index b_of(Index x) const;
  /// Carrier index of the pair (a, b), or nullopt if the pair is not in A⋈^f J.
  std::optional<Index> element(Index a, Index b) const;

 private:
  FiniteRing carrier_;
  std::vector<std::vector<std::pair<Index, Index>>> by_a_;  // a -> [(b, carrier index)]
};

Amalgam amalgamate(const FiniteRing& a, const FiniteRing& b, const RingHom& f, const Ideal& j);
Amalgam duplicate(const FiniteRing& a, const Ideal& i);

/// Subring of `parent` generated by `gens` (always containing 1).
FiniteRing subring_closure(const FiniteRing& parent, std::span<const Index> gens);

struct SubringResult {
  FiniteRing ring;
  RingHom embedding;
};

/// The subring f(A)+J of B with its embedding.
SubringResult subring_fA_plus_J(const Amalgam& amalgam);
/// Embedding of any subring-provenance ring into its parent.
RingHom subring_embedding(const FiniteRing& subring);

/// I⋈^f J = {(a, f(a)+j) : a ∈ I, j ∈ J}.
Ideal amalgam_ideal_ij(const Amalgam& amalgam, const Ideal& i);
/// K̄^f = {(a, f(a)+j) : f(a)+j ∈ K} for an ideal K of the subring f(A)+J.
Ideal amalgam_ideal_kbar(const Amalgam& amalgam, const Ideal& k);

/// {a : f(a) ∈ X}.
Ideal hom_preimage(const RingHom& f, const Ideal& x);

struct HomImage {
  Ideal ideal;
  /// True when the raw image {f(x)} was not already an ideal and had to be closed.
  bool closed = false;
};

HomImage hom_image(const RingHom& f, const Ideal& x);

/// Checks δ(f⁻¹(I)) = f⁻¹(γ(I)) for every ideal I of the codomain; the
/// violation reports the codomain lattice index.
AxiomCheck is_delta_gamma_hom(const RingHom& f, const ExpansionFn& delta,
                              const ExpansionFn& gamma);

}  // namespace ringlab
