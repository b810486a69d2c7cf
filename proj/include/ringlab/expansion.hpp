#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"

namespace ringlab {

/// First failure of an expansion-axiom or intersection check. `second` is
/// set for pairwise properties (monotonicity, FIP).
struct AxiomViolation {
  std::string axiom;
  std::size_t first = 0;
  std::optional<std::size_t> second;
};

struct AxiomCheck {
  bool holds = true;
  std::optional<AxiomViolation> violation;
  bool sampled = false;
  explicit operator bool() const { return holds; }
};

/// A map on the ideal lattice of one ring satisfying I ⊆ δ(I) and
/// monotonicity. Derived expansions may be partial: ideals outside their
/// domain report `undefined_kind()` from eval().
class ExpansionFn {
 public:
  using Table = std::vector<std::optional<std::size_t>>;

  /// Validates both axioms over the defined part of the table (sampled for
  /// rings above kExhaustiveAxiomLimit); throws axiom_violation otherwise.
  ExpansionFn(LatticePtr lattice, Table table, std::string label,
              ErrorKind undefined_kind = ErrorKind::unsupported_ideal_shape);

  const FiniteRing& ring() const { return lattice_->ring(); }
  const LatticePtr& lattice() const { return lattice_; }
  const std::string& label() const { return label_; }
  const Table& table() const { return table_; }
  bool sampled_validation() const { return sampled_; }
  bool total() const;

  bool defined_at(const Ideal& ideal) const;
  bool defined_at_index(std::size_t i) const { return table_[i].has_value(); }
  Ideal eval(const Ideal& ideal) const;
  std::size_t eval_index(std::size_t i) const;

 private:
  LatticePtr lattice_;
  Table table_;
  std::string label_;
  ErrorKind undefined_kind_;
  bool sampled_ = false;
};

using IdealMap = std::function<std::optional<Ideal>(const Ideal&)>;

/// Checks extensivity and monotonicity of `candidate` over the whole
/// lattice. Ideals for which the candidate returns nullopt are skipped.
AxiomCheck check_expansion_axioms(const IdealLattice& lattice, const IdealMap& candidate);

enum class BuiltinKind { identity, radical, addk };

/// `gens` is only used by addk: δ(I) = I + (gens).
ExpansionFn builtin_delta(LatticePtr lattice, BuiltinKind kind,
                          std::span<const Index> gens = {});
ExpansionFn identity_delta(LatticePtr lattice);
ExpansionFn radical_delta(LatticePtr lattice);
ExpansionFn addk_delta(LatticePtr lattice, std::span<const Index> gens);

/// outer ∘ inner; defined where inner is defined and outer is defined at the result.
ExpansionFn delta_compose(const ExpansionFn& outer, const ExpansionFn& inner);

/// δ(I ∩ J) = δ(I) ∩ δ(J) over all pairs of lattice ideals where δ is defined.
AxiomCheck check_fip(const ExpansionFn& delta);

/// δ_q on R/I: δ_q(J/I) = δ(J)/I. The lattice must belong to a quotient
/// ring whose parent is delta.ring().
ExpansionFn delta_quotient(const ExpansionFn& delta, LatticePtr quotient_lattice);

/// δ_× on R1×R2: δ_×(I1×I2) = δ1(I1)×δ2(I2).
ExpansionFn delta_product(const ExpansionFn& left, const ExpansionFn& right,
                          LatticePtr product_lattice);

/// δ_(+) on R(+)M: δ_(+)(I(+)N) = δ(I)(+)M; undefined (non-homogeneous-ideal)
/// on ideals that are not of the form I(+)N.
ExpansionFn delta_idealization(const ExpansionFn& delta, LatticePtr trivial_extension_lattice);

/// δ_⋈f on A⋈^f J: δ(I)⋈^f J on ideals I⋈^f J, and {(a,f(a)+j) : f(a)+j ∈ δ1(K)}
/// on ideals K̄^f. `inner` acts on the subring f(A)+J. Ideals of neither
/// shape, or of both shapes with disagreeing prescriptions, are left undefined.
ExpansionFn delta_amalgam(const ExpansionFn& delta, const ExpansionFn& inner,
                          LatticePtr amalgam_lattice);

}  // namespace ringlab
