#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/expansion.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

struct MNParams {
  int m = 2;
  int n = 1;
};

/// Outcome of one decision procedure. A false verdict carries the first
/// violating tuple in lexicographic order: elements, or lattice indices for
/// the ideal-tuple predicates.
struct Verdict {
  bool holds = true;
  std::vector<Index> witness;
  std::vector<std::size_t> ideal_witness;
  explicit operator bool() const { return holds; }
};

/// a^m ∈ I ⇒ a^n ∈ δ(I), or a^n ∈ I when `delta` is null. `weakly` adds a^m ≠ 0.
Verdict classify_mn(const Ideal& ideal, MNParams p, const ExpansionFn* delta, bool weakly);

/// a^{n+1} ∈ I ⇒ a^n ∈ δ(I); a separate scan from classify_mn.
Verdict is_semi_n_absorbing(const Ideal& ideal, int n, const ExpansionFn* delta, bool weakly);

/// xy ∈ I ⇒ x ∈ I or y ∈ δ(I), over ordered pairs.
Verdict is_delta_primary(const Ideal& ideal, const ExpansionFn& delta, bool weakly);

/// x1⋯x_{n+1} ∈ I ⇒ some product of n of the factors lies in I.
Verdict is_n_absorbing(const Ideal& ideal, int n, bool weakly, int cap = kDefaultAbsorbingCap);

Verdict is_prime(const Ideal& ideal, bool weakly);

/// Pairwise products of lattice ideals, by lattice index.
class LatticeProducts {
 public:
  explicit LatticeProducts(LatticePtr lattice);
  const IdealLattice& lattice() const { return *lattice_; }
  std::size_t operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

 private:
  LatticePtr lattice_;
  std::size_t n_;
  std::vector<std::size_t> table_;
};

/// I1⋯I_{n+1} ⊆ I ⇒ some n-fold subproduct ⊆ I, over tuples of lattice ideals.
Verdict is_strongly_n_absorbing(const LatticeProducts& products, const Ideal& ideal, int n,
                                bool weakly, int cap = kDefaultAbsorbingCap);

/// x1⋯x_{n+1} ∈ I ⇒ x1⋯x_n ∈ I or, for some 1 ≤ k ≤ n, the product omitting
/// x_k lies in δ(I). For n = 2 this is "xy ∈ I or yz ∈ δ(I) or xz ∈ δ(I)".
Verdict is_n_absorbing_delta_primary(const Ideal& ideal, int n, const ExpansionFn& delta,
                                     bool weakly, int cap = kDefaultAbsorbingCap);

/// {a : a^m = 0 and a^n ∉ δ(I)}.
std::vector<Index> unbreakable_zero_set(const Ideal& ideal, const ExpansionFn& delta, MNParams p);

struct ClassEntry {
  std::string name;
  bool holds = true;
  std::vector<Index> witness;
  std::vector<std::string> witness_labels;
};

struct ClassificationReport {
  std::string ring;
  std::string ideal_gens;
  std::vector<std::string> ideal_members;
  std::string delta;
  MNParams params;
  std::vector<ClassEntry> entries;
  std::vector<Index> unbreakable;
  std::vector<std::string> unbreakable_labels;
  std::vector<std::string> notes;

  const ClassEntry* find(const std::string& name) const;
};

struct ClassifyOptions {
  int absorbing_cap = kDefaultAbsorbingCap;
  /// Every (m', n') with 2 ≤ m' ≤ max(grid_max_m, m) and n' < m' is reported.
  int grid_max_m = 4;
};

/// Runs every predicate on (I, δ) at the requested parameters, together
/// with the (m', n') grid, the semi-n-absorbing and absorbing families.
ClassificationReport classify_full(const Ideal& ideal, const ExpansionFn& delta, MNParams p,
                                   const ClassifyOptions& options = {});

/// Entry names used by classify_full.
std::string mn_entry_name(MNParams p, bool weakly, const std::string& delta_label);

}  // namespace ringlab
