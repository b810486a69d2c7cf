#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/expansion.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

/// Rings and parameter ranges a verification run draws its instances from.
struct Catalog {
  std::vector<std::string> rings;
  int max_m = 4;            // (m, n) ranges over 2 ≤ m ≤ max_m, 1 ≤ n < m
  int absorbing_max_n = 3;  // n-absorbing families use 1 ≤ n ≤ this
  std::size_t min_hits = 5;
  std::size_t pk_limit = 64;  // Z_{p^c} rings with p^c ≤ pk_limit
  std::uint64_t seed = 0;
  std::string name = "custom";

  static Catalog small();
  /// One ring expression per line; `#` starts a comment.
  static Catalog parse(const std::string& text, std::string name);
  static Catalog load(const std::string& path_or_small);
};

/// A ring prepared for instance generation: its lattice and the expansions
/// instantiated on it.
struct RingEntry {
  FiniteRing ring;
  LatticePtr lattice;
  std::vector<std::size_t> proper;  // lattice indices of proper ideals
  std::vector<ExpansionFn> deltas;
  std::vector<std::string> notes;

  std::vector<const ExpansionFn*> total_deltas() const;
};

/// Builds the entry. `structural` adds prod/plus/bow expansions when the
/// ring's provenance allows them.
RingEntry make_entry(const FiniteRing& ring, bool structural = true);

struct Counterexample {
  std::string ring;
  std::string ideal;  // generators in the ring's index order
  std::string delta;
  int m = 0;
  int n = 0;
  std::vector<Index> witness;  // element indices in `ring`
  std::vector<std::string> witness_labels;
  std::string detail;
  std::size_t ring_size = 0;
};

struct TheoremInfo {
  std::string id;
  std::string anchor;
  std::string statement;
  bool expected_false = false;
};

struct TheoremReport {
  TheoremInfo info;
  std::size_t instances = 0;
  std::size_t hypothesis_hits = 0;
  std::size_t passes = 0;
  std::size_t vacuous = 0;
  std::size_t skipped = 0;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
  std::size_t min_hits = 0;

  bool insufficient_hits() const { return hypothesis_hits < min_hits; }
  /// Registered-true: no counterexample and enough hits. Known-false: at
  /// least one counterexample.
  bool as_expected() const;
};

/// Prepared catalog: every ring parsed and its entry built.
class CatalogContext {
 public:
  CatalogContext(Catalog catalog, unsigned workers = 1);

  const Catalog& catalog() const { return catalog_; }
  const std::vector<RingEntry>& entries() const { return entries_; }

 private:
  Catalog catalog_;
  std::vector<RingEntry> entries_;
};

std::vector<TheoremInfo> list_theorems();
bool is_registered(const std::string& id);

struct VerifyOptions {
  unsigned workers = 1;
};

/// Throws unknown_theorem for ids that are not registered.
TheoremReport verify_theorem(const std::string& id, const CatalogContext& context,
                             const VerifyOptions& options = {});

/// Runs several theorems sharing one worker pool; reports keep `ids` order.
std::vector<TheoremReport> verify_theorems(const std::vector<std::string>& ids,
                                           const CatalogContext& context,
                                           const VerifyOptions& options = {});

/// Predicted value of "I is weakly (m,n)-closed prod(δ1,δ2)-primary" for
/// I = J1×J2, computed from factor-level classifications only.
bool product_prediction(const Ideal& j1, const Ideal& j2, const ExpansionFn& d1,
                        const ExpansionFn& d2, MNParams p);

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  unsigned workers = 1;
};

/// Samples (ring, ideal, δ, m, n) instances and evaluates the conjecture.
/// Counterexamples are deduplicated and sorted by ring size, then ideal.
TheoremReport fuzz(const CatalogContext& context, const std::string& conjecture,
                   const FuzzOptions& options);

}  // namespace ringlab
