#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::detail {

struct Outcome {
  enum class Kind { skipped, vacuous, pass, fail };
  Kind kind = Kind::vacuous;
  std::optional<Counterexample> counterexample;
};

using Outcomes = std::vector<Outcome>;
using Task = std::function<Outcomes()>;

/// Runs every task on `workers` threads; result i belongs to task i.
std::vector<Outcomes> run_tasks(const std::vector<Task>& tasks, unsigned workers);

/// Folds outcomes into the counters of `report`, in order.
void tally(TheoremReport& report, const std::vector<Outcomes>& results);

using Builder = std::function<std::vector<Task>(const CatalogContext&)>;

struct Registered {
  TheoremInfo info;
  Builder build;
};

void register_core(std::vector<Registered>& out);
void register_structural(std::vector<Registered>& out);
void register_amalgam(std::vector<Registered>& out);
void register_known_false(std::vector<Registered>& out);

// --- predicates ------------------------------------------------------------

inline bool weakly_closed(const Ideal& i, const ExpansionFn* d, MNParams p) {
  return classify_mn(i, p, d, true).holds;
}
inline bool closed(const Ideal& i, const ExpansionFn* d, MNParams p) {
  return classify_mn(i, p, d, false).holds;
}
/// Weakly (m,n)-closed but not (m,n)-closed.
inline bool weakly_not_closed(const Ideal& i, const ExpansionFn* d, MNParams p) {
  return weakly_closed(i, d, p) && !closed(i, d, p);
}

/// Every (m, n) with 2 ≤ m ≤ max_m and 1 ≤ n < m.
std::vector<MNParams> mn_grid(const Catalog& catalog);

bool is_prime_number(std::size_t x);

/// Branch (a) of the product characterization with factor roles (x, y):
/// x weakly but not closed, y^m ∈ Y forces y^m = 0, and a nonzero m-th
/// power in X forces Y to be closed.
bool product_branch(const Ideal& x, const ExpansionFn& dx, const Ideal& y, const ExpansionFn& dy,
                    MNParams p);

/// a^{n+1}R for a in J(R); `restricted` keeps only δ with δ(I) = I.
Builder jacobson_builder(bool restricted);

// --- outcomes --------------------------------------------------------------

Outcome pass();
Outcome vacuous();
Outcome skipped();
Outcome fail(Counterexample c);

Counterexample make_cex(const Ideal& ideal, const ExpansionFn* delta, MNParams p,
                        std::vector<Index> witness, std::string detail);

using CexFn = std::function<Counterexample()>;

/// hyp false: vacuous; hyp and concl: pass; otherwise the counterexample.
Outcome implication(bool hyp, bool concl, const CexFn& cex);
/// Both sides false: vacuous; equal: pass; otherwise the counterexample.
Outcome equivalence(bool lhs, bool rhs, const CexFn& cex);

/// Text for a verdict-style direction mismatch: "lhs=true, rhs=false".
std::string sides(const std::string& lhs_name, bool lhs, const std::string& rhs_name, bool rhs);

// --- constructions shared by several theorems ---------------------------------

/// The ideal I(+)M of a trivial extension for an ideal I of its base.
Ideal idealization_ideal(const FiniteRing& extension, const Ideal& base_ideal);

/// An expansion on `target` obtained by moving `source` along a ring
/// isomorphism `iso` (source element -> target element).
ExpansionFn transport_delta(const ExpansionFn& source, LatticePtr target,
                            const std::vector<Index>& iso);

/// Amalgamations used by the amalgamation theorems: catalog amalgams, the
/// amalgam attached to every catalog trivial extension, and small duplications.
struct AmalgamCase {
  Amalgam amalgam;
  LatticePtr lattice;
  RingEntry a;        // entry of A, structural expansions off
  SubringResult sub;  // f(A)+J
  LatticePtr sub_lattice;
  std::vector<ExpansionFn> sub_deltas;  // id and rad on f(A)+J
  std::vector<Index> to_sub;            // B element -> f(A)+J element, or size() if absent
};

std::vector<FiniteRing> amalgam_sources(const CatalogContext& context);
AmalgamCase make_amalgam_case(const FiniteRing& carrier);

}  // namespace ringlab::detail
