#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "theorem_support.hpp"

namespace ringlab {

namespace {

struct Instance {
  const RingEntry* entry;
  std::size_t ideal;
  std::size_t delta;
  MNParams p;
};

class Evaluator {
 public:
  Evaluator(const Instance& inst, const Catalog& cat)
      : inst_(inst),
        cat_(cat),
        ideal_((*inst.entry->lattice)[inst.ideal]),
        delta_(inst.entry->deltas[inst.delta]) {}

  bool eval(const Conjecture& c) {
    switch (c.op) {
      case Conjecture::Op::atom: return atom(c.atom);
      case Conjecture::Op::negation: return !eval(*c.args[0]);
      case Conjecture::Op::conjunction: return eval(*c.args[0]) && eval(*c.args[1]);
      case Conjecture::Op::disjunction: return eval(*c.args[0]) || eval(*c.args[1]);
      case Conjecture::Op::implication: return !eval(*c.args[0]) || eval(*c.args[1]);
    }
    return false;
  }

  /// Witness of the most recent false verdict, if any.
  const std::vector<Index>& witness() const { return witness_; }
  void clear_witness() { witness_.clear(); }

 private:
  bool record(const Verdict& v) {
    if (!v.holds && !v.witness.empty()) witness_ = v.witness;
    return v.holds;
  }

  bool atom(const std::string& a) {
    const Ideal& I = ideal_;
    const ExpansionFn& d = delta_;
    const MNParams p = inst_.p;
    const int n = p.n;
    const int cap = cat_.absorbing_max_n;
    const FiniteRing& r = I.ring();
    if (a == "true") return true;
    if (a == "false") return false;
    if (a == "weakly") return record(classify_mn(I, p, &d, true));
    if (a == "closed") return record(classify_mn(I, p, &d, false));
    if (a == "weakly_plain") return record(classify_mn(I, p, nullptr, true));
    if (a == "closed_plain") return record(classify_mn(I, p, nullptr, false));
    if (a == "weakly_semi") return record(is_semi_n_absorbing(I, n, &d, true));
    if (a == "semi") return record(is_semi_n_absorbing(I, n, &d, false));
    if (a == "weakly_delta_primary") return record(is_delta_primary(I, d, true));
    if (a == "delta_primary") return record(is_delta_primary(I, d, false));
    if (a == "weakly_prime") return record(is_prime(I, true));
    if (a == "prime") return record(is_prime(I, false));
    if (a == "weakly_n_absorbing") return record(is_n_absorbing(I, n, true, cap));
    if (a == "n_absorbing") return record(is_n_absorbing(I, n, false, cap));
    if (a == "weakly_strongly_n_absorbing" || a == "strongly_n_absorbing") {
      if (!products_) products_.emplace(inst_.entry->lattice);
      return is_strongly_n_absorbing(*products_, I, n, a[0] == 'w', cap).holds;
    }
    if (a == "weakly_n_absorbing_delta_primary") {
      return record(is_n_absorbing_delta_primary(I, n, d, true, cap));
    }
    if (a == "n_absorbing_delta_primary") {
      return record(is_n_absorbing_delta_primary(I, n, d, false, cap));
    }
    if (a == "unbreakable") return !unbreakable_zero_set(I, d, p).empty();
    if (a == "in_nil") return I.subset_of(nilradical(r));
    if (a == "nil_power") {
      return std::all_of(I.members().begin(), I.members().end(),
                         [&](Index x) { return r.pow(x, p.m) == r.zero(); });
    }
    if (a == "zero_ideal") return I.is_zero();
    throw Error(ErrorKind::bad_conjecture, "unknown predicate '" + a + "'");
  }

  const Instance& inst_;
  const Catalog& cat_;
  const Ideal& ideal_;
  const ExpansionFn& delta_;
  std::optional<LatticeProducts> products_;
  std::vector<Index> witness_;
};

}  // namespace

TheoremReport fuzz(const CatalogContext& context, const std::string& conjecture,
                   const FuzzOptions& options) {
  const ConjecturePtr conj = parse_conjecture(conjecture);
  const Catalog& cat = context.catalog();
  TheoremReport report;
  report.info = TheoremInfo{"fuzz", "", to_string(*conj), false};

  std::vector<const RingEntry*> usable;
  for (const auto& e : context.entries()) {
    if (!e.proper.empty()) usable.push_back(&e);
  }
  if (options.trials == 0 || usable.empty()) return report;

  std::mt19937_64 rng(options.seed);
  std::set<std::tuple<const RingEntry*, std::size_t, std::size_t, int, int>> seen;
  std::vector<Instance> instances;
  std::size_t undefined = 0;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const RingEntry* e = usable[rng() % usable.size()];
    const std::size_t ideal = e->proper[rng() % e->proper.size()];
    const std::size_t delta = rng() % e->deltas.size();
    const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(cat.max_m - 1));
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
    if (!seen.insert({e, ideal, delta, m, n}).second) continue;
    if (!e->deltas[delta].defined_at_index(ideal)) {
      ++undefined;
      continue;
    }
    instances.push_back(Instance{e, ideal, delta, MNParams{m, n}});
  }

  std::vector<detail::Task> tasks;
  for (const Instance& inst : instances) {
    tasks.push_back([&cat, &inst, conj] {
      Evaluator ev(inst, cat);
      const Ideal& I = (*inst.entry->lattice)[inst.ideal];
      const ExpansionFn& d = inst.entry->deltas[inst.delta];
      bool hyp = true;
      const Conjecture* goal = conj.get();
      if (conj->op == Conjecture::Op::implication) {
        hyp = ev.eval(*conj->args[0]);
        goal = conj->args[1].get();
      }
      ev.clear_witness();
      const bool holds = hyp && ev.eval(*goal);
      return detail::Outcomes{detail::implication(hyp, holds, [&] {
        return detail::make_cex(I, &d, inst.p, ev.witness(), "conjecture fails");
      })};
    });
  }
  auto results = detail::run_tasks(tasks, options.workers);
  report.instances = undefined;
  report.skipped = undefined;
  for (auto& r : results) {
    for (auto& o : r) {
      ++report.instances;
      switch (o.kind) {
        case detail::Outcome::Kind::skipped: ++report.skipped; break;
        case detail::Outcome::Kind::vacuous: ++report.vacuous; break;
        case detail::Outcome::Kind::pass:
          ++report.hypothesis_hits;
          ++report.passes;
          break;
        case detail::Outcome::Kind::fail: ++report.hypothesis_hits; break;
      }
    }
  }

  // Minimal first: ring size, then ideal members, then sampling order.
  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].front().kind == detail::Outcome::Kind::fail) failing.push_back(i);
  }
  auto key = [&](std::size_t i) {
    const Instance& inst = instances[i];
    const auto members = (*inst.entry->lattice)[inst.ideal].members();
    return std::make_tuple(inst.entry->ring.size(),
                           std::vector<Index>(members.begin(), members.end()), i);
  };
  std::sort(failing.begin(), failing.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (std::size_t i : failing) report.counterexamples.push_back(*results[i].front().counterexample);
  report.min_hits = 0;
  return report;
}

}  // namespace ringlab
