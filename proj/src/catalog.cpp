#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "ringlab/constructions.hpp"
#include "theorem_support.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Catalog

Catalog Catalog::small() {
  Catalog c;
  c.name = "small";
  for (int n = 1; n <= 16; ++n) c.rings.push_back("Z" + std::to_string(n));
  for (const char* r : {"Z2xZ2", "Z2xZ4", "Z4xZ2", "Z3xZ3", "triv(Z2,M[2])", "triv(Z4,M[4])",
                        "triv(Z2,M[2,2])", "triv(Z8,M[8])", "dup(Z4,{2})", "amal(Z4,Z4,id,{2})",
                        "quot(Z16,{8})", "loc(Z12,{1,5,7,11})"}) {
    c.rings.emplace_back(r);
  }
  return c;
}

Catalog Catalog::parse(const std::string& text, std::string name) {
  Catalog c;
  c.name = std::move(name);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    c.rings.push_back(line.substr(first, last - first + 1));
  }
  if (c.rings.empty()) throw Error(ErrorKind::bad_config, "catalog " + c.name + " lists no rings");
  return c;
}

Catalog Catalog::load(const std::string& path_or_small) {
  if (path_or_small == "small") return small();
  std::ifstream in(path_or_small);
  if (!in) throw Error(ErrorKind::bad_config, "cannot read catalog file " + path_or_small);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path_or_small);
}

// ---------------------------------------------------------------------------
// RingEntry

std::vector<const ExpansionFn*> RingEntry::total_deltas() const {
  std::vector<const ExpansionFn*> out;
  for (const auto& d : deltas) {
    if (d.total()) out.push_back(&d);
  }
  return out;
}

RingEntry make_entry(const FiniteRing& ring, bool structural) {
  RingEntry e;
  e.ring = ring;
  e.lattice = enumerate_ideals(ring);
  const IdealLattice& lat = *e.lattice;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat[i].proper()) e.proper.push_back(i);
  }
  e.deltas.push_back(identity_delta(e.lattice));
  e.deltas.push_back(radical_delta(e.lattice));
  std::optional<std::size_t> minimal;
  if (lat.size() > 2) {
    minimal = 1;  // smallest nonzero ideal in lattice order
    auto gens = lat[1].generators();
    e.deltas.push_back(addk_delta(e.lattice, gens));
  }
  const Ideal nil = nilradical(ring);
  if (!nil.is_zero() && nil.proper() && (!minimal || !(lat[*minimal] == nil))) {
    auto gens = nil.generators();
    e.deltas.push_back(addk_delta(e.lattice, gens));
  }
  if (!structural) return e;

  auto attempt = [&](const std::string& what, auto&& build) {
    try {
      e.deltas.push_back(build());
    } catch (const Error& err) {
      e.notes.push_back(what + " not instantiated: " + err.what());
    }
  };
  if (ring.is_product()) {
    const auto& info = ring.product_info();
    LatticePtr l = enumerate_ideals(info.left);
    LatticePtr r = enumerate_ideals(info.right);
    attempt("prod(id,rad)",
            [&] { return delta_product(identity_delta(l), radical_delta(r), e.lattice); });
    attempt("prod(rad,id)",
            [&] { return delta_product(radical_delta(l), identity_delta(r), e.lattice); });
  }
  if (ring.is_trivial_extension()) {
    LatticePtr b = enumerate_ideals(ring.trivial_extension_info().base);
    attempt("plus(id)", [&] { return delta_idealization(identity_delta(b), e.lattice); });
    attempt("plus(rad)", [&] { return delta_idealization(radical_delta(b), e.lattice); });
  }
  if (ring.is_amalgamation()) {
    const Amalgam am(ring);
    LatticePtr a = enumerate_ideals(am.A());
    LatticePtr s = enumerate_ideals(subring_fA_plus_J(am).ring);
    attempt("bow(id,id)",
            [&] { return delta_amalgam(identity_delta(a), identity_delta(s), e.lattice); });
    attempt("bow(rad,rad)",
            [&] { return delta_amalgam(radical_delta(a), radical_delta(s), e.lattice); });
  }
  return e;
}

// ---------------------------------------------------------------------------
// CatalogContext

CatalogContext::CatalogContext(Catalog catalog, unsigned workers) : catalog_(std::move(catalog)) {
  if (catalog_.max_m < 2) throw Error(ErrorKind::bad_config, "max m must be at least 2");
  if (catalog_.absorbing_max_n < 1 || catalog_.absorbing_max_n > kDefaultAbsorbingCap) {
    throw Error(ErrorKind::bad_config, "absorbing n range must lie in [1, " +
                                           std::to_string(kDefaultAbsorbingCap) + "]");
  }
  std::vector<FiniteRing> rings;
  for (const auto& text : catalog_.rings) rings.push_back(parse_ring(text));
  std::vector<detail::Task> tasks;
  std::vector<std::optional<RingEntry>> built(rings.size());
  for (std::size_t i = 0; i < rings.size(); ++i) {
    tasks.push_back([&, i] {
      built[i] = make_entry(rings[i]);
      return detail::Outcomes{};
    });
  }
  detail::run_tasks(tasks, workers);
  for (auto& b : built) entries_.push_back(std::move(*b));
}

// ---------------------------------------------------------------------------
// parallel runner

namespace detail {

std::vector<Outcomes> run_tasks(const std::vector<Task>& tasks, unsigned workers) {
  std::vector<Outcomes> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count =
      std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void tally(TheoremReport& report, const std::vector<Outcomes>& results) {
  for (const auto& outcomes : results) {
    for (const auto& o : outcomes) {
      ++report.instances;
      switch (o.kind) {
        case Outcome::Kind::skipped: ++report.skipped; break;
        case Outcome::Kind::vacuous: ++report.vacuous; break;
        case Outcome::Kind::pass:
          ++report.hypothesis_hits;
          ++report.passes;
          break;
        case Outcome::Kind::fail:
          ++report.hypothesis_hits;
          report.counterexamples.push_back(*o.counterexample);
          break;
      }
    }
  }
}

}  // namespace detail

bool TheoremReport::as_expected() const {
  if (info.expected_false) return !counterexamples.empty();
  return counterexamples.empty() && !insufficient_hits();
}

}  // namespace ringlab
