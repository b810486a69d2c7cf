#include "ringlab/classify.hpp"

#include <algorithm>
#include <functional>

namespace ringlab {

namespace {

void require_proper(const Ideal& ideal) {
  if (!ideal.proper()) {
    throw Error(ErrorKind::improper_ideal,
                ideal.describe() + " is not a proper ideal of " + ideal.ring().expr());
  }
}

void require_delta_ring(const Ideal& ideal, const ExpansionFn& delta) {
  if (!(delta.ring() == ideal.ring())) {
    throw Error(ErrorKind::ring_mismatch, "expansion " + delta.label() + " acts on " +
                                              delta.ring().expr() + ", ideal lives in " +
                                              ideal.ring().expr());
  }
}

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw Error(ErrorKind::bad_config, std::string(what) + " must be a positive integer");
  }
}

void require_cap(int n, int cap) {
  require_positive(n, "n");
  if (n > cap) {
    throw Error(ErrorKind::n_too_large, "n = " + std::to_string(n) +
                                            " exceeds the absorbing cap " + std::to_string(cap));
  }
}

/// Membership mask of δ(I), or of I itself when δ is absent.
std::vector<unsigned char> target_mask(const Ideal& ideal, const ExpansionFn* delta) {
  const FiniteRing& r = ideal.ring();
  std::vector<unsigned char> mask(r.size(), 0);
  if (delta == nullptr) {
    for (Index a : ideal.members()) mask[a] = 1;
  } else {
    require_delta_ring(ideal, *delta);
    const Ideal target = delta->eval(ideal);
    for (Index a : target.members()) mask[a] = 1;
  }
  return mask;
}

/// Visits tuples of length `len` over [0, range) in lexicographic order;
/// the first `sorted_len` positions are non-decreasing, the rest are free.
/// The visitor returns false to stop.
template <typename Visit>
void for_each_tuple(std::size_t range, std::size_t len, std::size_t sorted_len, Visit&& visit) {
  std::vector<Index> t(len, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (pos == len) return visit(t);
    const Index start = (pos > 0 && pos < sorted_len) ? t[pos - 1] : 0;
    for (Index v = start; v < range; ++v) {
      t[pos] = v;
      if (!rec(pos + 1)) return false;
    }
    return true;
  };
  if (len == 0) {
    visit(t);
    return;
  }
  rec(0);
}

Index product_omitting(const FiniteRing& r, const std::vector<Index>& t, std::size_t skip) {
  Index p = r.one();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != skip) p = r.mul(p, t[i]);
  }
  return p;
}

}  // namespace

std::string mn_entry_name(MNParams p, bool weakly, const std::string& delta_label) {
  std::string name = weakly ? "weakly-" : "";
  name += "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")-closed";
  if (!delta_label.empty()) name += "-δ_" + delta_label;
  return name;
}

Verdict classify_mn(const Ideal& ideal, MNParams p, const ExpansionFn* delta, bool weakly) {
  require_proper(ideal);
  require_positive(p.m, "m");
  require_positive(p.n, "n");
  const FiniteRing& r = ideal.ring();
  const auto target = target_mask(ideal, delta);
  for (Index a = 0; a < r.size(); ++a) {
    const Index am = r.pow(a, static_cast<std::uint64_t>(p.m));
    if (!ideal.contains(am)) continue;
    if (weakly && am == r.zero()) continue;
    if (!target[r.pow(a, static_cast<std::uint64_t>(p.n))]) return Verdict{false, {a}, {}};
  }
  return {};
}

Verdict is_semi_n_absorbing(const Ideal& ideal, int n, const ExpansionFn* delta, bool weakly) {
  require_proper(ideal);
  require_positive(n, "n");
  const FiniteRing& r = ideal.ring();
  const auto target = target_mask(ideal, delta);
  for (Index a = 0; a < r.size(); ++a) {
    Index an = r.one();
    for (int k = 0; k < n; ++k) an = r.mul(an, a);
    const Index an1 = r.mul(an, a);
    if (ideal.contains(an1) && !(weakly && an1 == r.zero()) && !target[an]) {
      return Verdict{false, {a}, {}};
    }
  }
  return {};
}

Verdict is_delta_primary(const Ideal& ideal, const ExpansionFn& delta, bool weakly) {
  require_proper(ideal);
  const FiniteRing& r = ideal.ring();
  const auto target = target_mask(ideal, &delta);
  for (Index x = 0; x < r.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (Index y = 0; y < r.size(); ++y) {
      const Index xy = r.mul(x, y);
      if (!ideal.contains(xy) || (weakly && xy == r.zero())) continue;
      if (!target[y]) return Verdict{false, {x, y}, {}};
    }
  }
  return {};
}

Verdict is_n_absorbing(const Ideal& ideal, int n, bool weakly, int cap) {
  require_proper(ideal);
  require_cap(n, cap);
  const FiniteRing& r = ideal.ring();
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  Verdict verdict;
  // The property is symmetric, so the first violating tuple is non-decreasing.
  for_each_tuple(r.size(), len, len, [&](const std::vector<Index>& t) {
    const Index full = product_omitting(r, t, len);
    if (!ideal.contains(full) || (weakly && full == r.zero())) return true;
    for (std::size_t k = 0; k < len; ++k) {
      if (ideal.contains(product_omitting(r, t, k))) return true;
    }
    verdict = Verdict{false, t, {}};
    return false;
  });
  return verdict;
}

Verdict is_prime(const Ideal& ideal, bool weakly) { return is_n_absorbing(ideal, 1, weakly, 1); }

LatticeProducts::LatticeProducts(LatticePtr lattice)
    : lattice_(std::move(lattice)), n_(lattice_->size()), table_(n_ * n_, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const std::size_t k = lattice_->index_of(ideal_product((*lattice_)[i], (*lattice_)[j]));
      table_[i * n_ + j] = k;
      table_[j * n_ + i] = k;
    }
  }
}

Verdict is_strongly_n_absorbing(const LatticeProducts& products, const Ideal& ideal, int n,
                                bool weakly, int cap) {
  require_proper(ideal);
  require_cap(n, cap);
  const IdealLattice& lat = products.lattice();
  if (!(lat.ring() == ideal.ring())) {
    throw Error(ErrorKind::ring_mismatch, "lattice and ideal belong to different rings");
  }
  std::vector<unsigned char> inside(lat.size(), 0);
  for (std::size_t i = 0; i < lat.size(); ++i) inside[i] = lat[i].subset_of(ideal) ? 1 : 0;
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  auto prod = [&](const std::vector<Index>& t, std::size_t skip) {
    std::size_t p = lat.unit_index();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i != skip) p = products(p, t[i]);
    }
    return p;
  };
  Verdict verdict;
  for_each_tuple(lat.size(), len, len, [&](const std::vector<Index>& t) {
    const std::size_t full = prod(t, len);
    if (!inside[full] || (weakly && full == lat.zero_index())) return true;
    for (std::size_t k = 0; k < len; ++k) {
      if (inside[prod(t, k)]) return true;
    }
    verdict.holds = false;
    verdict.ideal_witness.assign(t.begin(), t.end());
    return false;
  });
  return verdict;
}

Verdict is_n_absorbing_delta_primary(const Ideal& ideal, int n, const ExpansionFn& delta,
                                     bool weakly, int cap) {
  require_proper(ideal);
  require_cap(n, cap);
  const FiniteRing& r = ideal.ring();
  const auto target = target_mask(ideal, &delta);
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  // Positions 1..n (1-based) enter the conclusion symmetrically.
  const std::size_t sorted_len = static_cast<std::size_t>(n);
  Verdict verdict;
  for_each_tuple(r.size(), len, sorted_len, [&](const std::vector<Index>& t) {
    const Index full = product_omitting(r, t, len);
    if (!ideal.contains(full) || (weakly && full == r.zero())) return true;
    if (ideal.contains(product_omitting(r, t, len - 1))) return true;
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      if (target[product_omitting(r, t, k)]) return true;
    }
    verdict = Verdict{false, t, {}};
    return false;
  });
  return verdict;
}

std::vector<Index> unbreakable_zero_set(const Ideal& ideal, const ExpansionFn& delta, MNParams p) {
  require_positive(p.m, "m");
  require_positive(p.n, "n");
  const FiniteRing& r = ideal.ring();
  const auto target = target_mask(ideal, &delta);
  std::vector<Index> out;
  for (Index a = 0; a < r.size(); ++a) {
    if (r.pow(a, static_cast<std::uint64_t>(p.m)) == r.zero() &&
        !target[r.pow(a, static_cast<std::uint64_t>(p.n))]) {
      out.push_back(a);
    }
  }
  return out;
}

const ClassEntry* ClassificationReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

ClassificationReport classify_full(const Ideal& ideal, const ExpansionFn& delta, MNParams p,
                                   const ClassifyOptions& options) {
  require_proper(ideal);
  require_delta_ring(ideal, delta);
  require_positive(p.m, "m");
  require_positive(p.n, "n");
  const FiniteRing& r = ideal.ring();

  ClassificationReport report;
  report.ring = r.expr();
  report.ideal_gens = ideal.gens_string();
  for (Index a : ideal.members()) report.ideal_members.push_back(r.label(a));
  report.delta = delta.label();
  report.params = p;
  if (delta.sampled_validation()) {
    report.notes.push_back("expansion axioms were validated on a sample of ideal pairs");
  }

  auto element_entry = [&](std::string name, const Verdict& v) {
    ClassEntry e{std::move(name), v.holds, v.witness, {}};
    for (Index a : v.witness) e.witness_labels.push_back(r.label(a));
    report.entries.push_back(std::move(e));
  };
  const std::string& dl = delta.label();

  auto mn_pair = [&](MNParams q) {
    element_entry(mn_entry_name(q, true, dl), classify_mn(ideal, q, &delta, true));
    element_entry(mn_entry_name(q, false, dl), classify_mn(ideal, q, &delta, false));
  };
  mn_pair(p);
  element_entry(mn_entry_name(p, true, ""), classify_mn(ideal, p, nullptr, true));
  element_entry(mn_entry_name(p, false, ""), classify_mn(ideal, p, nullptr, false));

  const int grid_m = std::max(options.grid_max_m, p.m);
  for (int m = 2; m <= grid_m; ++m) {
    for (int n = 1; n < m; ++n) {
      if (m == p.m && n == p.n) continue;
      mn_pair(MNParams{m, n});
    }
  }

  const std::string sn = std::to_string(p.n);
  element_entry("weakly-semi-" + sn + "-absorbing-δ_" + dl,
                is_semi_n_absorbing(ideal, p.n, &delta, true));
  element_entry("semi-" + sn + "-absorbing-δ_" + dl,
                is_semi_n_absorbing(ideal, p.n, &delta, false));
  element_entry("weakly-δ_" + dl + "-primary", is_delta_primary(ideal, delta, true));
  element_entry("δ_" + dl + "-primary", is_delta_primary(ideal, delta, false));
  element_entry("weakly-prime", is_prime(ideal, true));
  element_entry("prime", is_prime(ideal, false));

  if (p.n <= options.absorbing_cap) {
    element_entry("weakly-" + sn + "-absorbing",
                  is_n_absorbing(ideal, p.n, true, options.absorbing_cap));
    element_entry(sn + "-absorbing", is_n_absorbing(ideal, p.n, false, options.absorbing_cap));
    const LatticeProducts products(delta.lattice());
    for (bool weakly : {true, false}) {
      Verdict v = is_strongly_n_absorbing(products, ideal, p.n, weakly, options.absorbing_cap);
      ClassEntry e{std::string(weakly ? "weakly-" : "") + "strongly-" + sn + "-absorbing",
                   v.holds,
                   {},
                   {}};
      for (std::size_t i : v.ideal_witness) {
        e.witness_labels.push_back((*delta.lattice())[i].gens_string());
      }
      report.entries.push_back(std::move(e));
    }
    element_entry("weakly-" + sn + "-absorbing-δ_" + dl + "-primary",
                  is_n_absorbing_delta_primary(ideal, p.n, delta, true, options.absorbing_cap));
    element_entry(sn + "-absorbing-δ_" + dl + "-primary",
                  is_n_absorbing_delta_primary(ideal, p.n, delta, false, options.absorbing_cap));
  } else {
    report.notes.push_back("n-absorbing predicates skipped: n exceeds the absorbing cap " +
                           std::to_string(options.absorbing_cap));
  }

  report.unbreakable = unbreakable_zero_set(ideal, delta, p);
  for (Index a : report.unbreakable) report.unbreakable_labels.push_back(r.label(a));
  return report;
}

}  // namespace ringlab
