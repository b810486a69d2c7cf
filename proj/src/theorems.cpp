#include "ringlab/theorems.hpp"

#include <algorithm>
#include <chrono>

#include "theorem_support.hpp"

namespace ringlab {

namespace {

const std::vector<detail::Registered>& registry() {
  static const std::vector<detail::Registered> reg = [] {
    std::vector<detail::Registered> out;
    detail::register_core(out);
    detail::register_structural(out);
    detail::register_amalgam(out);
    detail::register_known_false(out);
    return out;
  }();
  return reg;
}

const detail::Registered& lookup(const std::string& id) {
  for (const auto& r : registry()) {
    if (r.info.id == id) return r;
  }
  throw Error(ErrorKind::unknown_theorem, "no theorem registered as '" + id + "'");
}

}  // namespace

std::vector<TheoremInfo> list_theorems() {
  std::vector<TheoremInfo> out;
  for (const auto& r : registry()) out.push_back(r.info);
  return out;
}

bool is_registered(const std::string& id) {
  return std::any_of(registry().begin(), registry().end(),
                     [&](const auto& r) { return r.info.id == id; });
}

TheoremReport verify_theorem(const std::string& id, const CatalogContext& context,
                             const VerifyOptions& options) {
  return verify_theorems({id}, context, options).front();
}

std::vector<TheoremReport> verify_theorems(const std::vector<std::string>& ids,
                                           const CatalogContext& context,
                                           const VerifyOptions& options) {
  std::vector<const detail::Registered*> chosen;
  for (const auto& id : ids) chosen.push_back(&lookup(id));

  std::vector<detail::Task> all;
  std::vector<std::size_t> offsets{0};
  for (const auto* reg : chosen) {
    auto tasks = reg->build(context);
    for (auto& t : tasks) all.push_back(std::move(t));
    offsets.push_back(all.size());
  }
  std::vector<double> seconds(all.size(), 0.0);
  std::vector<detail::Task> timed;
  timed.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    timed.push_back([&, i] {
      const auto start = std::chrono::steady_clock::now();
      auto out = all[i]();
      seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return out;
    });
  }
  const auto results = detail::run_tasks(timed, options.workers);

  std::vector<TheoremReport> reports;
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    TheoremReport report;
    report.info = chosen[t]->info;
    report.min_hits = context.catalog().min_hits;
    const std::vector<detail::Outcomes> slice(results.begin() + offsets[t],
                                              results.begin() + offsets[t + 1]);
    detail::tally(report, slice);
    for (std::size_t i = offsets[t]; i < offsets[t + 1]; ++i) report.wall_seconds += seconds[i];
    reports.push_back(std::move(report));
  }
  return reports;
}

bool product_prediction(const Ideal& j1, const Ideal& j2, const ExpansionFn& d1,
                        const ExpansionFn& d2, MNParams p) {
  if (!j1.proper() && !j2.proper()) {
    throw Error(ErrorKind::improper_ideal, "J1×J2 is the whole ring");
  }
  using detail::closed;
  if (!j2.proper()) return closed(j1, &d1, p);
  if (!j1.proper()) return closed(j2, &d2, p);
  if (closed(j1, &d1, p) && closed(j2, &d2, p)) return true;

  return detail::product_branch(j1, d1, j2, d2, p) || detail::product_branch(j2, d2, j1, d1, p);
}

}  // namespace ringlab
