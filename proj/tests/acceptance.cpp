// One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ringlab/cli.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/theorems.hpp"

using namespace ringlab;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  double seconds;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ringlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {code, out.str() + err.str(), s};
}

std::optional<Json> entry(const Json& report, const std::string& name) {
  for (const auto& e : report["entries"]) {
    if (e["name"] == name) return e;
  }
  return std::nullopt;
}

struct Result {
  bool ok;
  std::string detail;
};

Result criterion1() {
  const Run a = cli({"classify", "Z8", "--ideal", "{0,4}", "--format", "json"});
  const Run b = cli({"classify", "Z4", "--ideal", "{0}", "--format", "json"});
  if (a.code != 0 || b.code != 0) return {false, "classify failed"};
  const Json ja = Json::parse(a.out), jb = Json::parse(b.out);
  const auto w31 = entry(ja, "weakly-(3,1)-closed-δ_id");
  const auto w21 = entry(ja, "weakly-(2,1)-closed-δ_id");
  const auto z_w21 = entry(jb, "weakly-(2,1)-closed-δ_id");
  const auto z_c21 = entry(jb, "(2,1)-closed-δ_id");
  const bool ok = w31 && (*w31)["holds"] == true && w21 && (*w21)["holds"] == false &&
                  (*w21)["witness"] == Json::array({2}) && z_w21 && (*z_w21)["holds"] == true &&
                  z_c21 && (*z_c21)["holds"] == false;
  const double t = a.seconds + b.seconds;
  return {ok && t < 1.0, "Z8 {0,4}: weakly-(3,1)=true, weakly-(2,1)=false witness 2; Z4 (0): "
                         "weakly-(2,1)=true, (2,1)=false; " + std::to_string(t) + "s"};
}

Result criterion2() {
  std::string found;
  double t = 0;
  bool ok = true;
  for (const char* id : {"F-EX35", "F-RMK45"}) {
    const Run r = cli({"verify", "--theorem", id, "--format", "json"});
    t += r.seconds;
    const Json j = Json::parse(r.out);
    bool hit = false;
    for (const auto& c : j["theorems"][0]["counterexamples"]) {
      const std::string delta = c["delta"];
      const std::string detail = c["detail"];
      if (delta.find("rad") != std::string::npos && detail.rfind("2 ∈ √(0) in Z8", 0) == 0) hit = true;
    }
    ok = ok && hit && r.code == 1;
    found += std::string(id) + (hit ? " witness ok; " : " witness missing; ");
  }
  return {ok && t < 1.0, found + std::to_string(t) + "s"};
}

Result criterion3() {
  const Run r = cli({"verify", "--catalog", "small", "--workers", "1", "--format", "json"});
  const Json j = Json::parse(r.out);
  std::size_t n = 0, bad = 0;
  for (const auto& t : j["theorems"]) {
    ++n;
    if (!t["counterexamples"].empty() || t["hypothesis_hits"].get<std::size_t>() < 5) ++bad;
  }
  const bool params = j["max_m"] == 4 && j["absorbing_max_n"] == 3 && j["min_hits"] == 5;
  return {r.code == 0 && bad == 0 && params && n >= 24 && r.seconds < 120.0,
          std::to_string(n) + " theorems, " + std::to_string(bad) + " failing, " +
              std::to_string(r.seconds) + "s single worker"};
}

Result criterion4() {
  const Run r = cli({"verify", "--theorem", "F-W2C", "--catalog", "small", "--format", "json"});
  const Json j = Json::parse(r.out);
  std::size_t smallest = 0;
  for (const auto& c : j["theorems"][0]["counterexamples"]) {
    const std::size_t s = c["ring_size"];
    if (smallest == 0 || s < smallest) smallest = s;
  }
  return {r.code == 1 && smallest > 0 && smallest <= 4,
          "smallest counterexample ring size " + std::to_string(smallest) + ", exit " +
              std::to_string(r.code)};
}

Result criterion5() {
  const CatalogContext ctx(Catalog::small());
  std::size_t total = 0, agree = 0;
  for (const auto& e : ctx.entries()) {
    if (!e.ring.is_product()) continue;
    const ProductInfo& info = e.ring.product_info();
    const auto l1 = enumerate_ideals(info.left), l2 = enumerate_ideals(info.right);
    for (std::size_t k : e.proper) {
      const Ideal& I = (*e.lattice)[k];
      std::vector<Index> a, b;
      for (Index x : I.members()) {
        a.push_back(info.left_of(x));
        b.push_back(info.right_of(x));
      }
      const Ideal j1 = ideal_closure(info.left, a), j2 = ideal_closure(info.right, b);
      for (const ExpansionFn& d1 : {identity_delta(l1), radical_delta(l1)}) {
        for (const ExpansionFn& d2 : {identity_delta(l2), radical_delta(l2)}) {
          const ExpansionFn d = delta_product(d1, d2, e.lattice);
          for (int m = 2; m <= 4; ++m) {
            for (int n = 1; n < m; ++n) {
              ++total;
              agree += classify_mn(I, {m, n}, &d, true).holds ==
                       product_prediction(j1, j2, d1, d2, {m, n});
            }
          }
        }
      }
    }
  }
  return {total > 0 && agree == total,
          std::to_string(agree) + "/" + std::to_string(total) + " product instances agree"};
}

Result criterion6() {
  const CatalogContext ctx(Catalog::small());
  bool sizes = true;
  std::size_t amalgams = 0;
  for (const auto& e : ctx.entries()) {
    if (!e.ring.is_amalgamation()) continue;
    const Amalgam am(e.ring);
    sizes = sizes && e.ring.size() == am.A().size() * am.J().size();
    ++amalgams;
  }
  const FiniteRing t = parse_ring("triv(Z2,M[2])");
  const FiniteRing corr = parse_ring("amal(Z2,triv(Z2,M[2]),inj,{1})");
  const bool iso = find_isomorphism(t, corr).has_value();
  const std::size_t odds = parse_ring("loc(Z12,{1,3,5,7,9,11})").size();
  const Index two[] = {2};
  const std::size_t at2 =
      localize(zmod(12), MultSet::complement_of(ideal_closure(zmod(12), two))).ring.size();
  const FiniteRing z12 = zmod(12);
  const Index three[] = {3};
  const std::size_t at3 =
      localize(z12, MultSet::complement_of(ideal_closure(z12, three))).ring.size();
  return {sizes && amalgams > 0 && iso && odds == 4 && at2 == 4 && at3 == 3,
          "|A⋈J|=|A||J| on " + std::to_string(amalgams) + " amalgams; triv ≅ amal: " +
              (iso ? "yes" : "no") + "; loc(Z12, odds) has " + std::to_string(odds) +
              " elements (complement of (2): " + std::to_string(at2) +
              "); localization at the complement of (3) has " + std::to_string(at3)};
}

Result criterion7() {
  const CatalogContext ctx(Catalog::small());
  std::size_t checked = 0, broken = 0;
  for (const auto& e : ctx.entries()) {
    for (const ExpansionFn& d : e.deltas) {
      ++checked;
      const AxiomCheck c = check_expansion_axioms(*e.lattice, [&](const Ideal& i) {
        return d.defined_at(i) ? std::optional(d.eval(i)) : std::nullopt;
      });
      if (!c.holds) ++broken;
    }
  }
  for (const char* expr : {"comp(rad,addk({4}))", "q(rad)", "prod(rad,id)", "plus(rad)",
                           "bow(rad,rad)"}) {
    const char* ring = expr[0] == 'q'   ? "quot(Z16,{8})"
                       : expr[0] == 'p' ? (expr[1] == 'r' ? "Z2xZ4" : "triv(Z4,M[4])")
                       : expr[0] == 'b' ? "amal(Z4,Z4,id,{2})"
                                        : "Z12";
    const FiniteRing r = parse_ring(ring);
    const auto lat = enumerate_ideals(r);
    const ExpansionFn d = parse_delta(expr, r, lat);
    ++checked;
    if (!check_expansion_axioms(*lat, [&](const Ideal& i) {
          return d.defined_at(i) ? std::optional(d.eval(i)) : std::nullopt;
        })) {
      ++broken;
    }
  }
  bool fip_zn = true;
  for (const auto& e : ctx.entries()) {
    if (!e.ring.is_zmod()) continue;
    fip_zn = fip_zn && check_fip(e.deltas[0]).holds && check_fip(e.deltas[1]).holds;
  }
  const FiniteRing m3 = parse_ring("triv(Z2,M[2,2])");
  const auto lat = enumerate_ideals(m3);
  // Lines of 0(+)M: L1 = (2) is absorbed by addk, the other two witness the failure.
  const AxiomCheck fip = check_fip(parse_delta("addk({2})", m3, lat));
  auto line = [&](Index g) {
    const Index gens[] = {g};
    return lat->index_of(ideal_closure(m3, gens));
  };
  const std::set<std::size_t> others{line(1), line(3)};
  const bool lines_ok =
      fip.violation && fip.violation->second &&
      std::set<std::size_t>{fip.violation->first, *fip.violation->second} == others;
  const bool witness = !fip.holds && lines_ok && check_fip(identity_delta(lat)).holds &&
                       check_fip(radical_delta(lat)).holds;
  return {broken == 0 && fip_zn && witness,
          std::to_string(checked) + " expansions checked, " + std::to_string(broken) +
              " violate axioms; FIP on Z_n id/rad: " + (fip_zn ? "true" : "false") +
              "; M_3 witness FIP false: " + (witness ? "yes" : "no")};
}

Result criterion8() {
  const Run a = cli({"verify", "--catalog", "small", "--seed", "7", "--workers", "1", "--format",
                     "json"});
  const Run b = cli({"verify", "--catalog", "small", "--seed", "7", "--workers", "4", "--format",
                     "json"});
  return {a.out == b.out && !a.out.empty(),
          "workers 1 vs 4: " + std::string(a.out == b.out ? "identical" : "different") + " (" +
              std::to_string(a.out.size()) + " bytes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"worked example reproduction", criterion1},
      {"rad-variant witnesses", criterion2},
      {"theorem suite on the small catalog", criterion3},
      {"known-false suite", criterion4},
      {"product decision logic agrees with direct classification", criterion5},
      {"construction invariants", criterion6},
      {"expansion axioms and finite intersection property", criterion7},
      {"determinism across worker counts", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r{false, ""};
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.ok) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "  [" << r.detail << "]\n";
  }
  return failures == 0 ? 0 : 1;
}
