#include "ringlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ringlab {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

/// Code points, which is the column count for the symbols we print.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::vector<std::string> labels_of(const Ideal& ideal) {
  std::vector<std::string> out;
  for (Index a : ideal.members()) out.push_back(ideal.ring().label(a));
  return out;
}

std::string status_of(const TheoremReport& r) {
  if (r.info.expected_false) return r.counterexamples.empty() ? "not-refuted" : "refuted";
  if (!r.counterexamples.empty()) return "counterexample";
  if (r.insufficient_hits()) return "insufficient-hits";
  return "pass";
}

Json counterexample_json(const Counterexample& c) {
  return Json{{"ring", c.ring},         {"ring_size", c.ring_size}, {"ideal", c.ideal},
              {"delta", c.delta},       {"m", c.m},                 {"n", c.n},
              {"witness", c.witness},   {"witness_labels", c.witness_labels},
              {"detail", c.detail}};
}

Json report_json(const TheoremReport& r) {
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(counterexample_json(c));
  return Json{{"id", r.info.id},
              {"anchor", r.info.anchor},
              {"statement", r.info.statement},
              {"expected_false", r.info.expected_false},
              {"status", status_of(r)},
              {"instances", r.instances},
              {"hypothesis_hits", r.hypothesis_hits},
              {"passes", r.passes},
              {"vacuous", r.vacuous},
              {"skipped", r.skipped},
              {"counterexample_count", r.counterexamples.size()},
              {"counterexamples", cex}};
}

Json header_json(const VerifyHeader& h) {
  return Json{{"catalog", h.catalog},
              {"seed", h.seed},
              {"max_m", h.max_m},
              {"absorbing_max_n", h.absorbing_max_n},
              {"min_hits", h.min_hits}};
}

void counterexample_text(std::ostringstream& out, const Counterexample& c) {
  out << "    " << c.ring << "  I=" << c.ideal << "  δ=" << c.delta << "  (m,n)=(" << c.m << ","
      << c.n << ")";
  if (!c.witness_labels.empty()) out << "  witness " << join(c.witness_labels, ", ");
  out << "\n      " << c.detail << "\n";
}

constexpr std::size_t kTextCounterexamples = 5;

void report_text(std::ostringstream& out, const TheoremReport& r) {
  out << std::left << std::setw(10) << r.info.id << " " << std::setw(18) << status_of(r)
      << " instances=" << r.instances << " hits=" << r.hypothesis_hits
      << " passes=" << r.passes << " vacuous=" << r.vacuous << " skipped=" << r.skipped
      << " counterexamples=" << r.counterexamples.size() << " (" << std::fixed
      << std::setprecision(2) << r.wall_seconds << "s)\n";
  for (std::size_t i = 0; i < r.counterexamples.size() && i < kTextCounterexamples; ++i) {
    counterexample_text(out, r.counterexamples[i]);
  }
  if (r.counterexamples.size() > kTextCounterexamples) {
    out << "    ... " << r.counterexamples.size() - kTextCounterexamples << " more\n";
  }
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  throw Error(ErrorKind::bad_config, "unknown format '" + name + "' (text or json)");
}

std::string render_ring(const FiniteRing& ring, Format format) {
  std::vector<std::string> labels;
  for (Index a = 0; a < ring.size(); ++a) labels.push_back(ring.label(a));
  const Ideal nil = nilradical(ring);
  const Ideal jac = jacobson_radical(ring);
  if (format == Format::json) {
    return dump(Json{{"ring", ring.expr()},
                     {"size", ring.size()},
                     {"characteristic", characteristic(ring)},
                     {"elements", labels},
                     {"nilradical", labels_of(nil)},
                     {"jacobson_radical", labels_of(jac)}});
  }
  std::ostringstream out;
  out << "ring            " << ring.expr() << "\n"
      << "size            " << ring.size() << "\n"
      << "characteristic  " << characteristic(ring) << "\n"
      << "elements        ";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << i << ":" << labels[i];
  out << "\nNil(R)          " << nil.describe() << "\nJ(R)            " << jac.describe() << "\n";
  return out.str();
}

std::string render_lattice(const IdealLattice& lattice, Format format) {
  const auto primes = lattice.prime_ideals();
  const auto maximal = lattice.maximal_ideals();
  auto in = [](const std::vector<Ideal>& xs, const Ideal& i) {
    return std::find(xs.begin(), xs.end(), i) != xs.end();
  };
  if (format == Format::json) {
    Json list = Json::array();
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      const Ideal& i = lattice[k];
      list.push_back(Json{{"index", k},
                          {"generators", i.generators()},
                          {"members", labels_of(i)},
                          {"size", i.size()},
                          {"proper", i.proper()},
                          {"prime", in(primes, i)},
                          {"maximal", in(maximal, i)}});
    }
    return dump(Json{{"ring", lattice.ring().expr()}, {"ideals", list}});
  }
  std::ostringstream out;
  out << lattice.size() << " ideals of " << lattice.ring().expr() << "\n";
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const Ideal& i = lattice[k];
    out << "  [" << k << "] " << i.gens_string() << "  " << i.describe();
    if (!i.proper()) out << "  (unit)";
    if (in(maximal, i)) {
      out << "  maximal";
    } else if (in(primes, i)) {
      out << "  prime";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_classification(const ClassificationReport& report, const std::string& headline,
                                  Format format) {
  const ClassEntry* head = report.find(headline);
  if (format == Format::json) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      entries.push_back(Json{{"name", e.name},
                             {"holds", e.holds},
                             {"witness", e.witness},
                             {"witness_labels", e.witness_labels}});
    }
    Json j{{"ring", report.ring},
           {"ideal", report.ideal_gens},
           {"members", report.ideal_members},
           {"delta", report.delta},
           {"m", report.params.m},
           {"n", report.params.n},
           {"verdict", Json{{"name", headline}, {"holds", head ? head->holds : false}}},
           {"entries", entries},
           {"unbreakable", report.unbreakable},
           {"unbreakable_labels", report.unbreakable_labels},
           {"notes", report.notes}};
    return dump(j);
  }
  std::ostringstream out;
  out << "ring " << report.ring << ", I = " << report.ideal_gens << " = {"
      << join(report.ideal_members, ",") << "}, δ = " << report.delta << ", (m,n) = ("
      << report.params.m << "," << report.params.n << ")\n";
  if (head != nullptr) out << "verdict: " << head->name << " = " << (head->holds ? "true" : "false");
  if (head != nullptr && !head->holds) out << "  witness " << join(head->witness_labels, ", ");
  out << "\n\n";
  std::size_t width = 0;
  for (const auto& e : report.entries) width = std::max(width, display_width(e.name));
  for (const auto& e : report.entries) {
    out << "  " << pad(e.name, width) << "  "
        << (e.holds ? "true" : "false");
    if (!e.holds && !e.witness_labels.empty()) out << "  witness " << join(e.witness_labels, ", ");
    out << "\n";
  }
  out << "\nunbreakable-zero elements: {" << join(report.unbreakable_labels, ",") << "}\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

std::string render_theorem_reports(const VerifyHeader& header,
                                   const std::vector<TheoremReport>& reports, Format format) {
  if (format == Format::json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    Json j = header_json(header);
    j["theorems"] = list;
    return dump(j);
  }
  std::ostringstream out;
  out << "catalog " << header.catalog << ", m ≤ " << header.max_m << ", absorbing n ≤ "
      << header.absorbing_max_n << ", min hits " << header.min_hits << "\n";
  double total = 0;
  std::size_t bad = 0;
  for (const auto& r : reports) {
    report_text(out, r);
    total += r.wall_seconds;
    if (!r.as_expected()) ++bad;
  }
  out << reports.size() << " theorems, " << bad << " not as expected, " << std::fixed
      << std::setprecision(2) << total << "s\n";
  return out.str();
}

std::string render_fuzz(const VerifyHeader& header, const TheoremReport& report, Format format) {
  if (format == Format::json) {
    Json j = header_json(header);
    j["conjecture"] = report.info.statement;
    Json r = report_json(report);
    r.erase("anchor");
    r.erase("expected_false");
    r.erase("status");
    j["report"] = r;
    return dump(j);
  }
  std::ostringstream out;
  out << "conjecture: " << report.info.statement << "\n"
      << "instances=" << report.instances << " hits=" << report.hypothesis_hits
      << " passes=" << report.passes << " vacuous=" << report.vacuous
      << " skipped=" << report.skipped << " counterexamples=" << report.counterexamples.size()
      << "\n";
  if (!report.counterexamples.empty()) {
    out << "minimal counterexample:\n";
    counterexample_text(out, report.counterexamples.front());
  }
  return out.str();
}

std::string render_theorem_list(const std::vector<TheoremInfo>& list, Format format) {
  if (format == Format::json) {
    Json arr = Json::array();
    for (const auto& t : list) {
      arr.push_back(Json{{"id", t.id},
                         {"anchor", t.anchor},
                         {"statement", t.statement},
                         {"expected_false", t.expected_false}});
    }
    return dump(arr);
  }
  std::ostringstream out;
  for (const auto& t : list) {
    out << std::left << std::setw(10) << t.id << (t.expected_false ? " [known false] " : " ")
        << t.statement << "\n           " << t.anchor << "\n";
  }
  return out.str();
}

}  // namespace ringlab
