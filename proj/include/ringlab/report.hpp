#pragma once

#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

enum class Format { text, json };

Format parse_format(const std::string& name);

/// Ring summary: expression, size, characteristic, labels, radicals.
std::string render_ring(const FiniteRing& ring, Format format);

std::string render_lattice(const IdealLattice& lattice, Format format);

/// `headline` names the entry whose verdict is printed first.
std::string render_classification(const ClassificationReport& report, const std::string& headline,
                                  Format format);

struct VerifyHeader {
  std::string catalog;
  std::uint64_t seed = 0;
  int max_m = 4;
  int absorbing_max_n = 3;
  std::size_t min_hits = 5;
};

/// Machine-readable output omits wall time so that reports are
/// reproducible byte for byte.
std::string render_theorem_reports(const VerifyHeader& header,
                                   const std::vector<TheoremReport>& reports, Format format);

std::string render_fuzz(const VerifyHeader& header, const TheoremReport& report, Format format);

std::string render_theorem_list(const std::vector<TheoremInfo>& list, Format format);

}  // namespace ringlab
