#pragma once

#include <cstddef>

namespace ringlab {

inline constexpr std::size_t kDefaultSizeBound = 4096;
// Element tables are stored as 16-bit indices.
inline constexpr std::size_t kMaxSizeBound = 65536;
// Above this ring size, expansion axioms are validated on a sample of ideal pairs.
inline constexpr std::size_t kExhaustiveAxiomLimit = 512;
inline constexpr int kDefaultAbsorbingCap = 3;

/// Largest ring any construction may produce. Initialised from the
/// RINGLAB_SIZE_BOUND environment variable on first use.
std::size_t size_bound();
void set_size_bound(std::size_t bound);

}  // namespace ringlab
