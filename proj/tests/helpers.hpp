#pragma once

#include <vector>

#include "oracles.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/ideal.hpp"

namespace testing {

inline oracle::Set to_set(const ringlab::Ideal& ideal) {
  oracle::Set s(ideal.ring().size(), false);
  for (auto a : ideal.members()) s[a] = true;
  return s;
}

inline std::vector<int> members(const ringlab::Ideal& ideal) {
  return {ideal.members().begin(), ideal.members().end()};
}

inline ringlab::Ideal gen(const ringlab::FiniteRing& r, std::vector<ringlab::Index> gens) {
  return ringlab::ideal_closure(r, gens);
}

/// Library ring and oracle ring built independently for the same expression.
struct Pair {
  ringlab::FiniteRing lib;
  oracle::Ring ref;
};

inline std::vector<Pair> oracle_catalog() {
  using oracle::prod;
  using oracle::triv;
  using oracle::zn;
  std::vector<Pair> out;
  for (int n = 2; n <= 16; ++n) out.push_back({ringlab::parse_ring("Z" + std::to_string(n)), zn(n)});
  out.push_back({ringlab::parse_ring("Z2xZ2"), prod(zn(2), zn(2))});
  out.push_back({ringlab::parse_ring("Z2xZ4"), prod(zn(2), zn(4))});
  out.push_back({ringlab::parse_ring("Z4xZ2"), prod(zn(4), zn(2))});
  out.push_back({ringlab::parse_ring("Z3xZ3"), prod(zn(3), zn(3))});
  out.push_back({ringlab::parse_ring("Z2xZ3"), prod(zn(2), zn(3))});
  out.push_back({ringlab::parse_ring("triv(Z2,M[2])"), triv(2, {2})});
  out.push_back({ringlab::parse_ring("triv(Z2,M[2,2])"), triv(2, {2, 2})});
  out.push_back({ringlab::parse_ring("triv(Z4,M[2])"), triv(4, {2})});
  out.push_back({ringlab::parse_ring("triv(Z4,M[4])"), triv(4, {4})});
  out.push_back({ringlab::parse_ring("triv(Z3,M[3])"), triv(3, {3})});
  return out;
}

/// Checks that the library tables agree with the oracle arithmetic.
inline bool same_tables(const Pair& p) {
  if (static_cast<int>(p.lib.size()) != p.ref.size) return false;
  for (int a = 0; a < p.ref.size; ++a) {
    for (int b = 0; b < p.ref.size; ++b) {
      if (static_cast<int>(p.lib.add(a, b)) != p.ref.add(a, b)) return false;
      if (static_cast<int>(p.lib.mul(a, b)) != p.ref.mul(a, b)) return false;
    }
  }
  return static_cast<int>(p.lib.one()) == p.ref.one && static_cast<int>(p.lib.zero()) == p.ref.zero;
}

}  // namespace testing
