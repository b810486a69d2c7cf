#pragma once

// Brute-force reference implementations. Rings are rebuilt from integer
// arithmetic (never from library tables) using the documented element
// orders, so results can be compared index for index.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::vector<bool>;

struct Ring {
  int size = 0;
  std::function<int(int, int)> add;
  std::function<int(int, int)> mul;
  int zero = 0;
  int one = 0;

  int pow(int a, int k) const {
    int r = one;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
};

inline Ring zn(int n) {
  return Ring{n, [n](int a, int b) { return (a + b) % n; },
              [n](int a, int b) { return (a * b) % n; }, 0, 1 % n};
}

/// Element l*|B| + r.
inline Ring prod(const Ring& a, const Ring& b) {
  const int nb = b.size;
  return Ring{a.size * nb,
              [=](int x, int y) { return a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb); },
              [=](int x, int y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); },
              0, a.one * nb + b.one};
}

/// Z_n(+)(Z_{d1}+...+Z_{dr}); element r*|M| + m, m mixed radix with the
/// first coordinate most significant.
inline Ring triv(int n, std::vector<int> shape) {
  int msize = 1;
  for (int d : shape) msize *= d;
  auto decode = [shape](int m) {
    std::vector<int> c(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
      c[i] = m % shape[i];
      m /= shape[i];
    }
    return c;
  };
  auto encode = [shape](const std::vector<int>& c) {
    int m = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) m = m * shape[i] + c[i];
    return m;
  };
  auto add = [=](int x, int y) {
    auto a = decode(x % msize), b = decode(y % msize);
    for (std::size_t i = 0; i < shape.size(); ++i) a[i] = (a[i] + b[i]) % shape[i];
    return ((x / msize + y / msize) % n) * msize + encode(a);
  };
  auto mul = [=](int x, int y) {
    const int r1 = x / msize, r2 = y / msize;
    auto a = decode(x % msize), b = decode(y % msize);
    std::vector<int> c(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) c[i] = (r1 * b[i] + r2 * a[i]) % shape[i];
    return ((r1 * r2) % n) * msize + encode(c);
  };
  return Ring{n * msize, add, mul, 0, (1 % n) * msize};
}

inline Set members_to_set(const Ring& r, const std::vector<int>& members) {
  Set s(r.size, false);
  for (int a : members) s[a] = true;
  return s;
}

inline std::vector<int> set_to_members(const Set& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i]) out.push_back(i);
  }
  return out;
}

inline bool is_ideal(const Ring& r, const Set& s) {
  if (!s[r.zero]) return false;
  for (int a = 0; a < r.size; ++a) {
    if (!s[a]) continue;
    for (int b = 0; b < r.size; ++b) {
      if (s[b] && !s[r.add(a, b)]) return false;
      if (!s[r.mul(a, b)]) return false;
    }
  }
  return true;
}

/// Every subset containing 0, filtered by the ideal laws. Sizes ≤ 16.
inline std::vector<Set> all_ideals(const Ring& r) {
  std::vector<Set> out;
  const int free = r.size - 1;
  for (std::uint32_t mask = 0; mask < (1u << free); ++mask) {
    Set s(r.size, false);
    s[0] = true;
    for (int i = 0; i < free; ++i) {
      if (mask & (1u << i)) s[i + 1] = true;
    }
    if (is_ideal(r, s)) out.push_back(s);
  }
  return out;
}

/// Smallest ideal containing gens: all finite sums of multiples.
inline Set closure(const Ring& r, const std::vector<int>& gens) {
  Set s(r.size, false);
  s[r.zero] = true;
  for (int g : gens) {
    for (int x = 0; x < r.size; ++x) s[r.mul(g, x)] = true;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < r.size; ++a) {
      for (int b = 0; b < r.size && s[a]; ++b) {
        if (s[b] && !s[r.add(a, b)]) {
          s[r.add(a, b)] = true;
          grew = true;
        }
      }
    }
  }
  return s;
}

inline bool proper(const Ring& r, const Set& s) { return !s[r.one]; }

inline Set radical(const Ring& r, const Set& i) {
  Set out(r.size, false);
  for (int a = 0; a < r.size; ++a) {
    int p = a;
    for (int k = 1; k <= r.size + 1; ++k, p = r.mul(p, a)) {
      if (i[p]) {
        out[a] = true;
        break;
      }
    }
  }
  return out;
}

inline Set nilradical(const Ring& r) {
  Set zero(r.size, false);
  zero[r.zero] = true;
  return radical(r, zero);
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

/// Intersection of the maximal members of the ideal list.
inline Set jacobson(const Ring& r, const std::vector<Set>& ideals) {
  Set out(r.size, true);
  for (const auto& m : ideals) {
    if (!proper(r, m)) continue;
    bool maximal = true;
    for (const auto& other : ideals) {
      if (other != m && proper(r, other) && subset(m, other)) maximal = false;
    }
    if (maximal) out = intersect(out, m);
  }
  return out;
}

inline int characteristic(const Ring& r) {
  int x = r.one;
  for (int k = 1; k <= r.size; ++k) {
    if (x == r.zero) return k;
    x = r.add(x, r.one);
  }
  return 0;
}

/// Least a violating the (m,n)-closed condition against `target`.
inline std::optional<int> closed_violation(const Ring& r, const Set& i, const Set& target, int m,
                                           int n, bool weakly) {
  for (int a = 0; a < r.size; ++a) {
    const int am = r.pow(a, m);
    if (!i[am]) continue;
    if (weakly && am == r.zero) continue;
    if (!target[r.pow(a, n)]) return a;
  }
  return std::nullopt;
}

inline bool closed(const Ring& r, const Set& i, const Set& target, int m, int n, bool weakly) {
  return !closed_violation(r, i, target, m, n, weakly).has_value();
}

inline bool delta_primary(const Ring& r, const Set& i, const Set& target, bool weakly) {
  for (int x = 0; x < r.size; ++x) {
    for (int y = 0; y < r.size; ++y) {
      const int p = r.mul(x, y);
      if (!i[p] || (weakly && p == r.zero)) continue;
      if (!i[x] && !target[y]) return false;
    }
  }
  return true;
}

inline void tuples(int range, int len, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> t(len, 0);
  while (true) {
    if (!f(t)) return;
    int k = len - 1;
    while (k >= 0 && ++t[k] == range) t[k--] = 0;
    if (k < 0) return;
  }
}

inline int product_without(const Ring& r, const std::vector<int>& t, int skip) {
  int p = r.one;
  for (int k = 0; k < static_cast<int>(t.size()); ++k) {
    if (k != skip) p = r.mul(p, t[k]);
  }
  return p;
}

inline bool n_absorbing(const Ring& r, const Set& i, int n, bool weakly) {
  bool ok = true;
  tuples(r.size, n + 1, [&](const std::vector<int>& t) {
    const int p = product_without(r, t, -1);
    if (!i[p] || (weakly && p == r.zero)) return true;
    for (int k = 0; k <= n; ++k) {
      if (i[product_without(r, t, k)]) return true;
    }
    ok = false;
    return false;
  });
  return ok;
}

/// Conclusion: x_1...x_n ∈ I, or x_1...x̂_k...x_{n+1} ∈ δ(I) for some 1 ≤ k ≤ n.
inline bool n_absorbing_delta_primary(const Ring& r, const Set& i, const Set& target, int n,
                                      bool weakly) {
  bool ok = true;
  tuples(r.size, n + 1, [&](const std::vector<int>& t) {
    const int p = product_without(r, t, -1);
    if (!i[p] || (weakly && p == r.zero)) return true;
    if (i[product_without(r, t, n)]) return true;
    for (int k = 0; k < n; ++k) {
      if (target[product_without(r, t, k)]) return true;
    }
    ok = false;
    return false;
  });
  return ok;
}

/// a^{n+1} ∈ I ⇒ a^n ∈ δ(I).
inline bool semi_n_absorbing(const Ring& r, const Set& i, const Set& target, int n, bool weakly) {
  return closed(r, i, target, n + 1, n, weakly);
}

inline std::vector<int> unbreakable(const Ring& r, const Set& target, int m, int n) {
  std::vector<int> out;
  for (int a = 0; a < r.size; ++a) {
    if (r.pow(a, m) == r.zero && !target[r.pow(a, n)]) out.push_back(a);
  }
  return out;
}

inline bool is_prime(const Ring& r, const Set& i, bool weakly) {
  return proper(r, i) && n_absorbing(r, i, 1, weakly);
}

/// Number of classes of S^{-1}R under (a,s) ~ (b,t) iff ∃u∈S: u(at - bs) = 0.
inline int localization_size(int n, const std::vector<int>& s) {
  std::vector<std::pair<int, int>> reps;
  for (int a = 0; a < n; ++a) {
    for (int x : s) {
      bool found = false;
      for (auto [b, t] : reps) {
        for (int u : s) {
          if (((u * ((a * t - b * x) % n)) % n + n) % n == 0) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) reps.push_back({a, x});
    }
  }
  return static_cast<int>(reps.size());
}

inline int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

}  // namespace oracle
