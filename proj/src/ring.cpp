#include "ringlab/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "ringlab/config.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// errors and configuration

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::size_bound_exceeded: return "size-bound-exceeded";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::improper_ideal: return "improper-ideal";
    case ErrorKind::not_an_ideal: return "not-an-ideal";
    case ErrorKind::n_too_large: return "n-too-large";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::unsupported_ideal_shape: return "unsupported-ideal-shape";
    case ErrorKind::non_homogeneous_ideal: return "non-homogeneous-ideal";
    case ErrorKind::invalid_mult_set: return "invalid-mult-set";
    case ErrorKind::hom_invalid: return "hom-invalid";
    case ErrorKind::invalid_module: return "invalid-module";
    case ErrorKind::shape_mismatch: return "shape-mismatch";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unknown_theorem: return "unknown-theorem";
    case ErrorKind::bad_conjecture: return "bad-conjecture";
    case ErrorKind::bad_config: return "bad-config";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(message),
      position_(position) {}

namespace {

std::size_t initial_size_bound() {
  const char* env = std::getenv("RINGLAB_SIZE_BOUND");
  if (env == nullptr || *env == '\0') return kDefaultSizeBound;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0 || value > kMaxSizeBound) return kDefaultSizeBound;
  return static_cast<std::size_t>(value);
}

std::atomic<std::size_t>& bound_storage() {
  static std::atomic<std::size_t> bound{initial_size_bound()};
  return bound;
}

}  // namespace

std::size_t size_bound() { return bound_storage().load(std::memory_order_relaxed); }

void set_size_bound(std::size_t bound) {
  if (bound == 0 || bound > kMaxSizeBound) {
    throw Error(ErrorKind::bad_config,
                "size bound must lie in [1, " + std::to_string(kMaxSizeBound) + "]");
  }
  bound_storage().store(bound, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// FiniteRing

struct RingImpl {
  std::size_t size = 0;
  Index zero = 0;
  Index one = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
  std::vector<std::string> labels;
  std::string expr;
  ProvenanceBox provenance;
};

FiniteRing FiniteRing::build(RingTables tables, std::string expr, ProvenanceBox box) {
  const std::size_t n = tables.size;
  if (n == 0) throw Error(ErrorKind::invalid_modulus, "ring must have at least one element");
  if (n > size_bound()) {
    throw Error(ErrorKind::size_bound_exceeded, expr + " has " + std::to_string(n) +
                                                    " elements; bound is " +
                                                    std::to_string(size_bound()));
  }
  if (tables.add.size() != n * n || tables.mul.size() != n * n || tables.labels.size() != n) {
    throw Error(ErrorKind::bad_config, "ring tables have inconsistent dimensions");
  }
  auto impl = std::make_shared<RingImpl>();
  impl->size = n;
  impl->zero = tables.zero;
  impl->one = tables.one;
  impl->add.assign(tables.add.begin(), tables.add.end());
  impl->mul.assign(tables.mul.begin(), tables.mul.end());
  impl->neg.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (impl->add[a * n + b] == tables.zero) {
        impl->neg[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  impl->labels = std::move(tables.labels);
  impl->expr = std::move(expr);
  impl->provenance = std::move(box);
  return FiniteRing(std::move(impl));
}

std::size_t FiniteRing::size() const { return impl_->size; }
Index FiniteRing::zero() const { return impl_->zero; }
Index FiniteRing::one() const { return impl_->one; }

Index FiniteRing::add(Index a, Index b) const { return impl_->add[a * impl_->size + b]; }
Index FiniteRing::mul(Index a, Index b) const { return impl_->mul[a * impl_->size + b]; }
Index FiniteRing::neg(Index a) const { return impl_->neg[a]; }

Index FiniteRing::pow(Index a, std::uint64_t k) const {
  Index result = impl_->one;
  Index base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Index FiniteRing::times(std::uint64_t k, Index a) const {
  Index result = impl_->zero;
  Index base = a;
  while (k > 0) {
    if (k & 1U) result = add(result, base);
    base = add(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteRing::is_unit(Index a) const {
  for (Index b = 0; b < impl_->size; ++b) {
    if (mul(a, b) == impl_->one) return true;
  }
  return false;
}

bool FiniteRing::is_nilpotent(Index a) const {
  Index p = a;
  for (std::size_t k = 1; k <= impl_->size; ++k) {
    if (p == impl_->zero) return true;
    p = mul(p, a);
  }
  return p == impl_->zero;
}

const std::string& FiniteRing::expr() const { return impl_->expr; }
const std::string& FiniteRing::label(Index a) const { return impl_->labels.at(a); }

bool FiniteRing::is_zmod() const { return std::holds_alternative<ZmodInfo>(impl_->provenance.info); }
bool FiniteRing::is_product() const {
  return std::holds_alternative<ProductInfo>(impl_->provenance.info);
}
bool FiniteRing::is_quotient() const {
  return std::holds_alternative<QuotientInfo>(impl_->provenance.info);
}
bool FiniteRing::is_localization() const {
  return std::holds_alternative<LocalizationInfo>(impl_->provenance.info);
}
bool FiniteRing::is_trivial_extension() const {
  return std::holds_alternative<TrivialExtensionInfo>(impl_->provenance.info);
}
bool FiniteRing::is_amalgamation() const {
  return std::holds_alternative<AmalgamationInfo>(impl_->provenance.info);
}
bool FiniteRing::is_subring() const {
  return std::holds_alternative<SubringInfo>(impl_->provenance.info);
}

namespace {
template <typename Info>
const Info& info_or_throw(const ProvenanceBox& box, const std::string& expr, const char* what) {
  if (const auto* info = std::get_if<Info>(&box.info)) return *info;
  throw Error(ErrorKind::shape_mismatch, expr + " is not " + what);
}
}  // namespace

const ZmodInfo& FiniteRing::zmod_info() const {
  return info_or_throw<ZmodInfo>(impl_->provenance, impl_->expr, "Z_n");
}
const ProductInfo& FiniteRing::product_info() const {
  return info_or_throw<ProductInfo>(impl_->provenance, impl_->expr, "a product ring");
}
const QuotientInfo& FiniteRing::quotient_info() const {
  return info_or_throw<QuotientInfo>(impl_->provenance, impl_->expr, "a quotient ring");
}
const LocalizationInfo& FiniteRing::localization_info() const {
  return info_or_throw<LocalizationInfo>(impl_->provenance, impl_->expr, "a localization");
}
const TrivialExtensionInfo& FiniteRing::trivial_extension_info() const {
  return info_or_throw<TrivialExtensionInfo>(impl_->provenance, impl_->expr,
                                             "a trivial ring extension");
}
const AmalgamationInfo& FiniteRing::amalgamation_info() const {
  return info_or_throw<AmalgamationInfo>(impl_->provenance, impl_->expr, "an amalgamation");
}
const SubringInfo& FiniteRing::subring_info() const {
  return info_or_throw<SubringInfo>(impl_->provenance, impl_->expr, "a subring");
}

void FiniteRing::require_element(Index a) const {
  if (a >= impl_->size) {
    throw Error(ErrorKind::not_an_ideal, "element " + std::to_string(a) + " is outside " +
                                             impl_->expr + " (size " +
                                             std::to_string(impl_->size) + ")");
  }
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  return a.impl_->expr == b.impl_->expr;
}

// ---------------------------------------------------------------------------
// Elem

Elem::Elem(FiniteRing ring, Index index) : ring_(std::move(ring)), index_(index) {
  ring_.require_element(index_);
}

void Elem::check_same(const Elem& other) const {
  if (!(ring_ == other.ring_)) {
    throw Error(ErrorKind::ring_mismatch,
                "elements of " + ring_.expr() + " and " + other.ring_.expr());
  }
}

Elem Elem::operator+(const Elem& other) const {
  check_same(other);
  return Elem(ring_, ring_.add(index_, other.index_));
}
Elem Elem::operator-(const Elem& other) const {
  check_same(other);
  return Elem(ring_, ring_.sub(index_, other.index_));
}
Elem Elem::operator*(const Elem& other) const {
  check_same(other);
  return Elem(ring_, ring_.mul(index_, other.index_));
}
Elem Elem::operator-() const { return Elem(ring_, ring_.neg(index_)); }

bool operator==(const Elem& a, const Elem& b) {
  a.check_same(b);
  return a.index_ == b.index_;
}

Elem pow(const Elem& a, std::uint64_t k) { return Elem(a.ring(), a.ring().pow(a.index(), k)); }
bool is_unit(const Elem& a) { return a.ring().is_unit(a.index()); }

// ---------------------------------------------------------------------------
// RingHom

RingHom::RingHom(FiniteRing domain, FiniteRing codomain, std::vector<Index> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  const std::size_t n = domain_.size();
  if (map_.size() != n) {
    throw Error(ErrorKind::hom_invalid, "map has " + std::to_string(map_.size()) +
                                            " entries, domain has " + std::to_string(n));
  }
  for (Index v : map_) {
    if (v >= codomain_.size()) throw Error(ErrorKind::hom_invalid, "image outside codomain");
  }
  if (map_[domain_.zero()] != codomain_.zero()) {
    throw Error(ErrorKind::hom_invalid, "f(0) != 0");
  }
  if (map_[domain_.one()] != codomain_.one()) {
    throw Error(ErrorKind::hom_invalid, "f(1) != 1 from " + domain_.expr() + " to " +
                                            codomain_.expr());
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (map_[domain_.add(a, b)] != codomain_.add(map_[a], map_[b])) {
        throw Error(ErrorKind::hom_invalid, "f(a+b) != f(a)+f(b) at a=" + domain_.label(a) +
                                                ", b=" + domain_.label(b));
      }
      if (map_[domain_.mul(a, b)] != codomain_.mul(map_[a], map_[b])) {
        throw Error(ErrorKind::hom_invalid, "f(ab) != f(a)f(b) at a=" + domain_.label(a) +
                                                ", b=" + domain_.label(b));
      }
    }
  }
}

RingHom RingHom::identity(const FiniteRing& ring) {
  std::vector<Index> map(ring.size());
  std::iota(map.begin(), map.end(), Index{0});
  return RingHom(ring, ring, std::move(map));
}

bool RingHom::injective() const { return kernel().size() == 1; }

bool RingHom::surjective() const {
  std::vector<unsigned char> hit(codomain_.size(), 0);
  for (Index v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](unsigned char h) { return h != 0; });
}

std::vector<Index> RingHom::kernel() const {
  std::vector<Index> ker;
  for (Index a = 0; a < map_.size(); ++a) {
    if (map_[a] == codomain_.zero()) ker.push_back(a);
  }
  return ker;
}

// ---------------------------------------------------------------------------
// constructions on rings

FiniteRing zmod(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_modulus, "Z0 is not a ring with identity");
  if (n > size_bound()) {
    throw Error(ErrorKind::size_bound_exceeded,
                "Z" + std::to_string(n) + " exceeds bound " + std::to_string(size_bound()));
  }
  RingTables t;
  t.size = n;
  t.zero = 0;
  t.one = static_cast<Index>(1 % n);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Index>((a + b) % n);
      t.mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
    t.labels.push_back(std::to_string(a));
  }
  return FiniteRing::from_tables(std::move(t), "Z" + std::to_string(n), ZmodInfo{n});
}

namespace {
bool needs_parens_in_product(const FiniteRing& r) { return r.is_product(); }
}  // namespace

FiniteRing product(const FiniteRing& left, const FiniteRing& right) {
  const std::size_t n1 = left.size();
  const std::size_t n2 = right.size();
  const std::size_t n = n1 * n2;
  // Right operand is parenthesised when it is itself a product so that the
  // left-associative grammar reproduces the same tree.
  std::string expr = left.expr() + "x" +
                     (needs_parens_in_product(right) ? "(" + right.expr() + ")" : right.expr());
  if (n > size_bound()) {
    throw Error(ErrorKind::size_bound_exceeded,
                expr + " has " + std::to_string(n) + " elements");
  }
  ProductInfo info{left, right};
  RingTables t;
  t.size = n;
  t.zero = info.pair(left.zero(), right.zero());
  t.one = info.pair(left.one(), right.one());
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Index x = 0; x < n; ++x) {
    const Index xl = info.left_of(x);
    const Index xr = info.right_of(x);
    for (Index y = 0; y < n; ++y) {
      const Index yl = info.left_of(y);
      const Index yr = info.right_of(y);
      t.add[x * n + y] = info.pair(left.add(xl, yl), right.add(xr, yr));
      t.mul[x * n + y] = info.pair(left.mul(xl, yl), right.mul(xr, yr));
    }
    t.labels.push_back("(" + left.label(xl) + "," + right.label(xr) + ")");
  }
  return FiniteRing::from_tables(std::move(t), std::move(expr), std::move(info));
}

std::size_t characteristic(const FiniteRing& ring) {
  Index acc = ring.one();
  for (std::size_t k = 1; k <= ring.size(); ++k) {
    if (acc == ring.zero()) return k;
    acc = ring.add(acc, ring.one());
  }
  return ring.size();  // unreachable for a finite ring: k*1 = 0 for k = |R|
}

Ideal nilradical(const FiniteRing& ring) {
  std::vector<Index> members;
  for (Index a = 0; a < ring.size(); ++a) {
    if (ring.is_nilpotent(a)) members.push_back(a);
  }
  return make_ideal_unchecked(ring, std::move(members));
}

Ideal jacobson_radical(const FiniteRing& ring) {
  std::vector<unsigned char> unit(ring.size(), 0);
  for (Index a = 0; a < ring.size(); ++a) unit[a] = ring.is_unit(a) ? 1 : 0;
  std::vector<Index> members;
  for (Index x = 0; x < ring.size(); ++x) {
    bool ok = true;
    for (Index r = 0; r < ring.size() && ok; ++r) {
      ok = unit[ring.sub(ring.one(), ring.mul(x, r))] != 0;
    }
    if (ok) members.push_back(x);
  }
  return make_ideal_unchecked(ring, std::move(members));
}

std::string check_ring_axioms(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  auto lbl = [&](Index a) { return ring.label(a); };
  for (Index a = 0; a < n; ++a) {
    if (ring.add(a, ring.zero()) != a) return "additive identity fails at " + lbl(a);
    if (ring.mul(a, ring.one()) != a) return "multiplicative identity fails at " + lbl(a);
    if (ring.add(a, ring.neg(a)) != ring.zero()) return "no additive inverse for " + lbl(a);
    for (Index b = 0; b < n; ++b) {
      if (ring.add(a, b) != ring.add(b, a)) return "addition not commutative";
      if (ring.mul(a, b) != ring.mul(b, a)) {
        return "multiplication not commutative at " + lbl(a) + "," + lbl(b);
      }
      for (Index c = 0; c < n; ++c) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) {
          return "addition not associative";
        }
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) {
          return "multiplication not associative";
        }
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) {
          return "distributivity fails";
        }
      }
    }
  }
  if (n > 1 && ring.one() == ring.zero()) return "1 = 0 in a ring with more than one element";
  return {};
}

namespace {

std::size_t additive_order(const FiniteRing& r, Index a) {
  Index acc = a;
  std::size_t k = 1;
  while (acc != r.zero()) {
    acc = r.add(acc, a);
    ++k;
  }
  return k;
}

std::size_t nilpotency_index(const FiniteRing& r, Index a) {
  Index p = a;
  for (std::size_t k = 1; k <= r.size(); ++k) {
    if (p == r.zero()) return k;
    p = r.mul(p, a);
  }
  return 0;
}

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;

  // Additive generators of A, chosen greedily; every element is recorded as
  // the sum of an earlier element and one generator.
  std::vector<Index> gens;
  std::vector<int> parent(n, -1);
  std::vector<int> via(n, -1);
  std::vector<unsigned char> reached(n, 0);
  reached[a.zero()] = 1;
  std::vector<Index> span{a.zero()};
  for (Index g = 0; g < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    const int gi = static_cast<int>(gens.size()) - 1;
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (int j = 0; j <= gi; ++j) {
        Index s = a.add(span[i], gens[j]);
        if (!reached[s]) {
          reached[s] = 1;
          parent[s] = static_cast<int>(span[i]);
          via[s] = j;
          span.push_back(s);
        }
      }
    }
  }

  std::vector<std::size_t> order_a(n), order_b(n), nil_a(n), nil_b(n);
  for (Index x = 0; x < n; ++x) {
    order_a[x] = additive_order(a, x);
    order_b[x] = additive_order(b, x);
    nil_a[x] = nilpotency_index(a, x);
    nil_b[x] = nilpotency_index(b, x);
  }

  std::vector<Index> images(gens.size());
  std::vector<Index> map(n);
  auto attempt = [&]() -> bool {
    std::vector<unsigned char> used(n, 0);
    map[a.zero()] = b.zero();
    used[b.zero()] = 1;
    for (std::size_t i = 1; i < span.size(); ++i) {
      Index x = span[i];
      Index y = b.add(map[static_cast<Index>(parent[x])], images[static_cast<std::size_t>(via[x])]);
      if (used[y]) return false;
      used[y] = 1;
      map[x] = y;
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (map[a.add(x, y)] != b.add(map[x], map[y])) return false;
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      }
    }
    return map[a.one()] == b.one();
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) return attempt();
    const Index g = gens[depth];
    for (Index y = 0; y < n; ++y) {
      if (order_b[y] != order_a[g] || nil_b[y] != nil_a[g]) continue;
      images[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  if (search(0)) return map;
  return std::nullopt;
}

std::string format_elements(std::span<const Index> elems) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out << ',';
    out << elems[i];
  }
  out << '}';
  return out.str();
}

}  // namespace ringlab
