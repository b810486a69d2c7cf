#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

using Index = std::uint32_t;

class Ideal;
struct RingImpl;

struct RingTables {
  std::size_t size = 0;
  Index zero = 0;
  Index one = 0;
  std::vector<Index> add;  // row-major size*size
  std::vector<Index> mul;
  std::vector<std::string> labels;
};

struct ZmodInfo;
struct ProductInfo;
struct QuotientInfo;
struct LocalizationInfo;
struct TrivialExtensionInfo;
struct AmalgamationInfo;
struct SubringInfo;

/// A finite commutative ring with identity. Elements are the indices
/// 0..size()-1; addition and multiplication are total lookup tables.
/// Values are immutable handles and cheap to copy.
class FiniteRing {
 public:
  FiniteRing() = default;

  /// Takes ownership of precomputed tables. Rejects rings above size_bound().
  /// Ring axioms are the builder's responsibility; see check_ring_axioms().
  template <typename Info>
  static FiniteRing from_tables(RingTables tables, std::string expr, Info info);

  std::size_t size() const;
  Index zero() const;
  Index one() const;

  Index add(Index a, Index b) const;
  Index mul(Index a, Index b) const;
  Index neg(Index a) const;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index pow(Index a, std::uint64_t k) const;
  /// k * a for a nonnegative integer k.
  Index times(std::uint64_t k, Index a) const;

  bool is_unit(Index a) const;
  bool is_nilpotent(Index a) const;

  const std::string& expr() const;
  const std::string& label(Index a) const;

  bool is_zmod() const;
  bool is_product() const;
  bool is_quotient() const;
  bool is_localization() const;
  bool is_trivial_extension() const;
  bool is_amalgamation() const;
  bool is_subring() const;

  const ZmodInfo& zmod_info() const;
  const ProductInfo& product_info() const;
  const QuotientInfo& quotient_info() const;
  const LocalizationInfo& localization_info() const;
  const TrivialExtensionInfo& trivial_extension_info() const;
  const AmalgamationInfo& amalgamation_info() const;
  const SubringInfo& subring_info() const;

  /// Same underlying object (not merely the same construction).
  bool same_object(const FiniteRing& other) const { return impl_ == other.impl_; }
  bool valid() const { return impl_ != nullptr; }
  void require_element(Index a) const;

  /// Rings compare structurally: equal construction expressions.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

 private:
  explicit FiniteRing(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {}
  static FiniteRing build(RingTables tables, std::string expr, struct ProvenanceBox box);

  std::shared_ptr<const RingImpl> impl_;
};

struct ZmodInfo {
  std::size_t modulus = 0;
};

struct ProductInfo {
  FiniteRing left;
  FiniteRing right;
  Index pair(Index l, Index r) const { return l * static_cast<Index>(right.size()) + r; }
  Index left_of(Index x) const { return x / static_cast<Index>(right.size()); }
  Index right_of(Index x) const { return x % static_cast<Index>(right.size()); }
};

struct QuotientInfo {
  FiniteRing parent;
  std::vector<Index> ideal;           // members of the ideal in the parent
  std::vector<Index> projection;      // parent element -> coset index
  std::vector<Index> representative;  // coset index -> least parent element
};

struct LocalizationInfo {
  FiniteRing parent;
  std::vector<Index> mult_set;  // sorted
  std::vector<Index> canonical;  // r -> r/1
  std::vector<std::pair<Index, Index>> representative;  // class -> (numerator, denominator)
};

struct TrivialExtensionInfo {
  FiniteRing base;
  std::vector<std::size_t> shape;  // cyclic orders d_1..d_r
  std::size_t module_size = 1;
  Index pair(Index r, Index m) const { return r * static_cast<Index>(module_size) + m; }
  Index ring_part(Index x) const { return x / static_cast<Index>(module_size); }
  Index module_part(Index x) const { return x % static_cast<Index>(module_size); }
};

struct AmalgamationInfo {
  FiniteRing a;
  FiniteRing b;
  std::vector<Index> hom;    // f: A -> B as an element table
  std::string hom_expr;      // DSL spelling of f
  std::vector<Index> ideal;  // J, members in B
  std::vector<std::pair<Index, Index>> pairs;  // carrier element -> (a, b)
};

struct SubringInfo {
  FiniteRing parent;
  std::vector<Index> members;  // sorted parent indices; element i is members[i]
};

struct ProvenanceBox {
  std::variant<ZmodInfo, ProductInfo, QuotientInfo, LocalizationInfo, TrivialExtensionInfo,
               AmalgamationInfo, SubringInfo>
      info;
};

template <typename Info>
FiniteRing FiniteRing::from_tables(RingTables tables, std::string expr, Info info) {
  return build(std::move(tables), std::move(expr), ProvenanceBox{std::move(info)});
}

/// An element bound to its ring. Arithmetic between elements of different
/// rings throws ring_mismatch.
class Elem {
 public:
  Elem(FiniteRing ring, Index index);

  const FiniteRing& ring() const { return ring_; }
  Index index() const { return index_; }

  Elem operator+(const Elem& other) const;
  Elem operator-(const Elem& other) const;
  Elem operator*(const Elem& other) const;
  Elem operator-() const;
  friend bool operator==(const Elem& a, const Elem& b);

 private:
  void check_same(const Elem& other) const;
  FiniteRing ring_;
  Index index_;
};

Elem pow(const Elem& a, std::uint64_t k);
bool is_unit(const Elem& a);

/// A unital ring homomorphism given by its element table; validated
/// exhaustively at construction (hom_invalid otherwise).
class RingHom {
 public:
  RingHom(FiniteRing domain, FiniteRing codomain, std::vector<Index> map);

  static RingHom identity(const FiniteRing& ring);

  const FiniteRing& domain() const { return domain_; }
  const FiniteRing& codomain() const { return codomain_; }
  Index operator()(Index a) const { return map_[a]; }
  std::span<const Index> table() const { return map_; }

  bool injective() const;
  bool surjective() const;
  std::vector<Index> kernel() const;

 private:
  FiniteRing domain_;
  FiniteRing codomain_;
  std::vector<Index> map_;
};

FiniteRing zmod(std::size_t n);
FiniteRing product(const FiniteRing& left, const FiniteRing& right);

std::size_t characteristic(const FiniteRing& ring);
Ideal nilradical(const FiniteRing& ring);
Ideal jacobson_radical(const FiniteRing& ring);

/// Returns an empty string when every ring law holds, otherwise a
/// description of the first violated law. O(size^3).
std::string check_ring_axioms(const FiniteRing& ring);

/// Exhaustive search for a ring isomorphism; returns the element map.
std::optional<std::vector<Index>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

/// DSL spelling of an index set: `{a,b,c}`.
std::string format_elements(std::span<const Index> elems);

}  // namespace ringlab
