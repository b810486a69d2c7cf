#include "ringlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ringlab/config.hpp"

namespace ringlab {

namespace {

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_bound(std::size_t n, const std::string& expr) {
  if (n > size_bound()) {
    throw Error(ErrorKind::size_bound_exceeded, expr + " has " + std::to_string(n) +
                                                    " elements; bound is " +
                                                    std::to_string(size_bound()));
  }
}

std::string join_numbers(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

/// DSL spelling of a homomorphism, preferring the keyword forms.
std::string describe_hom(const RingHom& f) {
  const FiniteRing& a = f.domain();
  const FiniteRing& b = f.codomain();
  auto table = f.table();
  if (a == b) {
    bool ident = true;
    for (Index x = 0; x < table.size() && ident; ++x) ident = table[x] == x;
    if (ident) return "id";
  }
  if (a.is_zmod() && b.is_zmod()) {
    bool canon = true;
    for (Index x = 0; x < table.size() && canon; ++x) canon = table[x] == x % b.size();
    if (canon) return "canon";
  }
  if (b.is_trivial_extension() && b.trivial_extension_info().base == a) {
    const auto& info = b.trivial_extension_info();
    bool inj = true;
    for (Index x = 0; x < table.size() && inj; ++x) inj = table[x] == info.pair(x, 0);
    if (inj) return "inj";
  }
  std::string out = "map[";
  for (Index x = 0; x < table.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(table[x]);
  }
  return out + "]";
}

/// Greedy ring generators of a subring given by its sorted members.
std::vector<Index> subring_generators(const FiniteRing& parent, const std::vector<Index>& members) {
  std::vector<Index> gens;
  std::vector<Index> current = {parent.zero(), parent.one()};
  auto close = [&](std::vector<Index> seed) {
    std::vector<unsigned char> in(parent.size(), 0);
    std::vector<Index> out;
    for (Index s : seed) {
      if (!in[s]) {
        in[s] = 1;
        out.push_back(s);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Index v : {parent.add(out[i], out[j]), parent.mul(out[i], out[j]),
                        parent.neg(out[i])}) {
          if (!in[v]) {
            in[v] = 1;
            out.push_back(v);
          }
        }
      }
    }
    return sorted_unique(std::move(out));
  };
  current = close(current);
  for (Index m : members) {
    if (std::binary_search(current.begin(), current.end(), m)) continue;
    gens.push_back(m);
    current.push_back(m);
    current = close(current);
  }
  return gens;
}

FiniteRing make_subring(const FiniteRing& parent, std::vector<Index> members,
                        const std::vector<Index>& gens) {
  const std::size_t n = members.size();
  std::string expr = "sub(" + parent.expr() + "," + format_elements(gens) + ")";
  std::vector<int> pos(parent.size(), -1);
  for (std::size_t i = 0; i < n; ++i) pos[members[i]] = static_cast<int>(i);
  RingTables t;
  t.size = n;
  t.zero = static_cast<Index>(pos[parent.zero()]);
  t.one = static_cast<Index>(pos[parent.one()]);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = static_cast<Index>(pos[parent.add(members[i], members[j])]);
      t.mul[i * n + j] = static_cast<Index>(pos[parent.mul(members[i], members[j])]);
    }
    t.labels.push_back(parent.label(members[i]));
  }
  return FiniteRing::from_tables(std::move(t), std::move(expr),
                                 SubringInfo{parent, std::move(members)});
}

}  // namespace

// ---------------------------------------------------------------------------
// RModule

RModule::RModule(FiniteRing base, std::vector<std::size_t> shape)
    : base_(std::move(base)), shape_(std::move(shape)) {
  if (shape_.empty()) throw Error(ErrorKind::invalid_module, "module needs at least one summand");
  const std::size_t c = characteristic(base_);
  if (c != base_.size()) {
    throw Error(ErrorKind::invalid_module,
                base_.expr() + " is not additively cyclic; modules need a Z_n-like base");
  }
  for (std::size_t d : shape_) {
    if (d == 0 || c % d != 0) {
      throw Error(ErrorKind::invalid_module, "cyclic order " + std::to_string(d) +
                                                 " does not divide char(" + base_.expr() +
                                                 ") = " + std::to_string(c));
    }
    size_ *= d;
    if (size_ > kMaxSizeBound) {
      throw Error(ErrorKind::size_bound_exceeded, "module " + expr() + " is too large");
    }
  }
  integer_value_.assign(base_.size(), 0);
  Index acc = base_.zero();
  for (std::size_t k = 0; k < c; ++k) {
    integer_value_[acc] = k;
    acc = base_.add(acc, base_.one());
  }
}

std::vector<std::size_t> RModule::decode(Index m) const {
  std::vector<std::size_t> coords(shape_.size());
  std::size_t rest = m;
  for (std::size_t i = shape_.size(); i-- > 0;) {
    coords[i] = rest % shape_[i];
    rest /= shape_[i];
  }
  return coords;
}

Index RModule::encode(const std::vector<std::size_t>& coords) const {
  std::size_t value = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) value = value * shape_[i] + coords[i] % shape_[i];
  return static_cast<Index>(value);
}

Index RModule::add(Index x, Index y) const {
  auto a = decode(x);
  auto b = decode(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % shape_[i];
  return encode(a);
}

Index RModule::scale(std::uint64_t k, Index m) const {
  auto a = decode(m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (k % shape_[i]) * a[i] % shape_[i];
  return encode(a);
}

Index RModule::act(Index r, Index m) const { return scale(integer_value_[r], m); }

std::string RModule::label(Index m) const {
  auto coords = decode(m);
  if (coords.size() == 1) return std::to_string(coords[0]);
  return "<" + join_numbers(coords) + ">";
}

std::string RModule::expr() const { return "M[" + join_numbers(shape_) + "]"; }

// ---------------------------------------------------------------------------
// MultSet and localization

MultSet::MultSet(FiniteRing ring, std::vector<Index> members)
    : ring_(std::move(ring)), members_(sorted_unique(std::move(members))) {
  for (Index a : members_) {
    if (a >= ring_.size()) {
      throw Error(ErrorKind::invalid_mult_set, "element " + std::to_string(a) + " is outside " +
                                                   ring_.expr());
    }
  }
  if (!contains(ring_.one())) throw Error(ErrorKind::invalid_mult_set, "1 is not in S");
  if (contains(ring_.zero())) throw Error(ErrorKind::invalid_mult_set, "0 is in S");
  for (Index a : members_) {
    for (Index b : members_) {
      if (!contains(ring_.mul(a, b))) {
        throw Error(ErrorKind::invalid_mult_set, "S is not multiplicatively closed: " +
                                                     ring_.label(a) + "*" + ring_.label(b));
      }
    }
  }
}

bool MultSet::contains(Index a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

MultSet MultSet::complement_of(const Ideal& prime) {
  std::vector<Index> members;
  for (Index a = 0; a < prime.ring().size(); ++a) {
    if (!prime.contains(a)) members.push_back(a);
  }
  return MultSet(prime.ring(), std::move(members));
}

MultSet MultSet::units(const FiniteRing& ring) {
  std::vector<Index> members;
  for (Index a = 0; a < ring.size(); ++a) {
    if (ring.is_unit(a)) members.push_back(a);
  }
  return MultSet(ring, std::move(members));
}

MultSet MultSet::generated_by(const FiniteRing& ring, std::span<const Index> gens) {
  std::vector<unsigned char> in(ring.size(), 0);
  std::vector<Index> members{ring.one()};
  in[ring.one()] = 1;
  for (Index g : gens) {
    ring.require_element(g);
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Index p = ring.mul(members[i], members[j]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  if (in[ring.zero()]) {
    throw Error(ErrorKind::invalid_mult_set,
                "multiplicative set generated by " + format_elements(gens) + " contains 0");
  }
  return MultSet(ring, std::move(members));
}

LocalizeResult localize(const FiniteRing& ring, const MultSet& s) {
  if (!(s.ring() == ring)) {
    throw Error(ErrorKind::ring_mismatch, "multiplicative set of " + s.ring().expr() +
                                              " used with " + ring.expr());
  }
  const auto& sm = s.members();
  const std::size_t n = ring.size();
  const std::size_t k = sm.size();
  std::string expr = "loc(" + ring.expr() + "," + format_elements(sm) + ")";

  // Pairs (r, s) are visited with s outer so that r/1 classes come first.
  auto equivalent = [&](Index r1, Index s1, Index r2, Index s2) {
    const Index diff = ring.sub(ring.mul(r1, s2), ring.mul(r2, s1));
    for (Index t : sm) {
      if (ring.mul(t, diff) == ring.zero()) return true;
    }
    return false;
  };
  LocalizationInfo info;
  info.parent = ring;
  info.mult_set = sm;
  std::vector<Index> class_of(n * k);  // index r * k + si
  for (std::size_t si = 0; si < k; ++si) {
    for (Index r = 0; r < n; ++r) {
      std::optional<Index> found;
      for (Index c = 0; c < info.representative.size(); ++c) {
        const auto& [r0, s0] = info.representative[c];
        if (equivalent(r, sm[si], r0, s0)) {
          found = c;
          break;
        }
      }
      if (!found) {
        found = static_cast<Index>(info.representative.size());
        info.representative.emplace_back(r, sm[si]);
      }
      class_of[r * k + si] = *found;
    }
  }
  std::vector<std::size_t> s_pos(n, 0);
  for (std::size_t si = 0; si < k; ++si) s_pos[sm[si]] = si;

  const std::size_t q = info.representative.size();
  check_bound(q, expr);
  const std::size_t one_pos = s_pos[ring.one()];
  info.canonical.resize(n);
  for (Index r = 0; r < n; ++r) info.canonical[r] = class_of[r * k + one_pos];

  RingTables t;
  t.size = q;
  t.zero = info.canonical[ring.zero()];
  t.one = info.canonical[ring.one()];
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (Index x = 0; x < q; ++x) {
    const auto [rx, sx] = info.representative[x];
    for (Index y = 0; y < q; ++y) {
      const auto [ry, sy] = info.representative[y];
      const Index den = ring.mul(sx, sy);
      const Index sum_num = ring.add(ring.mul(rx, sy), ring.mul(ry, sx));
      t.add[x * q + y] = class_of[sum_num * k + s_pos[den]];
      t.mul[x * q + y] = class_of[ring.mul(rx, ry) * k + s_pos[den]];
    }
    t.labels.push_back(sx == ring.one() ? ring.label(rx)
                                        : ring.label(rx) + "/" + ring.label(sx));
  }
  std::vector<Index> canonical = info.canonical;
  FiniteRing local = FiniteRing::from_tables(std::move(t), std::move(expr), std::move(info));
  RingHom hom(ring, local, std::move(canonical));
  return LocalizeResult{std::move(local), std::move(hom)};
}

// ---------------------------------------------------------------------------
// trivial extension

FiniteRing trivial_extension(const FiniteRing& ring, const RModule& module) {
  if (!(module.base() == ring)) {
    throw Error(ErrorKind::ring_mismatch, "module over " + module.base().expr() +
                                              " used with " + ring.expr());
  }
  std::string expr = "triv(" + ring.expr() + "," + module.expr() + ")";
  const std::size_t ms = module.size();
  const std::size_t n = ring.size() * ms;
  check_bound(n, expr);

  TrivialExtensionInfo info{ring, module.shape(), ms};
  RingTables t;
  t.size = n;
  t.zero = info.pair(ring.zero(), 0);
  t.one = info.pair(ring.one(), 0);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  // Precompute the module action r·m.
  std::vector<Index> act(ring.size() * ms);
  std::vector<Index> madd(ms * ms);
  for (Index r = 0; r < ring.size(); ++r) {
    for (Index m = 0; m < ms; ++m) act[r * ms + m] = module.act(r, m);
  }
  for (Index x = 0; x < ms; ++x) {
    for (Index y = 0; y < ms; ++y) madd[x * ms + y] = module.add(x, y);
  }
  for (Index x = 0; x < n; ++x) {
    const Index a = info.ring_part(x);
    const Index b = info.module_part(x);
    for (Index y = 0; y < n; ++y) {
      const Index c = info.ring_part(y);
      const Index d = info.module_part(y);
      t.add[x * n + y] = info.pair(ring.add(a, c), madd[b * ms + d]);
      t.mul[x * n + y] = info.pair(ring.mul(a, c), madd[act[a * ms + d] * ms + act[c * ms + b]]);
    }
    t.labels.push_back("(" + ring.label(a) + "," + module.label(b) + ")");
  }
  return FiniteRing::from_tables(std::move(t), std::move(expr), std::move(info));
}

RingHom trivial_extension_injection(const FiniteRing& base, const FiniteRing& extension) {
  if (!extension.is_trivial_extension() || !(extension.trivial_extension_info().base == base)) {
    throw Error(ErrorKind::hom_invalid,
                "inj needs a codomain of the form triv(" + base.expr() + ",M)");
  }
  const auto& info = extension.trivial_extension_info();
  std::vector<Index> map(base.size());
  for (Index a = 0; a < base.size(); ++a) map[a] = info.pair(a, 0);
  return RingHom(base, extension, std::move(map));
}

RingHom canonical_zmod_hom(const FiniteRing& from, const FiniteRing& to) {
  if (!from.is_zmod() || !to.is_zmod() || from.size() % to.size() != 0) {
    throw Error(ErrorKind::hom_invalid,
                "canon needs Z_n -> Z_m with m | n, got " + from.expr() + " -> " + to.expr());
  }
  std::vector<Index> map(from.size());
  for (Index a = 0; a < from.size(); ++a) map[a] = static_cast<Index>(a % to.size());
  return RingHom(from, to, std::move(map));
}

// ---------------------------------------------------------------------------
// amalgamation

Amalgam::Amalgam(FiniteRing carrier) : carrier_(std::move(carrier)) {
  const auto& info = carrier_.amalgamation_info();
  by_a_.resize(info.a.size());
  for (Index x = 0; x < info.pairs.size(); ++x) {
    by_a_[info.pairs[x].first].emplace_back(info.pairs[x].second, x);
  }
}

const FiniteRing& Amalgam::A() const { return carrier_.amalgamation_info().a; }
const FiniteRing& Amalgam::B() const { return carrier_.amalgamation_info().b; }

RingHom Amalgam::f() const {
  const auto& info = carrier_.amalgamation_info();
  return RingHom(info.a, info.b, info.hom);
}

Ideal Amalgam::J() const {
  return make_ideal_unchecked(B(), carrier_.amalgamation_info().ideal);
}

Index Amalgam::a_of(Index x) const { return carrier_.amalgamation_info().pairs[x].first; }
Index Amalgam::b_of(Index x) const { return carrier_.amalgamation_info().pairs[x].second; }

std::optional<Index> Amalgam::element(Index a, Index b) const {
  if (a >= by_a_.size()) return std::nullopt;
  for (const auto& [bb, x] : by_a_[a]) {
    if (bb == b) return x;
  }
  return std::nullopt;
}

namespace {

Amalgam build_amalgam(const FiniteRing& a, const FiniteRing& b, const RingHom& f, const Ideal& j,
                      std::string expr, std::string hom_expr) {
  if (!(f.domain() == a) || !(f.codomain() == b)) {
    throw Error(ErrorKind::hom_invalid, "homomorphism " + f.domain().expr() + " -> " +
                                            f.codomain().expr() + " does not match " + a.expr() +
                                            " -> " + b.expr());
  }
  if (!(j.ring() == b)) {
    throw Error(ErrorKind::ring_mismatch, "J must be an ideal of " + b.expr());
  }
  const std::size_t n = a.size() * j.size();
  check_bound(n, expr);

  AmalgamationInfo info;
  info.a = a;
  info.b = b;
  info.hom.assign(f.table().begin(), f.table().end());
  info.hom_expr = std::move(hom_expr);
  info.ideal.assign(j.members().begin(), j.members().end());
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y : j.members()) info.pairs.emplace_back(x, b.add(f(x), y));
  }
  std::sort(info.pairs.begin(), info.pairs.end());

  std::map<std::pair<Index, Index>, Index> lookup;
  for (Index x = 0; x < n; ++x) lookup.emplace(info.pairs[x], x);
  auto at = [&](Index pa, Index pb) { return lookup.at({pa, pb}); };

  RingTables t;
  t.size = n;
  t.zero = at(a.zero(), b.zero());
  t.one = at(a.one(), b.one());
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Index x = 0; x < n; ++x) {
    const auto [xa, xb] = info.pairs[x];
    for (Index y = 0; y < n; ++y) {
      const auto [ya, yb] = info.pairs[y];
      t.add[x * n + y] = at(a.add(xa, ya), b.add(xb, yb));
      t.mul[x * n + y] = at(a.mul(xa, ya), b.mul(xb, yb));
    }
    t.labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
  }
  return Amalgam(FiniteRing::from_tables(std::move(t), std::move(expr), std::move(info)));
}

}  // namespace

Amalgam amalgamate(const FiniteRing& a, const FiniteRing& b, const RingHom& f, const Ideal& j) {
  std::string hom_expr = describe_hom(f);
  std::string expr =
      "amal(" + a.expr() + "," + b.expr() + "," + hom_expr + "," + j.gens_string() + ")";
  return build_amalgam(a, b, f, j, std::move(expr), std::move(hom_expr));
}

Amalgam duplicate(const FiniteRing& a, const Ideal& i) {
  std::string expr = "dup(" + a.expr() + "," + i.gens_string() + ")";
  return build_amalgam(a, a, RingHom::identity(a), i, std::move(expr), "id");
}

// ---------------------------------------------------------------------------
// subrings

FiniteRing subring_closure(const FiniteRing& parent, std::span<const Index> gens) {
  std::vector<unsigned char> in(parent.size(), 0);
  std::vector<Index> members;
  auto push = [&](Index v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  push(parent.zero());
  push(parent.one());
  for (Index g : gens) {
    parent.require_element(g);
    push(g);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      push(parent.add(members[i], members[j]));
      push(parent.mul(members[i], members[j]));
    }
    push(parent.neg(members[i]));
  }
  members = sorted_unique(std::move(members));
  return make_subring(parent, members, subring_generators(parent, members));
}

SubringResult subring_fA_plus_J(const Amalgam& amalgam) {
  const FiniteRing& b = amalgam.B();
  const RingHom f = amalgam.f();
  const Ideal j = amalgam.J();
  std::vector<Index> members;
  for (Index x = 0; x < amalgam.A().size(); ++x) {
    for (Index y : j.members()) members.push_back(b.add(f(x), y));
  }
  members = sorted_unique(std::move(members));
  FiniteRing sub = make_subring(b, members, subring_generators(b, members));
  RingHom emb = subring_embedding(sub);
  return SubringResult{std::move(sub), std::move(emb)};
}

RingHom subring_embedding(const FiniteRing& subring) {
  const auto& info = subring.subring_info();
  return RingHom(subring, info.parent, info.members);
}

Ideal amalgam_ideal_ij(const Amalgam& amalgam, const Ideal& i) {
  if (!(i.ring() == amalgam.A())) {
    throw Error(ErrorKind::not_an_ideal, "I must be an ideal of " + amalgam.A().expr());
  }
  std::vector<Index> members;
  for (Index x = 0; x < amalgam.carrier().size(); ++x) {
    if (i.contains(amalgam.a_of(x))) members.push_back(x);
  }
  return make_ideal_unchecked(amalgam.carrier(), std::move(members));
}

Ideal amalgam_ideal_kbar(const Amalgam& amalgam, const Ideal& k) {
  const FiniteRing& sub = k.ring();
  if (!sub.is_subring() || !(sub.subring_info().parent == amalgam.B())) {
    throw Error(ErrorKind::not_an_ideal, "K must be an ideal of f(A)+J in " + amalgam.B().expr());
  }
  std::vector<unsigned char> in_k(amalgam.B().size(), 0);
  for (Index s : k.members()) in_k[sub.subring_info().members[s]] = 1;
  std::vector<Index> members;
  for (Index x = 0; x < amalgam.carrier().size(); ++x) {
    if (in_k[amalgam.b_of(x)]) members.push_back(x);
  }
  return Ideal::from_members(amalgam.carrier(), std::move(members));
}

// ---------------------------------------------------------------------------
// homomorphisms and ideals

Ideal hom_preimage(const RingHom& f, const Ideal& x) {
  if (!(x.ring() == f.codomain())) {
    throw Error(ErrorKind::ring_mismatch, "ideal of " + x.ring().expr() +
                                              " is not in the codomain " + f.codomain().expr());
  }
  std::vector<Index> members;
  for (Index a = 0; a < f.domain().size(); ++a) {
    if (x.contains(f(a))) members.push_back(a);
  }
  return make_ideal_unchecked(f.domain(), std::move(members));
}

HomImage hom_image(const RingHom& f, const Ideal& x) {
  if (!(x.ring() == f.domain())) {
    throw Error(ErrorKind::ring_mismatch, "ideal of " + x.ring().expr() +
                                              " is not in the domain " + f.domain().expr());
  }
  std::vector<Index> raw;
  for (Index a : x.members()) raw.push_back(f(a));
  raw = sorted_unique(std::move(raw));
  Ideal closed = ideal_closure(f.codomain(), raw);
  const bool was_closed = closed.size() != raw.size();
  return HomImage{std::move(closed), was_closed};
}

AxiomCheck is_delta_gamma_hom(const RingHom& f, const ExpansionFn& delta,
                              const ExpansionFn& gamma) {
  if (!(delta.ring() == f.domain()) || !(gamma.ring() == f.codomain())) {
    throw Error(ErrorKind::ring_mismatch, "expansions do not match the homomorphism's rings");
  }
  AxiomCheck check;
  const IdealLattice& cod = *gamma.lattice();
  const IdealLattice& dom = *delta.lattice();
  for (std::size_t i = 0; i < cod.size(); ++i) {
    if (!gamma.defined_at_index(i)) continue;
    const std::size_t p = dom.index_of(hom_preimage(f, cod[i]));
    if (!delta.defined_at_index(p)) continue;
    const Ideal lhs = dom[delta.eval_index(p)];
    const Ideal rhs = hom_preimage(f, cod[gamma.eval_index(i)]);
    if (!(lhs == rhs)) {
      check.holds = false;
      check.violation = AxiomViolation{"delta-gamma", i, std::nullopt};
      return check;
    }
  }
  return check;
}

}  // namespace ringlab
