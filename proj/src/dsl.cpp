#include "ringlab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, ErrorKind syntax_kind) : text_(text), syntax_kind_(syntax_kind) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  /// 1-based position of the next significant character.
  std::size_t here() {
    skip_ws();
    return pos_ + 1;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    const std::size_t at = here();
    if (!accept(token)) fail("expected '" + std::string(token) + "'", at);
  }
  std::size_t nat() {
    const std::size_t at = here();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number", at);
    }
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        fail("number too large", at);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::vector<std::size_t> number_list(std::string_view open, std::string_view close,
                                       bool allow_empty) {
    expect(open);
    std::vector<std::size_t> out;
    if (accept(close)) {
      if (!allow_empty) fail("empty list", here());
      return out;
    }
    do {
      out.push_back(nat());
    } while (accept(","));
    expect(close);
    return out;
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input", here());
  }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw Error(syntax_kind_, message, at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  ErrorKind syntax_kind_;
};

/// Re-raises a construction failure with the position of its sub-expression.
template <typename F>
auto positioned(std::size_t at, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.position()) throw;
    throw Error(e.kind(), e.detail(), at);
  }
}

std::vector<Index> to_indices(const std::vector<std::size_t>& xs) {
  return {xs.begin(), xs.end()};
}

void check_elements(const FiniteRing& ring, const std::vector<Index>& elems) {
  for (Index e : elems) ring.require_element(e);
}

class RingParser {
 public:
  explicit RingParser(std::string_view text) : cur_(text, ErrorKind::parse_error) {}

  FiniteRing parse() {
    FiniteRing r = ring();
    cur_.finish();
    return r;
  }

 private:
  FiniteRing ring() {
    const std::size_t at = cur_.here();
    FiniteRing left = term();
    while (cur_.accept("x")) {
      FiniteRing right = term();
      left = positioned(at, [&] { return product(left, right); });
    }
    return left;
  }

  std::vector<Index> gens() { return to_indices(cur_.number_list("{", "}", true)); }

  FiniteRing term() {
    const std::size_t at = cur_.here();
    if (cur_.accept("(")) {
      FiniteRing r = ring();
      cur_.expect(")");
      return r;
    }
    if (cur_.accept("Z")) {
      const std::size_t n = cur_.nat();
      return positioned(at, [&] { return zmod(n); });
    }
    const std::string word = cur_.identifier();
    if (word.empty()) cur_.fail("expected a ring expression", at);
    cur_.expect("(");
    if (word == "quot") {
      FiniteRing base = ring();
      cur_.expect(",");
      auto g = gens();
      cur_.expect(")");
      return positioned(at, [&] {
        check_elements(base, g);
        return quotient_ring(base, ideal_closure(base, g)).ring;
      });
    }
    if (word == "loc") {
      FiniteRing base = ring();
      cur_.expect(",");
      auto g = gens();
      cur_.expect(")");
      return positioned(at, [&] { return localize(base, MultSet::generated_by(base, g)).ring; });
    }
    if (word == "triv") {
      FiniteRing base = ring();
      cur_.expect(",");
      cur_.expect("M");
      auto shape = cur_.number_list("[", "]", false);
      cur_.expect(")");
      return positioned(at, [&] { return trivial_extension(base, RModule(base, shape)); });
    }
    if (word == "amal") {
      FiniteRing a = ring();
      cur_.expect(",");
      FiniteRing b = ring();
      cur_.expect(",");
      const std::size_t hom_at = cur_.here();
      const std::string hom_word = cur_.identifier();
      std::vector<Index> table;
      if (hom_word == "map") table = to_indices(cur_.number_list("[", "]", false));
      cur_.expect(",");
      auto g = gens();
      cur_.expect(")");
      RingHom f = positioned(hom_at, [&]() -> RingHom {
        if (hom_word == "id") {
          if (!(a == b)) {
            throw Error(ErrorKind::hom_invalid, "id needs equal rings, got " + a.expr() +
                                                    " and " + b.expr());
          }
          return RingHom::identity(a);
        }
        if (hom_word == "canon") return canonical_zmod_hom(a, b);
        if (hom_word == "inj") return trivial_extension_injection(a, b);
        if (hom_word == "map") return RingHom(a, b, table);
        throw Error(ErrorKind::parse_error, "expected a homomorphism (id, canon, inj, map[...])");
      });
      return positioned(at, [&] {
        check_elements(b, g);
        return amalgamate(a, b, f, ideal_closure(b, g)).carrier();
      });
    }
    if (word == "dup") {
      FiniteRing a = ring();
      cur_.expect(",");
      auto g = gens();
      cur_.expect(")");
      return positioned(at, [&] {
        check_elements(a, g);
        return duplicate(a, ideal_closure(a, g)).carrier();
      });
    }
    if (word == "sub") {
      FiniteRing a = ring();
      cur_.expect(",");
      auto g = gens();
      cur_.expect(")");
      return positioned(at, [&] { return subring_closure(a, g); });
    }
    cur_.fail("unknown ring constructor '" + word + "'", at);
  }

  Cursor cur_;
};

class DeltaParser {
 public:
  explicit DeltaParser(std::string_view text) : cur_(text, ErrorKind::parse_error) {}

  ExpansionFn parse(const FiniteRing& ring, LatticePtr lattice) {
    ExpansionFn d = delta(ring, std::move(lattice));
    cur_.finish();
    return d;
  }

 private:
  static LatticePtr lattice_of(const FiniteRing& ring, LatticePtr given) {
    return given ? given : enumerate_ideals(ring);
  }

  ExpansionFn delta(const FiniteRing& ring, LatticePtr lattice) {
    const std::size_t at = cur_.here();
    const std::string word = cur_.identifier();
    if (word == "id") return positioned(at, [&] { return identity_delta(lattice_of(ring, lattice)); });
    if (word == "rad") return positioned(at, [&] { return radical_delta(lattice_of(ring, lattice)); });
    if (word.empty()) cur_.fail("expected an expansion expression", at);
    if (word == "addk") {
      cur_.expect("(");
      auto g = to_indices(cur_.number_list("{", "}", true));
      cur_.expect(")");
      return positioned(at, [&] {
        check_elements(ring, g);
        return addk_delta(lattice_of(ring, lattice), g);
      });
    }
    if (word != "comp" && word != "q" && word != "prod" && word != "plus" && word != "bow") {
      cur_.fail("unknown expansion '" + word + "'", at);
    }
    // Shape is checked before the arguments so that errors name the outer form.
    positioned(at, [&] {
      if (word == "q") (void)ring.quotient_info();
      if (word == "prod") (void)ring.product_info();
      if (word == "plus") (void)ring.trivial_extension_info();
      if (word == "bow") (void)ring.amalgamation_info();
      return 0;
    });
    cur_.expect("(");
    if (word == "comp") {
      LatticePtr lat = lattice_of(ring, lattice);
      ExpansionFn outer = delta(ring, lat);
      cur_.expect(",");
      ExpansionFn inner = delta(ring, lat);
      cur_.expect(")");
      return positioned(at, [&] { return delta_compose(outer, inner); });
    }
    if (word == "q") {
      ExpansionFn inner = delta(ring.quotient_info().parent, nullptr);
      cur_.expect(")");
      return positioned(at, [&] { return delta_quotient(inner, lattice_of(ring, lattice)); });
    }
    if (word == "prod") {
      ExpansionFn left = delta(ring.product_info().left, nullptr);
      cur_.expect(",");
      ExpansionFn right = delta(ring.product_info().right, nullptr);
      cur_.expect(")");
      return positioned(at, [&] { return delta_product(left, right, lattice_of(ring, lattice)); });
    }
    if (word == "plus") {
      ExpansionFn inner = delta(ring.trivial_extension_info().base, nullptr);
      cur_.expect(")");
      return positioned(at,
                        [&] { return delta_idealization(inner, lattice_of(ring, lattice)); });
    }
    const Amalgam amalgam(ring);
    ExpansionFn outer = delta(amalgam.A(), nullptr);
    cur_.expect(",");
    const SubringResult sub = subring_fA_plus_J(amalgam);
    ExpansionFn inner = delta(sub.ring, nullptr);
    cur_.expect(")");
    return positioned(at, [&] { return delta_amalgam(outer, inner, lattice_of(ring, lattice)); });
  }

  Cursor cur_;
};

class ConjectureParser {
 public:
  explicit ConjectureParser(std::string_view text) : cur_(text, ErrorKind::bad_conjecture) {}

  ConjecturePtr parse() {
    if (cur_.at_end()) cur_.fail("empty conjecture", 1);
    ConjecturePtr c = implication();
    cur_.finish();
    return c;
  }

 private:
  static ConjecturePtr node(Conjecture::Op op, std::vector<ConjecturePtr> args) {
    auto c = std::make_shared<Conjecture>();
    c->op = op;
    c->args = std::move(args);
    return c;
  }

  ConjecturePtr implication() {
    ConjecturePtr lhs = disjunction();
    if (cur_.accept("=>")) {
      ConjecturePtr rhs = implication();
      return node(Conjecture::Op::implication, {lhs, rhs});
    }
    return lhs;
  }
  ConjecturePtr disjunction() {
    ConjecturePtr lhs = conjunction();
    while (cur_.accept("|")) {
      ConjecturePtr rhs = conjunction();
      lhs = node(Conjecture::Op::disjunction, {lhs, rhs});
    }
    return lhs;
  }
  ConjecturePtr conjunction() {
    ConjecturePtr lhs = negation();
    while (cur_.accept("&")) {
      ConjecturePtr rhs = negation();
      lhs = node(Conjecture::Op::conjunction, {lhs, rhs});
    }
    return lhs;
  }
  ConjecturePtr negation() {
    if (cur_.accept("!")) return node(Conjecture::Op::negation, {negation()});
    if (cur_.accept("(")) {
      ConjecturePtr inner = implication();
      cur_.expect(")");
      return inner;
    }
    const std::size_t at = cur_.here();
    std::string word = cur_.identifier();
    if (word.empty()) cur_.fail("expected a predicate name", at);
    const auto& atoms = conjecture_atoms();
    if (std::find(atoms.begin(), atoms.end(), word) == atoms.end()) {
      cur_.fail("unknown predicate '" + word + "'", at);
    }
    auto c = std::make_shared<Conjecture>();
    c->atom = std::move(word);
    return c;
  }

  Cursor cur_;
};

}  // namespace

FiniteRing parse_ring(std::string_view text) { return RingParser(text).parse(); }

std::vector<Index> parse_elements(std::string_view text) {
  Cursor cur(text, ErrorKind::parse_error);
  auto out = to_indices(cur.number_list("{", "}", true));
  cur.finish();
  return out;
}

Ideal parse_ideal(std::string_view text, const FiniteRing& ring) {
  auto gens = parse_elements(text);
  check_elements(ring, gens);
  return ideal_closure(ring, gens);
}

ExpansionFn parse_delta(std::string_view text, const FiniteRing& ring, LatticePtr lattice) {
  return DeltaParser(text).parse(ring, std::move(lattice));
}

const std::vector<std::string>& conjecture_atoms() {
  static const std::vector<std::string> atoms = {
      "weakly",          "closed",
      "weakly_plain",    "closed_plain",
      "weakly_semi",     "semi",
      "weakly_delta_primary", "delta_primary",
      "weakly_prime",    "prime",
      "weakly_n_absorbing", "n_absorbing",
      "weakly_strongly_n_absorbing", "strongly_n_absorbing",
      "weakly_n_absorbing_delta_primary", "n_absorbing_delta_primary",
      "unbreakable",     "in_nil",
      "nil_power",       "zero_ideal",
      "true",            "false",
  };
  return atoms;
}

ConjecturePtr parse_conjecture(std::string_view text) { return ConjectureParser(text).parse(); }

std::string to_string(const Conjecture& c) {
  switch (c.op) {
    case Conjecture::Op::atom: return c.atom;
    case Conjecture::Op::negation: return "!" + to_string(*c.args[0]);
    case Conjecture::Op::conjunction:
      return "(" + to_string(*c.args[0]) + " & " + to_string(*c.args[1]) + ")";
    case Conjecture::Op::disjunction:
      return "(" + to_string(*c.args[0]) + " | " + to_string(*c.args[1]) + ")";
    case Conjecture::Op::implication:
      return "(" + to_string(*c.args[0]) + " => " + to_string(*c.args[1]) + ")";
  }
  return {};
}

}  // namespace ringlab
