#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/expansion.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Ring expressions (whitespace-insensitive):
///
///   ring   := term { "x" term }
///   term   := "Z" nat | "(" ring ")"
///           | "quot(" ring "," gens ")" | "loc(" ring "," elems ")"
///           | "triv(" ring "," module ")" | "amal(" ring "," ring "," hom "," gens ")"
///           | "dup(" ring "," gens ")" | "sub(" ring "," gens ")"
///   module := "M[" nat { "," nat } "]"
///   hom    := "id" | "canon" | "inj" | "map[" nat { "," nat } "]"
///   gens   := "{" [ nat { "," nat } ] "}"
///
/// Errors carry the 1-based character position of the offending token or
/// sub-expression.
FiniteRing parse_ring(std::string_view text);

/// `{a,b,...}` as element indices (not range-checked).
std::vector<Index> parse_elements(std::string_view text);

/// Generator list closed to an ideal of `ring`.
Ideal parse_ideal(std::string_view text, const FiniteRing& ring);

/// delta := "id" | "rad" | "addk(" gens ")" | "comp(" delta "," delta ")"
///        | "q(" delta ")" | "prod(" delta "," delta ")" | "plus(" delta ")"
///        | "bow(" delta "," delta ")"
/// The structural forms require the ring's provenance to match; their
/// arguments are parsed on the parent, factors, base, or (A, f(A)+J).
ExpansionFn parse_delta(std::string_view text, const FiniteRing& ring,
                        LatticePtr lattice = nullptr);

/// Boolean formula over classifier atoms:
///   conj := or [ "=>" conj ] ; or := and { "|" and } ; and := not { "&" not }
///   not  := "!" not | "(" conj ")" | atom
struct Conjecture {
  enum class Op { atom, negation, conjunction, disjunction, implication };
  Op op = Op::atom;
  std::string atom;
  std::vector<std::shared_ptr<const Conjecture>> args;
};
using ConjecturePtr = std::shared_ptr<const Conjecture>;

/// Atom names accepted in conjectures.
const std::vector<std::string>& conjecture_atoms();

/// Throws bad_conjecture on syntax errors or unknown atoms.
ConjecturePtr parse_conjecture(std::string_view text);

std::string to_string(const Conjecture& c);

}  // namespace ringlab
