#pragma once

// Sequential composition of Krom programs and the operations derived from
// it: powers, Kleene star/plus, omega (least model) and reachability.

#include <cstdint>

#include "krom/program.hpp"

namespace krom {

/// Every atom occurring as a head, body or fact of `program`.
Alphabet atoms(const Program& program);

/// f(P): the fact atoms.
Interpretation facts(const Program& program);

/// p(P): the proper rules.
Program proper(const Program& program);

/// h(P): rule heads, with facts counting as their own heads.
Interpretation heads(const Program& program);

/// K o L = f(K) + {a | a<-b in K, b a fact of L} + {a<-c | a<-b in K, b<-c in L}.
Program compose(const Program& lhs, const Program& rhs);

/// The unit {x<-x | x in A}: the two-sided identity of compose over A.
Program unit(const Alphabet& alphabet);

/// P^n as left-associated iterated composition, with P^0 = unit(A).
/// Throws AlphabetError unless atoms(P) is a subset of A.
Program power(const Program& program, std::uint64_t n, const Alphabet& alphabet);

/// P* = union of P^n for n >= 0, accumulated to a fixpoint.
/// Throws AlphabetError unless atoms(P) is a subset of A.
Program star(const Program& program, const Alphabet& alphabet);

/// P+ = P* o P.
Program plus(const Program& program, const Alphabet& alphabet);

/// P^omega, the least model, as the atoms reachable from f(P) along p(P).
Interpretation omega(const Program& program);

/// I |= P.
bool models(const Interpretation& interp, const Program& program);

/// p* I for a proper-rules-only program: I together with every atom
/// reachable from it along edges body -> head. Atoms not mentioned by the
/// program are isolated vertices. Throws std::invalid_argument if
/// `program` contains a fact.
Interpretation reach(const Program& program, const Interpretation& interp);

/// (K + I)^omega computed as K^omega + p(K)* I.
Interpretation extend_omega(const Program& program, const Interpretation& interp);

/// Throws AlphabetError naming the first atom of `program` not in `alphabet`.
void require_within(const Program& program, const Alphabet& alphabet);

}  // namespace krom
