#pragma once

// Deciders for least-model, subsumption and uniform equivalence of Krom
// programs, and a rule minimizer that preserves uniform equivalence.

#include <optional>

#include "krom/program.hpp"

namespace krom {

struct EquivVerdict {
    bool equal = false;
    /// A distinguishing interpretation, when the decider produces one.
    std::optional<Interpretation> witness;

    friend bool operator==(const EquivVerdict&, const EquivVerdict&) = default;
};

/// K and L have the same least model. Never carries a witness.
EquivVerdict lm_equiv(const Program& lhs, const Program& rhs);

/// K o I = L o I for every interpretation I. Decided syntactically and
/// never carries a witness.
///
/// This is not plain rule-set equality: a proper rule a <- b whose head is
/// also a fact can only re-derive a, so {a, a <- b} and {a} are subsumption
/// equivalent. Programs are compared after dropping such rules.
EquivVerdict ss_equiv(const Program& lhs, const Program& rhs);

/// P without the proper rules whose head is a fact of P.
Program drop_fact_headed_rules(const Program& program);

/// Semantic form of ss_equiv: compares K o I and L o I for I empty and for
/// every singleton over atoms(K) + atoms(L). Returns the first failing I.
EquivVerdict ss_equiv_semantic(const Program& lhs, const Program& rhs);

/// (K + I)^omega = (L + I)^omega for every interpretation I.
///
/// Since p(K)* distributes over unions of interpretations, it is enough to
/// compare K^omega + p(K)* I against L^omega + p(L)* I for I empty and for
/// each singleton over the joint alphabet; atoms outside it are isolated on
/// both sides. The first failing I in that order is the witness.
EquivVerdict uniform_equiv(const Program& lhs, const Program& rhs);

/// Greedily deletes rules in sorted order while the remainder stays
/// uniformly equivalent to `program`. The result is 1-minimal: deleting any
/// single remaining rule breaks uniform equivalence.
Program minimize(const Program& program);

}  // namespace krom
