#pragma once

// Brute-force semantic oracles. They enumerate all 2^|A| interpretations of
// the joint alphabet and share no code path with the algebraic deciders.

#include <cstddef>

#include "krom/equivalence.hpp"
#include "krom/program.hpp"

namespace krom {

struct OracleOptions {
    /// Largest alphabet the oracles will enumerate; at most kernels::max_atoms.
    std::size_t max_atoms = 20;
};

/// The least model as the meet of all models of P. Throws
/// AlphabetTooLargeError above the bound and InvariantViolation if the meet
/// is not itself a model.
Interpretation lm_oracle(const Program& program, OracleOptions options = {});

/// Uniform equivalence by definition: LM(K + I) = LM(L + I) for every I
/// over atoms(K) + atoms(L), with least models computed by iterating the
/// immediate-consequence operator. Returns the first failing I.
EquivVerdict uniform_equiv_oracle(const Program& lhs, const Program& rhs, OracleOptions options = {});

/// Subsumption equivalence by definition: K o I = L o I for every I over
/// atoms(K) + atoms(L). Returns the first failing I.
EquivVerdict ss_equiv_exhaustive(const Program& lhs, const Program& rhs, OracleOptions options = {});

}  // namespace krom
