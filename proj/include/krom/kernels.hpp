#pragma once

// Bitmask kernels behind the brute-force oracles. Interpretations over an
// indexed alphabet of at most `max_atoms` atoms are encoded as masks (bit i
// set iff atom i is true) and enumerated exhaustively.
//
// Each kernel has a serial reference and an OpenMP version; the two must
// return identical results, which the tests check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "krom/program.hpp"

namespace krom::kernels {

using Mask = std::uint64_t;

inline constexpr std::size_t max_atoms = 32;

/// A program over an indexed alphabet.
struct IndexedProgram {
    std::size_t atom_count = 0;
    Mask facts = 0;
    /// implied[b]: heads of the proper rules with body b.
    std::vector<Mask> implied;
};

/// Indexes `program` against `alphabet` (sorted, duplicate-free). Throws
/// AlphabetError if the program mentions an atom outside it, and
/// AlphabetTooLargeError beyond `max_atoms`.
IndexedProgram index_program(const Program& program, std::span<const Atom> alphabet);

Mask to_mask(const Interpretation& interp, std::span<const Atom> alphabet);
Interpretation from_mask(Mask mask, std::span<const Atom> alphabet);

/// interp |= program.
bool satisfies(const IndexedProgram& program, Mask interp);

/// Least fixpoint of the immediate-consequence operator of program + extra.
Mask consequence_fixpoint(const IndexedProgram& program, Mask extra_facts);

/// Intersection of every model among all 2^n interpretations, together
/// with the number of models seen.
struct ModelMeet {
    Mask meet = 0;
    std::uint64_t model_count = 0;
};

ModelMeet meet_of_models_serial(const IndexedProgram& program);
ModelMeet meet_of_models_parallel(const IndexedProgram& program);

/// Smallest mask I with lfp(K + I) != lfp(L + I). Both programs must be
/// indexed over the same alphabet.
std::optional<Mask> first_uniform_counterexample_serial(const IndexedProgram& lhs,
                                                        const IndexedProgram& rhs);
std::optional<Mask> first_uniform_counterexample_parallel(const IndexedProgram& lhs,
                                                          const IndexedProgram& rhs);

}  // namespace krom::kernels
