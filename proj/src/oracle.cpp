#include "krom/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "krom/algebra.hpp"
#include "krom/errors.hpp"
#include "krom/kernels.hpp"

namespace krom {

namespace {

std::vector<Atom> checked_alphabet(const Alphabet& alphabet, const OracleOptions& options) {
    if (options.max_atoms > kernels::max_atoms)
        throw std::invalid_argument("oracle bound " + std::to_string(options.max_atoms) +
                                    " exceeds the kernel limit of " + std::to_string(kernels::max_atoms));
    if (alphabet.size() > options.max_atoms) throw AlphabetTooLargeError(alphabet.size(), options.max_atoms);
    return alphabet.to_vector();
}

}  // namespace

Interpretation lm_oracle(const Program& program, OracleOptions options) {
    const auto alphabet = checked_alphabet(atoms(program), options);
    const auto indexed = kernels::index_program(program, alphabet);
    const auto result = kernels::meet_of_models_parallel(indexed);
    // The full alphabet is always a model, so the meet ranges over a
    // non-empty family; it is the least model only if it is a model itself.
    if (result.model_count == 0 || !kernels::satisfies(indexed, result.meet))
        throw InvariantViolation("meet of all models is not a model");
    return kernels::from_mask(result.meet, alphabet);
}

EquivVerdict uniform_equiv_oracle(const Program& lhs, const Program& rhs, OracleOptions options) {
    const auto alphabet = checked_alphabet(set_union(atoms(lhs), atoms(rhs)), options);
    const auto lhs_indexed = kernels::index_program(lhs, alphabet);
    const auto rhs_indexed = kernels::index_program(rhs, alphabet);
    if (auto bad = kernels::first_uniform_counterexample_parallel(lhs_indexed, rhs_indexed))
        return {false, kernels::from_mask(*bad, alphabet)};
    return {true, std::nullopt};
}

EquivVerdict ss_equiv_exhaustive(const Program& lhs, const Program& rhs, OracleOptions options) {
    const auto alphabet = checked_alphabet(set_union(atoms(lhs), atoms(rhs)), options);
    const kernels::Mask total = kernels::Mask{1} << alphabet.size();
    for (kernels::Mask mask = 0; mask < total; ++mask) {
        Interpretation interp = kernels::from_mask(mask, alphabet);
        const Program as_program = Program::from_interpretation(interp);
        if (compose(lhs, as_program) != compose(rhs, as_program)) return {false, std::move(interp)};
    }
    return {true, std::nullopt};
}

}  // namespace krom
