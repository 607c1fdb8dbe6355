#include "krom/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "krom/errors.hpp"

namespace krom::kernels {

namespace {

std::size_t index_of(const Atom& atom, std::span<const Atom> alphabet) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), atom);
    if (it == alphabet.end() || *it != atom)
        throw AlphabetError("atom '" + atom.name() + "' is not in the alphabet");
    return static_cast<std::size_t>(it - alphabet.begin());
}

// Number of interpretations enumerated per parallel block before checking
// for an early exit.
constexpr std::int64_t block_size = 1 << 12;

Mask one_step(const IndexedProgram& program, Mask current) {
    Mask next = current;
    for (Mask bits = current; bits != 0; bits &= bits - 1)
        next |= program.implied[static_cast<std::size_t>(std::countr_zero(bits))];
    return next;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

IndexedProgram index_program(const Program& program, std::span<const Atom> alphabet) {
    if (alphabet.size() > max_atoms) throw AlphabetTooLargeError(alphabet.size(), max_atoms);
    IndexedProgram out;
    out.atom_count = alphabet.size();
    out.implied.assign(alphabet.size(), 0);
    for (const auto& rule : program) {
        const Mask head = Mask{1} << index_of(rule.head(), alphabet);
        if (rule.is_fact())
            out.facts |= head;
        else
            out.implied[index_of(*rule.body(), alphabet)] |= head;
    }
    return out;
}

Mask to_mask(const Interpretation& interp, std::span<const Atom> alphabet) {
    Mask out = 0;
    for (const auto& atom : interp) out |= Mask{1} << index_of(atom, alphabet);
    return out;
}

Interpretation from_mask(Mask mask, std::span<const Atom> alphabet) {
    Interpretation out;
    for (Mask bits = mask; bits != 0; bits &= bits - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(bits));
        if (i >= alphabet.size()) throw std::out_of_range("mask has bits beyond the alphabet");
        out.insert(alphabet[i]);
    }
    return out;
}

bool satisfies(const IndexedProgram& program, Mask interp) {
    if ((program.facts & ~interp) != 0) return false;
    for (Mask bits = interp; bits != 0; bits &= bits - 1)
        if ((program.implied[static_cast<std::size_t>(std::countr_zero(bits))] & ~interp) != 0)
            return false;
    return true;
}

Mask consequence_fixpoint(const IndexedProgram& program, Mask extra_facts) {
    Mask current = program.facts | extra_facts;
    for (;;) {
        const Mask next = one_step(program, current);
        if (next == current) return current;
        current = next;
    }
}

ModelMeet meet_of_models_serial(const IndexedProgram& program) {
    const auto total = static_cast<std::int64_t>(full_mask(program.atom_count)) + 1;
    ModelMeet out{full_mask(program.atom_count), 0};
    for (std::int64_t i = 0; i < total; ++i) {
        const auto interp = static_cast<Mask>(i);
        if (satisfies(program, interp)) {
            out.meet &= interp;
            ++out.model_count;
        }
    }
    return out;
}

ModelMeet meet_of_models_parallel(const IndexedProgram& program) {
    const auto total = static_cast<std::int64_t>(full_mask(program.atom_count)) + 1;
    Mask meet = full_mask(program.atom_count);
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(& : meet) reduction(+ : count)
    for (std::int64_t i = 0; i < total; ++i) {
        const auto interp = static_cast<Mask>(i);
        if (satisfies(program, interp)) {
            meet &= interp;
            ++count;
        }
    }
    return {meet, count};
}

std::optional<Mask> first_uniform_counterexample_serial(const IndexedProgram& lhs,
                                                        const IndexedProgram& rhs) {
    if (lhs.atom_count != rhs.atom_count)
        throw std::invalid_argument("programs are indexed over different alphabets");
    const auto total = static_cast<std::int64_t>(full_mask(lhs.atom_count)) + 1;
    for (std::int64_t i = 0; i < total; ++i) {
        const auto interp = static_cast<Mask>(i);
        if (consequence_fixpoint(lhs, interp) != consequence_fixpoint(rhs, interp)) return interp;
    }
    return std::nullopt;
}

std::optional<Mask> first_uniform_counterexample_parallel(const IndexedProgram& lhs,
                                                          const IndexedProgram& rhs) {
    if (lhs.atom_count != rhs.atom_count)
        throw std::invalid_argument("programs are indexed over different alphabets");
    const auto total = static_cast<std::int64_t>(full_mask(lhs.atom_count)) + 1;
    constexpr auto none = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t start = 0; start < total; start += block_size) {
        const std::int64_t stop = std::min(total, start + block_size);
        std::int64_t first = none;
#pragma omp parallel for schedule(static) reduction(min : first)
        for (std::int64_t i = start; i < stop; ++i) {
            const auto interp = static_cast<Mask>(i);
            if (consequence_fixpoint(lhs, interp) != consequence_fixpoint(rhs, interp))
                first = std::min(first, i);
        }
        if (first != none) return static_cast<Mask>(first);
    }
    return std::nullopt;
}

}  // namespace krom::kernels
