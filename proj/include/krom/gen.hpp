#pragma once

// Reproducible random and exhaustive generators of Krom programs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "krom/program.hpp"

namespace krom {

struct GenConfig {
    std::size_t atom_count = 1;
    std::size_t rule_count = 0;
    /// Probability that a drawn rule is a fact.
    double fact_ratio = 0.5;
    std::uint64_t seed = 0;
};

/// The atoms x1..xN used by random_program.
Alphabet generated_alphabet(std::size_t atom_count);

/// Every rule over `alphabet`, in rule order: |A| facts then |A|^2 proper rules.
std::vector<Rule> rule_universe(const Alphabet& alphabet);

/// Draws `rule_count` distinct rules over x1..xN.
///
/// The stream is std::mt19937_64 seeded with `seed`, whose output sequence
/// is fixed by the C++ standard. Each draw takes one 64-bit word u and makes
/// the rule a fact iff (u >> 11) * 2^-53 < fact_ratio; atoms are then picked
/// by rejection sampling (a word r is kept once r >= 2^64 mod n, giving
/// r mod n). Once every fact (or every proper rule) is taken, the other kind
/// is drawn without consuming the coin word. Duplicates are redrawn.
///
/// Throws std::invalid_argument if atom_count is 0, fact_ratio is outside
/// [0, 1], or rule_count exceeds |A| + |A|^2.
Program random_program(const GenConfig& config);

/// Yields every subset of rule_universe(A) with at most `max_rules` rules,
/// by increasing size and then lexicographically by universe index.
class ProgramEnumerator {
public:
    static constexpr std::size_t max_alphabet = 3;
    static constexpr std::size_t max_rule_limit = 4;

    /// Throws std::invalid_argument if |A| > 3 or max_rules > 4.
    ProgramEnumerator(const Alphabet& alphabet, std::size_t max_rules);

    std::optional<Program> next();

private:
    bool advance();

    std::vector<Rule> universe_;
    std::size_t max_rules_;
    std::size_t size_ = 0;
    std::vector<std::size_t> picks_;
    bool done_ = false;
};

/// All programs ProgramEnumerator yields, collected.
std::vector<Program> enumerate_programs(const Alphabet& alphabet, std::size_t max_rules);

}  // namespace krom
