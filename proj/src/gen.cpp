#include "krom/gen.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace krom {

namespace {

constexpr std::size_t max_generated_atoms = std::size_t{1} << 20;

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = engine();
        if (r >= threshold) return r % n;
    }
}

}  // namespace

Alphabet generated_alphabet(std::size_t atom_count) {
    Alphabet out;
    for (std::size_t i = 1; i <= atom_count; ++i) out.insert(Atom("x" + std::to_string(i)));
    return out;
}

std::vector<Rule> rule_universe(const Alphabet& alphabet) {
    std::vector<Rule> out;
    out.reserve(alphabet.size() * (alphabet.size() + 1));
    for (const auto& atom : alphabet) out.push_back(Rule::fact(atom));
    for (const auto& head : alphabet)
        for (const auto& body : alphabet) out.push_back(Rule::proper(head, body));
    return out;
}

Program random_program(const GenConfig& config) {
    const std::size_t n = config.atom_count;
    if (n == 0) throw std::invalid_argument("atom_count must be positive");
    if (n > max_generated_atoms)
        throw std::invalid_argument("atom_count exceeds " + std::to_string(max_generated_atoms));
    if (!(config.fact_ratio >= 0.0 && config.fact_ratio <= 1.0))
        throw std::invalid_argument("fact_ratio must lie in [0, 1]");
    const std::size_t fact_slots = n;
    const std::size_t proper_slots = n * n;
    if (config.rule_count > fact_slots + proper_slots)
        throw std::invalid_argument("rule_count " + std::to_string(config.rule_count) +
                                    " exceeds the rule universe of " +
                                    std::to_string(fact_slots + proper_slots));

    std::vector<Atom> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.emplace_back("x" + std::to_string(i));

    std::mt19937_64 engine(config.seed);
    Program out;
    std::size_t fact_count = 0, proper_count = 0;
    while (out.size() < config.rule_count) {
        bool want_fact;
        if (fact_count == fact_slots) {
            want_fact = false;
        } else if (proper_count == proper_slots) {
            want_fact = true;
        } else {
            const double coin = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            want_fact = coin < config.fact_ratio;
        }
        if (want_fact) {
            if (out.insert(Rule::fact(names[uniform_below(engine, n)]))) ++fact_count;
        } else {
            const auto& head = names[uniform_below(engine, n)];
            const auto& body = names[uniform_below(engine, n)];
            if (out.insert(Rule::proper(head, body))) ++proper_count;
        }
    }
    return out;
}

ProgramEnumerator::ProgramEnumerator(const Alphabet& alphabet, std::size_t max_rules)
    : max_rules_(max_rules) {
    if (alphabet.size() > max_alphabet)
        throw std::invalid_argument("enumeration is limited to alphabets of at most " +
                                    std::to_string(max_alphabet) + " atoms");
    if (max_rules > max_rule_limit)
        throw std::invalid_argument("enumeration is limited to at most " + std::to_string(max_rule_limit) +
                                    " rules per program");
    universe_ = rule_universe(alphabet);
}

std::optional<Program> ProgramEnumerator::next() {
    if (done_) return std::nullopt;
    Program out;
    for (std::size_t index : picks_) out.insert(universe_[index]);
    done_ = !advance();
    return out;
}

// Steps picks_ to the next combination, moving to the next size when the
// current one is exhausted.
bool ProgramEnumerator::advance() {
    const std::size_t u = universe_.size();
    for (std::size_t k = size_; k-- > 0;) {
        if (picks_[k] < u - (size_ - k)) {
            ++picks_[k];
            for (std::size_t j = k + 1; j < size_; ++j) picks_[j] = picks_[j - 1] + 1;
            return true;
        }
    }
    ++size_;
    if (size_ > max_rules_ || size_ > u) return false;
    picks_.resize(size_);
    for (std::size_t j = 0; j < size_; ++j) picks_[j] = j;
    return true;
}

std::vector<Program> enumerate_programs(const Alphabet& alphabet, std::size_t max_rules) {
    std::vector<Program> out;
    ProgramEnumerator programs(alphabet, max_rules);
    while (auto program = programs.next()) out.push_back(std::move(*program));
    return out;
}

}  // namespace krom
