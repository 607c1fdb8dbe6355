#include "krom/equivalence.hpp"

#include <vector>

#include "krom/algebra.hpp"

namespace krom {

namespace {

// I = {} first, then each singleton in atom order.
std::vector<Interpretation> probe_interpretations(const Program& lhs, const Program& rhs) {
    std::vector<Interpretation> probes{Interpretation{}};
    for (const auto& atom : set_union(atoms(lhs), atoms(rhs))) probes.push_back(Interpretation{atom});
    return probes;
}

EquivVerdict differs_at(Interpretation witness) { return {false, std::move(witness)}; }

}  // namespace

EquivVerdict lm_equiv(const Program& lhs, const Program& rhs) {
    return {omega(lhs) == omega(rhs), std::nullopt};
}

Program drop_fact_headed_rules(const Program& program) {
    const Interpretation fact_atoms = facts(program);
    Program out;
    for (const auto& rule : program)
        if (rule.is_fact() || !fact_atoms.contains(rule.head())) out.insert(rule);
    return out;
}

EquivVerdict ss_equiv(const Program& lhs, const Program& rhs) {
    return {drop_fact_headed_rules(lhs) == drop_fact_headed_rules(rhs), std::nullopt};
}

EquivVerdict ss_equiv_semantic(const Program& lhs, const Program& rhs) {
    for (auto& probe : probe_interpretations(lhs, rhs)) {
        const Program as_program = Program::from_interpretation(probe);
        if (compose(lhs, as_program) != compose(rhs, as_program)) return differs_at(std::move(probe));
    }
    return {true, std::nullopt};
}

EquivVerdict uniform_equiv(const Program& lhs, const Program& rhs) {
    const Interpretation lhs_model = omega(lhs);
    const Interpretation rhs_model = omega(rhs);
    if (lhs_model != rhs_model) return differs_at(Interpretation{});

    const Program lhs_proper = proper(lhs);
    const Program rhs_proper = proper(rhs);
    for (const auto& atom : set_union(atoms(lhs), atoms(rhs))) {
        const Interpretation single{atom};
        if (set_union(lhs_model, reach(lhs_proper, single)) != set_union(rhs_model, reach(rhs_proper, single)))
            return differs_at(single);
    }
    return {true, std::nullopt};
}

Program minimize(const Program& program) {
    Program current = program;
    for (const auto& rule : program) {
        Program candidate = current;
        candidate.erase(rule);
        if (uniform_equiv(program, candidate).equal) current = std::move(candidate);
    }
    return current;
}

}  // namespace krom
