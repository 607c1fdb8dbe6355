#include "krom/algebra.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "krom/errors.hpp"

namespace krom {

namespace {

// body -> heads of the proper rules with that body
std::map<Atom, std::vector<Atom>> successors(const Program& program) {
    std::map<Atom, std::vector<Atom>> out;
    for (const auto& rule : program)
        if (rule.is_proper()) out[*rule.body()].push_back(rule.head());
    return out;
}

// head -> bodies of the proper rules with that head
std::map<Atom, std::vector<Atom>> bodies_by_head(const Program& program) {
    std::map<Atom, std::vector<Atom>> out;
    for (const auto& rule : program)
        if (rule.is_proper()) out[rule.head()].push_back(*rule.body());
    return out;
}

}  // namespace

Alphabet atoms(const Program& program) {
    Alphabet out;
    for (const auto& rule : program) {
        out.insert(rule.head());
        if (rule.is_proper()) out.insert(*rule.body());
    }
    return out;
}

Interpretation facts(const Program& program) {
    Interpretation out;
    for (const auto& rule : program)
        if (rule.is_fact()) out.insert(rule.head());
    return out;
}

Program proper(const Program& program) {
    Program out;
    for (const auto& rule : program)
        if (rule.is_proper()) out.insert(rule);
    return out;
}

Interpretation heads(const Program& program) {
    Interpretation out;
    for (const auto& rule : program) out.insert(rule.head());
    return out;
}

Program compose(const Program& lhs, const Program& rhs) {
    const Interpretation rhs_facts = facts(rhs);
    const auto rhs_bodies = bodies_by_head(rhs);

    Program out;
    for (const auto& rule : lhs) {
        if (rule.is_fact()) {
            out.insert(rule);
            continue;
        }
        const Atom& body = *rule.body();
        if (rhs_facts.contains(body)) out.insert(Rule::fact(rule.head()));
        if (auto it = rhs_bodies.find(body); it != rhs_bodies.end())
            for (const auto& next : it->second) out.insert(Rule::proper(rule.head(), next));
    }
    return out;
}

Program unit(const Alphabet& alphabet) {
    Program out;
    for (const auto& atom : alphabet) out.insert(Rule::proper(atom, atom));
    return out;
}

void require_within(const Program& program, const Alphabet& alphabet) {
    for (const auto& atom : atoms(program))
        if (!alphabet.contains(atom))
            throw AlphabetError("atom '" + atom.name() + "' is not in the alphabet");
}

Program power(const Program& program, std::uint64_t n, const Alphabet& alphabet) {
    require_within(program, alphabet);
    Program acc = unit(alphabet);
    for (std::uint64_t i = 0; i < n; ++i) acc = compose(acc, program);
    return acc;
}

Program star(const Program& program, const Alphabet& alphabet) {
    require_within(program, alphabet);
    // Each productive pass adds at least one rule of the |A| + |A|^2 universe.
    const std::size_t bound = alphabet.size() * alphabet.size() + alphabet.size() + 1;
    Program acc = unit(alphabet);
    for (std::size_t pass = 0; pass < bound; ++pass) {
        Program next = program_union(acc, compose(acc, program));
        if (next == acc) return acc;
        acc = std::move(next);
    }
    throw InvariantViolation("star did not reach a fixpoint within the rule-universe bound");
}

Program plus(const Program& program, const Alphabet& alphabet) {
    return compose(star(program, alphabet), program);
}

Interpretation omega(const Program& program) {
    return reach(proper(program), facts(program));
}

bool models(const Interpretation& interp, const Program& program) {
    for (const auto& rule : program) {
        if (rule.is_fact()) {
            if (!interp.contains(rule.head())) return false;
        } else if (interp.contains(*rule.body()) && !interp.contains(rule.head())) {
            return false;
        }
    }
    return true;
}

Interpretation reach(const Program& program, const Interpretation& interp) {
    for (const auto& rule : program)
        if (rule.is_fact())
            throw std::invalid_argument("reach expects proper rules only, got fact '" +
                                        rule.head().name() + "'");
    const auto succ = successors(program);
    Interpretation seen = interp;
    std::deque<Atom> frontier(interp.begin(), interp.end());
    while (!frontier.empty()) {
        Atom current = std::move(frontier.front());
        frontier.pop_front();
        auto it = succ.find(current);
        if (it == succ.end()) continue;
        for (const auto& next : it->second)
            if (seen.insert(next)) frontier.push_back(next);
    }
    return seen;
}

Interpretation extend_omega(const Program& program, const Interpretation& interp) {
    return set_union(omega(program), reach(proper(program), interp));
}

}  // namespace krom
