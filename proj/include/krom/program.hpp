#pragma once

// Value types for propositional Krom programs: atoms, rules, programs and
// the atom sets used as interpretations and alphabets.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace krom {

/// True iff `name` matches [a-z][A-Za-z0-9_]*.
bool is_valid_atom_name(std::string_view name) noexcept;

/// A propositional symbol. Equality and order are those of the name bytes.
class Atom {
public:
    /// Throws std::invalid_argument if `name` is not a valid atom name.
    explicit Atom(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& lhs, const Atom& rhs) noexcept {
        return lhs.name_.compare(rhs.name_) <=> 0;
    }

private:
    std::string name_;
};

/// Either a fact `a` or a proper rule `a <- b`. Self-loops are legal.
///
/// Order: facts before proper rules; facts by head; proper rules by
/// (head, body). Rendering and iteration both follow this order.
class Rule {
public:
    static Rule fact(Atom head) { return Rule(std::move(head), std::nullopt); }
    static Rule proper(Atom head, Atom body) { return Rule(std::move(head), std::move(body)); }

    const Atom& head() const noexcept { return head_; }
    const std::optional<Atom>& body() const noexcept { return body_; }
    bool is_fact() const noexcept { return !body_.has_value(); }
    bool is_proper() const noexcept { return body_.has_value(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule& lhs, const Rule& rhs) noexcept;

private:
    Rule(Atom head, std::optional<Atom> body) : head_(std::move(head)), body_(std::move(body)) {}

    Atom head_;
    std::optional<Atom> body_;
};

/// Sorted, duplicate-free set of atoms. The tag keeps interpretations and
/// alphabets from being mixed up silently.
template <typename Tag>
class AtomSet {
public:
    using const_iterator = std::set<Atom>::const_iterator;

    AtomSet() = default;
    AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) {}
    template <typename It>
    AtomSet(It first, It last) : atoms_(first, last) {}

    bool insert(const Atom& atom) { return atoms_.insert(atom).second; }
    bool contains(const Atom& atom) const { return atoms_.contains(atom); }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    const_iterator begin() const noexcept { return atoms_.begin(); }
    const_iterator end() const noexcept { return atoms_.end(); }

    void unite(const AtomSet& other) { atoms_.insert(other.atoms_.begin(), other.atoms_.end()); }

    bool includes(const AtomSet& other) const {
        for (const auto& atom : other.atoms_)
            if (!atoms_.contains(atom)) return false;
        return true;
    }

    std::vector<Atom> to_vector() const { return {atoms_.begin(), atoms_.end()}; }

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet& lhs, const AtomSet& rhs) = default;

private:
    std::set<Atom> atoms_;
};

struct InterpretationTag {};
struct AlphabetTag {};

using Interpretation = AtomSet<InterpretationTag>;
using Alphabet = AtomSet<AlphabetTag>;

template <typename To, typename From>
AtomSet<To> retag(const AtomSet<From>& set) {
    return AtomSet<To>(set.begin(), set.end());
}

inline Alphabet to_alphabet(const Interpretation& interp) { return retag<AlphabetTag>(interp); }

template <typename Tag>
AtomSet<Tag> set_union(AtomSet<Tag> lhs, const AtomSet<Tag>& rhs) {
    lhs.unite(rhs);
    return lhs;
}

/// A finite set of rules.
class Program {
public:
    using const_iterator = std::set<Rule>::const_iterator;

    Program() = default;
    Program(std::initializer_list<Rule> rules) : rules_(rules) {}
    template <typename It>
    Program(It first, It last) : rules_(first, last) {}

    /// The facts-only program {a | a in I}.
    static Program from_interpretation(const Interpretation& interp);

    bool insert(const Rule& rule) { return rules_.insert(rule).second; }
    bool erase(const Rule& rule) { return rules_.erase(rule) > 0; }
    bool contains(const Rule& rule) const { return rules_.contains(rule); }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    const_iterator begin() const noexcept { return rules_.begin(); }
    const_iterator end() const noexcept { return rules_.end(); }

    void unite(const Program& other) { rules_.insert(other.rules_.begin(), other.rules_.end()); }
    bool includes(const Program& other) const;

    /// True iff every rule is a fact.
    bool is_facts_only() const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::set<Rule> rules_;
};

Program program_union(Program lhs, const Program& rhs);

}  // namespace krom
