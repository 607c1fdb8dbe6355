#include "krom/program.hpp"

#include <algorithm>
#include <stdexcept>

namespace krom {

bool is_valid_atom_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    if (name.front() < 'a' || name.front() > 'z') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!is_valid_atom_name(name_))
        throw std::invalid_argument("invalid atom name '" + name_ + "'");
}

std::strong_ordering operator<=>(const Rule& lhs, const Rule& rhs) noexcept {
    if (lhs.is_fact() != rhs.is_fact()) return lhs.is_fact() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = lhs.head_ <=> rhs.head_; c != 0) return c;
    if (lhs.is_fact()) return std::strong_ordering::equal;
    return *lhs.body_ <=> *rhs.body_;
}

Program Program::from_interpretation(const Interpretation& interp) {
    Program result;
    for (const auto& atom : interp) result.insert(Rule::fact(atom));
    return result;
}

bool Program::includes(const Program& other) const {
    return std::includes(rules_.begin(), rules_.end(), other.rules_.begin(), other.rules_.end());
}

bool Program::is_facts_only() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_fact(); });
}

Program program_union(Program lhs, const Program& rhs) {
    lhs.unite(rhs);
    return lhs;
}

}  // namespace krom
