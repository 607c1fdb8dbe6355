#include "krom/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "krom/algebra.hpp"
#include "krom/equivalence.hpp"
#include "krom/errors.hpp"
#include "krom/gen.hpp"
#include "krom/oracle.hpp"
#include "krom/textio.hpp"

namespace krom::cli {

namespace {

// Failure already reported in "where: message" form.
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Loader {
public:
    explicit Loader(std::istream& in) : in_(in) {}

    Program load(const std::string& path) {
        std::string text;
        std::string label = path;
        if (path == "-") {
            if (stdin_used_) throw UsageFailure("-: standard input can only be read once");
            stdin_used_ = true;
            label = "<stdin>";
            text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        } else {
            std::ifstream file(path, std::ios::binary);
            if (!file) throw UsageFailure(path + ": cannot open file");
            text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        try {
            return parse(text);
        } catch (const ParseError& e) {
            throw UsageFailure(label + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                               ": " + e.message());
        }
    }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

Alphabet resolve_alphabet(const Program& program, const std::optional<std::vector<std::string>>& names) {
    if (!names) return atoms(program);
    Alphabet out;
    for (const auto& name : *names) {
        if (!is_valid_atom_name(name)) throw UsageFailure("--alphabet: invalid atom name '" + name + "'");
        out.insert(Atom(name));
    }
    return out;
}

std::string format_set(const Interpretation& interp) {
    std::string out = "{";
    bool first = true;
    for (const auto& atom : interp) {
        if (!first) out += ", ";
        out += atom.name();
        first = false;
    }
    return out + "}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequential-composition algebra and equivalence checks for Krom programs", "krom"};
    app.require_subcommand(1);

    std::string file, file2;
    std::optional<std::vector<std::string>> alphabet_names;
    const auto add_alphabet = [&](CLI::App* sub) {
        sub->add_option("--alphabet", alphabet_names, "Comma-separated alphabet (defaults to the operand's atoms)")
            ->delimiter(',');
    };

    auto* lm_cmd = app.add_subcommand("lm", "Print the least model, one atom per line");
    lm_cmd->add_option("FILE", file)->required();

    auto* compose_cmd = app.add_subcommand("compose", "Print the composition FILE1 o FILE2");
    compose_cmd->add_option("FILE1", file)->required();
    compose_cmd->add_option("FILE2", file2)->required();

    std::uint64_t exponent = 0;
    auto* power_cmd = app.add_subcommand("power", "Print the N-th power");
    power_cmd->add_option("FILE", file)->required();
    power_cmd->add_option("N", exponent)->required();
    add_alphabet(power_cmd);

    auto* star_cmd = app.add_subcommand("star", "Print the Kleene star");
    star_cmd->add_option("FILE", file)->required();
    add_alphabet(star_cmd);

    auto* plus_cmd = app.add_subcommand("plus", "Print the Kleene plus");
    plus_cmd->add_option("FILE", file)->required();
    add_alphabet(plus_cmd);

    std::string mode;
    bool use_oracle = false;
    std::size_t oracle_bound = OracleOptions{}.max_atoms;
    auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence; exit 0 if equivalent, 1 if not");
    equiv_cmd->add_option("--mode", mode, "lm, ss or uniform")
        ->required()
        ->check(CLI::IsMember({"lm", "ss", "uniform"}));
    equiv_cmd->add_flag("--oracle", use_oracle, "Decide by brute-force enumeration of interpretations");
    equiv_cmd->add_option("--oracle-max-atoms", oracle_bound, "Largest alphabet the oracle enumerates")
        ->check(CLI::Range(std::size_t{0}, std::size_t{32}));
    equiv_cmd->add_option("FILE1", file)->required();
    equiv_cmd->add_option("FILE2", file2)->required();

    auto* minimize_cmd = app.add_subcommand("minimize", "Drop rules while preserving uniform equivalence");
    minimize_cmd->add_option("FILE", file)->required();

    GenConfig config;
    auto* gen_cmd = app.add_subcommand("gen", "Print a reproducible random program over x1..xN");
    gen_cmd->add_option("--atoms", config.atom_count)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--rules", config.rule_count)->required();
    gen_cmd->add_option("--fact-ratio", config.fact_ratio)->capture_default_str()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", config.seed)->capture_default_str();

    auto* dot_cmd = app.add_subcommand("dot", "Print the rule graph in Graphviz format");
    dot_cmd->add_option("FILE", file)->required();

    auto* check_cmd = app.add_subcommand("check", "Validate syntax only");
    check_cmd->add_option("FILE", file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    Loader loader(in);
    try {
        if (lm_cmd->parsed()) {
            for (const auto& atom : omega(loader.load(file))) out << atom.name() << '\n';
        } else if (compose_cmd->parsed()) {
            const Program lhs = loader.load(file);
            const Program rhs = loader.load(file2);
            out << render(compose(lhs, rhs));
        } else if (power_cmd->parsed() || star_cmd->parsed() || plus_cmd->parsed()) {
            const Program program = loader.load(file);
            const Alphabet alphabet = resolve_alphabet(program, alphabet_names);
            if (power_cmd->parsed())
                out << render(power(program, exponent, alphabet));
            else if (star_cmd->parsed())
                out << render(star(program, alphabet));
            else
                out << render(plus(program, alphabet));
        } else if (equiv_cmd->parsed()) {
            const Program lhs = loader.load(file);
            const Program rhs = loader.load(file2);
            const OracleOptions options{oracle_bound};
            EquivVerdict verdict;
            if (mode == "lm")
                verdict = use_oracle ? EquivVerdict{lm_oracle(lhs, options) == lm_oracle(rhs, options), std::nullopt}
                                     : lm_equiv(lhs, rhs);
            else if (mode == "ss")
                verdict = use_oracle ? ss_equiv_exhaustive(lhs, rhs, options) : ss_equiv(lhs, rhs);
            else
                verdict = use_oracle ? uniform_equiv_oracle(lhs, rhs, options) : uniform_equiv(lhs, rhs);
            out << (verdict.equal ? "equivalent" : "not equivalent") << '\n';
            if (verdict.witness) out << "witness: " << format_set(*verdict.witness) << '\n';
            return verdict.equal ? success : not_equivalent;
        } else if (minimize_cmd->parsed()) {
            out << render(minimize(loader.load(file)));
        } else if (gen_cmd->parsed()) {
            out << render(random_program(config));
        } else if (dot_cmd->parsed()) {
            out << to_dot(loader.load(file));
        } else if (check_cmd->parsed()) {
            loader.load(file);
        }
        return success;
    } catch (const UsageFailure& e) {
        err << e.what() << '\n';
        return usage_error;
    } catch (const InvariantViolation& e) {
        err << "krom: internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const Error& e) {
        err << "krom: error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "krom: error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "krom: internal error: " << e.what() << '\n';
        return internal_error;
    }
}

}  // namespace krom::cli
