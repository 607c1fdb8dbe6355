#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "krom/cli.hpp"
#include "krom/textio.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = krom::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("krom_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".krom");
        std::ofstream(path_, std::ios::binary) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("golden scenarios") {
    const auto lm = run({"lm", "-"}, "a.\nb :- a.\n");
    CHECK(lm.code == 0);
    CHECK(lm.out == "a\nb\n");
    CHECK(lm.err.empty());

    TempFile chain("a :- b.\nb :- c.\n"), closed("a :- b.\nb :- c.\na :- c.\n");
    const auto uniform = run({"equiv", "--mode", "uniform", chain.path(), closed.path()});
    CHECK(uniform.code == 0);
    CHECK(uniform.out == "equivalent\n");

    const auto check = run({"check", "-"}, "a :- b, c.");
    CHECK(check.code == 2);
    CHECK(check.out.empty());
    CHECK(check.err == "<stdin>:1:7: Krom programs admit at most one body atom\n");
}

TEST_CASE("equiv verdicts and exit codes") {
    TempFile k("b :- a.\n"), empty("");
    auto lm = run({"equiv", "--mode", "lm", k.path(), empty.path()});
    CHECK(lm.code == 0);
    CHECK(lm.out == "equivalent\n");

    auto u = run({"equiv", "--mode", "uniform", k.path(), empty.path()});
    CHECK(u.code == 1);
    CHECK(u.out == "not equivalent\nwitness: {a}\n");

    auto uo = run({"equiv", "--mode", "uniform", "--oracle", k.path(), empty.path()});
    CHECK(uo.code == 1);
    CHECK(uo.out == "not equivalent\nwitness: {a}\n");

    auto ss = run({"equiv", "--mode", "ss", k.path(), empty.path()});
    CHECK(ss.code == 1);
    CHECK(ss.out == "not equivalent\n");

    auto sso = run({"equiv", "--mode", "ss", "--oracle", k.path(), empty.path()});
    CHECK(sso.code == 1);
    CHECK(sso.out == "not equivalent\nwitness: {a}\n");

    auto lmo = run({"equiv", "--mode", "lm", "--oracle", k.path(), empty.path()});
    CHECK(lmo.code == 0);

    TempFile wide("a. b. c.\n");
    auto too_wide = run({"equiv", "--mode", "uniform", "--oracle", "--oracle-max-atoms", "2", wide.path(), empty.path()});
    CHECK(too_wide.code == 2);
    CHECK(too_wide.err.find("exceeds oracle bound") != std::string::npos);

    CHECK(run({"equiv", "--mode", "strong", k.path(), empty.path()}).code == 2);
    CHECK(run({"equiv", k.path(), empty.path()}).code == 2);
}

TEST_CASE("program-producing commands") {
    TempFile chain("a :- b.\nb :- c.\n"), fact("b.\n");
    CHECK(run({"compose", chain.path(), fact.path()}).out == "a.\n");
    CHECK(run({"compose", chain.path(), chain.path()}).out == "a :- c.\n");
    CHECK(run({"power", chain.path(), "2"}).out == "a :- c.\n");
    CHECK(run({"power", chain.path(), "0"}).out == "a :- a.\nb :- b.\nc :- c.\n");
    CHECK(run({"star", chain.path()}).out == "a :- a.\na :- b.\na :- c.\nb :- b.\nb :- c.\nc :- c.\n");
    CHECK(run({"star", chain.path(), "--alphabet", "a,b,c,d"}).out ==
          "a :- a.\na :- b.\na :- c.\nb :- b.\nb :- c.\nc :- c.\nd :- d.\n");
    CHECK(run({"plus", chain.path()}).out == "a :- b.\na :- c.\nb :- c.\n");
    CHECK(run({"minimize", "-"}, "a :- b. b :- c. a :- c.").out == "a :- b.\nb :- c.\n");
    CHECK(run({"dot", "-"}, "a. b :- a.").out == krom::to_dot(krom::parse("a. b :- a.")));
    CHECK(run({"lm", "-"}, "a :- b. b :- a.").out.empty());

    const auto gen = run({"gen", "--atoms", "3", "--rules", "5", "--fact-ratio", "0.4", "--seed", "9"});
    CHECK(gen.code == 0);
    CHECK(krom::parse(gen.out).size() == 5);
    CHECK(run({"gen", "--atoms", "3", "--rules", "5", "--fact-ratio", "0.4", "--seed", "9"}).out == gen.out);

    for (const auto& output : {run({"star", chain.path()}).out, run({"plus", chain.path()}).out, gen.out})
        CHECK(krom::render(krom::parse(output)) == output);
}

TEST_CASE("usage errors") {
    TempFile chain("a :- b.\nb :- c.\n");
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"lm"}).code == 2);

    const auto missing = run({"lm", "/nonexistent/krom/file"});
    CHECK(missing.code == 2);
    CHECK(missing.err == "/nonexistent/krom/file: cannot open file\n");

    const auto outside = run({"star", chain.path(), "--alphabet", "a,b"});
    CHECK(outside.code == 2);
    CHECK(outside.err.find("'c' is not in the alphabet") != std::string::npos);
    CHECK(run({"star", chain.path(), "--alphabet", "a,B"}).code == 2);

    CHECK(run({"gen", "--atoms", "2", "--rules", "7"}).code == 2);
    CHECK(run({"gen", "--atoms", "0", "--rules", "0"}).code == 2);
    CHECK(run({"gen", "--atoms", "2", "--rules", "1", "--fact-ratio", "2"}).code == 2);
    CHECK(run({"compose", "-", "-"}, "a.").code == 2);

    const auto bad = run({"lm", "-"}, "a.\nb :- .\n");
    CHECK(bad.code == 2);
    CHECK(bad.err == "<stdin>:2:6: expected an atom\n");

    CHECK(run({"check", "-"}, "a.\n").code == 0);
    CHECK(run({"--help"}).code == 0);
}
