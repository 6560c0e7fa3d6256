#include <filesystem>
#include <random>

#include "doctest.h"
#include "monomod/brute_force.hpp"
#include "monomod/decide.hpp"
#include "monomod/error.hpp"
#include "monomod/hilbert.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "../support/corpus.hpp"

using namespace monomod;
using namespace monomod::hilbert;

namespace {

ProofScript load(const std::string& name) {
    return parseProofScript(readFile(std::string(MONOMOD_TEST_DATA) + "/bank/" + name));
}

std::size_t logicIndex(Logic l) {
    for (std::size_t k = 0; k < kAllLogics.size(); ++k)
        if (kAllLogics[k] == l) return k;
    return 0;
}

// Random well-formed derivations built from the rules available in l.
ProofScript randomProof(Logic l, std::mt19937_64& rng) {
    const std::vector<Formula> leaves{Formula::var("p"), Formula::var("q")};
    auto small = [&] { return testing_support::randomFormula(rng, 2, leaves); };
    ProofScript s;
    s.logic = l;
    auto push = [&](Formula f, Justification j, std::size_t a = 0, std::size_t b = 0) {
        s.lines.push_back(ProofLine{s.lines.size() + 1, std::move(f), j, a, b});
    };
    for (int step = 0; step < 8; ++step) {
        const auto pick = [&] { return s.lines[rng() % s.lines.size()]; };
        switch (s.lines.empty() ? 0 : rng() % 6) {
            case 0: {
                const Formula a = small(), b = small();
                push(rng() % 2 ? Formula::imp(Formula::conj(a, b), a) : Formula::imp(a, Formula::disj(a, b)),
                     Justification::Taut);
                break;
            }
            case 1: {
                const ProofLine x = pick();
                push(Formula::box(x.formula), Justification::Nec, x.index);
                break;
            }
            case 2: {
                const ProofLine x = pick();
                if (x.formula.is(Kind::Imp))
                    push(Formula::imp(Formula::box(x.formula.left()), Formula::box(x.formula.right())),
                         Justification::RM, x.index);
                break;
            }
            case 3: {
                const ProofLine x = pick(), y = pick();
                // x and x -> (y -> x) give y -> x by mp
                push(Formula::imp(x.formula, Formula::imp(y.formula, x.formula)), Justification::Taut);
                push(Formula::imp(y.formula, x.formula), Justification::MP, x.index, s.lines.size());
                break;
            }
            case 4: {
                const Formula a = small();
                if (hasD(l)) push(Formula::neg(Formula::conj(Formula::box(a), Formula::box(Formula::neg(a)))), Justification::AxD);
                else if (hasF(l)) push(Formula::imp(Formula::box(a), Formula::box(Formula::box(a))), Justification::Ax4);
                else if (hasP(l)) push(Formula::neg(Formula::box(Formula::bot())), Justification::AxP);
                break;
            }
            default: {
                const ProofLine x = pick();
                push(Formula::imp(x.formula, Formula::imp(x.formula, x.formula)), Justification::Taut);
                break;
            }
        }
    }
    return s;
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("small scripts") {
    CHECK(checkProof(parseProofScript("logic: MN\n1. #t ; taut\n2. []#t ; nec 1\n")).ok);
    const CheckResult bad = checkProof(parseProofScript("logic: MN\n1. p ; taut\n"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.line == 1);
    CHECK(describe(bad) == "line 1: not a tautology");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parseProofScript("1. #t ; taut\n"), ParseError);
    CHECK_THROWS_AS(parseProofScript("logic: MN\n1. #t ; magic\n"), ParseError);
    CHECK_THROWS_AS(parseProofScript("logic: MN\n1. #t ; mp 1\n"), ParseError);
    CHECK_THROWS_AS(parseProofScript("logic: XYZ\n"), InputError);
    try {
        parseProofScript("logic: MN\n\n1. (p ; taut\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("rule checks") {
    CHECK_FALSE(checkProof(parseProofScript("logic: MN\n1. ~[]#f ; axP\n")).ok);
    CHECK(checkProof(parseProofScript("logic: MNP\n1. ~[]#f ; axP\n")).ok);
    CHECK_FALSE(checkProof(parseProofScript("logic: MND\n1. ~([]p & []~q) ; axD\n")).ok);
    CHECK_FALSE(checkProof(parseProofScript("logic: MNF\n1. []p -> [][]q ; ax4\n")).ok);
    CHECK_FALSE(checkProof(parseProofScript("logic: MN\n1. #t ; taut\n2. []#t ; nec 3\n")).ok);
    CHECK_FALSE(checkProof(parseProofScript("logic: MN\n1. p -> q ; taut\n")).ok);
    const CheckResult mp = checkProof(parseProofScript("logic: MN\n1. #t ; taut\n2. #t -> #t ; taut\n3. p ; mp 1 2\n"));
    CHECK_FALSE(mp.ok);
    CHECK(mp.line == 3);
    CHECK_FALSE(checkProof(parseProofScript("logic: MN\n1. p -> q ; taut\n2. []q -> []p ; rm 1\n")).ok);
}

TEST_CASE("bank") {
    for (const auto& entry : std::filesystem::directory_iterator(std::string(MONOMOD_TEST_DATA) + "/bank")) {
        const std::string name = entry.path().filename().string();
        CAPTURE(name);
        const ProofScript s = load(name);
        const CheckResult r = checkProof(s);
        if (name.rfind("bad_", 0) == 0) {
            CHECK_FALSE(r.ok);
            continue;
        }
        REQUIRE(r.ok);
        CHECK(decide(s.logic, s.conclusion()).verdict == Verdict::Provable);
    }
    CHECK(load("mnd_p.prf").conclusion() == parse("~[]#f"));
}

TEST_CASE("MN derivations check in every logic") {
    for (const char* name : {"mn_nec.prf", "mn_rm.prf"}) {
        ProofScript s = load(name);
        for (Logic l : kAllLogics) {
            s.logic = l;
            CHECK(checkProof(s).ok);
        }
    }
}

TEST_CASE("derived lines hold on every small frame of the class") {
    const SmallFrameOracle oracle(3);
    std::mt19937_64 rng(31);
    for (Logic l : kAllLogics) {
        for (int n = 0; n < 25; ++n) {
            const ProofScript s = randomProof(l, rng);
            REQUIRE(checkProof(s).ok);
            for (const ProofLine& pl : s.lines) {
                if (pl.formula.size() > 40) continue;
                CAPTURE(render(pl.formula));
                CHECK_FALSE(oracle.refutes(pl.formula)[logicIndex(l)]);
            }
        }
    }
}

}  // TEST_SUITE
