#include <random>
#include <set>

#include "doctest.h"
#include "monomod/closure.hpp"
#include "monomod/codec.hpp"
#include "monomod/error.hpp"
#include "monomod/parser.hpp"
#include "monomod/propositional.hpp"
#include "../support/corpus.hpp"

using namespace monomod;

namespace {

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");
const Formula bot = Formula::bot();
const Formula top = Formula::imp(bot, bot);

std::vector<Formula> randomBatch(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<Formula> leaves{p, q, Formula::var("r1"), Formula::var("x_y")};
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(testing_support::randomFormula(rng, 6, leaves));
    return out;
}

}  // namespace

TEST_SUITE("syntax") {

TEST_CASE("parse shapes") {
    CHECK(parse("p -> p") == Formula::imp(p, p));
    CHECK(parse("~[]#f") == Formula::imp(Formula::box(bot), bot));
    CHECK(parse("<>p") == Formula::imp(Formula::box(Formula::imp(p, bot)), bot));
    CHECK(parse("#t") == top);
    CHECK(parse("p -> q -> p") == Formula::imp(p, Formula::imp(q, p)));
    CHECK(parse("p & q -> p") == Formula::imp(Formula::conj(p, q), p));
    CHECK(parse("[]p & q") == Formula::conj(Formula::box(p), q));
    CHECK(parse("□p → ◇q") == Formula::imp(Formula::box(p), Formula::dia(q)));
    CHECK(parse("S(3)") == Formula::stage(3));
    CHECK(parse("PrR(~p)") == Formula::prRosser(Formula::neg(p)));
}

TEST_CASE("parse errors carry an offset") {
    CHECK_THROWS_AS(parse("p ->"), ParseError);
    CHECK_THROWS_AS(parse("(p"), ParseError);
    CHECK_THROWS_AS(parse("P"), ParseError);
    try {
        parse("p & & q");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("render round trip") {
    for (const Formula& f : randomBatch(10000, 11)) REQUIRE(parse(render(f)) == f);
}

TEST_CASE("negdual") {
    CHECK(negdual(Formula::neg(p)) == p);
    CHECK(negdual(p) == Formula::neg(p));
    CHECK(negdual(bot) == top);
    for (const Formula& f : randomBatch(2000, 12)) {
        const bool doubleNeg = f.isNegation() && f.negated()->isNegation();
        if (!doubleNeg) CHECK(negdual(negdual(f)) == f);
        CHECK(negdual(f) == (f.isNegation() ? *f.negated() : Formula::neg(f)));
    }
}

TEST_CASE("closure members") {
    const Formula bp = Formula::box(p);
    const std::set<std::string> want{render(bp),
                                     render(p),
                                     render(Formula::neg(bp)),
                                     render(Formula::neg(p)),
                                     render(Formula::box(bot)),
                                     render(Formula::neg(Formula::box(bot))),
                                     render(Formula::box(top)),
                                     render(Formula::neg(Formula::box(top))),
                                     render(top),
                                     render(bot)};
    const ClosureSet c(bp);
    std::set<std::string> got;
    for (const Formula& f : c.members()) got.insert(render(f));
    CHECK(c.size() == 10);
    CHECK(got == want);

    const ClosureSet cb(bot);
    CHECK(cb.size() == 6);
    for (const Formula& f : {bot, top, Formula::box(bot), Formula::neg(Formula::box(bot)), Formula::box(top),
                             Formula::neg(Formula::box(top))})
        CHECK(cb.contains(f));
}

TEST_CASE("closure is closed and bounded") {
    for (const Formula& f : randomBatch(1500, 13)) {
        const ClosureSet c(f);
        const auto sub = subformulas(f);
        CHECK(c.size() <= 2 * sub.size() + 6);
        for (const Formula& s : sub) {
            CHECK(c.contains(s));
            CHECK(c.contains(negdual(s)));
        }
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(codeLess(c[i - 1], c[i]));
    }
}

TEST_CASE("codec") {
    CHECK(code(Formula::neg(p)) > code(p));
    CHECK(decode(code(Formula::box(bot))) == Formula::box(bot));
    CHECK_FALSE(decode(Natural(0)).has_value());
    CHECK_FALSE(decode(Natural(2)).has_value());

    XiEnumerator xi;
    CHECK_FALSE(xi.at(0) == xi.at(1));
    CHECK(xi.codeAt(0) < xi.codeAt(1));
    std::set<std::string> seen;
    for (std::size_t t = 0; t < 400; ++t) {
        CHECK(code(xi.at(t)) == xi.codeAt(t));
        if (t > 0) CHECK(xi.codeAt(t - 1) < xi.codeAt(t));
        CHECK(seen.insert(render(xi.at(t))).second);
    }

    for (const Formula& f : randomBatch(10000, 14)) {
        const Natural c = code(f);
        REQUIRE(decode(c) == f);
        CHECK(code(Formula::neg(f)) > c);
        for (const Formula& s : subformulas(f))
            if (!(s == f)) CHECK(code(s) < c);
    }
}

TEST_CASE("identifier bijection") {
    for (const char* name : {"a", "z", "p", "q0", "x_y", "abc9"}) CHECK(identifierAt(identifierIndex(name)) == name);
    for (unsigned k = 0; k < 3000; ++k) CHECK(identifierIndex(identifierAt(Natural(k))) == Natural(k));
}

TEST_CASE("I-abstraction shares atoms") {
    AtomTable t;
    const PropSkeleton s1 = abstract(Formula::imp(Formula::box(p), Formula::box(p)), t);
    CHECK(t.size() == 1);
    CHECK(s1.nodes.back().op == PropSkeleton::Op::Imp);
    CHECK(s1.nodes[s1.nodes.back().a].a == s1.nodes[s1.nodes.back().b].a);

    AtomTable u;
    abstract(Formula::imp(p, Formula::box(p)), u);
    CHECK(u.size() == 2);
    CHECK(*u.find(p) != *u.find(Formula::box(p)));
}

TEST_CASE("tautologies and consequence") {
    CHECK(isTautology(Formula::imp(Formula::box(p), Formula::box(p))));
    CHECK_FALSE(isTautology(Formula::imp(p, Formula::box(p))));
    CHECK(isTautology(Formula::disj(p, Formula::neg(p))));
    CHECK(isTc({p}, p));
    CHECK(isTc({Formula::imp(p, q), p}, q));
    CHECK(isTc({}, Formula::disj(p, Formula::neg(p))));
    CHECK_FALSE(isTc({Formula::imp(p, q)}, q));
    CHECK(isTc({Formula::stage(1), Formula::neg(Formula::stage(1))}, bot));
}

}  // TEST_SUITE
