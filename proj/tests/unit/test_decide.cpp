#include <algorithm>
#include <random>

#include "doctest.h"
#include "monomod/brute_force.hpp"
#include "monomod/decide.hpp"
#include "monomod/error.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "monomod/semantics.hpp"
#include "../support/corpus.hpp"

using namespace monomod;
namespace ts = testing_support;

namespace {

bool provable(Logic l, const char* text) { return decide(l, parse(text)).verdict == Verdict::Provable; }
bool provable(Logic l, const Formula& f) { return decide(l, f).verdict == Verdict::Provable; }

// One atom at a time, last candidate first, straight from the rule statements.
std::vector<Atom> sequentialElimination(Logic l, const AtomSpace& sp, std::vector<Atom> live) {
    const ClosureSet& c = sp.closure();
    std::vector<std::size_t> boxes;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].is(Kind::Box)) boxes.push_back(i);
    auto idx = [&](const Formula& f) { return *c.indexOf(f); };
    auto someHas = [&](std::size_t a, std::size_t b) {
        return std::any_of(live.begin(), live.end(), [&](Atom y) { return sp.member(y, a) && sp.member(y, b); });
    };
    auto fires = [&](Atom x) {
        for (std::size_t nb : boxes) {
            if (sp.member(x, nb)) continue;  // ¬□C ∈ x
            const std::size_t cc = idx(c[nb].inner()), notC = idx(negdual(c[nb].inner()));
            if (std::all_of(live.begin(), live.end(), [&](Atom y) { return sp.member(y, cc); })) return true;
            for (std::size_t bd : boxes) {
                if (!sp.member(x, bd)) continue;
                if (!someHas(idx(c[bd].inner()), notC)) return true;
                if (hasF(l) && !someHas(bd, notC)) return true;
            }
        }
        if (hasP(l) && sp.member(x, idx(Formula::box(Formula::bot())))) return true;
        if (hasD(l))
            for (std::size_t bd : boxes)
                for (std::size_t be : boxes) {
                    if (!sp.member(x, bd) || !sp.member(x, be)) continue;
                    if (!someHas(idx(c[bd].inner()), idx(c[be].inner()))) return true;
                    if (hasF(l) && !someHas(bd, idx(c[be].inner()))) return true;
                }
        return false;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = live.size(); k-- > 0;)
            if (fires(live[k])) {
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
    }
    std::sort(live.begin(), live.end());
    return live;
}

}  // namespace

TEST_SUITE("decide") {

TEST_CASE("atoms of the bottom closure") {
    const AtomSpace sp(Formula::bot());
    const auto as = atoms(sp);
    CHECK(as.size() == 4);
    const std::size_t topIdx = *sp.closure().indexOf(Formula::top());
    const std::size_t botIdx = *sp.closure().indexOf(Formula::bot());
    for (Atom x : as) {
        CHECK(sp.member(x, topIdx));
        CHECK_FALSE(sp.member(x, botIdx));
        for (std::size_t i = 0; i < sp.closure().size(); ++i)
            CHECK(sp.member(x, i) != sp.member(x, *sp.closure().indexOf(negdual(sp.closure()[i]))));
    }
}

TEST_CASE("elimination examples") {
    const AtomSpace sp(Formula::bot());
    const ClosureSet& c = sp.closure();
    const std::size_t boxBot = *c.indexOf(Formula::box(Formula::bot()));
    const std::size_t boxTop = *c.indexOf(Formula::box(Formula::top()));
    for (Logic l : kAllLogics) {
        const auto e = eliminate(l, sp, atoms(sp));
        for (Atom x : e.surviving) CHECK(sp.member(x, boxTop));
    }
    const auto mnp = eliminate(Logic::MNP, sp, atoms(sp));
    for (Atom x : mnp.surviving) CHECK_FALSE(sp.member(x, boxBot));
    const auto mn = eliminate(Logic::MN, sp, atoms(sp));
    CHECK(std::any_of(mn.surviving.begin(), mn.surviving.end(),
                      [&](Atom x) { return sp.member(x, boxBot) && sp.member(x, boxTop); }));
}

TEST_CASE("elimination is order independent") {
    std::vector<Formula> corpus = ts::modalCorpus(60, 21);
    for (const char* t : {"[]p -> [][]p", "~([]p & []~p)", "[](p -> q) -> ([]p -> []q)", "[]([]p -> p) -> []p"})
        corpus.push_back(parse(t));
    for (const Formula& f : corpus) {
        const AtomSpace sp(f);
        for (Logic l : kAllLogics) {
            std::vector<Atom> pool = atoms(sp);
            std::shuffle(pool.begin(), pool.end(), std::mt19937_64(f.hash()));
            REQUIRE(eliminate(l, sp, pool).surviving == sequentialElimination(l, sp, atoms(sp)));
        }
    }
}

TEST_CASE("decide examples") {
    CHECK(provable(Logic::MN, "[]#t"));
    CHECK(provable(Logic::MN, "[](p -> p)"));
    CHECK(provable(Logic::MNP, "~[]#f"));
    CHECK_FALSE(provable(Logic::MN, "~[]#f"));
    CHECK(provable(Logic::MND, "~([]p & []~p)"));
    CHECK_FALSE(provable(Logic::MNP, "~([]p & []~p)"));
    CHECK(provable(Logic::MND, "~[]#f"));
    CHECK(provable(Logic::MNF, "[]p -> [][]p"));
    CHECK_FALSE(provable(Logic::MN, "[]p -> [][]p"));
    CHECK_FALSE(provable(Logic::MN, "[](p -> q) -> ([]p -> []q)"));
    CHECK_FALSE(provable(Logic::MN, "([]p & []q) -> [](p & q)"));
    CHECK(provable(Logic::MN, "[](p & q) -> []p"));
    CHECK_THROWS_AS(decide(Logic::MN, parse("S(1) -> S(1)")), InputError);
}

TEST_CASE("countermodels refute and sit in the class") {
    for (const char* t : {"~[]#f", "[]p -> [][]p", "[](p -> q) -> ([]p -> []q)", "([]p & []q) -> [](p & q)",
                          "~([]p & []~p)", "[]p -> p", "<>#t"}) {
        for (Logic l : kAllLogics) {
            const Certificate c = decide(l, parse(t));
            if (c.verdict == Verdict::Provable) continue;
            REQUIRE(c.countermodel);
            CHECK_FALSE(eval(c.countermodel->model, c.countermodel->world, c.formula));
            CHECK(inClass(l, c.countermodel->model.frame));
            CHECK(frameProperty(c.countermodel->model.frame, FrameProperty::P) >= hasP(l));
            CHECK(frameProperty(c.countermodel->model.frame, FrameProperty::D) >= hasD(l));
        }
    }
}

TEST_CASE("truth lemma holds on the surviving atoms") {
    for (const Formula& f : ts::modalCorpus(80, 22)) {
        for (Logic l : kAllLogics) {
            const DecideReport r = decideAudited(l, f);
            REQUIRE(r.auditViolations == 0);
            CHECK(r.auditedPairs > 0);
        }
    }
}

TEST_CASE("brute force examples") {
    const auto f0 = bruteForceCountermodel(Logic::MN, parse("~[]#f"), 1);
    REQUIRE(f0);
    CHECK(f0->model.frame.size() == 1);
    CHECK(f0->model.frame.minimal(0).empty());

    const Formula axD = parse("~([]p & []~p)");
    CHECK_FALSE(bruteForceCountermodel(Logic::MNP, axD, 1));
    const auto two = bruteForceCountermodel(Logic::MNP, axD, 2);
    REQUIRE(two);
    CHECK(two->model.frame.size() == 2);
    CHECK_FALSE(eval(two->model, two->world, axD));
    CHECK(frameProperty(two->model.frame, FrameProperty::P));

    CHECK_FALSE(bruteForceCountermodel(Logic::MND, axD, 3));

    CHECK(antichains(1).size() == 2);
    CHECK(antichains(2).size() == 5);
    CHECK(antichains(3).size() == 19);
    CHECK(FrameEnumerator(3).total() == 19 * 19 * 19);
}

TEST_CASE("certificates verify and round trip") {
    for (const Formula& f : ts::modalCorpus(40, 23)) {
        for (Logic l : kAllLogics) {
            const Certificate c = decide(l, f);
            REQUIRE(verifyCertificate(c));
            const Certificate back = parseCertificate(writeCertificate(c));
            CHECK(back.verdict == c.verdict);
            CHECK(verifyCertificate(back));
        }
    }
}

TEST_CASE("tampered certificates are rejected") {
    const Formula k = parse("[](p -> q) -> ([]p -> []q)");
    const MNModel f1 = parseModel("worlds a b\nrel a : a b\nrel b : a b\nval p : a\n");
    Certificate c{Verdict::Unprovable, Logic::MN, k, Countermodel{f1, "a"}, {}};
    CHECK(verifyCertificate(c));
    c.countermodel->model.valuation["p"] = WorldSet{};
    CHECK_FALSE(verifyCertificate(c));

    Certificate p = decide(Logic::MNP, parse("~[]#f"));
    REQUIRE(p.verdict == Verdict::Provable);
    REQUIRE(std::any_of(p.trace.begin(), p.trace.end(), [](const TraceLine& t) { return t.rule == Rule::P; }));
    CHECK(verifyCertificate(p));
    p.logic = Logic::MN;
    CHECK_FALSE(verifyCertificate(p));

    Certificate q = decide(Logic::MN, parse("[](p & q) -> []p"));
    REQUIRE(q.verdict == Verdict::Provable);
    REQUIRE_FALSE(q.trace.empty());
    CHECK(verifyCertificate(q));
    q.trace.clear();
    CHECK_FALSE(verifyCertificate(q));

    Certificate u = decide(Logic::MN, parse("~[]#f"));
    u.formula = parse("[]#t");
    CHECK_FALSE(verifyCertificate(u));
}

TEST_CASE("theorems are closed under the rules") {
    const auto corpus = ts::modalCorpus(40, 24, 1, 10);
    for (Logic l : kAllLogics) {
        for (const Formula& a : corpus) {
            if (provable(l, a)) CHECK(provable(l, Formula::box(a)));
            for (std::size_t j = 0; j < corpus.size(); j += 5) {
                const Formula& b = corpus[j];
                if (provable(l, Formula::imp(a, b))) CHECK(provable(l, Formula::imp(Formula::box(a), Formula::box(b))));
            }
        }
    }
}

TEST_CASE("lattice inclusions") {
    for (const Formula& f : ts::modalCorpus(120, 25)) {
        std::array<bool, 6> v{};
        for (std::size_t k = 0; k < 6; ++k) v[k] = provable(kAllLogics[k], f);
        for (std::size_t s = 0; s < 6; ++s)
            for (std::size_t w = 0; w < 6; ++w)
                if (includes(kAllLogics[s], kAllLogics[w]) && v[w]) CHECK(v[s]);
    }
}

TEST_CASE("hex encoding") {
    boost::dynamic_bitset<> b(6);
    b.set(0);
    b.set(5);
    CHECK(hexOf(b) == "21");
    CHECK(*bitsFromHex("21", 6) == b);
    CHECK_FALSE(bitsFromHex("zz", 6));
}

}  // TEST_SUITE
