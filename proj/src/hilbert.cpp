#include "monomod/hilbert.hpp"

#include <map>
#include <sstream>

#include "monomod/error.hpp"
#include "monomod/parser.hpp"
#include "monomod/propositional.hpp"

namespace monomod::hilbert {

const Formula& ProofScript::conclusion() const {
    if (lines.empty()) throw InputError("empty proof script");
    return lines.back().formula;
}

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t number(const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a line number, got '" + s + "'", line);
    return std::stoul(s);
}

// A from ¬(□A ∧ □¬A), if the shape fits.
std::optional<Formula> axiomDInstance(const Formula& f) {
    auto conj = f.negated();
    if (!conj) return std::nullopt;
    auto body = conj->negated();
    if (!body || !body->is(Kind::Imp) || !body->left().is(Kind::Box)) return std::nullopt;
    const Formula a = body->left().inner();
    if (f != Formula::neg(Formula::conj(Formula::box(a), Formula::box(Formula::neg(a))))) return std::nullopt;
    return a;
}

bool axiom4Instance(const Formula& f) {
    if (!f.is(Kind::Imp) || !f.left().is(Kind::Box)) return false;
    return f.right() == Formula::box(f.left());
}

}  // namespace

ProofScript parseProofScript(std::string_view text) {
    ProofScript s;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineNo = 0;
    bool haveLogic = false;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = trim(raw);
        if (line.empty() || raw[0] == '#') continue;
        if (line.rfind("logic:", 0) == 0) {
            if (haveLogic) throw ParseError("second logic header", lineNo);
            s.logic = parseLogic(trim(line.substr(6)));
            haveLogic = true;
            continue;
        }
        if (!haveLogic) throw ParseError("expected 'logic: <NAME>' header", lineNo);
        const auto dot = line.find('.');
        const auto semi = line.rfind(';');
        if (dot == std::string::npos || semi == std::string::npos || semi < dot)
            throw ParseError("expected 'n. <formula> ; <justification>'", lineNo);
        ProofLine pl{number(trim(line.substr(0, dot)), lineNo), Formula::bot(), Justification::Taut};
        try {
            pl.formula = parse(line.substr(dot + 1, semi - dot - 1));
        } catch (const ParseError& e) {
            throw ParseError(std::string("formula: ") + e.what(), lineNo);
        }
        std::istringstream js(line.substr(semi + 1));
        std::vector<std::string> words;
        for (std::string w; js >> w;) words.push_back(w);
        if (words.empty()) throw ParseError("missing justification", lineNo);
        static const std::map<std::string, std::pair<Justification, std::size_t>> kinds{
            {"taut", {Justification::Taut, 0}}, {"axP", {Justification::AxP, 0}}, {"axD", {Justification::AxD, 0}},
            {"ax4", {Justification::Ax4, 0}},   {"mp", {Justification::MP, 2}},    {"nec", {Justification::Nec, 1}},
            {"rm", {Justification::RM, 1}}};
        auto it = kinds.find(words[0]);
        if (it == kinds.end()) throw ParseError("unknown justification '" + words[0] + "'", lineNo);
        if (words.size() != 1 + it->second.second)
            throw ParseError("'" + words[0] + "' takes " + std::to_string(it->second.second) + " line references", lineNo);
        pl.just = it->second.first;
        if (words.size() > 1) pl.premise1 = number(words[1], lineNo);
        if (words.size() > 2) pl.premise2 = number(words[2], lineNo);
        s.lines.push_back(std::move(pl));
    }
    if (!haveLogic) throw ParseError("missing logic header", lineNo);
    return s;
}

CheckResult checkProof(const ProofScript& s) {
    std::map<std::size_t, Formula> seen;
    for (const ProofLine& pl : s.lines) {
        auto fail = [&](std::string why) { return CheckResult{false, pl.index, std::move(why)}; };
        if (seen.count(pl.index)) return fail("duplicate line number");
        auto premise = [&](std::size_t k) -> const Formula* {
            auto it = seen.find(k);
            return it == seen.end() ? nullptr : &it->second;
        };
        const Formula& f = pl.formula;
        if (!f.isModal()) return fail("formula contains simulator atoms");
        switch (pl.just) {
            case Justification::Taut:
                try {
                    if (!isTautology(f)) return fail("not a tautology");
                } catch (const CapacityError& e) {
                    return fail(e.what());
                }
                break;
            case Justification::AxP:
                if (!hasP(s.logic)) return fail(std::string("axiom P is not available in ") + logicName(s.logic));
                if (f != Formula::neg(Formula::box(Formula::bot()))) return fail("not ~[]#f");
                break;
            case Justification::AxD:
                if (!hasD(s.logic)) return fail(std::string("axiom D is not available in ") + logicName(s.logic));
                if (!axiomDInstance(f)) return fail("not of the form ~([]A & []~A)");
                break;
            case Justification::Ax4:
                if (!hasF(s.logic)) return fail(std::string("axiom 4 is not available in ") + logicName(s.logic));
                if (!axiom4Instance(f)) return fail("not of the form []A -> [][]A");
                break;
            case Justification::MP: {
                const Formula* a = premise(pl.premise1);
                const Formula* b = premise(pl.premise2);
                if (!a || !b) return fail("mp cites a line that does not precede it");
                if (*b != Formula::imp(*a, f))
                    return fail("line " + std::to_string(pl.premise2) + " is not line " + std::to_string(pl.premise1) +
                                " -> this line");
                break;
            }
            case Justification::Nec: {
                const Formula* a = premise(pl.premise1);
                if (!a) return fail("nec cites a line that does not precede it");
                if (f != Formula::box(*a)) return fail("not [] of line " + std::to_string(pl.premise1));
                break;
            }
            case Justification::RM: {
                const Formula* a = premise(pl.premise1);
                if (!a) return fail("rm cites a line that does not precede it");
                if (!a->is(Kind::Imp)) return fail("line " + std::to_string(pl.premise1) + " is not an implication");
                if (f != Formula::imp(Formula::box(a->left()), Formula::box(a->right())))
                    return fail("not []A -> []B for line " + std::to_string(pl.premise1));
                break;
            }
        }
        seen.emplace(pl.index, f);
    }
    return {};
}

std::string describe(const CheckResult& r) {
    if (r.ok) return "ok";
    return "line " + std::to_string(r.line) + ": " + r.reason;
}

}  // namespace monomod::hilbert
