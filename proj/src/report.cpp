#include "monomod/report.hpp"

#include <sstream>

#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"

namespace monomod {

std::string formatDecision(const Certificate& c, bool withTrace) {
    if (withTrace || c.verdict == Verdict::Unprovable) return writeCertificate(c);
    std::ostringstream out;
    out << "logic " << logicName(c.logic) << '\n';
    out << "formula " << render(c.formula) << '\n';
    out << "verdict " << verdictName(c.verdict) << '\n';
    out << "eliminated " << c.trace.size() << '\n';
    return out.str();
}

std::string formatCountermodel(const Countermodel& c) {
    return "world " + c.world + '\n' + writeModel(c.model);
}

std::string formatEvaluation(const MNModel& m, const std::string& world, const Formula& f) {
    return world + (eval(m, world, f) ? " |= " : " |/= ") + render(f) + '\n';
}

std::string formatFrameProperty(const MNFrame& fr, FrameProperty p) {
    return std::string(propertyName(p)) + (frameProperty(fr, p) ? " yes" : " no") + '\n';
}

std::vector<SeparationRow> separationTable() {
    // Columns: MN MNF MNP MNPF MND MNDF.
    std::vector<SeparationRow> rows{
        {"P", parse("~[]#f"), {false, false, true, true, true, true}, {}},
        {"D", parse("~([]p & []~p)"), {false, false, false, false, true, true}, {}},
        {"4", parse("[]p -> [][]p"), {false, true, false, true, false, true}, {}},
        {"K", parse("[](p -> q) -> ([]p -> []q)"), {false, false, false, false, false, false}, {}},
        {"C", parse("([]p & []q) -> [](p & q)"), {false, false, false, false, false, false}, {}},
        {"N", parse("[]#t"), {true, true, true, true, true, true}, {}},
    };
    for (auto& r : rows)
        for (std::size_t k = 0; k < kAllLogics.size(); ++k)
            r.actual[k] = decide(kAllLogics[k], r.formula).verdict == Verdict::Provable;
    return rows;
}

bool separationsHold(const std::vector<SeparationRow>& rows) {
    for (const auto& r : rows)
        if (r.actual != r.expected) return false;
    return true;
}

std::string formatSeparations(const std::vector<SeparationRow>& rows) {
    std::ostringstream out;
    out << "axiom";
    for (Logic l : kAllLogics) out << ' ' << logicName(l);
    out << '\n';
    for (const auto& r : rows) {
        out << r.label;
        for (std::size_t k = 0; k < kAllLogics.size(); ++k) {
            std::string cell = r.actual[k] ? "+" : "-";
            if (r.actual[k] != r.expected[k]) cell += "!";
            out << ' ' << cell;
        }
        out << "    " << render(r.formula) << '\n';
    }
    out << (separationsHold(rows) ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace monomod
