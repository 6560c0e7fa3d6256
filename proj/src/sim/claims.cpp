#include "monomod/parser.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

ClaimReport checkClaims(const SimResult& res, const TheoryStream& s, const std::vector<Formula>& window) {
    ClaimReport rep;
    auto check = [&](const std::string& claim, const std::string& subject, bool ok) {
        rep.lines.push_back("CHECK " + claim + " " + subject + (ok ? " PASS" : " FAIL"));
        ++(ok ? rep.passed : rep.failed);
    };
    auto note = [&](const std::string& text) { rep.lines.push_back("NOTE " + text); };

    const auto& h = res.state.history;
    bool locked = true;
    for (std::size_t k = 1; k < h.size(); ++k)
        if (h[k - 1] != 0 && h[k] != h[k - 1]) locked = false;
    check("LOCK", "-", locked);

    const GTrace& t = res.trace;
    const std::uint64_t proc1 = t.switchStage() ? *t.switchStage() : t.horizon();
    bool faithful = true;
    for (std::uint64_t p = 0; p < proc1; ++p) faithful = faithful && t.explicitPart()[p] == s.at(p);
    check("FIDELITY", "-", faithful);

    for (const auto& n : res.state.notes) note(n);
    if (!res.benign) note("some P_{T,m} is unsatisfiable; claim analogs are reported, not asserted");
    if (!t.switchStage()) {
        note("no switch within horizon " + std::to_string(t.horizon()));
        return rep;
    }
    const std::uint64_t m = *t.switchStage();

    for (const Formula& f : window) {
        const std::string txt = render(f);
        const Formula nf = Formula::neg(f);
        switch (t.variant()) {
            case Variant::H0G0:
                if (t.worldForcesBoxBot()) {
                    note("CL2 " + txt + " not applicable: world " + std::to_string(t.world()) + " forces []#f");
                    break;
                }
                check("CL2", txt, t.xy().contains(nf) == (t.firstOccurrence(f).status == Occurrence::Never));
                break;
            case Variant::H1G1: check("PCL2", txt, t.xy().contains(nf) == !rosserHolds(t, f)); break;
            case Variant::HG2: {
                check("DCL2", txt, !(t.xy().contains(f) && t.xy().contains(nf)));
                const unsigned u = stripNegations(f).first;
                if (m < u + 2)
                    note("DCL3 " + txt + " needs m >= u+2 (m=" + std::to_string(m) + ", u=" + std::to_string(u) + ")");
                else
                    check("DCL3", txt, t.xy().contains(f) == rosserHolds(t, f));
                check("EXCL", txt, !(rosserHolds(t, f) && rosserHolds(t, nf)));
                check("TOTAL", txt,
                      t.firstOccurrence(f).status == Occurrence::Found &&
                          t.firstOccurrence(nf).status == Occurrence::Found);
                break;
            }
        }
    }
    return rep;
}

}  // namespace monomod::sim
