#include "monomod/logic.hpp"

#include "monomod/error.hpp"

namespace monomod {

const char* logicName(Logic l) {
    switch (l) {
        case Logic::MN: return "MN";
        case Logic::MNF: return "MNF";
        case Logic::MNP: return "MNP";
        case Logic::MNPF: return "MNPF";
        case Logic::MND: return "MND";
        case Logic::MNDF: return "MNDF";
    }
    return "?";
}

Logic parseLogic(const std::string& s) {
    for (Logic l : kAllLogics)
        if (s == logicName(l)) return l;
    throw InputError("unknown logic '" + s + "' (expected MN, MNF, MNP, MNPF, MND or MNDF)");
}

bool includes(Logic stronger, Logic weaker) {
    // Axiom strength: none < P < D, and 4 independently.
    auto rank = [](Logic l) { return hasD(l) ? 2 : hasP(l) ? 1 : 0; };
    return rank(stronger) >= rank(weaker) && (hasF(stronger) || !hasF(weaker));
}

}  // namespace monomod
