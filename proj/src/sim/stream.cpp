#include <algorithm>
#include <random>

#include "monomod/codec.hpp"
#include "monomod/error.hpp"
#include "monomod/parser.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

const char* variantName(Variant v) {
    switch (v) {
        case Variant::H0G0: return "H0G0";
        case Variant::H1G1: return "H1G1";
        case Variant::HG2: return "HG2";
    }
    return "?";
}

Variant parseVariant(const std::string& s) {
    for (Variant v : {Variant::H0G0, Variant::H1G1, Variant::HG2})
        if (s == variantName(v)) return v;
    throw InputError("unknown variant '" + s + "' (expected H0G0, H1G1 or HG2)");
}

Logic defaultLogic(Variant v) {
    switch (v) {
        case Variant::H0G0: return Logic::MN;
        case Variant::H1G1: return Logic::MNP;
        case Variant::HG2: return Logic::MND;
    }
    return Logic::MN;
}

bool variantSupports(Variant v, Logic l) {
    switch (v) {
        case Variant::H0G0: return l == Logic::MN || l == Logic::MNF;
        case Variant::H1G1: return l == Logic::MNP || l == Logic::MNPF;
        case Variant::HG2: return l == Logic::MND;
    }
    return false;
}

const char* boundName(Bound b) { return b == Bound::None ? "none" : "code"; }

Bound parseBound(const std::string& s) {
    if (s == "none") return Bound::None;
    if (s == "code") return Bound::Code;
    throw InputError("unknown bound '" + s + "' (expected none or code)");
}

bool inF(const Formula& f, std::int64_t m, Bound b) {
    if (b == Bound::None) return true;
    return m >= 0 && code(f) <= m;
}

std::vector<Formula> sortedByCode(const FormulaSet& s) {
    std::vector<Formula> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), CodeLess{});
    return out;
}

void TheoryStream::prove(std::uint64_t stage, const Formula& f) {
    if (!events_.emplace(stage, f).second)
        throw InputError("stage " + std::to_string(stage) + " already has a proof event");
}

std::optional<Formula> TheoryStream::at(std::uint64_t stage) const {
    auto it = events_.find(stage);
    if (it == events_.end()) return std::nullopt;
    return it->second;
}

std::vector<Formula> TheoryStream::pool(std::int64_t m) const {
    std::vector<Formula> out;
    if (m < 0) return out;
    for (auto it = events_.begin(); it != events_.end() && it->first <= static_cast<std::uint64_t>(m); ++it)
        out.push_back(it->second);
    return out;
}

void TheoryStream::checkBound(Bound b) const {
    if (b == Bound::None) return;
    for (const auto& [stage, f] : events_)
        if (!inF(f, static_cast<std::int64_t>(stage), b))
            throw InputError("bound code: '" + render(f) + "' has code above its stage " + std::to_string(stage));
}

std::vector<Formula> baseFormulas() {
    return {parse("p"), parse("q"), parse("r"), parse("p -> q"), parse("q -> r")};
}

std::vector<Formula> defaultWindow() {
    std::vector<Formula> out;
    for (const Formula& b : baseFormulas()) {
        out.push_back(b);
        out.push_back(Formula::neg(b));
    }
    return out;
}

TheoryStream TheoryStream::generate(std::uint64_t seed, Variant v, std::size_t registryWorlds, std::uint64_t horizon) {
    if (registryWorlds == 0) throw InputError("generated streams need a nonempty registry");
    std::mt19937_64 rng(seed);
    const auto bases = baseFormulas();
    const std::vector<Formula> judged{bases[0], bases[1], bases[3]};
    const std::uint64_t worlds = std::min<std::uint64_t>(registryWorlds, 6);
    auto pick = [&](const std::vector<Formula>& from) { return from[rng() % from.size()]; };
    auto world = [&] { return Formula::stage(1 + rng() % worlds); };
    auto predicate = [&](const Formula& f) {
        return v == Variant::H0G0 ? Formula::pr(f) : Formula::prRosser(f);
    };

    TheoryStream s;
    const bool forced = rng() % 10 < 7;
    const std::uint64_t span = std::max<std::uint64_t>(1, horizon / 2);
    const std::uint64_t forcedStage = 4 + rng() % span;
    const Formula forcedFact = Formula::neg(world());
    for (std::uint64_t stage = 4; stage < horizon; ++stage) {
        if (forced && stage == forcedStage) {
            s.prove(stage, forcedFact);
            continue;
        }
        if (rng() % 2) continue;
        switch (rng() % 6) {
            case 0: s.prove(stage, pick(bases)); break;
            case 1: {
                Formula a = pick(bases);
                s.prove(stage, Formula::imp(a, pick(bases)));
                break;
            }
            case 2: {
                Formula w = world();
                s.prove(stage, Formula::imp(w, pick(bases)));
                break;
            }
            case 3: {
                Formula w = world();
                s.prove(stage, Formula::imp(w, Formula::neg(pick(bases))));
                break;
            }
            case 4: {
                Formula w = world();
                s.prove(stage, Formula::imp(w, Formula::neg(predicate(pick(judged)))));
                break;
            }
            default:
                if (rng() % 8 == 0) s.prove(stage, Formula::neg(pick(bases)));
                else s.prove(stage, pick(bases));
                break;
        }
    }
    return s;
}

}  // namespace monomod::sim
