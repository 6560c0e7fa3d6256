#include <algorithm>
#include <deque>
#include <unordered_map>

#include "monomod/error.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

namespace {

using Edges = std::unordered_map<Formula, std::vector<Formula>, FormulaHash>;

Edges edgesOf(const std::vector<Formula>& pool) {
    Edges e;
    for (const Formula& f : pool)
        if (f.is(Kind::Imp)) e[f.left()].push_back(f.right());
    return e;
}

FormulaSet reach(const Edges& e, const std::vector<Formula>& sources) {
    FormulaSet seen(sources.begin(), sources.end());
    std::deque<Formula> todo(sources.begin(), sources.end());
    while (!todo.empty()) {
        Formula f = todo.front();
        todo.pop_front();
        auto it = e.find(f);
        if (it == e.end()) continue;
        for (const Formula& g : it->second)
            if (seen.insert(g).second) todo.push_back(g);
    }
    return seen;
}

struct WorldReach {
    std::vector<std::uint64_t> worlds;
    std::vector<FormulaSet> reach;  // reach[k]: formulas l ↝ φ for S(worlds[k])
    FormulaSet candidates;
};

WorldReach worldReach(const Edges& e, const ModelRegistry& r, std::uint64_t i, std::int64_t m, Bound b) {
    WorldReach w;
    w.worlds = r.modelWorlds(i);
    for (std::uint64_t l : w.worlds) {
        w.reach.push_back(reach(e, {Formula::stage(l)}));
        for (const Formula& f : w.reach.back())
            if (inF(f, m, b)) w.candidates.insert(f);
    }
    return w;
}

bool reaches(const WorldReach& w, std::uint64_t l, const Formula& f) {
    for (std::size_t k = 0; k < w.worlds.size(); ++k)
        if (w.worlds[k] == l) return w.reach[k].count(f) > 0;
    return false;
}

}  // namespace

bool leadsTo(const std::vector<Formula>& pool, const Formula& f, const Formula& r) {
    return reach(edgesOf(pool), {f}).count(r) > 0;
}

XY computeXY(Variant v, const TheoryStream& s, const ModelRegistry& r, std::int64_t m, std::uint64_t i, Bound b) {
    const auto pool = s.pool(m);
    const Edges e = edgesOf(pool);
    XY out;
    for (const Formula& f : reach(e, pool))
        if (inF(f, m, b)) out.x.insert(f);

    const auto minimal = r.minimalNeighbourhoods(i);
    if (v == Variant::HG2 && minimal.empty())
        throw InputError("world " + std::to_string(i) + " has no neighbourhood; Y would contain every formula");
    const WorldReach w = worldReach(e, r, i, m, b);
    for (const Formula& f : w.candidates) {
        auto inL = [&](std::uint64_t l) { return reaches(w, l, f); };
        bool member = false;
        if (v == Variant::HG2) {
            member = true;
            for (const auto& n : minimal)
                if (std::none_of(n.begin(), n.end(), inL)) member = false;
        } else {
            for (const auto& n : minimal)
                if (std::all_of(n.begin(), n.end(), inL)) member = true;
        }
        if (member) out.y.insert(f);
    }
    return out;
}

FormulaSet choiceFunctionY(const TheoryStream& s, const ModelRegistry& r, std::int64_t m, std::uint64_t i, Bound b) {
    const ModelRegistry::Place p = r.locate(i);
    const RegistryModel& rm = r.models()[p.model];
    const MNFrame& fr = rm.model.frame;
    const std::size_t n = fr.size();
    if (n > 4) throw CapacityError("choice-function enumeration supports at most 4 worlds");
    const Edges e = edgesOf(s.pool(m));
    const WorldReach w = worldReach(e, r, i, m, b);

    std::vector<WorldSet> subsets;  // related ones only
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u)
        if (fr.related(p.world, WorldSet{u})) subsets.push_back(WorldSet{u});
    if (subsets.empty()) throw InputError("world " + std::to_string(i) + " has no neighbourhood; Y would contain every formula");

    FormulaSet out;
    for (const Formula& f : w.candidates) {
        // Odometer over c: digit k picks the member of subsets[k].
        std::vector<std::size_t> digit(subsets.size(), 0);
        bool found = false;
        for (;;) {
            bool ok = true;
            for (std::size_t k = 0; k < subsets.size() && ok; ++k)
                ok = reaches(w, rm.firstId + subsets[k].members()[digit[k]], f);
            if (ok) {
                found = true;
                break;
            }
            std::size_t k = 0;
            while (k < subsets.size() && ++digit[k] == subsets[k].count()) digit[k++] = 0;
            if (k == subsets.size()) break;
        }
        if (found) out.insert(f);
    }
    return out;
}

}  // namespace monomod::sim
