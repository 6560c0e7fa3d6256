#include "monomod/frame.hpp"

#include <algorithm>
#include <set>

#include "monomod/error.hpp"

namespace monomod {

namespace {

void checkWorlds(const std::vector<std::string>& worlds, std::size_t cap) {
    if (worlds.empty()) throw InputError("frame has no worlds");
    if (worlds.size() > cap)
        throw CapacityError("frame has " + std::to_string(worlds.size()) + " worlds; cap is " + std::to_string(cap));
    std::set<std::string> seen;
    for (const auto& w : worlds)
        if (!seen.insert(w).second) throw InputError("duplicate world '" + w + "'");
}

}  // namespace

MNFrame::MNFrame(std::vector<std::string> worlds, const std::vector<std::vector<WorldSet>>& related)
    : names_(std::move(worlds)) {
    checkWorlds(names_, kMaxWorlds);
    if (related.size() != names_.size()) throw InputError("relation does not cover every world");
    const WorldSet all = universe();
    minimal_.reserve(size());
    blockers_.reserve(size());
    for (const auto& sets : related) {
        for (WorldSet v : sets) {
            if (v.empty()) throw InputError("a world is related to the empty set");
            if (!v.subsetOf(all)) throw InputError("related set mentions an unknown world");
        }
        minimal_.push_back(minimize(sets));
        blockers_.push_back(minimalTransversals(minimal_.back()));
    }
}

MNFrame MNFrame::fromBlockers(std::vector<std::string> worlds, const std::vector<std::vector<WorldSet>>& blockers) {
    MNFrame fr;
    fr.names_ = std::move(worlds);
    checkWorlds(fr.names_, kMaxWorlds);
    if (blockers.size() != fr.names_.size()) throw InputError("blockers do not cover every world");
    const WorldSet all = fr.universe();
    for (const auto& family : blockers) {
        if (family.empty()) throw InputError("empty blocker family");
        for (WorldSet b : family)
            if (!b.subsetOf(all)) throw InputError("blocker mentions an unknown world");
        fr.blockers_.push_back(minimize(family));
        fr.minimal_.push_back(minimalTransversals(fr.blockers_.back()));
    }
    return fr;
}

std::optional<std::size_t> MNFrame::indexOf(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t MNFrame::at(const std::string& name) const {
    if (auto i = indexOf(name)) return *i;
    throw InputError("unknown world '" + name + "'");
}

bool MNFrame::related(std::size_t x, WorldSet v) const {
    return std::any_of(minimal_[x].begin(), minimal_[x].end(), [&](WorldSet m) { return m.subsetOf(v); });
}

bool MNFrame::boxHolds(std::size_t x, WorldSet s) const {
    return std::all_of(minimal_[x].begin(), minimal_[x].end(), [&](WorldSet m) { return m.intersects(s); });
}

WorldSet MNModel::truthOf(const std::string& var) const {
    auto it = valuation.find(var);
    return it == valuation.end() ? WorldSet{} : it->second;
}

NeighborhoodFrame::NeighborhoodFrame(std::vector<std::string> worlds, std::vector<WorldSet> delta)
    : names_(std::move(worlds)), delta_(std::move(delta)) {
    checkWorlds(names_, kMaxWorlds);
    const std::size_t n = names_.size();
    if (delta_.size() != (std::size_t{1} << n)) throw InputError("delta table has the wrong size");
    const WorldSet all = universe();
    if (!delta_[0].empty()) throw InputError("delta(∅) must be empty");
    for (std::uint64_t v = 0; v < delta_.size(); ++v) {
        if (!delta_[v].subsetOf(all)) throw InputError("delta mentions an unknown world");
        // Monotone iff adding any single world never shrinks the image.
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t u = v | (std::uint64_t{1} << i);
            if (!delta_[v].subsetOf(delta_[u])) throw InputError("delta is not monotone");
        }
    }
}

}  // namespace monomod
