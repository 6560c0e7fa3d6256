#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monomod/world_set.hpp"

namespace monomod {

// Monotone MN-frame. Each world keeps the antichain of its minimal related
// sets; x ≺ V holds iff V contains one of them. The blockers (minimal
// transversals of that antichain) are kept alongside: x ⊩ □A iff some
// blocker lies inside ⟦A⟧.
class MNFrame {
public:
    // related[x] lists sets V with x ≺ V (any, not necessarily minimal).
    MNFrame(std::vector<std::string> worlds, const std::vector<std::vector<WorldSet>>& related);

    // Dual construction: x ≺ V iff V meets every set in blockers[x] (each
    // list nonempty). Avoids recomputing transversals of large antichains.
    static MNFrame fromBlockers(std::vector<std::string> worlds, const std::vector<std::vector<WorldSet>>& blockers);

    std::size_t size() const { return names_.size(); }
    WorldSet universe() const { return WorldSet::full(size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t x) const { return names_[x]; }
    std::optional<std::size_t> indexOf(const std::string& name) const;
    std::size_t at(const std::string& name) const;  // throws InputError

    const std::vector<WorldSet>& minimal(std::size_t x) const { return minimal_[x]; }
    const std::vector<WorldSet>& blockers(std::size_t x) const { return blockers_[x]; }

    bool related(std::size_t x, WorldSet v) const;
    // Every related set of x meets s.
    bool boxHolds(std::size_t x, WorldSet s) const;

    friend bool operator==(const MNFrame& a, const MNFrame& b) {
        return a.names_ == b.names_ && a.minimal_ == b.minimal_;
    }

private:
    MNFrame() = default;
    std::vector<std::string> names_;
    std::vector<std::vector<WorldSet>> minimal_;
    std::vector<std::vector<WorldSet>> blockers_;
};

struct MNModel {
    MNFrame frame;
    std::map<std::string, WorldSet> valuation;  // absent variables are false everywhere

    WorldSet truthOf(const std::string& var) const;
};

// δ-side view: delta[V] = {x : x ≺ V}, indexed by the bits of V.
class NeighborhoodFrame {
public:
    static constexpr std::size_t kMaxWorlds = 16;

    // Throws InputError unless delta is monotone with delta(∅) = ∅.
    NeighborhoodFrame(std::vector<std::string> worlds, std::vector<WorldSet> delta);

    std::size_t size() const { return names_.size(); }
    WorldSet universe() const { return WorldSet::full(size()); }
    const std::vector<std::string>& names() const { return names_; }
    WorldSet delta(WorldSet v) const { return delta_[v.bits]; }
    const std::vector<WorldSet>& table() const { return delta_; }

    friend bool operator==(const NeighborhoodFrame&, const NeighborhoodFrame&) = default;

private:
    std::vector<std::string> names_;
    std::vector<WorldSet> delta_;
};

struct NeighborhoodModel {
    NeighborhoodFrame frame;
    std::map<std::string, WorldSet> valuation;
};

}  // namespace monomod
