#include "monomod/brute_force.hpp"
#include "monomod/codec.hpp"
#include "monomod/decide.hpp"
#include "monomod/error.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

ModelRegistry ModelRegistry::harvest(Logic l, std::size_t n) {
    ModelRegistry r;
    r.logic_ = l;
    XiEnumerator xi;
    for (std::size_t t = 0; r.models_.size() < n; ++t) {
        const Formula& f = xi.at(t);
        if (!f.isModal()) continue;
        Certificate c = decide(l, f);
        if (c.verdict != Verdict::Unprovable) continue;
        r.models_.push_back({std::move(c.countermodel->model), r.worlds_ + 1, f});
        r.worlds_ += r.models_.back().model.frame.size();
    }
    return r;
}

ModelRegistry ModelRegistry::fromModels(Logic l, std::vector<MNModel> models) {
    ModelRegistry r;
    r.logic_ = l;
    for (std::size_t k = 0; k < models.size(); ++k) {
        if (!inClass(l, models[k].frame))
            throw InputError("registry model " + std::to_string(k + 1) + " is not a " + logicName(l) + " frame");
        r.models_.push_back({std::move(models[k]), r.worlds_ + 1, std::nullopt});
        r.worlds_ += r.models_.back().model.frame.size();
    }
    return r;
}

ModelRegistry::Place ModelRegistry::locate(std::uint64_t id) const {
    if (!contains(id)) throw InputError("world " + std::to_string(id) + " is not in the registry");
    for (std::size_t k = 0; k < models_.size(); ++k) {
        const auto& m = models_[k];
        if (id < m.firstId + m.model.frame.size()) return {k, static_cast<std::size_t>(id - m.firstId)};
    }
    throw std::logic_error("registry ids are not contiguous");
}

std::vector<std::uint64_t> ModelRegistry::modelWorlds(std::uint64_t id) const {
    const auto& m = models_[locate(id).model];
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < m.model.frame.size(); ++k) out.push_back(m.firstId + k);
    return out;
}

std::vector<std::vector<std::uint64_t>> ModelRegistry::minimalNeighbourhoods(std::uint64_t id) const {
    const Place p = locate(id);
    const auto& m = models_[p.model];
    std::vector<std::vector<std::uint64_t>> out;
    for (WorldSet s : m.model.frame.minimal(p.world)) {
        std::vector<std::uint64_t> ids;
        for (std::size_t w : s.members()) ids.push_back(m.firstId + w);
        out.push_back(std::move(ids));
    }
    return out;
}

bool ModelRegistry::forcesBoxBot(std::uint64_t id) const { return minimalNeighbourhoods(id).empty(); }

}  // namespace monomod::sim
