#include "monomod/semantics.hpp"

#include "monomod/error.hpp"

namespace monomod {

const char* propertyName(FrameProperty p) {
    switch (p) {
        case FrameProperty::Transitive: return "transitive";
        case FrameProperty::P: return "P";
        case FrameProperty::D: return "D";
    }
    return "?";
}

FrameProperty parseProperty(const std::string& s) {
    if (s == "transitive" || s == "Transitive" || s == "4") return FrameProperty::Transitive;
    if (s == "P") return FrameProperty::P;
    if (s == "D") return FrameProperty::D;
    throw InputError("unknown frame property '" + s + "'");
}

namespace {

template <class VarFn, class BoxFn>
WorldSet evaluate(const Formula& f, WorldSet all, const VarFn& var, const BoxFn& box) {
    switch (f.kind()) {
        case Kind::Var: return var(f.name());
        case Kind::Bot: return {};
        case Kind::Imp:
            return (all - evaluate(f.left(), all, var, box)) | evaluate(f.right(), all, var, box);
        case Kind::Box: return box(evaluate(f.inner(), all, var, box));
        default: throw InputError("formula contains simulator atoms");
    }
}

}  // namespace

WorldSet truthSet(const MNModel& m, const Formula& f) {
    const MNFrame& fr = m.frame;
    return evaluate(
        f, fr.universe(), [&](const std::string& v) { return m.truthOf(v) & fr.universe(); },
        [&](WorldSet s) {
            WorldSet out;
            for (std::size_t x = 0; x < fr.size(); ++x)
                if (fr.boxHolds(x, s)) out.insert(x);
            return out;
        });
}

bool eval(const MNModel& m, std::size_t x, const Formula& f) {
    if (x >= m.frame.size()) throw InputError("unknown world index " + std::to_string(x));
    return truthSet(m, f).contains(x);
}

bool eval(const MNModel& m, const std::string& world, const Formula& f) {
    return truthSet(m, f).contains(m.frame.at(world));
}

bool frameProperty(const MNFrame& fr, FrameProperty p) {
    const std::size_t n = fr.size();
    switch (p) {
        case FrameProperty::P:
            for (std::size_t x = 0; x < n; ++x)
                if (fr.minimal(x).empty()) return false;
            return true;
        case FrameProperty::D:
            // Fails iff x has disjoint blockers b1, b2 (b1 = b2 = ∅ included):
            // then neither V = b2 nor W ∖ V is related.
            for (std::size_t x = 0; x < n; ++x) {
                const auto& bs = fr.blockers(x);
                for (std::size_t i = 0; i < bs.size(); ++i)
                    for (std::size_t j = i; j < bs.size(); ++j)
                        if (!bs[i].intersects(bs[j])) return false;
            }
            return true;
        case FrameProperty::Transitive:
            // Fails iff some blocker b of x and some V with x ≺ V admit choices
            // U_y (y ∈ V) all missing b; such V exist iff x ≺ G_b.
            for (std::size_t x = 0; x < n; ++x) {
                for (WorldSet b : fr.blockers(x)) {
                    WorldSet g;
                    for (std::size_t y = 0; y < n; ++y)
                        for (WorldSet u : fr.minimal(y))
                            if (!u.intersects(b)) {
                                g.insert(y);
                                break;
                            }
                    if (fr.related(x, g)) return false;
                }
            }
            return true;
    }
    return false;
}

bool validInFrame(const MNFrame& fr, const Formula& f) {
    const auto vars = variables(f);
    const std::size_t n = fr.size();
    const std::size_t bits = n * vars.size();
    if (bits > 24) throw CapacityError("validInFrame: 2^" + std::to_string(bits) + " valuations exceed the cap");
    MNModel m{fr, {}};
    const std::uint64_t mask = WorldSet::full(n).bits;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
        for (std::size_t k = 0; k < vars.size(); ++k) m.valuation[vars[k]] = WorldSet{(v >> (k * n)) & mask};
        if (truthSet(m, f) != fr.universe()) return false;
    }
    return true;
}

NeighborhoodFrame toNeighborhood(const MNFrame& fr) {
    if (fr.size() > NeighborhoodFrame::kMaxWorlds)
        throw CapacityError("neighborhood conversion supports at most " +
                            std::to_string(NeighborhoodFrame::kMaxWorlds) + " worlds");
    std::vector<WorldSet> delta(std::size_t{1} << fr.size());
    for (std::uint64_t v = 0; v < delta.size(); ++v)
        for (std::size_t x = 0; x < fr.size(); ++x)
            if (fr.related(x, WorldSet{v})) delta[v].insert(x);
    return NeighborhoodFrame(fr.names(), std::move(delta));
}

MNFrame fromNeighborhood(const NeighborhoodFrame& nf) {
    std::vector<std::vector<WorldSet>> related(nf.size());
    for (std::uint64_t v = 1; v < nf.table().size(); ++v)
        for (std::size_t x : nf.table()[v].members()) related[x].push_back(WorldSet{v});
    return MNFrame(nf.names(), related);
}

NeighborhoodModel toNeighborhood(const MNModel& m) { return {toNeighborhood(m.frame), m.valuation}; }

MNModel fromNeighborhood(const NeighborhoodModel& m) { return {fromNeighborhood(m.frame), m.valuation}; }

WorldSet truthSet(const NeighborhoodModel& m, const Formula& f) {
    const WorldSet all = m.frame.universe();
    return evaluate(
        f, all,
        [&](const std::string& v) {
            auto it = m.valuation.find(v);
            return it == m.valuation.end() ? WorldSet{} : it->second & all;
        },
        [&](WorldSet s) { return all - m.frame.delta(all - s); });
}

}  // namespace monomod
