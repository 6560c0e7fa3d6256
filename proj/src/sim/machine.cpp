#include <algorithm>
#include <set>

#include "monomod/codec.hpp"
#include "monomod/error.hpp"
#include "monomod/parser.hpp"
#include "monomod/propositional.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

namespace {

using Vec = TruthTable::Vector;

Vec andOf(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] &= b[k];
    return a;
}

// Models of the pool, as a truth vector over the pool's I-atoms.
struct PoolModels {
    AtomTable table;
    std::optional<TruthTable> tt;
    Vec sat;

    explicit PoolModels(const std::vector<Formula>& pool) {
        std::vector<PropSkeleton> skeletons;
        for (const Formula& f : pool) skeletons.push_back(abstract(f, table));
        tt.emplace(table.size());
        sat = tt->ones();
        for (const auto& s : skeletons) sat = andOf(sat, tt->eval(s));
    }
    // No model of the pool makes all of `atoms` true.
    bool excludes(const std::vector<Formula>& atoms) const {
        Vec v = sat;
        for (const Formula& a : atoms) {
            auto id = table.find(a);
            if (id) v = andOf(v, tt->atom(*id));
        }
        return TruthTable::allZero(v);
    }
};

bool isPredicateAtom(Variant v, const Formula& f) {
    return (v == Variant::H0G0 && f.is(Kind::Pr)) || (v == Variant::H1G1 && f.is(Kind::PrR));
}

}  // namespace

void stepH(SimState& st, const TheoryStream& s, const ModelRegistry& r, Bound b) {
    const std::uint64_t m = st.stage;
    std::uint64_t next = st.hValue;
    if (st.hValue == 0) {
        const auto pool = s.pool(static_cast<std::int64_t>(m));
        const PoolModels pm(pool);
        const auto mi = static_cast<std::int64_t>(m);

        std::vector<Formula> predicates;
        if (st.variant != Variant::HG2)
            for (std::uint32_t k = 0; k < pm.table.size(); ++k)
                if (isPredicateAtom(st.variant, pm.table[k])) predicates.push_back(pm.table[k]);

        auto triggers = [&](std::uint64_t j) {
            const Formula sj = Formula::stage(j);
            if (pm.excludes({sj})) return true;
            for (const Formula& pr : predicates) {
                if (!pm.excludes({sj, pr})) continue;
                const Formula notPhi = Formula::neg(pr.inner());
                if (!inF(notPhi, mi, b)) continue;
                if (!computeXY(st.variant, s, r, mi, j, b).contains(notPhi)) return true;
            }
            return false;
        };
        for (std::uint64_t j = 1; j <= r.worldCount() && next == 0; ++j)
            if (triggers(j)) next = j;

        for (std::uint32_t k = 0; k < pm.table.size(); ++k) {
            const Formula& a = pm.table[k];
            if (!a.is(Kind::Stage) || r.contains(a.stageIndex())) continue;
            if (pm.excludes({a}))
                st.notes.push_back("stage " + std::to_string(m) + ": ~S(" + std::to_string(a.stageIndex()) +
                                   ") is a t.c. but world " + std::to_string(a.stageIndex()) + " is outside the registry");
        }
        if (next != 0) st.switchStage = m;
    }
    st.hValue = next;
    st.history.push_back(next);
    st.stage = m + 1;
}

bool operator<(const Position& a, const Position& b) {
    if (a.tail != b.tail) return !a.tail;
    if (!a.tail) return a.index < b.index;
    if (a.xiCode != b.xiCode) return a.xiCode < b.xiCode;
    return a.offset < b.offset;
}

Occurrence GTrace::firstOccurrence(const Formula& f) const {
    for (std::uint64_t p = 0; p < explicit_.size(); ++p)
        if (explicit_[p] && *explicit_[p] == f) return {Occurrence::Found, Position{false, p, 0, 0}};
    if (!switch_) return {Occurrence::Unknown, {}};
    switch (variant_) {
        case Variant::H0G0:
            if (!boxBot_ && xy_.contains(Formula::neg(f))) return {Occurrence::Never, {}};
            return {Occurrence::Found, Position{true, 0, code(f), 0}};
        case Variant::H1G1: return {Occurrence::Found, Position{true, 0, code(f), 0}};
        case Variant::HG2: {
            const std::uint64_t m = *switch_;
            if (m == 0) return {Occurrence::Never, {}};
            const auto [u, core] = stripNegations(f);
            const std::uint64_t a = std::min<std::uint64_t>(u, m - 1);
            const Formula xi = negate(core, static_cast<unsigned>(u - a));
            return {Occurrence::Found, Position{true, 0, code(xi), m - 1 - a}};
        }
    }
    return {Occurrence::Unknown, {}};
}

std::vector<std::optional<Formula>> GTrace::materialize(std::uint64_t n) const {
    std::vector<std::optional<Formula>> out;
    XiEnumerator xi;
    for (std::uint64_t p = 0; p < n; ++p) {
        if (p < explicit_.size()) {
            out.push_back(explicit_[p]);
            continue;
        }
        if (!switch_) break;
        const std::uint64_t q = p - explicit_.size();
        if (variant_ == Variant::HG2) {
            const std::uint64_t m = *switch_;
            if (m == 0) break;
            out.push_back(negate(xi.at(q / m), static_cast<unsigned>(m - (q % m) - 1)));
        } else if (variant_ == Variant::H0G0 && !boxBot_ && xy_.contains(Formula::neg(xi.at(q)))) {
            out.push_back(std::nullopt);
        } else {
            out.push_back(xi.at(q));
        }
    }
    return out;
}

bool rosserHolds(const GTrace& t, const Formula& f) {
    const Occurrence a = t.firstOccurrence(f);
    if (a.status == Occurrence::Unknown)
        throw InputError("horizon " + std::to_string(t.horizon()) + " does not settle the Rosser status of " + render(f));
    if (a.status == Occurrence::Never) return false;
    const Occurrence b = t.firstOccurrence(Formula::neg(f));
    if (b.status != Occurrence::Found) return true;
    return a.pos < b.pos;
}

struct Simulator {
    static void build(GTrace& t, Variant v, const TheoryStream& s, const ModelRegistry& r, const SimState& st,
                      std::uint64_t horizon, Bound b) {
        t.variant_ = v;
        t.horizon_ = horizon;
        t.switch_ = st.switchStage;
        const std::uint64_t prefix = st.switchStage ? *st.switchStage : horizon;
        for (std::uint64_t p = 0; p < prefix; ++p) t.explicit_.push_back(s.at(p));
        if (!st.switchStage) return;
        const std::uint64_t m = *st.switchStage;
        t.world_ = st.hValue;
        t.boxBot_ = r.forcesBoxBot(t.world_);
        t.xy_ = computeXY(v, s, r, static_cast<std::int64_t>(m) - 1, t.world_, b);
        if (v == Variant::H1G1) {
            for (const Formula& f : sortedByCode(t.xy_.x)) t.explicit_.push_back(f);
            auto y = sortedByCode(t.xy_.y);
            for (auto it = y.rbegin(); it != y.rend(); ++it) t.explicit_.push_back(*it);
        } else if (v == Variant::HG2) {
            FormulaSet u = t.xy_.x;
            u.insert(t.xy_.y.begin(), t.xy_.y.end());
            for (const Formula& f : sortedByCode(u)) t.explicit_.push_back(f);
        }
    }
};

SimResult simulate(Variant v, const TheoryStream& s, const ModelRegistry& r, std::uint64_t horizon, Bound b) {
    if (!variantSupports(v, r.logic()))
        throw InputError(std::string("variant ") + variantName(v) + " does not run over " + logicName(r.logic()));
    if (r.worldCount() == 0) throw InputError("empty registry");
    s.checkBound(b);
    SimResult res;
    res.state.variant = v;
    for (std::uint64_t m = 0; m < horizon; ++m) stepH(res.state, s, r, b);
    Simulator::build(res.trace, v, s, r, res.state, horizon, b);
    res.benign = horizon == 0 || !isTc(s.pool(static_cast<std::int64_t>(horizon) - 1), Formula::bot());
    return res;
}

}  // namespace monomod::sim
