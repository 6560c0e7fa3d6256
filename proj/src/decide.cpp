#include "monomod/decide.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "monomod/error.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "monomod/semantics.hpp"

namespace monomod {

const char* verdictName(Verdict v) { return v == Verdict::Provable ? "PROVABLE" : "UNPROVABLE"; }

const char* ruleName(Rule r) {
    switch (r) {
        case Rule::Nec: return "E-Nec";
        case Rule::RM: return "E-RM";
        case Rule::RMF: return "E-RM-F";
        case Rule::P: return "E-P";
        case Rule::D: return "E-D";
        case Rule::DF: return "E-D-F";
    }
    return "?";
}

Rule parseRule(const std::string& s) {
    for (Rule r : {Rule::Nec, Rule::RM, Rule::RMF, Rule::P, Rule::D, Rule::DF})
        if (s == ruleName(r)) return r;
    throw InputError("unknown elimination rule '" + s + "'");
}

bool ruleEnabled(Logic l, Rule r) {
    switch (r) {
        case Rule::Nec:
        case Rule::RM: return true;
        case Rule::RMF: return hasF(l);
        case Rule::P: return hasP(l);
        case Rule::D: return hasD(l);
        case Rule::DF: return hasD(l) && hasF(l);
    }
    return false;
}

// ---------------------------------------------------------------- AtomSpace

AtomSpace::AtomSpace(const Formula& a) : closure_(a) {
    const std::size_t n = closure_.size();
    std::vector<std::uint32_t> bitOf(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Formula& f = closure_[i];
        if (f.is(Kind::Var) || f.is(Kind::Box)) {
            bitOf[i] = static_cast<std::uint32_t>(iatoms_.size());
            iatoms_.push_back(i);
        }
    }
    if (iatoms_.size() > kMaxIAtoms)
        throw CapacityError("closure has " + std::to_string(iatoms_.size()) + " propositionally atomic members; cap is " +
                            std::to_string(kMaxIAtoms));
    root_.resize(n);
    // Ascending code puts every member after its immediate subformulas.
    for (std::size_t i = 0; i < n; ++i) {
        const Formula& f = closure_[i];
        Node node{};
        if (f.is(Kind::Bot)) {
            node.op = 1;
        } else if (f.is(Kind::Imp)) {
            node.op = 2;
            node.a = root_[*closure_.indexOf(f.left())];
            node.b = root_[*closure_.indexOf(f.right())];
        } else {
            node.op = 0;
            node.a = bitOf[i];
        }
        nodes_.push_back(node);
        root_[i] = static_cast<std::uint32_t>(nodes_.size() - 1);
        if (f.is(Kind::Box)) boxes_.push_back({i, *closure_.indexOf(f.inner()), bitOf[i]});
    }
}

void AtomSpace::evalAll(Atom x, std::vector<std::uint8_t>& out) const {
    out.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        switch (n.op) {
            case 0: out[i] = (x.bits >> n.a) & 1U; break;
            case 1: out[i] = 0; break;
            default: out[i] = !out[n.a] || out[n.b]; break;
        }
    }
}

bool AtomSpace::member(Atom x, std::size_t closureIndex) const {
    std::vector<std::uint8_t> v;
    evalAll(x, v);
    return v[root_[closureIndex]];
}

boost::dynamic_bitset<> AtomSpace::membership(Atom x) const {
    std::vector<std::uint8_t> v;
    evalAll(x, v);
    boost::dynamic_bitset<> out(closure_.size());
    for (std::size_t i = 0; i < closure_.size(); ++i) out[i] = v[root_[i]];
    return out;
}

std::optional<Atom> AtomSpace::fromMembership(const boost::dynamic_bitset<>& m) const {
    if (m.size() != closure_.size()) return std::nullopt;
    Atom x;
    for (std::size_t k = 0; k < iatoms_.size(); ++k)
        if (m[iatoms_[k]]) x.bits |= std::uint32_t{1} << k;
    if (membership(x) != m) return std::nullopt;
    return x;
}

std::optional<std::size_t> AtomSpace::boxSlot(const Formula& boxed) const {
    auto idx = closure_.indexOf(boxed);
    if (!idx || !boxed.is(Kind::Box)) return std::nullopt;
    for (std::size_t s = 0; s < boxes_.size(); ++s)
        if (boxes_[s].member == *idx) return s;
    return std::nullopt;
}

std::uint32_t AtomSpace::boxMask(Atom x) const {
    std::uint32_t m = 0;
    for (std::size_t s = 0; s < boxes_.size(); ++s)
        if ((x.bits >> boxes_[s].iatom) & 1U) m |= std::uint32_t{1} << s;
    return m;
}

std::uint32_t AtomSpace::innerMask(Atom x) const {
    std::vector<std::uint8_t> v;
    evalAll(x, v);
    std::uint32_t m = 0;
    for (std::size_t s = 0; s < boxes_.size(); ++s)
        if (v[root_[boxes_[s].inner]]) m |= std::uint32_t{1} << s;
    return m;
}

std::uint32_t AtomSpace::allBoxes() const {
    return boxes_.size() >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << boxes_.size()) - 1);
}

std::vector<Atom> atoms(const AtomSpace& space) {
    std::vector<Atom> out(space.poolSize());
    for (std::uint64_t i = 0; i < out.size(); ++i) out[i].bits = static_cast<std::uint32_t>(i);
    return out;
}

// ---------------------------------------------------------------- elimination

namespace {

std::size_t low(std::uint32_t m) { return static_cast<std::size_t>(std::countr_zero(m)); }

struct Masks {
    std::vector<std::uint32_t> box, inn;
};

Masks masksOf(const AtomSpace& space, const std::vector<Atom>& xs) {
    Masks m;
    m.box.reserve(xs.size());
    m.inn.reserve(xs.size());
    for (Atom x : xs) {
        m.box.push_back(space.boxMask(x));
        m.inn.push_back(space.innerMask(x));
    }
    return m;
}

// Pair tables over a set of atoms: row i, bit j.
struct PassTables {
    std::uint32_t allInner;
    std::vector<std::uint32_t> inNot, inIn, boxNot, boxIn;
};

PassTables tablesFor(std::size_t nb, std::uint32_t all, const Masks& m, const std::vector<char>& alive) {
    PassTables t{all, std::vector<std::uint32_t>(nb), std::vector<std::uint32_t>(nb), std::vector<std::uint32_t>(nb),
                 std::vector<std::uint32_t>(nb)};
    for (std::size_t k = 0; k < alive.size(); ++k) {
        if (!alive[k]) continue;
        const std::uint32_t inn = m.inn[k], out = ~m.inn[k] & all;
        t.allInner &= inn;
        for (std::uint32_t b = inn; b; b &= b - 1) {
            t.inNot[low(b)] |= out;
            t.inIn[low(b)] |= inn;
        }
        for (std::uint32_t b = m.box[k]; b; b &= b - 1) {
            t.boxNot[low(b)] |= out;
            t.boxIn[low(b)] |= inn;
        }
    }
    return t;
}

// First rule firing on an atom with the given masks, as (rule, i, j).
struct Firing {
    Rule rule;
    std::size_t i = 0, j = 0;
};

std::optional<Firing> fire(Logic l, const PassTables& t, std::uint32_t all, std::uint32_t box,
                           std::optional<std::size_t> botSlot) {
    const std::uint32_t f = ~box & all;
    if (std::uint32_t hit = f & t.allInner) return Firing{Rule::Nec, low(hit), low(hit)};
    if (hasP(l) && botSlot && ((box >> *botSlot) & 1U)) return Firing{Rule::P, *botSlot, *botSlot};
    for (std::uint32_t b = box; b; b &= b - 1)
        if (std::uint32_t hit = f & ~t.inNot[low(b)]) return Firing{Rule::RM, low(b), low(hit)};
    if (hasF(l))
        for (std::uint32_t b = box; b; b &= b - 1)
            if (std::uint32_t hit = f & ~t.boxNot[low(b)]) return Firing{Rule::RMF, low(b), low(hit)};
    if (hasD(l))
        for (std::uint32_t b = box; b; b &= b - 1)
            if (std::uint32_t hit = box & ~t.inIn[low(b)]) return Firing{Rule::D, low(b), low(hit)};
    if (hasD(l) && hasF(l))
        for (std::uint32_t b = box; b; b &= b - 1)
            if (std::uint32_t hit = box & ~t.boxIn[low(b)]) return Firing{Rule::DF, low(b), low(hit)};
    return std::nullopt;
}

std::vector<Formula> witnessesFor(const AtomSpace& space, const Firing& f) {
    switch (f.rule) {
        case Rule::Nec: return {space.boxInner(f.j)};
        case Rule::P: return {};
        default: return {space.boxInner(f.i), space.boxInner(f.j)};
    }
}

}  // namespace

Elimination eliminate(Logic l, const AtomSpace& space, std::vector<Atom> pool) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const std::size_t nb = space.boxCount();
    const std::uint32_t all = space.allBoxes();
    const auto botSlot = space.boxSlot(Formula::box(Formula::bot()));
    const Masks m = masksOf(space, pool);
    std::vector<char> alive(pool.size(), 1);
    Elimination out;
    for (;;) {
        const PassTables t = tablesFor(nb, all, m, alive);
        std::vector<std::size_t> dead;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            if (!alive[k]) continue;
            if (auto f = fire(l, t, all, m.box[k], botSlot)) {
                dead.push_back(k);
                out.trace.push_back({pool[k], f->rule, witnessesFor(space, *f)});
            }
        }
        if (dead.empty()) break;
        for (std::size_t k : dead) alive[k] = 0;
    }
    for (std::size_t k = 0; k < pool.size(); ++k)
        if (alive[k]) out.surviving.push_back(pool[k]);
    return out;
}

// ---------------------------------------------------------------- canonical model

MNModel canonicalModel(Logic l, const AtomSpace& space, const std::vector<Atom>& worlds) {
    const std::size_t n = worlds.size();
    if (n == 0) throw std::logic_error("canonical model over an empty set of atoms");
    if (n > kMaxWorlds)
        throw CapacityError("canonical model needs " + std::to_string(n) + " worlds; cap is 64");
    const std::size_t nb = space.boxCount();
    const Masks m = masksOf(space, worlds);
    std::vector<WorldSet> inner(nb), boxed(nb);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t s = 0; s < nb; ++s) {
            if ((m.inn[y] >> s) & 1U) inner[s].insert(y);
            if ((m.box[y] >> s) & 1U) boxed[s].insert(y);
        }
    const WorldSet all = WorldSet::full(n);
    std::vector<std::vector<WorldSet>> blockers(n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        names[x] = "x" + std::to_string(x);
        blockers[x].push_back(all);  // x ≺ V needs V nonempty
        for (std::uint32_t b = m.box[x]; b; b &= b - 1) {
            blockers[x].push_back(inner[low(b)]);
            if (hasF(l)) blockers[x].push_back(boxed[low(b)]);
        }
    }
    MNModel model{MNFrame::fromBlockers(names, blockers), {}};
    const ClosureSet& c = space.closure();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is(Kind::Var)) continue;
        WorldSet s;
        for (std::size_t y = 0; y < n; ++y)
            if (space.member(worlds[y], i)) s.insert(y);
        model.valuation[c[i].name()] = s;
    }
    return model;
}

std::vector<Atom> witnessClosure(Logic l, const AtomSpace& space, const std::vector<Atom>& surviving, Atom root) {
    const Masks m = masksOf(space, surviving);
    const std::uint32_t all = space.allBoxes();
    auto rootIt = std::find(surviving.begin(), surviving.end(), root);
    if (rootIt == surviving.end()) throw std::logic_error("witness closure root is not a surviving atom");

    std::vector<std::size_t> chosen{static_cast<std::size_t>(rootIt - surviving.begin())};
    std::vector<char> inChosen(surviving.size(), 0);
    inChosen[chosen[0]] = 1;
    std::unordered_map<std::uint64_t, std::size_t> leastCache;

    // Requirement kinds: a y whose masks satisfy (sel(y) has bit i) and (inn(y) has bit j == want).
    enum Sel : std::uint64_t { AnyY = 0, InnerI = 1, BoxI = 2 };
    auto satisfies = [&](std::size_t y, Sel sel, std::size_t i, std::size_t j, bool want) {
        if (sel == InnerI && !((m.inn[y] >> i) & 1U)) return false;
        if (sel == BoxI && !((m.box[y] >> i) & 1U)) return false;
        return (((m.inn[y] >> j) & 1U) != 0) == want;
    };
    auto require = [&](Sel sel, std::size_t i, std::size_t j, bool want) {
        for (std::size_t y : chosen)
            if (satisfies(y, sel, i, j, want)) return;
        const std::uint64_t key = (static_cast<std::uint64_t>(sel) << 40) | (std::uint64_t{want} << 32) | (i << 16) | j;
        auto it = leastCache.find(key);
        if (it == leastCache.end()) {
            std::size_t found = surviving.size();
            for (std::size_t y = 0; y < surviving.size(); ++y)
                if (satisfies(y, sel, i, j, want)) {
                    found = y;
                    break;
                }
            it = leastCache.emplace(key, found).first;
        }
        if (it->second == surviving.size())
            throw std::logic_error("surviving atom lacks a box witness; elimination is not at its fixpoint");
        if (!inChosen[it->second]) {
            inChosen[it->second] = 1;
            chosen.push_back(it->second);
            if (chosen.size() > kMaxWorlds)
                throw CapacityError("countermodel needs more than 64 worlds");
        }
    };

    for (std::size_t q = 0; q < chosen.size(); ++q) {
        const std::size_t x = chosen[q];
        const std::uint32_t box = m.box[x], f = ~box & all;
        for (std::uint32_t jb = f; jb; jb &= jb - 1) {
            const std::size_t j = low(jb);
            require(AnyY, 0, j, false);
            for (std::uint32_t ib = box; ib; ib &= ib - 1) {
                require(InnerI, low(ib), j, false);
                if (hasF(l)) require(BoxI, low(ib), j, false);
            }
        }
        for (std::uint32_t ib = box; ib; ib &= ib - 1) {
            const std::size_t i = low(ib);
            if (hasP(l)) require(AnyY, 0, i, true);
            for (std::uint32_t jb = box; jb; jb &= jb - 1) {
                if (hasD(l)) require(InnerI, i, low(jb), true);
                if (hasD(l) && hasF(l)) require(BoxI, i, low(jb), true);
            }
        }
    }
    std::vector<Atom> out;
    for (std::size_t y : chosen) out.push_back(surviving[y]);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t truthLemmaViolations(Logic l, const AtomSpace& space, const std::vector<Atom>& surviving) {
    using Bits = boost::dynamic_bitset<>;
    const ClosureSet& c = space.closure();
    const std::size_t n = surviving.size();
    const std::size_t nb = space.boxCount();
    const Masks m = masksOf(space, surviving);

    std::vector<Bits> member(c.size(), Bits(n));
    for (std::size_t y = 0; y < n; ++y) {
        auto mem = space.membership(surviving[y]);
        for (std::size_t i = 0; i < c.size(); ++i) member[i][y] = mem[i];
    }
    std::vector<Bits> inner(nb, Bits(n)), boxed(nb, Bits(n));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t s = 0; s < nb; ++s) {
            inner[s][y] = (m.inn[y] >> s) & 1U;
            boxed[s][y] = (m.box[y] >> s) & 1U;
        }

    std::vector<Bits> truth(c.size());
    std::size_t violations = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Formula& f = c[i];
        Bits t(n);
        switch (f.kind()) {
            case Kind::Var: t = member[i]; break;
            case Kind::Bot: break;
            case Kind::Imp: t = ~truth[*c.indexOf(f.left())] | truth[*c.indexOf(f.right())]; break;
            case Kind::Box: {
                // x ⊩ □C iff ⟦C⟧ is everything or some blocker of x lies inside ⟦C⟧.
                const Bits& inside = truth[*c.indexOf(f.inner())];
                if (inside.all()) {
                    t.set();
                    break;
                }
                std::uint32_t good = 0;
                for (std::size_t s = 0; s < nb; ++s) {
                    if (inner[s].is_subset_of(inside)) good |= std::uint32_t{1} << s;
                    else if (hasF(l) && boxed[s].is_subset_of(inside)) good |= std::uint32_t{1} << s;
                }
                for (std::size_t y = 0; y < n; ++y) t[y] = (m.box[y] & good) != 0;
                break;
            }
            default: throw std::logic_error("non-modal closure member");
        }
        violations += (t ^ member[i]).count();
        truth[i] = std::move(t);
    }
    return violations;
}

// ---------------------------------------------------------------- decide

namespace {

struct Run {
    Certificate cert;
    std::size_t candidates = 0;
    std::size_t surviving = 0;
    std::size_t auditedPairs = 0;
    std::size_t violations = 0;
};

Run run(Logic l, const Formula& a, bool audit) {
    AtomSpace space(a);
    Run r;
    r.cert.logic = l;
    r.cert.formula = a;
    r.candidates = space.poolSize();
    Elimination el = eliminate(l, space, atoms(space));
    r.surviving = el.surviving.size();
    if (el.surviving.empty()) throw std::logic_error("every candidate atom was eliminated");

    const ClosureSet& c = space.closure();
    const std::size_t rootIdx = *c.indexOf(a);
    const std::size_t dualIdx = *c.indexOf(negdual(a));
    std::optional<Atom> refuting;
    for (Atom x : el.surviving)
        if (space.member(x, dualIdx)) {
            refuting = x;
            break;
        }
    const bool inAll = std::all_of(el.surviving.begin(), el.surviving.end(),
                                   [&](Atom x) { return space.member(x, rootIdx); });
    if (inAll == refuting.has_value()) throw std::logic_error("dual-pair cross-check failed");

    if (audit) {
        r.auditedPairs = el.surviving.size() * c.size();
        r.violations = truthLemmaViolations(l, space, el.surviving);
    }

    if (refuting) {
        r.cert.verdict = Verdict::Unprovable;
        auto worlds = witnessClosure(l, space, el.surviving, *refuting);
        MNModel model = canonicalModel(l, space, worlds);
        const auto pos = static_cast<std::size_t>(std::find(worlds.begin(), worlds.end(), *refuting) - worlds.begin());
        if (audit) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                WorldSet t = truthSet(model, c[i]);
                for (std::size_t y = 0; y < worlds.size(); ++y)
                    if (t.contains(y) != space.member(worlds[y], i)) ++r.violations;
            }
            r.auditedPairs += worlds.size() * c.size();
        }
        r.cert.countermodel = Countermodel{std::move(model), "x" + std::to_string(pos)};
    } else {
        r.cert.verdict = Verdict::Provable;
        r.cert.trace.reserve(el.trace.size());
        for (auto& step : el.trace)
            r.cert.trace.push_back({space.membership(step.atom), step.rule, std::move(step.witnesses)});
    }
    return r;
}

}  // namespace

Certificate decide(Logic l, const Formula& a) { return run(l, a, false).cert; }

DecideReport decideAudited(Logic l, const Formula& a) {
    Run r = run(l, a, true);
    return {std::move(r.cert), r.candidates, r.surviving, r.auditedPairs, r.violations};
}

// ---------------------------------------------------------------- verification

namespace {

bool verifyCountermodel(const Certificate& c) {
    if (!c.countermodel || !c.trace.empty()) return false;
    const MNModel& m = c.countermodel->model;
    if (hasF(c.logic) && !frameProperty(m.frame, FrameProperty::Transitive)) return false;
    if (hasP(c.logic) && !frameProperty(m.frame, FrameProperty::P)) return false;
    if (hasD(c.logic) && !frameProperty(m.frame, FrameProperty::D)) return false;
    return !eval(m, c.countermodel->world, c.formula);
}

class Counters {
public:
    explicit Counters(std::size_t nb) : nb_(nb), notInner_(nb), inNot_(nb * nb), inIn_(nb * nb), boxNot_(nb * nb), boxIn_(nb * nb) {}

    void add(std::uint32_t box, std::uint32_t inn, long d) {
        for (std::size_t j = 0; j < nb_; ++j)
            if (!((inn >> j) & 1U)) notInner_[j] += d;
        for (std::size_t i = 0; i < nb_; ++i) {
            const bool hi = (inn >> i) & 1U, hb = (box >> i) & 1U;
            if (!hi && !hb) continue;
            for (std::size_t j = 0; j < nb_; ++j) {
                const bool ij = (inn >> j) & 1U;
                if (hi) (ij ? inIn_ : inNot_)[i * nb_ + j] += d;
                if (hb) (ij ? boxIn_ : boxNot_)[i * nb_ + j] += d;
            }
        }
    }
    long notInner(std::size_t j) const { return notInner_[j]; }
    long inNot(std::size_t i, std::size_t j) const { return inNot_[i * nb_ + j]; }
    long inIn(std::size_t i, std::size_t j) const { return inIn_[i * nb_ + j]; }
    long boxNot(std::size_t i, std::size_t j) const { return boxNot_[i * nb_ + j]; }
    long boxIn(std::size_t i, std::size_t j) const { return boxIn_[i * nb_ + j]; }

private:
    std::size_t nb_;
    std::vector<long> notInner_, inNot_, inIn_, boxNot_, boxIn_;
};

bool replayTrace(const Certificate& c) {
    if (c.countermodel) return false;
    AtomSpace space(c.formula);
    const std::size_t nb = space.boxCount();
    const std::uint64_t n = space.poolSize();
    std::vector<std::uint32_t> box(n), inn(n);
    std::vector<char> alive(n, 1);
    Counters counts(nb);
    for (std::uint64_t k = 0; k < n; ++k) {
        Atom x{static_cast<std::uint32_t>(k)};
        box[k] = space.boxMask(x);
        inn[k] = space.innerMask(x);
        counts.add(box[k], inn[k], 1);
    }
    auto slot = [&](const Formula& inner) { return space.boxSlot(Formula::box(inner)); };
    for (const TraceLine& line : c.trace) {
        if (!ruleEnabled(c.logic, line.rule)) return false;
        auto x = space.fromMembership(line.membership);
        if (!x || !alive[x->bits]) return false;
        const std::uint32_t b = box[x->bits];
        auto inB = [&](std::size_t s) { return ((b >> s) & 1U) != 0; };
        bool ok = false;
        if (line.rule == Rule::P) {
            auto s = slot(Formula::bot());
            ok = line.witnesses.empty() && s && inB(*s);
        } else if (line.rule == Rule::Nec) {
            auto j = line.witnesses.size() == 1 ? slot(line.witnesses[0]) : std::nullopt;
            ok = j && !inB(*j) && counts.notInner(*j) == 0;
        } else {
            if (line.witnesses.size() != 2) return false;
            auto i = slot(line.witnesses[0]);
            auto j = slot(line.witnesses[1]);
            if (!i || !j || !inB(*i)) return false;
            switch (line.rule) {
                case Rule::RM: ok = !inB(*j) && counts.inNot(*i, *j) == 0; break;
                case Rule::RMF: ok = !inB(*j) && counts.boxNot(*i, *j) == 0; break;
                case Rule::D: ok = inB(*j) && counts.inIn(*i, *j) == 0; break;
                case Rule::DF: ok = inB(*j) && counts.boxIn(*i, *j) == 0; break;
                default: break;
            }
        }
        if (!ok) return false;
        alive[x->bits] = 0;
        counts.add(box[x->bits], inn[x->bits], -1);
    }
    const std::size_t rootIdx = *space.closure().indexOf(c.formula);
    for (std::uint64_t k = 0; k < n; ++k)
        if (alive[k] && !space.member(Atom{static_cast<std::uint32_t>(k)}, rootIdx)) return false;
    return true;
}

}  // namespace

bool verifyCertificate(const Certificate& c) {
    try {
        if (!c.formula.isModal()) return false;
        return c.verdict == Verdict::Unprovable ? verifyCountermodel(c) : replayTrace(c);
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------- text form

std::string hexOf(const boost::dynamic_bitset<>& b) {
    static const char* digits = "0123456789abcdef";
    const std::size_t nibbles = std::max<std::size_t>(1, (b.size() + 3) / 4);
    std::string out(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; ++k) {
        unsigned v = 0;
        for (std::size_t bit = 0; bit < 4; ++bit) {
            std::size_t i = k * 4 + bit;
            if (i < b.size() && b[i]) v |= 1U << bit;
        }
        out[nibbles - 1 - k] = digits[v];
    }
    return out;
}

std::optional<boost::dynamic_bitset<>> bitsFromHex(const std::string& hex, std::size_t width) {
    if (hex.size() != std::max<std::size_t>(1, (width + 3) / 4)) return std::nullopt;
    boost::dynamic_bitset<> out(width);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char ch = hex[hex.size() - 1 - k];
        unsigned v;
        if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') v = static_cast<unsigned>(ch - 'a' + 10);
        else return std::nullopt;
        for (std::size_t bit = 0; bit < 4; ++bit) {
            std::size_t i = k * 4 + bit;
            if ((v >> bit) & 1U) {
                if (i >= width) return std::nullopt;
                out[i] = true;
            }
        }
    }
    return out;
}

std::string writeCertificate(const Certificate& c) {
    std::ostringstream out;
    out << "logic " << logicName(c.logic) << '\n';
    out << "formula " << render(c.formula) << '\n';
    out << "verdict " << verdictName(c.verdict) << '\n';
    if (c.countermodel) {
        out << "world " << c.countermodel->world << '\n';
        out << writeModel(c.countermodel->model);
    }
    for (const TraceLine& t : c.trace) {
        out << "elim " << hexOf(t.membership) << ' ' << ruleName(t.rule);
        for (std::size_t w = 0; w < t.witnesses.size(); ++w) out << (w ? " ; " : " ") << render(t.witnesses[w]);
        out << '\n';
    }
    return out.str();
}

Certificate parseCertificate(std::string_view text) {
    Certificate c;
    std::istringstream in{std::string(text)};
    std::string line, modelText, world;
    std::vector<std::pair<std::size_t, std::string>> elims;
    bool haveLogic = false, haveFormula = false, haveVerdict = false;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "logic") {
            c.logic = parseLogic(rest);
            haveLogic = true;
        } else if (key == "formula") {
            c.formula = parse(rest);
            haveFormula = true;
        } else if (key == "verdict") {
            if (rest == "PROVABLE") c.verdict = Verdict::Provable;
            else if (rest == "UNPROVABLE") c.verdict = Verdict::Unprovable;
            else throw ParseError("unknown verdict", number);
            haveVerdict = true;
        } else if (key == "world") {
            world = rest;
        } else if (key == "elim") {
            elims.emplace_back(number, rest);
        } else if (!line.empty()) {
            modelText += line + '\n';
        }
    }
    if (!haveLogic || !haveFormula || !haveVerdict) throw ParseError("certificate header incomplete", number);
    if (!modelText.empty()) c.countermodel = Countermodel{parseModel(modelText), world};
    const std::size_t width = ClosureSet(c.formula).size();
    for (const auto& [num, rest] : elims) {
        std::istringstream ws(rest);
        std::string hex, rule;
        ws >> hex >> rule;
        auto bits = bitsFromHex(hex, width);
        if (!bits) throw ParseError("bad atom bitset", num);
        TraceLine t{*bits, parseRule(rule), {}};
        std::string tail;
        std::getline(ws, tail);
        std::size_t start = 0;
        while (start < tail.size()) {
            std::size_t semi = tail.find(';', start);
            if (semi == std::string::npos) semi = tail.size();
            std::string piece = tail.substr(start, semi - start);
            if (piece.find_first_not_of(' ') != std::string::npos) t.witnesses.push_back(parse(piece));
            start = semi + 1;
        }
        c.trace.push_back(std::move(t));
    }
    return c;
}

}  // namespace monomod
