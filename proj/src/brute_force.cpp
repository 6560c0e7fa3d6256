#include "monomod/brute_force.hpp"

#include <algorithm>

#include "monomod/error.hpp"
#include "monomod/semantics.hpp"

namespace monomod {

namespace {

constexpr std::size_t kMaxBruteWorlds = 8;

struct Program {
    enum Op : std::uint8_t { Var, Bot, Imp, Box };
    struct Step {
        Op op;
        std::uint32_t var;
    };
    std::vector<Step> steps;
    std::vector<std::string> vars;
    std::size_t depth = 0;
};

void compile(const Formula& f, Program& p, std::size_t height) {
    p.depth = std::max(p.depth, height + 1);
    switch (f.kind()) {
        case Kind::Var: {
            auto it = std::find(p.vars.begin(), p.vars.end(), f.name());
            p.steps.push_back({Program::Var, static_cast<std::uint32_t>(it - p.vars.begin())});
            break;
        }
        case Kind::Bot: p.steps.push_back({Program::Bot, 0}); break;
        case Kind::Imp:
            compile(f.left(), p, height);
            compile(f.right(), p, height + 1);
            p.steps.push_back({Program::Imp, 0});
            break;
        case Kind::Box:
            compile(f.inner(), p, height);
            p.steps.push_back({Program::Box, 0});
            break;
        default: throw InputError("brute force cannot evaluate simulator atoms");
    }
}

Program compile(const Formula& f) {
    Program p;
    p.vars = variables(f);
    compile(f, p, 0);
    return p;
}

// Worlds where the program holds; box[S] = worlds where □S holds.
std::uint64_t run(const Program& p, const std::uint64_t* vals, const std::vector<std::uint64_t>& box, std::uint64_t all,
                  std::vector<std::uint64_t>& stack) {
    std::size_t sp = 0;
    for (const auto& s : p.steps) {
        switch (s.op) {
            case Program::Var: stack[sp++] = vals[s.var]; break;
            case Program::Bot: stack[sp++] = 0; break;
            case Program::Imp:
                --sp;
                stack[sp - 1] = (~stack[sp - 1] | stack[sp]) & all;
                break;
            case Program::Box: stack[sp - 1] = box[stack[sp - 1]]; break;
        }
    }
    return stack[0];
}

std::vector<std::uint64_t> boxTable(const MNFrame& fr) {
    std::vector<std::uint64_t> t(std::size_t{1} << fr.size());
    for (std::uint64_t s = 0; s < t.size(); ++s)
        for (std::size_t x = 0; x < fr.size(); ++x)
            if (fr.boxHolds(x, WorldSet{s})) t[s] |= std::uint64_t{1} << x;
    return t;
}

std::vector<std::string> worldNames(std::size_t n, const char* prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::uint8_t classMask(const MNFrame& fr) {
    std::uint8_t m = 0;
    for (std::size_t k = 0; k < kAllLogics.size(); ++k)
        if (inClass(kAllLogics[k], fr)) m |= static_cast<std::uint8_t>(1U << k);
    return m;
}

}  // namespace

std::vector<std::vector<WorldSet>> antichains(std::size_t n) {
    if (n > 4) throw CapacityError("antichain enumeration is limited to 4 points");
    const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;  // nonempty subsets 1..2^n-1
    std::vector<std::vector<WorldSet>> out;
    std::vector<WorldSet> cur;
    auto rec = [&](auto&& self, std::uint64_t from) -> void {
        out.push_back(cur);
        for (std::uint64_t s = from; s <= subsets; ++s) {
            bool ok = std::none_of(cur.begin(), cur.end(), [&](WorldSet c) {
                return WorldSet{s}.subsetOf(c) || c.subsetOf(WorldSet{s});
            });
            if (!ok) continue;
            cur.push_back(WorldSet{s});
            self(self, s + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

FrameEnumerator::FrameEnumerator(std::size_t n) : n_(n), choices_(antichains(n)), digits_(n, 0), total_(1) {
    if (n == 0 || n > 3) throw CapacityError("frame enumeration supports 1 to 3 worlds");
    for (std::size_t i = 0; i < n; ++i) total_ *= choices_.size();
}

std::optional<MNFrame> FrameEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<std::vector<WorldSet>> related(n_);
    for (std::size_t x = 0; x < n_; ++x) related[x] = choices_[digits_[x]];
    MNFrame fr(worldNames(n_, "w"), related);
    std::size_t k = 0;
    while (k < n_ && ++digits_[k] == choices_.size()) digits_[k++] = 0;
    if (k == n_) done_ = true;
    return fr;
}

MNFrame randomFrame(std::size_t n, std::mt19937_64& rng) {
    const std::uint64_t span = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<WorldSet>> related(n);
    for (auto& r : related) {
        const std::size_t count = rng() % 4;
        for (std::size_t c = 0; c < count; ++c) r.push_back(WorldSet{1 + rng() % span});
    }
    return MNFrame(worldNames(n, "w"), related);
}

bool inClass(Logic l, const MNFrame& fr) {
    if (hasF(l) && !frameProperty(fr, FrameProperty::Transitive)) return false;
    if (hasP(l) && !frameProperty(fr, FrameProperty::P)) return false;
    if (hasD(l) && !frameProperty(fr, FrameProperty::D)) return false;
    return true;
}

std::optional<Countermodel> bruteForceCountermodel(Logic l, const Formula& a, std::size_t maxWorlds,
                                                   std::size_t samples, std::uint64_t seed) {
    if (maxWorlds > kMaxBruteWorlds) throw CapacityError("brute force supports at most 8 worlds");
    const Program p = compile(a);
    const std::size_t k = p.vars.size();
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> stack(p.depth + 1), vals(k + 1);

    auto tryFrame = [&](const MNFrame& fr) -> std::optional<Countermodel> {
        if (!inClass(l, fr)) return std::nullopt;
        const std::size_t n = fr.size();
        const auto box = boxTable(fr);
        const std::uint64_t all = WorldSet::full(n).bits;
        const std::size_t bits = n * k;
        const bool exhaustive = bits <= 20;
        const std::uint64_t rounds = exhaustive ? (std::uint64_t{1} << bits) : 256;
        for (std::uint64_t v = 0; v < rounds; ++v) {
            for (std::size_t i = 0; i < k; ++i) vals[i] = exhaustive ? (v >> (i * n)) & all : rng() & all;
            const std::uint64_t t = run(p, vals.data(), box, all, stack);
            if (t == all) continue;
            MNModel m{fr, {}};
            for (std::size_t i = 0; i < k; ++i) m.valuation[p.vars[i]] = WorldSet{vals[i]};
            const auto bad = static_cast<std::size_t>(std::countr_zero(~t & all));
            return Countermodel{std::move(m), fr.name(bad)};
        }
        return std::nullopt;
    };

    for (std::size_t n = 1; n <= maxWorlds; ++n) {
        if (n <= 3) {
            FrameEnumerator e(n);
            while (auto fr = e.next())
                if (auto c = tryFrame(*fr)) return c;
        } else {
            for (std::size_t s = 0; s < samples; ++s)
                if (auto c = tryFrame(randomFrame(n, rng))) return c;
        }
    }
    return std::nullopt;
}

std::optional<Countermodel> refuteInFrame(const MNFrame& fr, const Formula& a) {
    const Program p = compile(a);
    const std::size_t n = fr.size(), k = p.vars.size();
    if (n * k > 24) throw CapacityError("too many valuations to enumerate");
    const auto box = boxTable(fr);
    const std::uint64_t all = WorldSet::full(n).bits;
    std::vector<std::uint64_t> stack(p.depth + 1), vals(k + 1);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n * k)); ++v) {
        for (std::size_t i = 0; i < k; ++i) vals[i] = (v >> (i * n)) & all;
        const std::uint64_t t = run(p, vals.data(), box, all, stack);
        if (t == all) continue;
        MNModel m{fr, {}};
        for (std::size_t i = 0; i < k; ++i) m.valuation[p.vars[i]] = WorldSet{vals[i]};
        return Countermodel{std::move(m), fr.name(static_cast<std::size_t>(std::countr_zero(~t & all)))};
    }
    return std::nullopt;
}

SmallFrameOracle::SmallFrameOracle(std::size_t maxWorlds) {
    if (maxWorlds > 3) throw CapacityError("the small frame oracle covers at most 3 worlds");
    for (std::size_t n = 1; n <= maxWorlds; ++n) {
        FrameEnumerator e(n);
        while (auto fr = e.next()) frames_.push_back({n, classMask(*fr), boxTable(*fr)});
    }
}

std::array<bool, 6> SmallFrameOracle::refutes(const Formula& a) const {
    const Program p = compile(a);
    const std::size_t k = p.vars.size();
    std::vector<std::uint64_t> stack(p.depth + 1), vals(k + 1);
    std::uint8_t found = 0;
    for (const Entry& e : frames_) {
        if ((e.classes & ~found) == 0) continue;
        const std::uint64_t all = WorldSet::full(e.n).bits;
        const std::size_t bits = e.n * k;
        if (bits > 24) throw CapacityError("too many variables for the small frame oracle");
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
            for (std::size_t i = 0; i < k; ++i) vals[i] = (v >> (i * e.n)) & all;
            if (run(p, vals.data(), e.box, all, stack) != all) {
                found |= e.classes;
                break;
            }
        }
        if (found == 0x3f) break;
    }
    std::array<bool, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = (found >> i) & 1U;
    return out;
}

}  // namespace monomod
