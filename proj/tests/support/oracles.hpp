#pragma once

// Definitional re-implementations used to cross-check the library. They work on
// the fully materialised relation: rel[x] lists every V with x ≺ V.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "monomod/frame.hpp"

namespace testing_support {

using monomod::Formula;
using monomod::Kind;
using Mask = std::uint64_t;

struct FullFrame {
    std::size_t n = 0;
    std::vector<std::vector<bool>> rel;  // rel[x][V]
};

inline FullFrame materialise(const monomod::MNFrame& fr) {
    FullFrame f;
    f.n = fr.size();
    f.rel.assign(f.n, std::vector<bool>(std::size_t{1} << f.n, false));
    for (std::size_t x = 0; x < f.n; ++x)
        for (Mask v = 1; v < (Mask{1} << f.n); ++v)
            for (monomod::WorldSet m : fr.minimal(x))
                if ((m.bits & ~v) == 0) f.rel[x][v] = true;
    return f;
}

inline Mask naiveTruth(const FullFrame& f, const std::map<std::string, Mask>& val, const Formula& a) {
    const Mask all = (Mask{1} << f.n) - 1;
    switch (a.kind()) {
        case Kind::Var: {
            auto it = val.find(a.name());
            return it == val.end() ? 0 : it->second;
        }
        case Kind::Bot: return 0;
        case Kind::Imp: return (~naiveTruth(f, val, a.left()) | naiveTruth(f, val, a.right())) & all;
        case Kind::Box: {
            const Mask inner = naiveTruth(f, val, a.inner());
            Mask out = 0;
            for (std::size_t x = 0; x < f.n; ++x) {
                bool ok = true;
                for (Mask v = 1; v <= all && ok; ++v)
                    if (f.rel[x][v] && (v & inner) == 0) ok = false;
                if (ok) out |= Mask{1} << x;
            }
            return out;
        }
        default: throw std::logic_error("simulator atom");
    }
}

inline bool naiveP(const FullFrame& f) {
    for (std::size_t x = 0; x < f.n; ++x) {
        bool any = false;
        for (Mask v = 1; v < (Mask{1} << f.n); ++v) any = any || f.rel[x][v];
        if (!any) return false;
    }
    return true;
}

inline bool naiveD(const FullFrame& f) {
    const Mask all = (Mask{1} << f.n) - 1;
    for (std::size_t x = 0; x < f.n; ++x)
        for (Mask v = 0; v <= all; ++v) {
            const bool a = v != 0 && f.rel[x][v];
            const bool b = (all & ~v) != 0 && f.rel[x][all & ~v];
            if (!a && !b) return false;
        }
    return true;
}

// x ≺ V and y ≺ U_y for every y ∈ V imply x ≺ ⋃ U_y, over every choice of the U_y.
inline bool naiveTransitive(const FullFrame& f) {
    const Mask all = (Mask{1} << f.n) - 1;
    std::vector<std::vector<Mask>> related(f.n);
    for (std::size_t y = 0; y < f.n; ++y)
        for (Mask u = 1; u <= all; ++u)
            if (f.rel[y][u]) related[y].push_back(u);
    for (std::size_t x = 0; x < f.n; ++x)
        for (Mask v = 1; v <= all; ++v) {
            if (!f.rel[x][v]) continue;
            std::vector<std::size_t> ys;
            for (std::size_t y = 0; y < f.n; ++y)
                if ((v >> y) & 1U) ys.push_back(y);
            bool dead = false;
            for (std::size_t y : ys) dead = dead || related[y].empty();
            if (dead) continue;  // no choice of the U_y exists
            std::function<bool(std::size_t, Mask)> go = [&](std::size_t k, Mask acc) {
                if (k == ys.size()) return static_cast<bool>(f.rel[x][acc]);
                for (Mask u : related[ys[k]])
                    if (!go(k + 1, acc | u)) return false;
                return true;
            };
            if (!go(0, 0)) return false;
        }
    return true;
}

}  // namespace testing_support
