#pragma once

#include <random>
#include <unordered_set>
#include <vector>

#include "monomod/formula.hpp"

namespace testing_support {

using monomod::Formula;

inline Formula randomFormula(std::mt19937_64& rng, unsigned budget, const std::vector<Formula>& leaves) {
    if (budget == 0 || rng() % 4 == 0) {
        const auto k = rng() % (leaves.size() + 1);
        return k == leaves.size() ? Formula::bot() : leaves[k];
    }
    switch (rng() % 7) {
        case 0: return Formula::neg(randomFormula(rng, budget - 1, leaves));
        case 1: return Formula::box(randomFormula(rng, budget - 1, leaves));
        case 2: return Formula::dia(randomFormula(rng, budget - 1, leaves));
        case 3: {
            Formula a = randomFormula(rng, budget - 1, leaves);
            return Formula::conj(a, randomFormula(rng, budget - 1, leaves));
        }
        case 4: {
            Formula a = randomFormula(rng, budget - 1, leaves);
            return Formula::disj(a, randomFormula(rng, budget - 1, leaves));
        }
        default: {
            Formula a = randomFormula(rng, budget - 1, leaves);
            return Formula::imp(a, randomFormula(rng, budget - 1, leaves));
        }
    }
}

// Distinct formulas over p, q with modal depth <= maxDepth and size <= maxSize,
// each containing at least one box.
inline std::vector<Formula> modalCorpus(std::size_t count, std::uint64_t seed, unsigned maxDepth = 2,
                                        std::size_t maxSize = 12) {
    std::mt19937_64 rng(seed);
    const std::vector<Formula> leaves{Formula::var("p"), Formula::var("q")};
    std::unordered_set<Formula, monomod::FormulaHash> seen;
    std::vector<Formula> out;
    while (out.size() < count) {
        Formula f = randomFormula(rng, 4, leaves);
        if (f.modalDepth() == 0 || f.modalDepth() > maxDepth || f.size() > maxSize) continue;
        if (seen.insert(f).second) out.push_back(f);
    }
    return out;
}

// Every formula over the given leaves reachable with `rounds` rounds of
// {¬, □, →} applied to earlier formulas, capped in size and depth.
inline std::vector<Formula> exhaustiveSmall(unsigned maxDepth, std::size_t maxSize, const std::vector<Formula>& leaves,
                                            unsigned rounds) {
    std::vector<Formula> all(leaves);
    all.push_back(Formula::bot());
    std::unordered_set<Formula, monomod::FormulaHash> seen(all.begin(), all.end());
    auto add = [&](const Formula& f, std::vector<Formula>& next) {
        if (f.modalDepth() <= maxDepth && f.size() <= maxSize && seen.insert(f).second) next.push_back(f);
    };
    for (unsigned r = 0; r < rounds; ++r) {
        std::vector<Formula> next;
        for (const Formula& a : all) {
            add(Formula::box(a), next);
            add(Formula::neg(a), next);
            for (const Formula& b : all) add(Formula::imp(a, b), next);
        }
        all.insert(all.end(), next.begin(), next.end());
    }
    return all;
}

}  // namespace testing_support
