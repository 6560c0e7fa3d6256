#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace monomod {

inline constexpr std::size_t kMaxWorlds = 64;

// Subset of worlds 0..63 as a bitset.
struct WorldSet {
    std::uint64_t bits = 0;

    static constexpr WorldSet of(std::uint64_t b) { return WorldSet{b}; }
    static constexpr WorldSet singleton(std::size_t i) { return WorldSet{std::uint64_t{1} << i}; }
    static constexpr WorldSet full(std::size_t n) {
        return WorldSet{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
    }

    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(std::size_t i) const { return (bits >> i) & 1U; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool subsetOf(WorldSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(WorldSet o) const { return (bits & o.bits) != 0; }
    constexpr void insert(std::size_t i) { bits |= std::uint64_t{1} << i; }

    constexpr WorldSet operator|(WorldSet o) const { return {bits | o.bits}; }
    constexpr WorldSet operator&(WorldSet o) const { return {bits & o.bits}; }
    constexpr WorldSet operator-(WorldSet o) const { return {bits & ~o.bits}; }
    constexpr WorldSet& operator|=(WorldSet o) {
        bits |= o.bits;
        return *this;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    constexpr auto operator<=>(const WorldSet&) const = default;
};

// Drops duplicates and non-minimal members; result sorted ascending.
std::vector<WorldSet> minimize(std::vector<WorldSet> family);

// Minimal sets meeting every member of the family (Berge). An empty family
// yields {∅}; a family containing ∅ yields no transversal.
// Throws CapacityError if an intermediate result exceeds `limit` sets.
std::vector<WorldSet> minimalTransversals(const std::vector<WorldSet>& family, std::size_t limit = 20000);

}  // namespace monomod
