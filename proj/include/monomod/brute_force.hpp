#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "monomod/decide.hpp"

namespace monomod {

// Antichains of nonempty subsets of {0..n-1}, the empty antichain first.
// Each is one choice of minimal related sets for a single world.
std::vector<std::vector<WorldSet>> antichains(std::size_t n);

// All monotone frames on worlds w0..w{n-1}, in odometer order (world 0 fastest).
class FrameEnumerator {
public:
    explicit FrameEnumerator(std::size_t n);  // n <= 3
    std::optional<MNFrame> next();
    std::uint64_t total() const { return total_; }

private:
    std::size_t n_;
    std::vector<std::vector<WorldSet>> choices_;
    std::vector<std::size_t> digits_;
    std::uint64_t total_;
    bool done_ = false;
};

MNFrame randomFrame(std::size_t n, std::mt19937_64& rng);

// The frame satisfies the conditions attached to l's extra axioms.
bool inClass(Logic l, const MNFrame& fr);

// Search for a frame of l's class and a valuation refuting a. Exhaustive up
// to three worlds, `samples` random frames per larger size.
std::optional<Countermodel> bruteForceCountermodel(Logic l, const Formula& a, std::size_t maxWorlds,
                                                   std::size_t samples = 2000, std::uint64_t seed = 1);

// A valuation of a's variables falsifying a somewhere in the frame.
// Throws CapacityError when |W|·|vars(a)| exceeds 24.
std::optional<Countermodel> refuteInFrame(const MNFrame& fr, const Formula& a);

// Every frame with at most three worlds, preprocessed for repeated queries.
class SmallFrameOracle {
public:
    explicit SmallFrameOracle(std::size_t maxWorlds = 3);

    // refutes(a)[k]: some frame in the class of kAllLogics[k] refutes a.
    std::array<bool, 6> refutes(const Formula& a) const;
    std::size_t frameCount() const { return frames_.size(); }

private:
    struct Entry {
        std::size_t n;
        std::uint8_t classes;  // bit k: frame in class of kAllLogics[k]
        std::vector<std::uint64_t> box;
    };
    std::vector<Entry> frames_;
};

}  // namespace monomod
