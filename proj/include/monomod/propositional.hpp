#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "monomod/formula.hpp"

namespace monomod {

// The injection I: variables, boxed formulas and simulator atoms become opaque
// propositional atoms, interned so identical subtrees share an atom.
class AtomTable {
public:
    std::uint32_t intern(const Formula& f);
    std::optional<std::uint32_t> find(const Formula& f) const;
    std::size_t size() const { return atoms_.size(); }
    const Formula& operator[](std::uint32_t i) const { return atoms_[i]; }

private:
    std::vector<Formula> atoms_;
    std::unordered_map<Formula, std::uint32_t, FormulaHash> ids_;
};

bool isPropositionalAtom(const Formula& f);

// A pure propositional formula over atom ids, stored as a node array (root last).
struct PropSkeleton {
    enum class Op : std::uint8_t { Atom, Bot, Imp };
    struct Node {
        Op op;
        std::uint32_t a = 0;  // atom id, or left child index
        std::uint32_t b = 0;  // right child index
    };
    std::vector<Node> nodes;

    bool eval(std::uint64_t valuation) const;  // bit k = atom k (atoms < 64)
};

PropSkeleton abstract(const Formula& f, AtomTable& table);

// Bit-parallel truth tables over 2^k valuations, k <= kMaxAtoms.
class TruthTable {
public:
    static constexpr std::size_t kMaxAtoms = 20;
    using Vector = std::vector<std::uint64_t>;

    explicit TruthTable(std::size_t atoms);  // throws CapacityError beyond kMaxAtoms

    std::size_t atoms() const { return atoms_; }
    Vector ones() const;
    Vector atom(std::size_t k) const;
    Vector eval(const PropSkeleton& s) const;

    static bool allZero(const Vector& v);
    bool allOnes(const Vector& v) const;

private:
    std::size_t atoms_;
    std::size_t words_;
    std::uint64_t lastMask_;
};

// Truth-table tautology over the I-abstraction.
bool isTautology(const Formula& f);

// I(/\pool -> f) is a tautology; the empty pool is #t.
bool isTc(const std::vector<Formula>& pool, const Formula& f);

}  // namespace monomod
