#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "monomod/formula.hpp"

namespace monomod {

// The dual ~f: B when f is B -> bottom, otherwise f -> bottom.
Formula negdual(const Formula& f);

// Distinct subformulas of f (f included), ascending code.
std::vector<Formula> subformulas(const Formula& f);

// Sub(a), the duals of its members, and the constants
// []#f, ~[]#f, []#t, ~[]#t, #t, #f; ordered by ascending code.
class ClosureSet {
public:
    explicit ClosureSet(const Formula& a);

    const Formula& root() const { return root_; }
    std::size_t size() const { return members_.size(); }
    const Formula& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Formula>& members() const { return members_; }
    std::optional<std::size_t> indexOf(const Formula& f) const;
    bool contains(const Formula& f) const { return indexOf(f).has_value(); }

private:
    Formula root_;
    std::vector<Formula> members_;
    std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

inline ClosureSet closure(const Formula& a) { return ClosureSet(a); }

}  // namespace monomod
