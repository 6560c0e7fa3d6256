#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monomod/formula.hpp"

namespace monomod {

// Gödel codec. The encoding is a prefix-free bit string (2-bit tags
// Var=00 < Bot=01 < Imp=10 < Box=11); the code is that string read as a
// binary number behind a leading 1. Extending a formula lengthens the string,
// so proper subformulas and f itself have smaller codes than f and not-f.
Natural code(const Formula& f);
std::optional<Formula> decode(const Natural& n);

// Bijection between identifiers [a-z][a-z0-9_]* and the naturals.
Natural identifierIndex(const std::string& name);
std::string identifierAt(Natural index);

// The enumeration xi_0, xi_1, ... of all formulas by ascending code.
class XiEnumerator {
public:
    const Formula& at(std::size_t t);
    const Natural& codeAt(std::size_t t);

private:
    void extendTo(std::size_t t);
    std::vector<Formula> formulas_;
    std::vector<Natural> codes_;
    Natural next_ = 1;
};

}  // namespace monomod
