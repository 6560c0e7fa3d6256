#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monomod/formula.hpp"
#include "monomod/logic.hpp"

namespace monomod::hilbert {

enum class Justification { Taut, AxP, AxD, Ax4, MP, Nec, RM };

struct ProofLine {
    std::size_t index;  // the number written before the dot
    Formula formula;
    Justification just;
    std::size_t premise1 = 0;
    std::size_t premise2 = 0;
};

struct ProofScript {
    Logic logic = Logic::MN;
    std::vector<ProofLine> lines;

    const Formula& conclusion() const;  // last line; throws InputError when empty
};

//   logic: MND
//   1. #t ; taut
//   2. []#t ; nec 1
//   3. ~([]#f & []~#f) ; axD
// Blank lines and '#' comment lines (a '#' in column one) are skipped.
ProofScript parseProofScript(std::string_view text);

struct CheckResult {
    bool ok = true;
    std::size_t line = 0;  // index of the first failing line
    std::string reason;
};

CheckResult checkProof(const ProofScript& s);

std::string describe(const CheckResult& r);

}  // namespace monomod::hilbert
