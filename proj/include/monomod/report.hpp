#pragma once

#include <array>
#include <string>
#include <vector>

#include "monomod/decide.hpp"
#include "monomod/semantics.hpp"

namespace monomod {

// Rendering used by the command-line tool.

std::string formatDecision(const Certificate& c, bool withTrace);
std::string formatCountermodel(const Countermodel& c);
std::string formatEvaluation(const MNModel& m, const std::string& world, const Formula& f);
std::string formatFrameProperty(const MNFrame& fr, FrameProperty p);

struct SeparationRow {
    std::string label;
    Formula formula;
    std::array<bool, 6> expected;  // provable, indexed like kAllLogics
    std::array<bool, 6> actual;
};

// P, D, 4, K, C and []#t against the six logics.
std::vector<SeparationRow> separationTable();
bool separationsHold(const std::vector<SeparationRow>& rows);
std::string formatSeparations(const std::vector<SeparationRow>& rows);

}  // namespace monomod
