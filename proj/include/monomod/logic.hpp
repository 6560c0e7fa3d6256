#pragma once

#include <array>
#include <string>

namespace monomod {

enum class Logic { MN, MNF, MNP, MNPF, MND, MNDF };

inline constexpr std::array<Logic, 6> kAllLogics{Logic::MN,  Logic::MNF, Logic::MNP,
                                                 Logic::MNPF, Logic::MND, Logic::MNDF};

constexpr bool hasF(Logic l) { return l == Logic::MNF || l == Logic::MNPF || l == Logic::MNDF; }
constexpr bool hasD(Logic l) { return l == Logic::MND || l == Logic::MNDF; }
constexpr bool hasP(Logic l) { return l == Logic::MNP || l == Logic::MNPF; }

const char* logicName(Logic l);
Logic parseLogic(const std::string& s);  // throws InputError

// Every theorem of `weaker` is a theorem of `stronger`.
bool includes(Logic stronger, Logic weaker);

}  // namespace monomod
