#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "monomod/closure.hpp"
#include "monomod/frame.hpp"
#include "monomod/logic.hpp"

namespace monomod {

enum class Verdict { Provable, Unprovable };
const char* verdictName(Verdict v);

enum class Rule { Nec, RM, RMF, P, D, DF };
const char* ruleName(Rule r);  // "E-Nec", "E-RM", ...
Rule parseRule(const std::string& s);
bool ruleEnabled(Logic l, Rule r);

// A candidate atom: a truth assignment to the closure's I-atoms (variables and
// boxed members). Bit k is the k-th I-atom in closure order. Every closure
// member is in the atom iff it is true under the assignment, so exactly one of
// B, ~B is selected and the selection is propositionally consistent.
struct Atom {
    std::uint32_t bits = 0;
    auto operator<=>(const Atom&) const = default;
};

class AtomSpace {
public:
    static constexpr std::size_t kMaxIAtoms = 24;

    explicit AtomSpace(const Formula& a);  // throws CapacityError beyond kMaxIAtoms

    const ClosureSet& closure() const { return closure_; }
    std::size_t iatomCount() const { return iatoms_.size(); }
    std::uint64_t poolSize() const { return std::uint64_t{1} << iatoms_.size(); }

    bool member(Atom x, std::size_t closureIndex) const;
    boost::dynamic_bitset<> membership(Atom x) const;
    // Inverse of membership; absent unless the bitset is exactly some atom's.
    std::optional<Atom> fromMembership(const boost::dynamic_bitset<>& m) const;

    // Boxed closure members, in closure order.
    std::size_t boxCount() const { return boxes_.size(); }
    const Formula& boxInner(std::size_t slot) const { return closure_[boxes_[slot].inner]; }
    std::optional<std::size_t> boxSlot(const Formula& boxed) const;
    std::uint32_t boxMask(Atom x) const;    // slots whose □B is in x
    std::uint32_t innerMask(Atom x) const;  // slots whose B is in x
    std::uint32_t allBoxes() const;

private:
    struct Box {
        std::size_t member;  // closure index of □B
        std::size_t inner;   // closure index of B
        std::size_t iatom;   // bit position of □B
    };
    void evalAll(Atom x, std::vector<std::uint8_t>& out) const;

    ClosureSet closure_;
    std::vector<std::size_t> iatoms_;  // closure indices of I-atoms
    std::vector<Box> boxes_;
    struct Node {
        std::uint8_t op;  // 0 atom, 1 bot, 2 imp
        std::uint32_t a, b;
    };
    std::vector<Node> nodes_;           // one shared DAG for all members
    std::vector<std::uint32_t> root_;   // closure index -> node
};

std::vector<Atom> atoms(const AtomSpace& space);

struct EliminationStep {
    Atom atom;
    Rule rule;
    std::vector<Formula> witnesses;
};

struct Elimination {
    std::vector<Atom> surviving;  // ascending
    std::vector<EliminationStep> trace;
};

// Greatest fixpoint of the elimination rules enabled for l.
Elimination eliminate(Logic l, const AtomSpace& space, std::vector<Atom> pool);

// The canonical relation ≺_L over `worlds` (at most 64), with valuation
// x ⊩ p iff p ∈ x. World k is named "x<k>".
MNModel canonicalModel(Logic l, const AtomSpace& space, const std::vector<Atom>& worlds);

// A subset of `surviving` containing root that holds a witness for every box
// condition of each of its members, so the truth lemma and the frame
// conditions hold on the restricted canonical model.
std::vector<Atom> witnessClosure(Logic l, const AtomSpace& space, const std::vector<Atom>& surviving, Atom root);

// Number of (x, B) with B ∈ x disagreeing with x ⊩ B in the canonical model
// over all of `surviving` (evaluated with bitsets, no world cap).
std::size_t truthLemmaViolations(Logic l, const AtomSpace& space, const std::vector<Atom>& surviving);

struct TraceLine {
    boost::dynamic_bitset<> membership;  // bit i = closure member i
    Rule rule;
    std::vector<Formula> witnesses;
};

struct Countermodel {
    MNModel model;
    std::string world;
};

struct Certificate {
    Verdict verdict = Verdict::Provable;
    Logic logic = Logic::MN;
    Formula formula;
    std::optional<Countermodel> countermodel;
    std::vector<TraceLine> trace;  // PROVABLE only
};

Certificate decide(Logic l, const Formula& a);

struct DecideReport {
    Certificate certificate;
    std::size_t candidates = 0;
    std::size_t surviving = 0;
    std::size_t auditedPairs = 0;
    std::size_t auditViolations = 0;  // full surviving set plus the countermodel
};

DecideReport decideAudited(Logic l, const Formula& a);

bool verifyCertificate(const Certificate& c);

std::string hexOf(const boost::dynamic_bitset<>& b);
std::optional<boost::dynamic_bitset<>> bitsFromHex(const std::string& hex, std::size_t width);

std::string writeCertificate(const Certificate& c);
Certificate parseCertificate(std::string_view text);

}  // namespace monomod
