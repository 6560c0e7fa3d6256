#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "monomod/formula.hpp"
#include "monomod/frame.hpp"
#include "monomod/logic.hpp"

namespace monomod::sim {

enum class Variant { H0G0, H1G1, HG2 };
const char* variantName(Variant v);
Variant parseVariant(const std::string& s);
Logic defaultLogic(Variant v);
bool variantSupports(Variant v, Logic l);

// How F_m is read. None: every formula. Code: code(f) <= m, and every proof
// event must satisfy that bound at its own stage.
enum class Bound { None, Code };
const char* boundName(Bound b);
Bound parseBound(const std::string& s);

bool inF(const Formula& f, std::int64_t m, Bound b);

using FormulaSet = std::unordered_set<Formula, FormulaHash>;
std::vector<Formula> sortedByCode(const FormulaSet& s);

class TheoryStream {
public:
    void prove(std::uint64_t stage, const Formula& f);  // one event per stage
    std::optional<Formula> at(std::uint64_t stage) const;
    // P_{T,m}: formulas proved at stages <= m (empty for m < 0), in stage order.
    std::vector<Formula> pool(std::int64_t m) const;
    const std::map<std::uint64_t, Formula>& events() const { return events_; }
    void checkBound(Bound b) const;  // throws InputError

    static TheoryStream generate(std::uint64_t seed, Variant v, std::size_t registryWorlds, std::uint64_t horizon);

private:
    std::map<std::uint64_t, Formula> events_;
};

// Base formulas used by the generator; the default window is these and their negations.
std::vector<Formula> baseFormulas();
std::vector<Formula> defaultWindow();

struct RegistryModel {
    MNModel model;
    std::uint64_t firstId;             // world k of the model has id firstId + k
    std::optional<Formula> refutes;    // the harvested formula, if any
};

class ModelRegistry {
public:
    // First n modal formulas (ascending code) that decide rejects in l, with their countermodels.
    static ModelRegistry harvest(Logic l, std::size_t n = 8);
    // Throws InputError if a model's frame is outside l's class.
    static ModelRegistry fromModels(Logic l, std::vector<MNModel> models);

    Logic logic() const { return logic_; }
    const std::vector<RegistryModel>& models() const { return models_; }
    std::uint64_t worldCount() const { return worlds_; }  // ids are 1..worldCount()
    bool contains(std::uint64_t id) const { return id >= 1 && id <= worlds_; }

    struct Place {
        std::size_t model;
        std::size_t world;
    };
    Place locate(std::uint64_t id) const;  // throws InputError outside the registry
    std::vector<std::uint64_t> modelWorlds(std::uint64_t id) const;
    // Minimal related sets of the world, as sets of ids.
    std::vector<std::vector<std::uint64_t>> minimalNeighbourhoods(std::uint64_t id) const;
    bool forcesBoxBot(std::uint64_t id) const;

private:
    Logic logic_ = Logic::MN;
    std::vector<RegistryModel> models_;
    std::uint64_t worlds_ = 0;
};

// f ↝ r along implications occurring verbatim in the pool; reflexive.
bool leadsTo(const std::vector<Formula>& pool, const Formula& f, const Formula& r);

struct XY {
    FormulaSet x;
    FormulaSet y;
    bool contains(const Formula& f) const { return x.count(f) || y.count(f); }
};

// X_m and Y_{i,m} over P_{T,m} for the variant's Y definition.
XY computeXY(Variant v, const TheoryStream& s, const ModelRegistry& r, std::int64_t m, std::uint64_t i, Bound b);

// Y by enumerating choice functions on i's model; for cross-checking. At most 4 worlds.
FormulaSet choiceFunctionY(const TheoryStream& s, const ModelRegistry& r, std::int64_t m, std::uint64_t i, Bound b);

struct SimState {
    Variant variant = Variant::H0G0;
    std::uint64_t stage = 0;                  // h is known for 0..stage
    std::uint64_t hValue = 0;                 // h(stage)
    std::optional<std::uint64_t> switchStage; // m with h(m) = 0, h(m+1) != 0
    std::vector<std::uint64_t> history{0};    // h(0..stage)
    std::vector<std::string> notes;
};

// Computes h(stage + 1).
void stepH(SimState& st, const TheoryStream& s, const ModelRegistry& r, Bound b);

// A trace position. Explicit positions come first; tail positions are ordered by
// (code of ξ_t, s), which is the order of m+k+mt+s and of m+t.
struct Position {
    bool tail = false;
    std::uint64_t index = 0;  // explicit part
    Natural xiCode;           // tail part
    std::uint64_t offset = 0;
    friend bool operator<(const Position& a, const Position& b);
};

struct Occurrence {
    enum Status { Found, Never, Unknown } status;
    Position pos;
};

class GTrace {
public:
    Variant variant() const { return variant_; }
    std::uint64_t horizon() const { return horizon_; }
    std::optional<std::uint64_t> switchStage() const { return switch_; }
    std::uint64_t world() const { return world_; }
    const std::vector<std::optional<Formula>>& explicitPart() const { return explicit_; }
    const XY& xy() const { return xy_; }
    bool worldForcesBoxBot() const { return boxBot_; }

    Occurrence firstOccurrence(const Formula& f) const;
    // g(0), ..., g(n-1); nullopt is the 0-marker. Before a switch only the
    // horizon is known.
    std::vector<std::optional<Formula>> materialize(std::uint64_t n) const;

private:
    friend struct Simulator;
    Variant variant_ = Variant::H0G0;
    std::uint64_t horizon_ = 0;
    std::optional<std::uint64_t> switch_;
    std::uint64_t world_ = 0;
    bool boxBot_ = false;
    XY xy_;
    std::vector<std::optional<Formula>> explicit_;
};

// φ occurs, and no ¬φ occurs before its first occurrence. Throws InputError
// when the trace does not settle it.
bool rosserHolds(const GTrace& t, const Formula& f);

struct SimResult {
    SimState state;
    GTrace trace;
    bool benign = true;  // every P_{T,m} up to the horizon is satisfiable
};

SimResult simulate(Variant v, const TheoryStream& s, const ModelRegistry& r, std::uint64_t horizon,
                   Bound b = Bound::None);

struct ClaimReport {
    std::vector<std::string> lines;  // CHECK ... / NOTE ...
    std::size_t passed = 0;
    std::size_t failed = 0;
};

ClaimReport checkClaims(const SimResult& res, const TheoryStream& s, const std::vector<Formula>& window);

struct Scenario {
    Variant variant = Variant::H0G0;
    std::optional<Logic> logic;
    Bound bound = Bound::None;
    std::uint64_t horizon = 64;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::uint64_t, Formula>> events;
    std::vector<std::string> registryFiles;
    std::vector<Formula> window;
};

//   variant HG2            seed 7              horizon 40
//   at 5 prove ~S(1)       registry a.model    window p ; ~p
//   logic MND              bound none|code
Scenario parseScenario(std::string_view text);

struct ScenarioRun {
    TheoryStream stream;
    ModelRegistry registry;
    SimResult result;
    ClaimReport claims;
};

// Registry files are resolved against baseDir.
ScenarioRun runScenario(const Scenario& sc, const std::string& baseDir = ".");
std::string formatScenarioRun(const ScenarioRun& run);

}  // namespace monomod::sim
