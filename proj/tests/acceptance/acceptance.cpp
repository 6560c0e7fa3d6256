// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "monomod/brute_force.hpp"
#include "monomod/decide.hpp"
#include "monomod/hilbert.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "monomod/report.hpp"
#include "monomod/semantics.hpp"
#include "monomod/sim.hpp"
#include "../golden/golden.hpp"
#include "../support/corpus.hpp"

using namespace monomod;
namespace ts = testing_support;

namespace {

// Budgets in seconds; mismatch tolerances are zero throughout.
constexpr double kBudgetSeparations = 10;
constexpr double kBudgetCorrespondence = 60;
constexpr double kBudgetOracle = 600;
constexpr double kBudgetSimulator = 300;

constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kSampledFrames = 10000;
constexpr std::uint64_t kSeedsPerVariant = 100;
constexpr std::uint64_t kSimHorizon = 64;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    if (budget > 0 && secs > budget) {
        ok = false;
        line << "[over budget " << budget << "s] ";
    }
    line << o.detail << " (" << secs << "s)";
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << ": " << line.str() << std::endl;
    if (!ok) ++failures;
}

const std::vector<Formula>& corpus() {
    static const std::vector<Formula> c = ts::modalCorpus(kCorpusSize, 20240601);
    return c;
}

std::vector<MNFrame> framesUpTo(std::size_t n) {
    std::vector<MNFrame> out;
    for (std::size_t k = 1; k <= n; ++k) {
        FrameEnumerator e(k);
        while (auto fr = e.next()) out.push_back(*fr);
    }
    return out;
}

// Shared between criteria 3 and 4.
std::size_t auditedPairs = 0, auditViolations = 0, auditedCalls = 0;

Outcome separations() {
    const auto rows = separationTable();
    if (!separationsHold(rows)) return {false, "table mismatch\n" + formatSeparations(rows)};
    struct Fact {
        Logic l;
        const char* f;
        bool provable;
    };
    const Fact facts[] = {{Logic::MN, "~[]#f", false},
                          {Logic::MNP, "~[]#f", true},
                          {Logic::MND, "~[]#f", true},
                          {Logic::MNP, "~([]p & []~p)", false},
                          {Logic::MND, "~([]p & []~p)", true},
                          {Logic::MN, "[]p -> [][]p", false},
                          {Logic::MNF, "[]p -> [][]p", true},
                          {Logic::MN, "[](p -> q) -> ([]p -> []q)", false},
                          {Logic::MN, "[]#t", true}};
    for (const Fact& f : facts)
        if ((decide(f.l, parse(f.f)).verdict == Verdict::Provable) != f.provable)
            return {false, std::string("wrong verdict for ") + logicName(f.l) + " " + f.f};

    std::size_t checked = 0, broken = 0;
    for (const Formula& f : corpus()) {
        std::array<bool, 6> v{};
        for (std::size_t k = 0; k < 6; ++k) v[k] = decide(kAllLogics[k], f).verdict == Verdict::Provable;
        for (std::size_t s = 0; s < 6; ++s)
            for (std::size_t w = 0; w < 6; ++w) {
                if (s == w || !includes(kAllLogics[s], kAllLogics[w])) continue;
                ++checked;
                if (v[w] && !v[s]) ++broken;
            }
    }
    return {broken == 0, std::to_string(rows.size()) + " rows, 9 facts, " + std::to_string(checked) +
                             " inclusion instances, " + std::to_string(broken) + " violations"};
}

Outcome correspondence() {
    const Formula four = parse("[]p -> [][]p"), axP = parse("~[]#f"), axD = parse("~([]p & []~p)");
    std::size_t frames = 0, mismatches = 0;
    auto check = [&](const MNFrame& fr) {
        ++frames;
        mismatches += frameProperty(fr, FrameProperty::Transitive) != validInFrame(fr, four);
        mismatches += frameProperty(fr, FrameProperty::P) != validInFrame(fr, axP);
        mismatches += frameProperty(fr, FrameProperty::D) != validInFrame(fr, axD);
    };
    for (const MNFrame& fr : framesUpTo(2)) check(fr);
    const std::size_t exhaustive = frames;
    std::mt19937_64 rng(77);
    for (std::size_t k = 0; k < kSampledFrames; ++k) check(randomFrame(3, rng));
    return {mismatches == 0, std::to_string(exhaustive) + " frames exhaustive, " + std::to_string(frames - exhaustive) +
                                 " sampled at |W|=3, " + std::to_string(mismatches) + " mismatches"};
}

Outcome oracleAgreement() {
    const SmallFrameOracle oracle(3);
    std::size_t refutedProvable = 0, badCertificates = 0, unconfirmed = 0, provable = 0, calls = 0;
    for (const Formula& f : corpus()) {
        const auto refuted = oracle.refutes(f);
        for (std::size_t k = 0; k < 6; ++k) {
            const DecideReport r = decideAudited(kAllLogics[k], f);
            ++calls;
            auditedPairs += r.auditedPairs;
            auditViolations += r.auditViolations;
            if (!verifyCertificate(r.certificate)) ++badCertificates;
            if (r.certificate.verdict == Verdict::Provable) {
                ++provable;
                if (refuted[k]) ++refutedProvable;
            } else if (!refuted[k]) {
                ++unconfirmed;  // countermodel needs more than three worlds
            }
        }
    }
    auditedCalls = calls;

    std::size_t bank = 0, bankBad = 0;
    for (const auto& e : std::filesystem::directory_iterator(std::string(MONOMOD_TEST_DATA) + "/bank")) {
        if (e.path().filename().string().rfind("bad_", 0) == 0) continue;
        const auto s = hilbert::parseProofScript(readFile(e.path().string()));
        ++bank;
        if (!hilbert::checkProof(s).ok || decide(s.logic, s.conclusion()).verdict != Verdict::Provable) ++bankBad;
    }
    std::ostringstream d;
    d << calls << " decide calls (" << provable << " provable), " << refutedProvable
      << " provable verdicts refuted by brute force, " << badCertificates << " certificates rejected, " << unconfirmed
      << " unprovable without a <=3-world countermodel, " << bank << " bank proofs, " << bankBad << " bad";
    return {refutedProvable == 0 && badCertificates == 0 && bankBad == 0 && bank > 0, d.str()};
}

Outcome truthLemma() {
    if (auditedCalls == 0) return {false, "criterion 3 did not run"};
    return {auditViolations == 0, std::to_string(auditedCalls) + " calls, " + std::to_string(auditedPairs) +
                                      " (atom, member) pairs, " + std::to_string(auditViolations) + " violations"};
}

Outcome neighborhood() {
    const auto formulas = ts::exhaustiveSmall(2, 8, {Formula::var("p")}, 3);
    std::size_t models = 0, evals = 0, mismatches = 0, roundTrips = 0;
    for (const MNFrame& fr : framesUpTo(3)) {
        const NeighborhoodFrame nf = toNeighborhood(fr);
        if (!(fromNeighborhood(nf) == fr) || !(toNeighborhood(fromNeighborhood(nf)) == nf)) ++roundTrips;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << fr.size()); ++v) {
            const MNModel m{fr, {{"p", WorldSet{v}}}};
            const NeighborhoodModel nm = toNeighborhood(m);
            ++models;
            for (const Formula& f : formulas) {
                ++evals;
                if (truthSet(m, f) != truthSet(nm, f)) ++mismatches;
            }
        }
    }
    return {mismatches == 0 && roundTrips == 0,
            std::to_string(models) + " models, " + std::to_string(formulas.size()) + " formulas, " +
                std::to_string(evals) + " evaluations, " + std::to_string(mismatches) + " mismatches, " +
                std::to_string(roundTrips) + " round-trip failures"};
}

Outcome simulator() {
    using namespace monomod::sim;
    std::size_t runs = 0, benign = 0, switched = 0, invariantFails = 0, benignClaimFails = 0, otherFails = 0;
    for (Variant v : {Variant::H0G0, Variant::H1G1, Variant::HG2}) {
        const ModelRegistry r = ModelRegistry::harvest(defaultLogic(v));
        for (std::uint64_t seed = 0; seed < kSeedsPerVariant; ++seed) {
            const TheoryStream s = TheoryStream::generate(seed, v, r.worldCount(), kSimHorizon);
            const SimResult res = simulate(v, s, r, kSimHorizon);
            const ClaimReport rep = checkClaims(res, s, defaultWindow());
            ++runs;
            benign += res.benign;
            switched += res.state.switchStage.has_value();
            for (const std::string& line : rep.lines) {
                if (line.rfind("CHECK", 0) != 0 || line.size() < 4 || line.substr(line.size() - 4) != "FAIL") continue;
                const bool invariant = line.rfind("CHECK LOCK", 0) == 0 || line.rfind("CHECK FIDELITY", 0) == 0 ||
                                       line.rfind("CHECK EXCL", 0) == 0;
                if (invariant) ++invariantFails;
                else if (res.benign) ++benignClaimFails;
                else ++otherFails;
            }
        }
    }
    std::ostringstream d;
    d << runs << " runs (" << benign << " benign, " << switched << " switched), " << invariantFails
      << " lock/fidelity/exclusivity failures, " << benignClaimFails << " claim failures on benign runs, " << otherFails
      << " on inconsistent runs (reported only)";
    return {invariantFails == 0 && benignClaimFails == 0, d.str()};
}

Outcome determinism(const std::string& exe) {
    const std::string dir = MONOMOD_GOLDEN_DIR;
    const auto cases = golden::loadCases(dir);
    std::size_t differing = 0;
    std::string first;
    for (const auto& c : cases) {
        if (golden::run(exe, dir, c) != golden::run(exe, dir, c)) {
            ++differing;
            if (first.empty()) first = c.name;
        }
    }
    return {differing == 0 && !cases.empty(), std::to_string(cases.size()) + " commands run twice, " +
                                                  std::to_string(differing) + " differ" +
                                                  (first.empty() ? "" : " (first: " + first + ")")};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path to monomod>\n";
        return 2;
    }
    const std::string exe = argv[1];
    report(1, "separation table and lattice inclusions", kBudgetSeparations, separations);
    report(2, "frame correspondence", kBudgetCorrespondence, correspondence);
    report(3, "decide vs brute force vs certificates", kBudgetOracle, oracleAgreement);
    report(4, "truth-lemma audit", 0, truthLemma);
    report(5, "neighborhood equivalence", 0, neighborhood);
    report(6, "simulator invariants and claims", kBudgetSimulator, simulator);
    report(7, "CLI determinism", 0, [&] { return determinism(exe); });
    return failures == 0 ? 0 : 1;
}
