#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "monomod/brute_force.hpp"
#include "monomod/decide.hpp"
#include "monomod/error.hpp"
#include "monomod/hilbert.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "monomod/report.hpp"
#include "monomod/semantics.hpp"
#include "monomod/sim.hpp"

using namespace monomod;

namespace {

constexpr int kAnswered = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string parentDir(const std::string& path) {
    auto slash = path.find_last_of('/');
    return slash == std::string::npos ? "." : path.substr(0, slash);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomod: monotonic modal logic workbench"};
    app.require_subcommand(1);
    int status = kAnswered;

    std::string logicText, formulaText, file, world, target, certOut, refuteText;
    std::vector<std::string> properties;
    bool withTrace = false, brute = false;
    std::size_t maxWorlds = 3, samples = 2000, worlds = 1;
    std::uint64_t seed = 1;

    auto* decideCmd = app.add_subcommand("decide", "Decide provability and print a certificate");
    decideCmd->add_option("--logic", logicText, "MN, MNF, MNP, MNPF, MND or MNDF")->required();
    decideCmd->add_option("formula", formulaText)->required();
    decideCmd->add_flag("--trace", withTrace, "Print the elimination trace of PROVABLE verdicts");
    decideCmd->add_option("--certificate", certOut, "Also write the full certificate to this file");

    auto* verifyCmd = app.add_subcommand("verify", "Re-check a certificate file");
    verifyCmd->add_option("certificate", file)->required();

    auto* cmCmd = app.add_subcommand("countermodel", "Find a countermodel");
    cmCmd->add_option("--logic", logicText)->required();
    cmCmd->add_option("formula", formulaText)->required();
    cmCmd->add_flag("--brute", brute, "Search frames directly instead of using decide");
    cmCmd->add_option("--max-worlds", maxWorlds, "Largest frame size for --brute");
    cmCmd->add_option("--samples", samples, "Random frames per size above 3 worlds");
    cmCmd->add_option("--seed", seed);

    auto* checkModelCmd = app.add_subcommand("check-model", "Evaluate a formula at a world");
    checkModelCmd->add_option("model", file)->required();
    checkModelCmd->add_option("world", world)->required();
    checkModelCmd->add_option("formula", formulaText)->required();

    auto* checkFrameCmd = app.add_subcommand("check-frame", "Test a frame property");
    checkFrameCmd->add_option("--property", properties, "transitive, P or D")->required();
    checkFrameCmd->add_option("frame", file)->required();

    auto* convertCmd = app.add_subcommand("convert", "Convert between relational and neighborhood form");
    convertCmd->add_option("--to", target)->required()->check(CLI::IsMember({"neighborhood", "relational"}));
    convertCmd->add_option("file", file)->required();

    auto* enumCmd = app.add_subcommand("enumerate", "List all frames of a given size");
    enumCmd->add_option("--worlds", worlds)->required()->check(CLI::Range(1, 3));
    enumCmd->add_option("--property", properties, "Keep frames with these properties");
    enumCmd->add_option("--refute", refuteText, "Keep frames refuting the formula, with a refuting valuation");

    auto* proofCmd = app.add_subcommand("proof", "Hilbert proof scripts");
    proofCmd->require_subcommand(1);
    auto* proofCheckCmd = proofCmd->add_subcommand("check", "Check a proof script");
    proofCheckCmd->add_option("file", file)->required();

    auto* simCmd = app.add_subcommand("simulate", "Run a provability-predicate scenario");
    simCmd->add_option("scenario", file)->required();

    auto* sepCmd = app.add_subcommand("separations", "Print the axiom separation table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kAnswered : kUsage;
    }

    try {
        if (*decideCmd) {
            Certificate c = decide(parseLogic(logicText), parse(formulaText));
            std::cout << formatDecision(c, withTrace);
            if (!certOut.empty()) {
                std::ofstream out(certOut);
                if (!out) throw InputError("cannot write '" + certOut + "'");
                out << writeCertificate(c);
            }
        } else if (*verifyCmd) {
            const bool ok = verifyCertificate(parseCertificate(readFile(file)));
            std::cout << (ok ? "VALID" : "INVALID") << '\n';
            status = ok ? kAnswered : kFailed;
        } else if (*cmCmd) {
            const Logic l = parseLogic(logicText);
            const Formula f = parse(formulaText);
            std::optional<Countermodel> c;
            if (brute) {
                c = bruteForceCountermodel(l, f, maxWorlds, samples, seed);
            } else {
                Certificate cert = decide(l, f);
                c = cert.countermodel;
            }
            if (c) std::cout << formatCountermodel(*c);
            else std::cout << (brute ? "none found\n" : "none: provable\n");
        } else if (*checkModelCmd) {
            std::cout << formatEvaluation(parseModel(readFile(file)), world, parse(formulaText));
        } else if (*checkFrameCmd) {
            const MNFrame fr = parseFrame(readFile(file));
            for (const auto& p : properties) std::cout << formatFrameProperty(fr, parseProperty(p));
        } else if (*convertCmd) {
            const std::string text = readFile(file);
            if (target == "neighborhood") std::cout << writeNeighborhoodModel(toNeighborhood(parseModel(text)));
            else std::cout << writeModel(parseModel(text));
        } else if (*enumCmd) {
            std::vector<FrameProperty> wanted;
            for (const auto& p : properties) wanted.push_back(parseProperty(p));
            std::optional<Formula> refute;
            if (!refuteText.empty()) refute = parse(refuteText);
            FrameEnumerator e(worlds);
            std::uint64_t index = 0, matched = 0;
            while (auto fr = e.next()) {
                const std::uint64_t k = index++;
                bool keep = true;
                for (FrameProperty p : wanted) keep = keep && frameProperty(*fr, p);
                if (!keep) continue;
                if (refute) {
                    auto c = refuteInFrame(*fr, *refute);
                    if (!c) continue;
                    std::cout << "frame " << k << '\n' << formatCountermodel(*c);
                } else {
                    std::cout << "frame " << k << '\n' << writeFrame(*fr);
                }
                ++matched;
            }
            std::cout << "total " << e.total() << " matched " << matched << '\n';
        } else if (*proofCheckCmd) {
            const auto script = hilbert::parseProofScript(readFile(file));
            const auto r = hilbert::checkProof(script);
            if (r.ok) {
                std::cout << "OK " << logicName(script.logic) << " |- " << render(script.conclusion()) << '\n';
            } else {
                std::cout << "FAIL " << hilbert::describe(r) << '\n';
                status = kFailed;
            }
        } else if (*simCmd) {
            const auto run = sim::runScenario(sim::parseScenario(readFile(file)), parentDir(file));
            std::cout << sim::formatScenarioRun(run);
            if (run.claims.failed) status = kFailed;
        } else if (*sepCmd) {
            const auto rows = separationTable();
            std::cout << formatSeparations(rows);
            if (!separationsHold(rows)) status = kFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}
