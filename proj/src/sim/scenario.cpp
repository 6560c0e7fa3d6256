#include <filesystem>
#include <sstream>

#include "monomod/error.hpp"
#include "monomod/model_io.hpp"
#include "monomod/parser.hpp"
#include "monomod/sim.hpp"

namespace monomod::sim {

namespace {

std::uint64_t readNumber(const std::string& s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a number, got '" + s + "'", line);
    return std::stoull(s);
}

Formula readFormula(const std::string& s, std::size_t line) {
    try {
        return parse(s);
    } catch (const ParseError& e) {
        throw ParseError(std::string("formula: ") + e.what(), line);
    }
}

std::string formatEntry(const std::optional<Formula>& f) { return f ? render(*f) : "-"; }

}  // namespace

Scenario parseScenario(std::string_view text) {
    Scenario sc;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineNo = 0;
    bool haveVariant = false;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::istringstream ws(raw);
        std::string key;
        if (!(ws >> key) || key[0] == '#') continue;
        std::string rest;
        std::getline(ws, rest);
        std::istringstream rs(rest);
        std::vector<std::string> words;
        for (std::string w; rs >> w;) words.push_back(w);
        auto one = [&]() -> const std::string& {
            if (words.size() != 1) throw ParseError("'" + key + "' takes one argument", lineNo);
            return words[0];
        };
        if (key == "variant") {
            sc.variant = parseVariant(one());
            haveVariant = true;
        } else if (key == "logic") {
            sc.logic = parseLogic(one());
        } else if (key == "bound") {
            sc.bound = parseBound(one());
        } else if (key == "horizon") {
            sc.horizon = readNumber(one(), lineNo);
        } else if (key == "seed") {
            sc.seed = readNumber(one(), lineNo);
        } else if (key == "registry") {
            if (words.empty()) throw ParseError("'registry' needs at least one model file", lineNo);
            sc.registryFiles.insert(sc.registryFiles.end(), words.begin(), words.end());
        } else if (key == "window") {
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t semi = rest.find(';', start);
                if (semi == std::string::npos) semi = rest.size();
                std::string piece = rest.substr(start, semi - start);
                if (piece.find_first_not_of(" \t\r") != std::string::npos)
                    sc.window.push_back(readFormula(piece, lineNo));
                start = semi + 1;
            }
        } else if (key == "at") {
            if (words.size() < 3 || words[1] != "prove") throw ParseError("expected 'at <stage> prove <formula>'", lineNo);
            const std::uint64_t stage = readNumber(words[0], lineNo);
            const auto pos = rest.find("prove");
            sc.events.emplace_back(stage, readFormula(rest.substr(pos + 5), lineNo));
        } else {
            throw ParseError("unknown directive '" + key + "'", lineNo);
        }
    }
    if (!haveVariant) throw ParseError("missing 'variant' line", lineNo);
    return sc;
}

ScenarioRun runScenario(const Scenario& sc, const std::string& baseDir) {
    const Logic logic = sc.logic.value_or(defaultLogic(sc.variant));
    if (!variantSupports(sc.variant, logic))
        throw InputError(std::string("variant ") + variantName(sc.variant) + " does not run over " + logicName(logic));
    ScenarioRun run;
    if (sc.registryFiles.empty()) {
        run.registry = ModelRegistry::harvest(logic);
    } else {
        std::vector<MNModel> models;
        for (const auto& file : sc.registryFiles)
            models.push_back(parseModel(readFile((std::filesystem::path(baseDir) / file).string())));
        run.registry = ModelRegistry::fromModels(logic, std::move(models));
    }
    if (sc.seed) run.stream = TheoryStream::generate(*sc.seed, sc.variant, run.registry.worldCount(), sc.horizon);
    for (const auto& [stage, f] : sc.events) run.stream.prove(stage, f);
    run.result = simulate(sc.variant, run.stream, run.registry, sc.horizon, sc.bound);
    run.claims = checkClaims(run.result, run.stream, sc.window.empty() ? defaultWindow() : sc.window);
    return run;
}

std::string formatScenarioRun(const ScenarioRun& run) {
    std::ostringstream out;
    const GTrace& t = run.result.trace;
    out << "variant " << variantName(t.variant()) << '\n';
    out << "logic " << logicName(run.registry.logic()) << '\n';
    out << "registry " << run.registry.models().size() << " models, " << run.registry.worldCount() << " worlds\n";
    out << "events " << run.stream.events().size() << '\n';
    if (t.switchStage())
        out << "switch stage " << *t.switchStage() << " world " << t.world() << '\n';
    else
        out << "switch none through stage " << t.horizon() << '\n';
    out << "benign " << (run.result.benign ? "yes" : "no") << '\n';
    if (t.switchStage()) {
        out << "X";
        for (const Formula& f : sortedByCode(t.xy().x)) out << " ; " << render(f);
        out << "\nY";
        for (const Formula& f : sortedByCode(t.xy().y)) out << " ; " << render(f);
        out << '\n';
    }
    const auto g = t.materialize(t.horizon());
    for (std::size_t p = 0; p < g.size(); ++p) out << "g " << p << ' ' << formatEntry(g[p]) << '\n';
    for (const auto& line : run.claims.lines) out << line << '\n';
    out << "summary " << run.claims.passed << " passed " << run.claims.failed << " failed\n";
    return out.str();
}

}  // namespace monomod::sim
