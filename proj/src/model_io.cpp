#include "monomod/model_io.hpp"

#include <fstream>
#include <sstream>

#include "monomod/error.hpp"
#include "monomod/semantics.hpp"

namespace monomod {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ws(raw);
        std::vector<std::string> words;
        for (std::string w; ws >> w;) {
            // Allow "a:" and ":b" as well as a free-standing colon.
            std::size_t start = 0;
            for (std::size_t c; (c = w.find(':', start)) != std::string::npos; start = c + 1) {
                if (c > start) words.push_back(w.substr(start, c - start));
                words.emplace_back(":");
            }
            if (start < w.size()) words.push_back(w.substr(start));
        }
        if (!words.empty()) out.push_back({number, std::move(words)});
    }
    return out;
}

struct Raw {
    std::vector<std::string> worlds;
    std::vector<std::vector<WorldSet>> rel;
    std::vector<std::pair<WorldSet, WorldSet>> delta;
    std::map<std::string, WorldSet> val;
    bool sawRel = false;
    bool sawDelta = false;
};

std::size_t worldIndex(const std::vector<std::string>& worlds, const std::string& w, std::size_t line) {
    for (std::size_t i = 0; i < worlds.size(); ++i)
        if (worlds[i] == w) return i;
    throw ParseError("unknown world '" + w + "'", line);
}

WorldSet readSet(const std::vector<std::string>& worlds, const std::vector<std::string>& words, std::size_t from,
                 std::size_t to, std::size_t line) {
    WorldSet s;
    for (std::size_t i = from; i < to; ++i) s.insert(worldIndex(worlds, words[i], line));
    return s;
}

Raw readRaw(std::string_view text) {
    Raw r;
    bool haveWorlds = false;
    for (const Line& l : tokenize(text)) {
        const auto& w = l.words;
        if (w[0] == "worlds") {
            if (haveWorlds) throw ParseError("second worlds line", l.number);
            r.worlds.assign(w.begin() + 1, w.end());
            if (r.worlds.empty()) throw ParseError("no worlds", l.number);
            if (r.worlds.size() > kMaxWorlds) throw CapacityError("more than 64 worlds");
            r.rel.assign(r.worlds.size(), {});
            haveWorlds = true;
            continue;
        }
        if (!haveWorlds) throw ParseError("expected worlds line first", l.number);
        if (w[0] == "rel" || w[0] == "val") {
            if (w.size() < 3 || w[2] != ":") throw ParseError("expected '" + w[0] + " <name> : <worlds>'", l.number);
            WorldSet s = readSet(r.worlds, w, 3, w.size(), l.number);
            if (w[0] == "rel") {
                if (s.empty()) throw ParseError("a world cannot be related to the empty set", l.number);
                r.rel[worldIndex(r.worlds, w[1], l.number)].push_back(s);
                r.sawRel = true;
            } else {
                if (r.val.count(w[1])) throw ParseError("duplicate val line for '" + w[1] + "'", l.number);
                r.val[w[1]] = s;
            }
        } else if (w[0] == "delta") {
            std::size_t colon = 1;
            while (colon < w.size() && w[colon] != ":") ++colon;
            if (colon == w.size()) throw ParseError("expected 'delta <worlds> : <worlds>'", l.number);
            r.delta.emplace_back(readSet(r.worlds, w, 1, colon, l.number),
                                 readSet(r.worlds, w, colon + 1, w.size(), l.number));
            r.sawDelta = true;
        } else {
            throw ParseError("unknown record '" + w[0] + "'", l.number);
        }
    }
    if (!haveWorlds) throw ParseError("missing worlds line", 0);
    if (r.sawRel && r.sawDelta) throw ParseError("cannot mix rel and delta lines", 0);
    return r;
}

std::string setText(const std::vector<std::string>& names, WorldSet s) {
    std::string out;
    for (std::size_t i : s.members()) {
        out += ' ';
        out += names[i];
    }
    return out;
}

void writeValuation(std::ostringstream& out, const std::vector<std::string>& names,
                    const std::map<std::string, WorldSet>& val) {
    for (const auto& [var, s] : val) out << "val " << var << " :" << setText(names, s) << '\n';
}

std::string worldsLine(const std::vector<std::string>& names) {
    std::string out = "worlds";
    for (const auto& n : names) out += ' ' + n;
    return out + '\n';
}

}  // namespace

bool isNeighborhoodText(std::string_view text) { return readRaw(text).sawDelta; }

MNModel parseModel(std::string_view text) {
    Raw r = readRaw(text);
    if (r.sawDelta) return fromNeighborhood(parseNeighborhoodModel(text));
    return MNModel{MNFrame(r.worlds, r.rel), r.val};
}

MNFrame parseFrame(std::string_view text) { return parseModel(text).frame; }

NeighborhoodModel parseNeighborhoodModel(std::string_view text) {
    Raw r = readRaw(text);
    if (r.sawRel) throw InputError("expected delta lines, found rel lines");
    if (r.worlds.size() > NeighborhoodFrame::kMaxWorlds)
        throw CapacityError("neighborhood frames support at most 16 worlds");
    std::vector<WorldSet> table(std::size_t{1} << r.worlds.size());
    for (auto [v, img] : r.delta) table[v.bits] = img;
    return NeighborhoodModel{NeighborhoodFrame(r.worlds, std::move(table)), r.val};
}

std::string writeFrame(const MNFrame& fr) {
    std::ostringstream out;
    out << worldsLine(fr.names());
    for (std::size_t x = 0; x < fr.size(); ++x)
        for (WorldSet m : fr.minimal(x)) out << "rel " << fr.name(x) << " :" << setText(fr.names(), m) << '\n';
    return out.str();
}

std::string writeModel(const MNModel& m) {
    std::ostringstream out;
    out << writeFrame(m.frame);
    writeValuation(out, m.frame.names(), m.valuation);
    return out.str();
}

std::string writeNeighborhoodModel(const NeighborhoodModel& m) {
    std::ostringstream out;
    const auto& names = m.frame.names();
    out << worldsLine(names);
    for (std::uint64_t v = 1; v < m.frame.table().size(); ++v) {
        WorldSet img = m.frame.table()[v];
        if (!img.empty()) out << "delta" << setText(names, WorldSet{v}) << " :" << setText(names, img) << '\n';
    }
    writeValuation(out, names, m.valuation);
    return out.str();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace monomod
