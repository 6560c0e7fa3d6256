#include "monomod/propositional.hpp"

#include "monomod/error.hpp"

namespace monomod {

std::uint32_t AtomTable::intern(const Formula& f) {
    auto [it, fresh] = ids_.emplace(f, static_cast<std::uint32_t>(atoms_.size()));
    if (fresh) atoms_.push_back(f);
    return it->second;
}

std::optional<std::uint32_t> AtomTable::find(const Formula& f) const {
    auto it = ids_.find(f);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

bool isPropositionalAtom(const Formula& f) { return !f.is(Kind::Bot) && !f.is(Kind::Imp); }

namespace {

std::uint32_t build(const Formula& f, AtomTable& table, PropSkeleton& s) {
    PropSkeleton::Node n{};
    if (f.is(Kind::Bot)) {
        n.op = PropSkeleton::Op::Bot;
    } else if (f.is(Kind::Imp)) {
        n.op = PropSkeleton::Op::Imp;
        n.a = build(f.left(), table, s);
        n.b = build(f.right(), table, s);
    } else {
        n.op = PropSkeleton::Op::Atom;
        n.a = table.intern(f);
    }
    s.nodes.push_back(n);
    return static_cast<std::uint32_t>(s.nodes.size() - 1);
}

}  // namespace

PropSkeleton abstract(const Formula& f, AtomTable& table) {
    PropSkeleton s;
    build(f, table, s);
    return s;
}

bool PropSkeleton::eval(std::uint64_t valuation) const {
    std::vector<bool> v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        switch (n.op) {
            case Op::Atom: v[i] = (valuation >> n.a) & 1U; break;
            case Op::Bot: v[i] = false; break;
            case Op::Imp: v[i] = !v[n.a] || v[n.b]; break;
        }
    }
    return v.back();
}

TruthTable::TruthTable(std::size_t atoms) : atoms_(atoms) {
    if (atoms > kMaxAtoms)
        throw CapacityError("truth table over " + std::to_string(atoms) + " atoms exceeds cap of " +
                            std::to_string(kMaxAtoms));
    std::size_t rows = std::size_t{1} << atoms;
    words_ = rows <= 64 ? 1 : rows / 64;
    lastMask_ = rows >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
}

TruthTable::Vector TruthTable::ones() const {
    Vector v(words_, ~std::uint64_t{0});
    v.back() &= lastMask_;
    return v;
}

TruthTable::Vector TruthTable::atom(std::size_t k) const {
    static constexpr std::uint64_t patterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    Vector v(words_);
    for (std::size_t w = 0; w < words_; ++w) {
        if (k < 6) v[w] = patterns[k];
        else v[w] = ((w >> (k - 6)) & 1U) ? ~std::uint64_t{0} : 0;
    }
    v.back() &= lastMask_;
    return v;
}

TruthTable::Vector TruthTable::eval(const PropSkeleton& s) const {
    std::vector<Vector> v(s.nodes.size());
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const auto& n = s.nodes[i];
        switch (n.op) {
            case PropSkeleton::Op::Atom: v[i] = atom(n.a); break;
            case PropSkeleton::Op::Bot: v[i] = Vector(words_, 0); break;
            case PropSkeleton::Op::Imp: {
                v[i] = Vector(words_);
                for (std::size_t w = 0; w < words_; ++w) v[i][w] = ~v[n.a][w] | v[n.b][w];
                v[i].back() &= lastMask_;
                break;
            }
        }
    }
    return std::move(v.back());
}

bool TruthTable::allZero(const Vector& v) {
    for (auto w : v)
        if (w) return false;
    return true;
}

bool TruthTable::allOnes(const Vector& v) const { return v == ones(); }

bool isTautology(const Formula& f) { return isTc({}, f); }

bool isTc(const std::vector<Formula>& pool, const Formula& f) {
    AtomTable table;
    std::vector<PropSkeleton> premises;
    premises.reserve(pool.size());
    for (const auto& p : pool) premises.push_back(abstract(p, table));
    PropSkeleton goal = abstract(f, table);
    TruthTable tt(table.size());
    TruthTable::Vector acc = tt.ones();
    for (const auto& p : premises) {
        auto v = tt.eval(p);
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= v[w];
    }
    auto g = tt.eval(goal);
    for (std::size_t w = 0; w < acc.size(); ++w)
        if (acc[w] & ~g[w]) return false;
    return true;
}

}  // namespace monomod
