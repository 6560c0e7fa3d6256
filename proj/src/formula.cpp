#include "monomod/formula.hpp"

#include <algorithm>
#include <set>

#include "monomod/codec.hpp"
#include "monomod/error.hpp"

namespace monomod {

struct Formula::Node {
    Kind kind = Kind::Bot;
    std::string name;
    std::uint64_t index = 0;
    std::optional<Formula> a;
    std::optional<Formula> b;
    std::size_t hash = 0;
    std::size_t size = 1;
    unsigned depth = 0;
    bool modal = true;
    std::uint32_t bits = 0;
    Natural payload;
};

namespace {

constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + kMix + (h << 6) + (h >> 2));
}

// Appends `len` bits of `value` to (payload, bits).
void append(Natural& payload, std::uint32_t& bits, const Natural& value, std::uint32_t len) {
    payload <<= len;
    payload |= value;
    bits += len;
}

void appendGamma(Natural& payload, std::uint32_t& bits, const Natural& n) {
    // n >= 1: (b-1) zeros then the b bits of n.
    std::uint32_t b = static_cast<std::uint32_t>(boost::multiprecision::msb(n)) + 1;
    payload <<= (b - 1);
    bits += b - 1;
    append(payload, bits, n, b);
}

std::shared_ptr<Formula::Node> bare(Kind k) {
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    return n;
}

bool validIdentifier(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

}  // namespace

Formula::Formula() : node_([] {
    static const std::shared_ptr<const Node> botNode = [] {
        auto n = bare(Kind::Bot);
        n->hash = mix(0, 1);
        append(n->payload, n->bits, 0b01, 2);
        return n;
    }();
    return botNode;
}()) {}

Formula Formula::bot() { return Formula(); }

Formula Formula::var(std::string_view name) {
    if (!validIdentifier(name)) throw InputError("invalid variable name '" + std::string(name) + "'");
    auto n = bare(Kind::Var);
    n->name = std::string(name);
    n->hash = mix(std::hash<std::string>{}(n->name), 0);
    append(n->payload, n->bits, 0b0000, 4);
    appendGamma(n->payload, n->bits, identifierIndex(n->name) + 1);
    return Formula(n);
}

Formula Formula::stage(std::uint64_t j) {
    auto n = bare(Kind::Stage);
    n->index = j;
    n->modal = false;
    n->hash = mix(j, 4);
    append(n->payload, n->bits, 0b0001, 4);
    appendGamma(n->payload, n->bits, Natural(j) + 1);
    return Formula(n);
}

Formula Formula::imp(const Formula& a, const Formula& b) {
    auto n = bare(Kind::Imp);
    n->a = a;
    n->b = b;
    n->hash = mix(mix(a.hash(), b.hash()), 2);
    n->size = 1 + a.size() + b.size();
    n->depth = std::max(a.modalDepth(), b.modalDepth());
    n->modal = a.isModal() && b.isModal();
    append(n->payload, n->bits, 0b10, 2);
    append(n->payload, n->bits, a.encodingPayload(), a.encodingLength());
    append(n->payload, n->bits, b.encodingPayload(), b.encodingLength());
    return Formula(n);
}

namespace {

std::shared_ptr<Formula::Node> unary(Kind k, const Formula& a, unsigned tag, std::uint32_t tagBits) {
    auto n = bare(k);
    n->a = a;
    n->hash = mix(a.hash(), static_cast<std::size_t>(k) + 8);
    n->size = 1 + a.size();
    n->depth = a.modalDepth() + (k == Kind::Box ? 1 : 0);
    n->modal = a.isModal() && k == Kind::Box;
    append(n->payload, n->bits, tag, tagBits);
    append(n->payload, n->bits, a.encodingPayload(), a.encodingLength());
    return n;
}

}  // namespace

Formula Formula::box(const Formula& a) { return Formula(unary(Kind::Box, a, 0b11, 2)); }
Formula Formula::pr(const Formula& a) { return Formula(unary(Kind::Pr, a, 0b0010, 4)); }
Formula Formula::prRosser(const Formula& a) { return Formula(unary(Kind::PrR, a, 0b0011, 4)); }

Formula Formula::top() { return imp(bot(), bot()); }
Formula Formula::neg(const Formula& a) { return imp(a, bot()); }
Formula Formula::conj(const Formula& a, const Formula& b) { return neg(imp(a, neg(b))); }
Formula Formula::disj(const Formula& a, const Formula& b) { return imp(neg(a), b); }
Formula Formula::dia(const Formula& a) { return neg(box(neg(a))); }

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::uint64_t Formula::stageIndex() const { return node_->index; }
const Formula& Formula::left() const { return *node_->a; }
const Formula& Formula::right() const { return *node_->b; }
const Formula& Formula::inner() const { return *node_->a; }
std::size_t Formula::size() const { return node_->size; }
unsigned Formula::modalDepth() const { return node_->depth; }
bool Formula::isModal() const { return node_->modal; }
std::size_t Formula::hash() const { return node_->hash; }
std::uint32_t Formula::encodingLength() const { return node_->bits; }
const Natural& Formula::encodingPayload() const { return node_->payload; }

bool Formula::isNegation() const { return kind() == Kind::Imp && right().kind() == Kind::Bot; }

std::optional<Formula> Formula::negated() const {
    if (isNegation()) return left();
    return std::nullopt;
}

bool operator==(const Formula& x, const Formula& y) {
    if (x.node_ == y.node_) return true;
    const auto& a = *x.node_;
    const auto& b = *y.node_;
    if (a.hash != b.hash || a.kind != b.kind || a.size != b.size || a.bits != b.bits) return false;
    switch (a.kind) {
        case Kind::Bot: return true;
        case Kind::Var: return a.name == b.name;
        case Kind::Stage: return a.index == b.index;
        case Kind::Imp: return *a.a == *b.a && *a.b == *b.b;
        case Kind::Box:
        case Kind::Pr:
        case Kind::PrR: return *a.a == *b.a;
    }
    return false;
}

bool codeLess(const Formula& a, const Formula& b) {
    if (a.encodingLength() != b.encodingLength()) return a.encodingLength() < b.encodingLength();
    return a.encodingPayload() < b.encodingPayload();
}

std::vector<std::string> variables(const Formula& f) {
    std::set<std::string> out;
    std::vector<const Formula*> stack{&f};
    while (!stack.empty()) {
        const Formula* g = stack.back();
        stack.pop_back();
        switch (g->kind()) {
            case Kind::Var: out.insert(g->name()); break;
            case Kind::Imp:
                stack.push_back(&g->left());
                stack.push_back(&g->right());
                break;
            case Kind::Box:
            case Kind::Pr:
            case Kind::PrR: stack.push_back(&g->inner()); break;
            default: break;
        }
    }
    return {out.begin(), out.end()};
}

std::pair<unsigned, Formula> stripNegations(const Formula& f) {
    unsigned u = 0;
    Formula g = f;
    while (g.isNegation()) {
        g = Formula(g.left());
        ++u;
    }
    return {u, g};
}

Formula negate(const Formula& f, unsigned times) {
    Formula g = f;
    for (unsigned i = 0; i < times; ++i) g = Formula::neg(g);
    return g;
}

}  // namespace monomod
