#include "monomod/codec.hpp"

#include <algorithm>

namespace monomod {

namespace {

constexpr unsigned kFirst = 26;   // a-z
constexpr unsigned kRest = 37;    // 0-9 _ a-z

unsigned restRank(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c == '_') return 10;
    return 11 + static_cast<unsigned>(c - 'a');
}

char restChar(unsigned r) {
    if (r < 10) return static_cast<char>('0' + r);
    if (r == 10) return '_';
    return static_cast<char>('a' + (r - 11));
}

// Number of identifiers of length len.
Natural countOfLength(std::size_t len) {
    Natural n = kFirst;
    for (std::size_t i = 1; i < len; ++i) n *= kRest;
    return n;
}

// Reads the encoding MSB-first from the payload bits.
class BitReader {
public:
    BitReader(const Natural& payload, std::uint32_t len) : payload_(payload), pos_(len) {}
    bool done() const { return pos_ == 0; }
    std::uint32_t remaining() const { return pos_; }
    std::optional<unsigned> bit() {
        if (pos_ == 0) return std::nullopt;
        --pos_;
        return boost::multiprecision::bit_test(payload_, pos_) ? 1u : 0u;
    }
    std::optional<unsigned> two() {
        auto x = bit();
        auto y = bit();
        if (!x || !y) return std::nullopt;
        return *x * 2 + *y;
    }
    std::optional<Natural> gamma() {
        std::uint32_t zeros = 0;
        for (;;) {
            auto b = bit();
            if (!b) return std::nullopt;
            if (*b == 1) break;
            ++zeros;
        }
        Natural n = 1;
        for (std::uint32_t i = 0; i < zeros; ++i) {
            auto b = bit();
            if (!b) return std::nullopt;
            n = (n << 1) | *b;
        }
        return n;
    }

private:
    const Natural& payload_;
    std::uint32_t pos_;
};

std::optional<Formula> readFormula(BitReader& r) {
    auto tag = r.two();
    if (!tag) return std::nullopt;
    switch (*tag) {
        case 0b00: {
            auto sub = r.two();
            if (!sub) return std::nullopt;
            if (*sub == 0b00 || *sub == 0b01) {
                auto g = r.gamma();
                if (!g) return std::nullopt;
                Natural idx = *g - 1;
                if (*sub == 0b00) return Formula::var(identifierAt(idx));
                if (idx > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
                return Formula::stage(static_cast<std::uint64_t>(idx));
            }
            auto a = readFormula(r);
            if (!a) return std::nullopt;
            return *sub == 0b10 ? Formula::pr(*a) : Formula::prRosser(*a);
        }
        case 0b01: return Formula::bot();
        case 0b10: {
            auto a = readFormula(r);
            if (!a) return std::nullopt;
            auto b = readFormula(r);
            if (!b) return std::nullopt;
            return Formula::imp(*a, *b);
        }
        default: {
            auto a = readFormula(r);
            if (!a) return std::nullopt;
            return Formula::box(*a);
        }
    }
}

}  // namespace

Natural identifierIndex(const std::string& name) {
    Natural offset = 0;
    for (std::size_t l = 1; l < name.size(); ++l) offset += countOfLength(l);
    Natural rank = static_cast<unsigned>(name[0] - 'a');
    for (std::size_t i = 1; i < name.size(); ++i) rank = rank * kRest + restRank(name[i]);
    return offset + rank;
}

std::string identifierAt(Natural index) {
    std::size_t len = 1;
    for (;;) {
        Natural c = countOfLength(len);
        if (index < c) break;
        index -= c;
        ++len;
    }
    std::string out(len, 'a');
    for (std::size_t i = len; i-- > 1;) {
        out[i] = restChar(static_cast<unsigned>(index % kRest));
        index /= kRest;
    }
    out[0] = static_cast<char>('a' + static_cast<unsigned>(index));
    return out;
}

Natural code(const Formula& f) {
    Natural one = 1;
    return (one << f.encodingLength()) | f.encodingPayload();
}

std::optional<Formula> decode(const Natural& n) {
    if (n < 2) return std::nullopt;
    auto len = static_cast<std::uint32_t>(boost::multiprecision::msb(n));
    Natural payload = n;
    boost::multiprecision::bit_unset(payload, len);
    BitReader r(payload, len);
    auto f = readFormula(r);
    if (!f || !r.done()) return std::nullopt;
    return f;
}

void XiEnumerator::extendTo(std::size_t t) {
    while (formulas_.size() <= t) {
        if (auto f = decode(next_)) {
            formulas_.push_back(*f);
            codes_.push_back(next_);
        }
        ++next_;
    }
}

const Formula& XiEnumerator::at(std::size_t t) {
    extendTo(t);
    return formulas_[t];
}

const Natural& XiEnumerator::codeAt(std::size_t t) {
    extendTo(t);
    return codes_[t];
}

}  // namespace monomod
