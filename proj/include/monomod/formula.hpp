#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monomod {

using Natural = boost::multiprecision::cpp_int;

// Var/Bot/Imp/Box are the modal language. Stage, Pr and PrR are the simulator's
// opaque atoms S(j), PRg(phi) and PRgR(phi); modal algorithms reject them.
enum class Kind : std::uint8_t { Var, Bot, Imp, Box, Stage, Pr, PrR };

class Formula {
public:
    Formula();  // bottom

    static Formula var(std::string_view name);
    static Formula bot();
    static Formula imp(const Formula& a, const Formula& b);
    static Formula box(const Formula& a);
    static Formula stage(std::uint64_t j);
    static Formula pr(const Formula& a);
    static Formula prRosser(const Formula& a);

    // Sugar, expanded immediately.
    static Formula top();
    static Formula neg(const Formula& a);
    static Formula conj(const Formula& a, const Formula& b);
    static Formula disj(const Formula& a, const Formula& b);
    static Formula dia(const Formula& a);

    Kind kind() const;
    bool is(Kind k) const { return kind() == k; }

    const std::string& name() const;       // Var
    std::uint64_t stageIndex() const;      // Stage
    const Formula& left() const;           // Imp
    const Formula& right() const;          // Imp
    const Formula& inner() const;          // Box, Pr, PrR

    // B when this is B -> bottom.
    std::optional<Formula> negated() const;
    bool isNegation() const;

    std::size_t size() const;
    unsigned modalDepth() const;
    bool isModal() const;  // free of simulator atoms
    std::size_t hash() const;

    // Bit length and payload of the self-delimiting encoding; see codec.hpp.
    std::uint32_t encodingLength() const;
    const Natural& encodingPayload() const;

    friend bool operator==(const Formula& a, const Formula& b);

    struct Node;  // opaque outside formula.cpp

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Total order by ascending code.
bool codeLess(const Formula& a, const Formula& b);
struct CodeLess {
    bool operator()(const Formula& a, const Formula& b) const { return codeLess(a, b); }
};

// Variables occurring in f, sorted by name.
std::vector<std::string> variables(const Formula& f);

// Strips leading negations: returns (count, core).
std::pair<unsigned, Formula> stripNegations(const Formula& f);

Formula negate(const Formula& f, unsigned times);

}  // namespace monomod
