#include "monomod/closure.hpp"

#include <algorithm>
#include <unordered_set>

#include "monomod/error.hpp"

namespace monomod {

Formula negdual(const Formula& f) {
    if (auto b = f.negated()) return *b;
    return Formula::neg(f);
}

std::vector<Formula> subformulas(const Formula& f) {
    std::unordered_set<Formula, FormulaHash> seen;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula g = stack.back();
        stack.pop_back();
        if (!seen.insert(g).second) continue;
        if (g.is(Kind::Imp)) {
            stack.push_back(g.left());
            stack.push_back(g.right());
        } else if (g.is(Kind::Box) || g.is(Kind::Pr) || g.is(Kind::PrR)) {
            stack.push_back(g.inner());
        }
    }
    std::vector<Formula> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), CodeLess{});
    return out;
}

ClosureSet::ClosureSet(const Formula& a) : root_(a) {
    if (!a.isModal()) throw InputError("closure: formula contains simulator atoms");
    std::unordered_set<Formula, FormulaHash> all;
    for (const Formula& b : subformulas(a)) {
        all.insert(b);
        all.insert(negdual(b));
    }
    const Formula bot = Formula::bot();
    const Formula top = Formula::top();
    for (const Formula& c : {Formula::box(bot), Formula::neg(Formula::box(bot)), Formula::box(top),
                             Formula::neg(Formula::box(top)), top, bot})
        all.insert(c);
    members_.assign(all.begin(), all.end());
    std::sort(members_.begin(), members_.end(), CodeLess{});
    for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
}

std::optional<std::size_t> ClosureSet::indexOf(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace monomod
