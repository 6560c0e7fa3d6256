#include "monomod/world_set.hpp"

#include <algorithm>
#include <string>

#include "monomod/error.hpp"

namespace monomod {

std::vector<WorldSet> minimize(std::vector<WorldSet> family) {
    std::sort(family.begin(), family.end(), [](WorldSet a, WorldSet b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.bits < b.bits;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<WorldSet> out;
    for (WorldSet s : family) {
        bool dominated = std::any_of(out.begin(), out.end(), [&](WorldSet m) { return m.subsetOf(s); });
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WorldSet> minimalTransversals(const std::vector<WorldSet>& family, std::size_t limit) {
    std::vector<WorldSet> cur{WorldSet{}};
    for (WorldSet s : minimize(family)) {
        std::vector<WorldSet> next;
        for (WorldSet t : cur) {
            if (t.intersects(s)) {
                next.push_back(t);
                continue;
            }
            for (std::size_t e : s.members()) {
                WorldSet u = t;
                u.insert(e);
                next.push_back(u);
            }
        }
        cur = minimize(std::move(next));
        if (cur.size() > limit)
            throw CapacityError("minimal transversal family exceeds " + std::to_string(limit) + " sets");
    }
    return cur;
}

}  // namespace monomod
