#pragma once

#include <string>

#include "monomod/formula.hpp"
#include "monomod/frame.hpp"

namespace monomod {

enum class FrameProperty { Transitive, P, D };

const char* propertyName(FrameProperty p);
FrameProperty parseProperty(const std::string& s);  // "transitive" | "P" | "D"

// ⟦f⟧ in the model. Throws InputError on simulator atoms.
WorldSet truthSet(const MNModel& m, const Formula& f);
bool eval(const MNModel& m, std::size_t x, const Formula& f);
bool eval(const MNModel& m, const std::string& world, const Formula& f);

bool frameProperty(const MNFrame& fr, FrameProperty p);

// f holds at every world under every valuation of its variables.
// Throws CapacityError when |W|·|vars(f)| exceeds 24.
bool validInFrame(const MNFrame& fr, const Formula& f);

NeighborhoodFrame toNeighborhood(const MNFrame& fr);
MNFrame fromNeighborhood(const NeighborhoodFrame& nf);
NeighborhoodModel toNeighborhood(const MNModel& m);
MNModel fromNeighborhood(const NeighborhoodModel& m);

// v(f) computed on the δ side: v(◇A) = δ(v(A)), v(□A) = W ∖ δ(W ∖ v(A)).
WorldSet truthSet(const NeighborhoodModel& m, const Formula& f);

}  // namespace monomod
