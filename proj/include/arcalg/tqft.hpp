#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arcalg/diagram.hpp"
#include "arcalg/gluing.hpp"

namespace arcalg {

// Labeling of the circles of a glued diagram, one bit per circle in
// min-point order; bit set = X, bit clear = 1.
using Labeling = std::uint32_t;

int labeling_weight(Labeling f, int num_circles);  // number of X factors

// Multiply f in G(W(b)a) by g in G(W(c)b) inside G(W(c)a) by surgering the
// arcs of b one at a time (merge: 1*1=1, 1*X=X, X*X=0; split: 1 -> X(x)1 +
// 1(x)X, X -> X(x)X). Returns the resulting labelings of glue(a,c) as a
// multiset; every surgery schedule gives the same answer.
// cup_order, if nonempty, is a permutation of indices into b.arcs.
std::vector<Labeling> surgery_multiply(const CupDiagram& c, const CupDiagram& b,
                                       const CupDiagram& a, Labeling g, Labeling f,
                                       std::span<const int> cup_order = {});

}  // namespace arcalg
