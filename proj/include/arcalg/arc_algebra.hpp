#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "arcalg/diagram.hpp"
#include "arcalg/gluing.hpp"
#include "arcalg/rational.hpp"
#include "arcalg/tqft.hpp"

namespace arcalg {

struct HBasisElt {
    int top, bottom;  // indices into cups()
    Labeling f;
};

// The arc algebra on 2m points: direct sum over pairs (b,a) of cup diagrams
// of the spaces spanned by labelings of W(b)a, with surgery multiplication.
class HAlgebra {
public:
    explicit HAlgebra(int m);

    int m() const { return m_; }
    const std::vector<CupDiagram>& cups() const { return cups_; }
    long dim() const { return dim_; }

    int index(int top, int bottom, Labeling f) const;
    HBasisElt decode(int idx) const;
    const GluedDiagram& glued(int top, int bottom) const;

    // deg = #X - #1 + m
    int degree(int idx) const;

    const SparseVec& mult_basis(int i, int j) const;  // x_i * x_j
    SparseVec mult(const SparseVec& x, const SparseVec& y) const;

    SparseVec idempotent(int a) const;  // e_a, all circles of W(a)a labeled 1
    SparseVec unit() const;

private:
    struct Block {
        GluedDiagram g;
        int offset;
        int dim;
    };
    const Block& block(int top, int bottom) const { return blocks_[top * ncups_ + bottom]; }

    int m_, ncups_;
    long dim_;
    std::vector<CupDiagram> cups_;
    std::vector<Block> blocks_;
    mutable std::map<std::pair<int, int>, SparseVec> cache_;
    mutable std::mutex cache_mutex_;
};

}  // namespace arcalg
