#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "arcalg/diagram.hpp"
#include "arcalg/gluing.hpp"
#include "arcalg/rational.hpp"
#include "arcalg/tqft.hpp"

namespace arcalg {

struct KBasisElt {
    int top, bottom;  // indices into seqs()
    Labeling f;       // one bit per black circle, in circle order
};

// The colored enlargement: blocks indexed by pairs of balanced sign
// sequences, each the labeling space of the black circles of the glued
// extended diagrams. Blocks containing a red circle are zero; green
// circles carry no label. Multiplication lifts along the canonical maps,
// surgers in the ambient arc algebra, and projects back (X on a green
// circle dies).
class KAlgebra {
public:
    explicit KAlgebra(int n);

    int n() const { return n_; }
    const std::vector<SignSeq>& seqs() const { return seqs_; }
    int seq_index(const SignSeq&) const;
    const CupDiagram& ext_cup(int a) const { return ext_[a]; }
    long dim() const { return dim_; }

    const GluedDiagram& glued(int top, int bottom) const { return block(top, bottom).g; }
    int block_dim(int top, int bottom) const { return block(top, bottom).dim; }

    int index(int top, int bottom, Labeling f) const;
    KBasisElt decode(int idx) const;

    // deg = 2#X - #circles + 2n
    int degree(int idx) const;

    const SparseVec& mult_basis(int i, int j) const;  // x_i * x_j
    SparseVec mult(const SparseVec& x, const SparseVec& y) const;

    SparseVec idempotent(int a) const;
    SparseVec unit() const;

    // Basis vector of the (top,bottom) block with X on the circle through
    // the point at coordinate alpha; zero if that circle is green or the
    // block is zero.
    SparseVec x_alpha(int top, int bottom, HalfIndex alpha) const;

    // Componentwise (Frobenius) product inside each block.
    SparseVec star(const SparseVec& x, const SparseVec& y) const;

    // Canonical maps between black-circle labelings and full labelings.
    Labeling up(int top, int bottom, Labeling black) const;
    std::optional<Labeling> down(int top, int bottom, Labeling full) const;

private:
    struct Block {
        GluedDiagram g;
        std::vector<int> black_circles;  // circle indices, increasing
        int offset;
        int dim;  // 2^#black, or 0 if a red circle is present
    };
    const Block& block(int top, int bottom) const { return blocks_[top * nseq_ + bottom]; }

    int n_, nseq_;
    long dim_;
    std::vector<SignSeq> seqs_;
    std::vector<CupDiagram> ext_;
    std::vector<Block> blocks_;
    mutable std::map<std::pair<int, int>, SparseVec> cache_;
    mutable std::mutex cache_mutex_;
};

}  // namespace arcalg
