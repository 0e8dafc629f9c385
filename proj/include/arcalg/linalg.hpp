#pragma once

#include <vector>

#include "arcalg/rational.hpp"

namespace arcalg {

// Row-echelon accumulator over Q with sparse rows, pivot = smallest index.
class Echelon {
public:
    // Reduce v against the stored rows; the residual has no stored pivot.
    SparseVec reduce(SparseVec v) const;
    // Insert v if independent; returns true when the rank grew.
    bool insert(SparseVec v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_;  // pivot -> row, row[pivot] = 1
};

int rank_of(const std::vector<SparseVec>& vecs);

// Basis of { c in Q^k : sum_i c_i cols[i] = 0 }.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& cols);

}  // namespace arcalg
