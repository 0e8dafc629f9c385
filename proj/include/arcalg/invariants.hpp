#pragma once

#include <map>
#include <vector>

#include "arcalg/arc_algebra.hpp"
#include "arcalg/colored_algebra.hpp"
#include "arcalg/linalg.hpp"

namespace arcalg {

// --- generic center machinery -------------------------------------------
// Works for any algebra exposing dim(), decode(i) with .top/.bottom,
// degree(i) and mult_basis(i,j).

template <class A>
std::vector<int> diagonal_indices(const A& alg) {
    std::vector<int> out;
    for (long i = 0; i < alg.dim(); ++i) {
        auto e = alg.decode(static_cast<int>(i));
        if (e.top == e.bottom) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Largest subspace of span(start) commuting with every basis vector.
template <class A>
std::vector<SparseVec> commutant_in(const A& alg, std::vector<SparseVec> basis) {
    for (long v = 0; v < alg.dim() && !basis.empty(); ++v) {
        std::vector<SparseVec> cols;
        cols.reserve(basis.size());
        bool all_zero = true;
        for (const auto& z : basis) {
            SparseVec comm;
            for (const auto& [i, c] : z) {
                add_scaled(comm, alg.mult_basis(i, static_cast<int>(v)), c);
                add_scaled(comm, alg.mult_basis(static_cast<int>(v), i), -c);
            }
            if (!comm.empty()) all_zero = false;
            cols.push_back(std::move(comm));
        }
        if (all_zero) continue;
        auto ker = kernel_basis(cols);
        std::vector<SparseVec> next;
        next.reserve(ker.size());
        for (const auto& combo : ker) {
            SparseVec z;
            for (const auto& [j, c] : combo) add_scaled(z, basis[j], c);
            next.push_back(std::move(z));
        }
        basis = std::move(next);
    }
    return basis;
}

// Central elements commute with all idempotents, hence live in the diagonal
// blocks; the grading lets us solve degree by degree.
template <class A>
std::map<int, std::vector<SparseVec>> center_graded(const A& alg) {
    std::map<int, std::vector<SparseVec>> by_deg;
    for (int i : diagonal_indices(alg)) by_deg[alg.degree(i)].push_back({{i, Rat(1)}});
    std::map<int, std::vector<SparseVec>> out;
    for (auto& [d, basis] : by_deg) {
        auto central = commutant_in(alg, std::move(basis));
        if (!central.empty()) out.emplace(d, std::move(central));
    }
    return out;
}

template <class A>
long center_dim(const A& alg) {
    long dim = 0;
    for (const auto& [d, basis] : center_graded(alg)) dim += static_cast<long>(basis.size());
    return dim;
}

template <class A>
long commutator_quotient_dim(const A& alg) {
    Echelon ech;
    for (long i = 0; i < alg.dim(); ++i)
        for (long j = i + 1; j < alg.dim(); ++j) {
            SparseVec comm = alg.mult_basis(static_cast<int>(i), static_cast<int>(j));
            add_scaled(comm, alg.mult_basis(static_cast<int>(j), static_cast<int>(i)), -1);
            if (!comm.empty()) ech.insert(std::move(comm));
        }
    return alg.dim() - ech.rank();
}

// --- diagram-algebra specific reports ------------------------------------

std::vector<std::vector<long>> dim_table(const KAlgebra& alg);

struct CornerReport {
    bool dims_match = false;
    bool structure_match = false;  // only attempted when check_structure
    bool degrees_match = false;
    bool endo_dims_match = false;  // corner idempotent End spaces have dim 2^n
    long corner_dim = 0;
    long h_dim = 0;
};
CornerReport corner_isomorphism_check(const KAlgebra& K, const HAlgebra& H,
                                      bool check_structure);

// Columns of the dominant-sequence row expected nonzero: +^r -^s +^s -^r.
bool is_palindromic_column(const SignSeq& s);

}  // namespace arcalg
