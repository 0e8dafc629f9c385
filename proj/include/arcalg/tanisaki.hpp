#pragma once

#include <string>
#include <vector>

#include "arcalg/poly.hpp"

namespace arcalg {

std::vector<int> dual_partition(std::vector<int> mu);

struct TanisakiGenerator {
    int k, l;
    std::vector<int> subset;  // 0-based variable indices, size k
    Poly poly;                // e_l(subset) in N variables
};

struct IdealBasis {
    std::vector<int> mu;       // composition, N = sum
    std::vector<int> mu_dual;  // dual of the sorted composition
    int N;
    std::vector<TanisakiGenerator> gens;
};

IdealBasis tanisaki_generators(const std::vector<int>& mu);

// The f_{k,l} certificate: a polynomial in x_1..x_N, y_1..y_r (r = #mu)
// built as the t^(k-l) remainder coefficient of P(t) / Q(t). When the
// divisor is trivial (d = 0) the remainder is P itself conceptually and
// e_l(x_1..x_k) is returned, flagged by trivial_division.
struct FPoly {
    Poly poly;  // N + r variables: x's then y's
    int k, l;
    bool trivial_division;
};
FPoly f_construction(int k, int l, const std::vector<int>& mu);

struct QuotientDims {
    std::vector<long> hilbert;  // dims of (S/I)_d, d = 0..top
    long total;
    int top;
    bool hilbert_symmetric;
};

// Exact per-degree row reduction of the ideal slices; throws if the
// Hilbert function has not vanished by the cutoff.
QuotientDims graded_quotient_dims(const IdealBasis& ideal, int cutoff);

long expected_total(const std::vector<int>& mu);  // N! / prod(mu_i!)

}  // namespace arcalg
