#include "arcalg/tanisaki.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "arcalg/linalg.hpp"

namespace arcalg {

std::vector<int> dual_partition(std::vector<int> mu) {
    std::sort(mu.begin(), mu.end(), std::greater<>());
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    std::vector<int> dual;
    for (int j = 1; !mu.empty() && j <= mu.front(); ++j)
        dual.push_back(static_cast<int>(
            std::count_if(mu.begin(), mu.end(), [j](int part) { return part >= j; })));
    return dual;
}

namespace {

void k_subsets(int n, int k, std::vector<int>& cur, int next,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int i = next; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        k_subsets(n, k, cur, i + 1, emit);
        cur.pop_back();
    }
}

// d = mu'_{N-k+1} + ... + mu'_{r'}
int division_degree(const std::vector<int>& mu_dual, int N, int k) {
    int d = 0;
    for (int j = N - k + 1; j <= static_cast<int>(mu_dual.size()); ++j)
        if (j >= 1) d += mu_dual[j - 1];
    return d;
}

}  // namespace

IdealBasis tanisaki_generators(const std::vector<int>& mu) {
    for (int part : mu)
        if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    IdealBasis ideal;
    ideal.mu = mu;
    ideal.mu_dual = dual_partition(mu);
    ideal.N = 0;
    for (int part : mu) ideal.N += part;
    for (int k = 1; k <= ideal.N; ++k) {
        int bound = division_degree(ideal.mu_dual, ideal.N, k);
        for (int l = std::max(1, k - bound + 1); l <= k; ++l) {
            std::vector<int> cur;
            k_subsets(ideal.N, k, cur, 0, [&](const std::vector<int>& subset) {
                ideal.gens.push_back(
                    {k, l, subset, elementary_symmetric(ideal.N, subset, l)});
            });
        }
    }
    return ideal;
}

FPoly f_construction(int k, int l, const std::vector<int>& mu) {
    int N = 0;
    for (int part : mu) N += part;
    const int r = static_cast<int>(mu.size());
    const int nv = N + r;  // x_1..x_N then y_1..y_r
    int bound = division_degree(dual_partition(mu), N, k);
    if (l < 1 || l > k || l <= k - bound)
        throw std::invalid_argument("(k,l) outside the allowed range");

    int d = 0;
    std::vector<int> m(r);
    for (int i = 0; i < r; ++i) {
        m[i] = std::max(mu[i] - (N - k), 0);
        d += m[i];
    }

    if (d == 0) {
        std::vector<int> xs(k);
        for (int i = 0; i < k; ++i) xs[i] = i;
        return {elementary_symmetric(nv, xs, l), k, l, true};
    }

    TPoly P{{Poly::constant(nv, 1)}};
    for (int i = 0; i < k; ++i) {
        // multiply by (t + x_i)
        TPoly next;
        next.coeffs.assign(P.coeffs.size() + 1, Poly(nv));
        for (size_t j = 0; j < P.coeffs.size(); ++j) {
            next.coeffs[j + 1] += P.coeffs[j];
            next.coeffs[j] += P.coeffs[j] * Poly::var(nv, i);
        }
        P = std::move(next);
    }
    TPoly Q{{Poly::constant(nv, 1)}};
    for (int i = 0; i < r; ++i)
        for (int e = 0; e < m[i]; ++e) {
            TPoly next;
            next.coeffs.assign(Q.coeffs.size() + 1, Poly(nv));
            for (size_t j = 0; j < Q.coeffs.size(); ++j) {
                next.coeffs[j + 1] += Q.coeffs[j];
                next.coeffs[j] += Q.coeffs[j] * Poly::var(nv, N + i);
            }
            Q = std::move(next);
        }

    auto [quot, rem] = tpoly_divmod(std::move(P), Q);
    Poly f(nv);
    if (k - l < static_cast<int>(rem.coeffs.size())) f = rem.coeffs[k - l];
    return {std::move(f), k, l, false};
}

namespace {

void monomials_of_degree(int nvars, int d, std::vector<int>& cur, int pos,
                         std::vector<Poly::Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[pos] = e;
        monomials_of_degree(nvars, d - e, cur, pos + 1, out);
    }
}

}  // namespace

QuotientDims graded_quotient_dims(const IdealBasis& ideal, int cutoff) {
    QuotientDims out;
    out.total = 0;
    for (int d = 0;; ++d) {
        if (d > cutoff) throw std::runtime_error("nonzero tail beyond cutoff");
        std::vector<Poly::Monomial> mons;
        std::vector<int> cur(ideal.N);
        monomials_of_degree(ideal.N, d, cur, 0, mons);
        std::map<Poly::Monomial, int> mon_index;
        for (const auto& mono : mons) mon_index.emplace(mono, static_cast<int>(mon_index.size()));

        Echelon ech;
        for (const auto& gen : ideal.gens) {
            if (gen.l > d) continue;
            std::vector<Poly::Monomial> cof;
            std::vector<int> cur2(ideal.N);
            monomials_of_degree(ideal.N, d - gen.l, cur2, 0, cof);
            for (const auto& cmono : cof) {
                SparseVec row;
                for (const auto& [gm, coeff] : gen.poly.terms()) {
                    Poly::Monomial prod(ideal.N);
                    for (int i = 0; i < ideal.N; ++i) prod[i] = gm[i] + cmono[i];
                    row[mon_index.at(prod)] += coeff;
                }
                for (auto it = row.begin(); it != row.end();)
                    it = it->second == 0 ? row.erase(it) : std::next(it);
                ech.insert(std::move(row));
            }
        }
        long dim = static_cast<long>(mons.size()) - ech.rank();
        if (dim == 0) break;
        out.hilbert.push_back(dim);
        out.total += dim;
    }
    out.top = static_cast<int>(out.hilbert.size()) - 1;
    out.hilbert_symmetric = true;
    for (size_t i = 0; i < out.hilbert.size(); ++i)
        if (out.hilbert[i] != out.hilbert[out.hilbert.size() - 1 - i])
            out.hilbert_symmetric = false;
    return out;
}

long expected_total(const std::vector<int>& mu) {
    int N = 0;
    for (int part : mu) N += part;
    long total = 1;
    for (int i = 2; i <= N; ++i) total *= i;
    for (int part : mu)
        for (int i = 2; i <= part; ++i) total /= i;
    return total;
}

}  // namespace arcalg
