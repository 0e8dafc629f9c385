#include "arcalg/invariants.hpp"

#include <algorithm>

namespace arcalg {

std::vector<std::vector<long>> dim_table(const KAlgebra& alg) {
    const int m = static_cast<int>(alg.seqs().size());
    std::vector<std::vector<long>> table(m, std::vector<long>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = alg.block_dim(i, j);
    return table;
}

bool is_palindromic_column(const SignSeq& s) {
    const int len = static_cast<int>(s.s.size());
    int r = 0;
    while (r < len && s.s[r] == 1) ++r;
    const int half = len / 2 - r;  // the s in +^r -^s +^s -^r
    if (half < 0) return false;
    for (int i = 0; i < half; ++i)
        if (s.s[r + i] != -1) return false;
    for (int i = 0; i < half; ++i)
        if (s.s[r + half + i] != 1) return false;
    for (int i = 0; i < r; ++i)
        if (s.s[r + 2 * half + i] != -1) return false;
    return true;
}

CornerReport corner_isomorphism_check(const KAlgebra& K, const HAlgebra& H,
                                      bool check_structure) {
    CornerReport rep;
    const int n = K.n();

    // cup sequences and their closures in Cup(n)
    std::vector<int> kidx;   // indices into K.seqs()
    std::vector<int> hofk;   // matching indices into H.cups()
    for (int i = 0; i < static_cast<int>(K.seqs().size()); ++i) {
        const SignSeq& a = K.seqs()[i];
        if (!is_cup_sequence(a)) continue;
        CupDiagram c = lambda_pairs(a);
        auto it = std::find(H.cups().begin(), H.cups().end(), c);
        if (it == H.cups().end()) return rep;  // bijection failure
        kidx.push_back(i);
        hofk.push_back(static_cast<int>(it - H.cups().begin()));
    }
    if (kidx.size() != H.cups().size()) return rep;

    rep.h_dim = H.dim();
    rep.dims_match = true;
    rep.endo_dims_match = true;
    for (size_t ai = 0; ai < kidx.size(); ++ai)
        for (size_t bi = 0; bi < kidx.size(); ++bi) {
            long kd = K.block_dim(kidx[bi], kidx[ai]);
            long hd = 1L << H.glued(static_cast<int>(hofk[bi]), static_cast<int>(hofk[ai]))
                                .num_circles();
            rep.corner_dim += kd;
            if (kd != hd) rep.dims_match = false;
            if (ai == bi && kd != (1L << n)) rep.endo_dims_match = false;
        }
    if (!rep.dims_match) return rep;

    // position maps between K and H basis indices over the corner
    auto to_h = [&](int ki) {
        KBasisElt e = K.decode(ki);
        auto t = std::find(kidx.begin(), kidx.end(), e.top);
        auto b = std::find(kidx.begin(), kidx.end(), e.bottom);
        int ht = hofk[t - kidx.begin()], hb = hofk[b - kidx.begin()];
        // black circles and inner circles are both ordered by minimal point
        return H.index(ht, hb, e.f);
    };

    rep.degrees_match = true;
    std::vector<int> corner;  // K basis indices of the corner
    for (size_t ai = 0; ai < kidx.size(); ++ai)
        for (size_t bi = 0; bi < kidx.size(); ++bi)
            for (Labeling f = 0; f < static_cast<Labeling>(K.block_dim(kidx[bi], kidx[ai]));
                 ++f) {
                int ki = K.index(kidx[bi], kidx[ai], f);
                corner.push_back(ki);
                if (K.degree(ki) != H.degree(to_h(ki))) rep.degrees_match = false;
            }

    if (!check_structure) {
        rep.structure_match = rep.dims_match;  // dimension-level only
        return rep;
    }

    rep.structure_match = true;
    for (int i : corner)
        for (int j : corner) {
            SparseVec kp = K.mult_basis(i, j);
            SparseVec expect;
            for (const auto& [idx, c] : kp) expect[to_h(idx)] = c;
            if (expect != H.mult_basis(to_h(i), to_h(j))) rep.structure_match = false;
        }
    return rep;
}

}  // namespace arcalg
