#include "arcalg/tqft.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace arcalg {

int labeling_weight(Labeling f, int num_circles) {
    return std::popcount(f & ((Labeling{1} << num_circles) - 1));
}

namespace {

// Vertices 0..2m-1: the boundary points shared by a and b ("level 1");
// vertices 2m..4m-1: the points shared by b and c ("level 2").
struct SurgeryState {
    int m;
    const CupDiagram *a, *b, *c;
    std::vector<bool> surgered;         // per arc of b
    std::vector<std::pair<int, int>> verticals;

    std::vector<int> components() const {  // vertex -> representative (min vertex)
        const int N = 4 * m;
        std::vector<int> p(N);
        std::iota(p.begin(), p.end(), 0);
        auto find = [&](int x) {
            while (p[x] != x) x = p[x] = p[p[x]];
            return x;
        };
        auto unite = [&](int x, int y) { p[find(x)] = find(y); };
        for (auto [l, r] : a->arcs) unite(l - 1, r - 1);
        for (auto [l, r] : c->arcs) unite(2 * m + l - 1, 2 * m + r - 1);
        for (size_t k = 0; k < b->arcs.size(); ++k) {
            if (surgered[k]) continue;
            auto [l, r] = b->arcs[k];
            unite(l - 1, r - 1);                      // cap below level 1... joins level-1 pts
            unite(2 * m + l - 1, 2 * m + r - 1);      // cup above, joins level-2 pts
        }
        for (auto [u, v] : verticals) unite(u, v);
        std::vector<int> rep(N);
        for (int v = 0; v < N; ++v) rep[v] = find(v);
        // normalize to min vertex of the class
        std::vector<int> mn(N, N);
        for (int v = 0; v < N; ++v) mn[rep[v]] = std::min(mn[rep[v]], v);
        for (int v = 0; v < N; ++v) rep[v] = mn[rep[v]];
        return rep;
    }
};

}  // namespace

std::vector<Labeling> surgery_multiply(const CupDiagram& c, const CupDiagram& b,
                                       const CupDiagram& a, Labeling g, Labeling f,
                                       std::span<const int> cup_order) {
    if (a.m != b.m || b.m != c.m) throw std::invalid_argument("surgery_multiply: size mismatch");
    const int m = a.m;
    const int nb = static_cast<int>(b.arcs.size());

    std::vector<int> order(cup_order.begin(), cup_order.end());
    if (order.empty()) {
        order.resize(nb);
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != nb) throw std::invalid_argument("bad cup_order");

    SurgeryState st{m, &a, &b, &c, std::vector<bool>(nb, false), {}};

    // Seed per-vertex labels from f (circles of W(b)a, on level-1 vertices)
    // and g (circles of W(c)b, on level-2 vertices).
    auto rep = st.components();
    std::vector<std::uint8_t> init(4 * m, 0);
    GluedDiagram gab = glue(a, b);
    for (int k = 0; k < gab.num_circles(); ++k)
        if (f >> k & 1)
            for (int p : gab.circles[k]) init[rep[p - 1]] = 1;
    GluedDiagram gbc = glue(b, c);
    for (int k = 0; k < gbc.num_circles(); ++k)
        if (g >> k & 1)
            for (int p : gbc.circles[k]) init[rep[p - 1 + 2 * m]] = 1;
    for (int v = 0; v < 4 * m; ++v) init[v] = init[rep[v]];

    std::vector<std::vector<std::uint8_t>> states{init};

    for (int k : order) {
        auto [l, r] = b.arcs[k];
        const int l1 = l - 1, r1 = r - 1, l2 = 2 * m + l - 1, r2 = 2 * m + r - 1;
        rep = st.components();
        const bool is_merge = rep[l1] != rep[l2];

        st.surgered[k] = true;
        st.verticals.emplace_back(l1, l2);
        st.verticals.emplace_back(r1, r2);
        auto rep2 = st.components();

        std::vector<std::vector<std::uint8_t>> next;
        if (is_merge) {
            assert(rep2[l1] == rep2[l2]);
            for (auto& lab : states) {
                int x = lab[l1], y = lab[l2];
                if (x && y) continue;  // X*X = 0
                lab[rep2[l1]] = static_cast<std::uint8_t>(x | y);
                for (int v = 0; v < 4 * m; ++v)
                    if (rep2[v] == rep2[l1]) lab[v] = lab[rep2[l1]];
                next.push_back(std::move(lab));
            }
        } else {
            // a circle splits; planarity forces exactly two pieces
            assert(rep2[l1] != rep2[r1]);
            auto set_comp = [&](std::vector<std::uint8_t>& lab, int root, std::uint8_t val) {
                for (int v = 0; v < 4 * m; ++v)
                    if (rep2[v] == root) lab[v] = val;
            };
            for (auto& lab : states) {
                if (lab[l1]) {  // Delta(X) = X (x) X
                    set_comp(lab, rep2[l1], 1);
                    set_comp(lab, rep2[r1], 1);
                    next.push_back(std::move(lab));
                } else {        // Delta(1) = X (x) 1 + 1 (x) X
                    auto other = lab;
                    set_comp(lab, rep2[l1], 1);
                    set_comp(lab, rep2[r1], 0);
                    next.push_back(std::move(lab));
                    set_comp(other, rep2[l1], 0);
                    set_comp(other, rep2[r1], 1);
                    next.push_back(std::move(other));
                }
            }
        }
        states = std::move(next);
    }

    // Read off labelings of W(c)a: its point p sits at level-1 vertex p-1 for
    // the cups of a and at level-2 vertex for the caps of c; both levels of a
    // surgered pair lie on the same component, so level 1 suffices.
    GluedDiagram gac = glue(a, c);
    std::vector<Labeling> out;
    out.reserve(states.size());
    for (const auto& lab : states) {
        Labeling res = 0;
        for (int k = 0; k < gac.num_circles(); ++k)
            if (lab[gac.circles[k].front() - 1]) res |= Labeling{1} << k;
        out.push_back(res);
    }
    return out;
}

}  // namespace arcalg
