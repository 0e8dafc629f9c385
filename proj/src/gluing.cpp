#include "arcalg/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arcalg {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int GluedDiagram::circle_of_point(int p) const {
    for (int c = 0; c < num_circles(); ++c)
        if (std::binary_search(circles[c].begin(), circles[c].end(), p)) return c;
    throw std::out_of_range("point not in diagram");
}

int GluedDiagram::circle_of_arc(std::pair<int, int> arc) const {
    return circle_of_point(arc.first);
}

GluedDiagram glue(const CupDiagram& bottom, const CupDiagram& top) {
    if (bottom.m != top.m) throw std::invalid_argument("glue: size mismatch");
    const int N = 2 * bottom.m;
    UnionFind uf(N);
    for (auto [l, r] : bottom.arcs) uf.unite(l - 1, r - 1);
    for (auto [l, r] : top.arcs) uf.unite(l - 1, r - 1);

    std::map<int, std::vector<int>> comps;
    for (int p = 0; p < N; ++p) comps[uf.find(p)].push_back(p + 1);

    GluedDiagram g;
    g.bottom = bottom;
    g.top = top;
    for (auto& [root, pts] : comps) g.circles.push_back(std::move(pts));
    std::sort(g.circles.begin(), g.circles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return g;
}

void classify_colors(GluedDiagram& g, int n) {
    if (g.bottom.m != 2 * n) throw std::invalid_argument("classify_colors: need 4n points");
    g.n = n;
    g.colors.clear();
    g.black = g.green = g.red = 0;
    for (const auto& pts : g.circles) {
        int outer_left = 0, outer_right = 0;
        for (int p : pts) {
            if (p <= n) ++outer_left;
            if (p > 3 * n) ++outer_right;
        }
        Color c;
        if (outer_left == 0 && outer_right == 0)
            c = Color::Black;
        else if (outer_left <= 1 && outer_right <= 1)
            c = Color::Green;
        else
            c = Color::Red;
        g.colors.push_back(c);
        if (c == Color::Black) ++g.black;
        else if (c == Color::Green) ++g.green;
        else ++g.red;
    }
}

GluedDiagram glue_colored(const CupDiagram& bottom, const CupDiagram& top, int n) {
    GluedDiagram g = glue(bottom, top);
    classify_colors(g, n);
    return g;
}

namespace {

int nesting_depth(const CupDiagram& d, std::pair<int, int> arc) {
    int depth = 0;
    for (auto [l, r] : d.arcs)
        if (l < arc.first && arc.second < r) ++depth;
    return depth;
}

// Draw the arcs of d into rows of text; row 0 is adjacent to the points.
std::vector<std::string> arc_rows(const CupDiagram& d, bool caps) {
    const int width = 2 * (2 * d.m) - 1;
    int maxd = 0;
    for (auto a : d.arcs) maxd = std::max(maxd, nesting_depth(d, a) + 1);
    std::vector<std::string> rows(std::max(maxd, 0), std::string(width, ' '));
    for (auto a : d.arcs) {
        int row = nesting_depth(d, a);
        int cl = 2 * (a.first - 1), cr = 2 * (a.second - 1);
        rows[row][cl] = caps ? '/' : '\\';
        rows[row][cr] = caps ? '\\' : '/';
        for (int c = cl + 1; c < cr; ++c) rows[row][c] = caps ? '~' : '_';
    }
    return rows;
}

std::string points_line(int m) {
    std::string line;
    for (int p = 1; p <= 2 * m; ++p) {
        if (p > 1) line += ' ';
        line += static_cast<char>('0' + p % 10);
    }
    return line;
}

}  // namespace

std::string render(const CupDiagram& d) {
    std::string out = points_line(d.m) + "\n";
    for (const auto& row : arc_rows(d, false)) out += row + "\n";
    return out;
}

std::string render(const GluedDiagram& g) {
    std::string out;
    auto caps = arc_rows(g.top, true);
    for (auto it = caps.rbegin(); it != caps.rend(); ++it) out += *it + "\n";
    out += points_line(g.bottom.m) + "\n";
    for (const auto& row : arc_rows(g.bottom, false)) out += row + "\n";
    for (int c = 0; c < g.num_circles(); ++c) {
        out += "circle " + std::to_string(c) + ": {";
        for (size_t i = 0; i < g.circles[c].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(g.circles[c][i]);
        }
        out += "}";
        if (!g.colors.empty()) {
            const char* name[] = {"black", "green", "red"};
            out += " ";
            out += name[static_cast<int>(g.colors[c])];
        }
        out += "\n";
    }
    return out;
}

}  // namespace arcalg
