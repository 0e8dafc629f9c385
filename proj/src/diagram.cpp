#include "arcalg/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arcalg {

std::string HalfIndex::str() const { return std::to_string(twice) + "/2"; }

int eta(HalfIndex alpha) {
    // exponent alpha + 1/2 = (twice + 1) / 2
    int e = (alpha.twice + 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
}

SignSeq::SignSeq(std::vector<int8_t> v) : s(std::move(v)) {
    if (s.empty() || s.size() % 2 != 0) throw std::invalid_argument("SignSeq: length must be positive and even");
    int sum = 0;
    for (int8_t x : s) {
        if (x != 1 && x != -1) throw std::invalid_argument("SignSeq: entries must be +-1");
        sum += x;
    }
    if (sum != 0) throw std::invalid_argument("SignSeq: unbalanced");
}

static std::string signs_str(const std::vector<int8_t>& s) {
    std::string out;
    for (int8_t x : s) out.push_back(x > 0 ? '+' : '-');
    return out;
}

static std::vector<int8_t> signs_parse(const std::string& str) {
    std::vector<int8_t> v;
    for (char c : str) {
        if (c == '+') v.push_back(1);
        else if (c == '-') v.push_back(-1);
        else throw std::invalid_argument("sign sequence: bad character");
    }
    return v;
}

std::string SignSeq::str() const { return signs_str(s); }
SignSeq SignSeq::parse(const std::string& str) { return SignSeq(signs_parse(str)); }

bool ExtSeq::in_box() const {
    int nn = n();
    for (int i = 0; i < nn; ++i)
        if (s[i] != -1) return false;
    for (int i = 3 * nn; i < 4 * nn; ++i)
        if (s[i] != 1) return false;
    int sum = 0;
    for (int i = nn; i < 3 * nn; ++i) sum += s[i];
    return sum == 0;
}

std::string ExtSeq::str() const { return signs_str(s); }

ExtSeq ExtSeq::parse(const std::string& str) {
    ExtSeq e{signs_parse(str)};
    if (e.s.empty() || e.s.size() % 4 != 0) throw std::invalid_argument("ExtSeq: length must be a positive multiple of 4");
    return e;
}

bool BoxPartition::fits_upper() const {
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > n - static_cast<int>(i) - 1) return false;
    return true;
}

CupDiagram CupDiagram::from_arcs(int m, std::vector<std::pair<int, int>> arcs) {
    if (static_cast<int>(arcs.size()) != m) throw std::invalid_argument("CupDiagram: need m arcs");
    std::vector<int> seen(2 * m + 1, 0);
    for (auto& [l, r] : arcs) {
        if (l < 1 || r > 2 * m || l >= r) throw std::invalid_argument("CupDiagram: bad arc");
        seen[l]++;
        seen[r]++;
    }
    for (int p = 1; p <= 2 * m; ++p)
        if (seen[p] != 1) throw std::invalid_argument("CupDiagram: not a perfect matching");
    std::sort(arcs.begin(), arcs.end());
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            if (a < c && c < b && b < d) throw std::invalid_argument("CupDiagram: crossing arcs");
        }
    return CupDiagram{m, std::move(arcs)};
}

int CupDiagram::partner(int p) const {
    for (auto& [l, r] : arcs) {
        if (l == p) return r;
        if (r == p) return l;
    }
    throw std::invalid_argument("CupDiagram: point out of range");
}

bool CupDiagram::has_arc(std::pair<int, int> a) const {
    return std::find(arcs.begin(), arcs.end(), a) != arcs.end();
}

std::vector<SignSeq> enumerate_sequences(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_sequences: n must be >= 1");
    std::vector<SignSeq> out;
    std::vector<int8_t> cur(2 * n);
    // lexicographic with - < +
    auto rec = [&](auto&& self, int pos, int minus, int plus) -> void {
        if (pos == 2 * n) {
            out.push_back(SignSeq(cur));
            return;
        }
        if (minus < n) {
            cur[pos] = -1;
            self(self, pos + 1, minus + 1, plus);
        }
        if (plus < n) {
            cur[pos] = 1;
            self(self, pos + 1, minus, plus + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

// phi_lambda(alpha) = - iff alpha = lambda_i - i + 1/2 for some i >= 1;
// position j in 1..2n corresponds to alpha = j - n - 1/2.
SignSeq partition_to_seq(const BoxPartition& p) {
    int n = p.n;
    if (n < 1) throw std::invalid_argument("partition_to_seq: box size must be positive");
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1 || p.parts[i] > n) throw std::invalid_argument("partition_to_seq: part out of box");
        if (i + 1 < p.parts.size() && p.parts[i] < p.parts[i + 1])
            throw std::invalid_argument("partition_to_seq: parts must be weakly decreasing");
    }
    if (static_cast<int>(p.parts.size()) > n) throw std::invalid_argument("partition_to_seq: too many parts");
    std::vector<int8_t> s(2 * n, 1);
    for (int i = 1; i <= 2 * n; ++i) {
        int li = (i <= static_cast<int>(p.parts.size())) ? p.parts[i - 1] : 0;
        int j = li - i + n + 1;  // alpha = lambda_i - i + 1/2  ->  position
        if (j >= 1 && j <= 2 * n) s[j - 1] = -1;
    }
    return SignSeq(s);
}

BoxPartition seq_to_partition(const SignSeq& a) {
    int n = a.n();
    BoxPartition p;
    p.n = n;
    // minus positions, largest alpha first: lambda_i = alpha_i + i - 1/2
    std::vector<int> minus_pos;
    for (int j = 2 * n; j >= 1; --j)
        if (a.s[j - 1] == -1) minus_pos.push_back(j);
    for (size_t i = 0; i < minus_pos.size(); ++i) {
        int li = (minus_pos[i] - n - 1) + static_cast<int>(i) + 1;  // alpha + i - 1/2 with alpha = j-n-1/2
        if (li > 0) p.parts.push_back(li);
    }
    return p;
}

ExtSeq extend(const SignSeq& a) {
    int n = a.n();
    ExtSeq e;
    e.s.assign(n, -1);
    e.s.insert(e.s.end(), a.s.begin(), a.s.end());
    e.s.insert(e.s.end(), n, 1);
    return e;
}

SignSeq restrict_ext(const ExtSeq& e) {
    int n = e.n();
    return SignSeq(std::vector<int8_t>(e.s.begin() + n, e.s.begin() + 3 * n));
}

CupDiagram lambda_pairs(const std::vector<int8_t>& signs) {
    int len = static_cast<int>(signs.size());
    if (len % 2 != 0) throw std::invalid_argument("lambda_pairs: odd length");
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> stack;
    for (int i = 1; i <= len; ++i) {
        if (signs[i - 1] == -1) {
            stack.push_back(i);
        } else {
            if (stack.empty()) throw std::invalid_argument("lambda_pairs: not closable");
            arcs.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw std::invalid_argument("lambda_pairs: not closable");
    return CupDiagram::from_arcs(len / 2, std::move(arcs));
}

CupDiagram lambda_pairs(const ExtSeq& e) { return lambda_pairs(e.s); }
CupDiagram lambda_pairs(const SignSeq& a) { return lambda_pairs(a.s); }

std::optional<std::pair<int, int>> parent(const CupDiagram& d, std::pair<int, int> arc) {
    if (!d.has_arc(arc)) throw std::invalid_argument("parent: arc not in diagram");
    std::optional<std::pair<int, int>> best;
    for (auto& a : d.arcs) {
        if (a.first < arc.first && a.second > arc.second) {
            if (!best || (a.first > best->first)) best = a;
        }
    }
    return best;
}

bool is_cup_sequence(const SignSeq& a) {
    int minus = 0, plus = 0;
    for (int8_t x : a.s) {
        if (x == 1) {
            if (minus <= plus) return false;
            ++plus;
        } else {
            ++minus;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> arrow(const ExtSeq& lam, const ExtSeq& nu) {
    if (lam.s.size() != nu.s.size()) throw std::invalid_argument("arrow: length mismatch");
    std::vector<int> diff;
    for (size_t i = 0; i < lam.s.size(); ++i)
        if (lam.s[i] != nu.s[i]) diff.push_back(static_cast<int>(i) + 1);
    if (diff.size() != 2) return std::nullopt;
    int a = diff[0], b = diff[1];
    if (lam.s[a - 1] != -1 || lam.s[b - 1] != 1) return std::nullopt;
    // (a,b) must be a lambda-pair of lam
    CupDiagram d;
    try {
        d = lambda_pairs(lam);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!d.has_arc({a, b})) return std::nullopt;
    return std::make_pair(a, b);
}

bool adjacent(const ExtSeq& a, const ExtSeq& b) {
    return arrow(a, b).has_value() || arrow(b, a).has_value();
}

std::vector<Diamond> diamonds(int n) {
    if (n < 1) throw std::invalid_argument("diamonds: n must be >= 1");
    // vertex set: in-box sequences plus their out-of-box arrow neighbours
    std::vector<ExtSeq> verts;
    std::set<std::vector<int8_t>> seen;
    size_t in_box_count = 0;
    for (const auto& a : enumerate_sequences(n)) {
        ExtSeq e = extend(a);
        if (seen.insert(e.s).second) verts.push_back(e);
    }
    in_box_count = verts.size();
    for (size_t i = 0; i < in_box_count; ++i) {
        const ExtSeq lam = verts[i];
        int len = 4 * n;
        for (int p = 1; p <= len; ++p)
            for (int q = 1; q <= len; ++q) {
                if (lam.s[p - 1] == -1 && lam.s[q - 1] == 1) {
                    ExtSeq nu = lam;
                    nu.s[p - 1] = 1;
                    nu.s[q - 1] = -1;
                    if (nu.in_box()) continue;
                    if (adjacent(lam, nu) && seen.insert(nu.s).second) verts.push_back(nu);
                }
            }
    }

    int V = static_cast<int>(verts.size());
    std::vector<std::vector<int>> nbr(V);
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (adjacent(verts[i], verts[j])) {
                nbr[i].push_back(j);
                nbr[j].push_back(i);
            }

    std::set<std::array<int, 4>> canon;
    std::vector<Diamond> out;
    for (int a = 0; a < V; ++a)
        for (int c = a + 1; c < V; ++c) {
            // common neighbours of the opposite corners a, c
            std::vector<int> common;
            for (int x : nbr[a])
                if (std::find(nbr[c].begin(), nbr[c].end(), x) != nbr[c].end()) common.push_back(x);
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j) {
                    std::array<int, 4> cyc = {a, common[i], c, common[j]};
                    int in_count = 0;
                    for (int v : cyc)
                        if (static_cast<size_t>(v) < in_box_count) ++in_count;
                    if (in_count < 3) continue;
                    // canonical form under rotation/reflection of the 4-cycle
                    std::array<int, 4> best = cyc;
                    std::array<int, 4> cur = cyc;
                    for (int rfl = 0; rfl < 2; ++rfl) {
                        for (int rot = 0; rot < 4; ++rot) {
                            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
                            if (cur < best) best = cur;
                        }
                        std::reverse(cur.begin(), cur.end());
                    }
                    if (!canon.insert(best).second) continue;
                    Diamond d{{verts[cyc[0]], verts[cyc[1]], verts[cyc[2]], verts[cyc[3]]}, in_count == 4};
                    out.push_back(std::move(d));
                }
        }
    return out;
}

CupDiagram tableau_to_cup(const TwoRowTableau& t) {
    int n = static_cast<int>(t.top.size());
    if (t.bottom.size() != t.top.size() || n == 0) throw std::invalid_argument("tableau: rows must have equal positive length");
    std::vector<int> seen(2 * n + 1, 0);
    for (int row = 0; row < 2; ++row) {
        const auto& r = row == 0 ? t.top : t.bottom;
        for (size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 1 || r[i] > 2 * n) throw std::invalid_argument("tableau: entry out of range");
            seen[r[i]]++;
            if (i + 1 < r.size() && r[i] <= r[i + 1]) throw std::invalid_argument("tableau: rows must decrease");
        }
    }
    for (int v = 1; v <= 2 * n; ++v)
        if (seen[v] != 1) throw std::invalid_argument("tableau: entries must partition 1..2n");
    for (int j = 0; j < n; ++j)
        if (t.top[j] <= t.bottom[j]) throw std::invalid_argument("tableau: columns must decrease top to bottom");
    // bottom entries open, top entries close
    std::vector<int8_t> signs(2 * n, 1);
    for (int v : t.bottom) signs[v - 1] = -1;
    return lambda_pairs(signs);
}

TwoRowTableau cup_to_tableau(const CupDiagram& d) {
    TwoRowTableau t;
    for (auto& [l, r] : d.arcs) {
        t.bottom.push_back(l);
        t.top.push_back(r);
    }
    std::sort(t.bottom.rbegin(), t.bottom.rend());
    std::sort(t.top.rbegin(), t.top.rend());
    return t;
}

std::vector<CupDiagram> all_cup_diagrams(int n) {
    std::vector<CupDiagram> out;
    for (const auto& a : enumerate_sequences(n))
        if (is_cup_sequence(a)) out.push_back(lambda_pairs(a));
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace arcalg
