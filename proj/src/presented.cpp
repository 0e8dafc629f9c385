#include "arcalg/presented.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

#include "arcalg/linalg.hpp"

namespace arcalg {

namespace {
constexpr int kNilpotencyBound = 24;
}

std::vector<Rat> ck_table(int K) {
    std::vector<Rat> c(K + 1);
    c[0] = 1;
    for (int k = 1; k <= K; ++k) {
        Rat s = Rat(k % 2 ? -1 : 1) / (k + 1);
        for (int l = 1; l < k; ++l) s -= c[l] * c[k - l];
        c[k] = s / 2;
    }
    return c;
}

SparseVec Evaluator::t(int a, int pos) const {
    const int n = K_->n();
    const CupDiagram& cup = K_->ext_cup(a);
    int q = cup.partner(pos);
    SparseVec out = e(a);
    if (pos < q) {  // pos = alpha, q = beta
        add_scaled(out, K_->x_alpha(a, a, HalfIndex::from_pos(pos, n)),
                   eta(HalfIndex::from_pos(q, n)));
    } else {  // q = alpha, pos = beta
        add_scaled(out, K_->x_alpha(a, a, HalfIndex::from_pos(q, n)),
                   -eta(HalfIndex::from_pos(pos, n)));
    }
    return out;
}

SparseVec Evaluator::p(int x, int y) const {
    const int n = K_->n();
    if (K_->block_dim(x, y) == 0) throw std::invalid_argument("p on a zero block");
    SparseVec out{{K_->index(x, y, 0), Rat(1)}};
    ExtSeq ex = extend(K_->seqs()[x]), ey = extend(K_->seqs()[y]);
    if (auto mv = arrow(ey, ex)) {  // y -> x: 1 + 1/2 X_alpha
        add_scaled(out, K_->x_alpha(x, y, HalfIndex::from_pos(mv->first, n)), Rat(1, 2));
    } else if (auto fw = arrow(ex, ey)) {  // x -> y: 1 + 1/2 X_alpha'
        CupDiagram cup = K_->ext_cup(x);
        auto par = parent(cup, *fw);
        if (!par) throw std::logic_error("moved pair without parent");
        add_scaled(out, K_->x_alpha(x, y, HalfIndex::from_pos(par->first, n)), Rat(1, 2));
    } else {
        throw std::invalid_argument("p requires adjacent sequences");
    }
    return out;
}

SparseVec Evaluator::mu(int x, int y) const {
    SparseVec out = e(x);
    add_scaled(out, K_->mult(p(x, y), p(y, x)), 1);
    return out;
}

SparseVec Evaluator::mu_closed_form(int from, int to) const {
    const int n = K_->n();
    auto mv = arrow(extend(K_->seqs()[from]), extend(K_->seqs()[to]));
    if (!mv) throw std::invalid_argument("mu_closed_form requires from -> to");
    CupDiagram cup = K_->ext_cup(from);
    auto par = parent(cup, *mv);
    if (!par) throw std::logic_error("moved pair without parent");
    SparseVec xa = K_->x_alpha(from, from, HalfIndex::from_pos(mv->first, n));
    SparseVec xap = K_->x_alpha(from, from, HalfIndex::from_pos(par->first, n));
    SparseVec out = e(from);
    add_scaled(out, xa, 1);
    add_scaled(out, xap, 1);
    add_scaled(out, K_->star(xa, xap), 1);
    return out;
}

SparseVec Evaluator::p_tilde(int x, int y) const {
    SparseVec pp = p(x, y), qq = p(y, x);
    SparseVec loop = K_->mult(pp, qq);  // in the x block
    auto c = ck_table(kNilpotencyBound);
    SparseVec out, term = pp;
    for (int k = 0; k <= kNilpotencyBound; ++k) {
        if (term.empty()) return out;
        add_scaled(out, term, c[k]);
        term = K_->mult(loop, term);
    }
    throw std::runtime_error("p_tilde series did not terminate");
}

SparseVec Evaluator::ln_unipotent(const SparseVec& u, int a) const {
    SparseVec nil = u;
    add_scaled(nil, e(a), -1);
    SparseVec out, power = nil;
    for (int k = 1; k <= kNilpotencyBound; ++k) {
        if (power.empty()) return out;
        add_scaled(out, power, Rat(k % 2 ? 1 : -1) / k);
        power = K_->mult(power, nil);
    }
    throw std::runtime_error("ln series did not terminate");
}

SparseVec Evaluator::unipotent_power(const SparseVec& u, int a, int exp) const {
    SparseVec base = u;
    if (exp < 0) {
        // geometric series for (e + N)^-1
        SparseVec nil = u;
        add_scaled(nil, e(a), -1);
        SparseVec inv = e(a), power = nil;
        for (int k = 1; k <= kNilpotencyBound && !power.empty(); ++k) {
            add_scaled(inv, power, k % 2 ? -1 : 1);
            power = K_->mult(power, nil);
        }
        base = std::move(inv);
        exp = -exp;
    }
    SparseVec out = e(a);
    for (int i = 0; i < exp; ++i) out = K_->mult(out, base);
    return out;
}

std::vector<ArrowInst> Evaluator::arrows() const {
    std::vector<ArrowInst> out;
    const auto& seqs = K_->seqs();
    for (int i = 0; i < static_cast<int>(seqs.size()); ++i)
        for (int j = 0; j < static_cast<int>(seqs.size()); ++j)
            if (auto mv = arrow(extend(seqs[i]), extend(seqs[j])))
                out.push_back({i, j, *mv});
    return out;
}

bool Evaluator::homogeneous_of_degree(const SparseVec& v, int deg) const {
    for (const auto& [i, c] : v)
        if (K_->degree(i) != deg) return false;
    return true;
}

bool RelationReport::ok() const {
    for (const auto& [name, fam] : families)
        if (!fam.failures.empty()) return false;
    return true;
}

long RelationReport::total_instances() const {
    long t = 0;
    for (const auto& [name, fam] : families) t += fam.instances;
    return t;
}

long RelationReport::total_failures() const {
    long t = 0;
    for (const auto& [name, fam] : families) t += static_cast<long>(fam.failures.size());
    return t;
}

namespace {

void record(RelationReport::Family& fam, bool passed, const std::string& what) {
    ++fam.instances;
    if (!passed) fam.failures.push_back(what);
}

}  // namespace

RelationReport check_relations(const KAlgebra& K, int threads) {
    Evaluator ev(K);
    RelationReport rep;
    const int ns = static_cast<int>(K.seqs().size());
    const int len = 4 * K.n();
    auto name = [&](int a) { return K.seqs()[a].str(); };

    // (i): sum of idempotents is the unit
    {
        auto& fam = rep.families["i"];
        SparseVec s;
        for (int a = 0; a < ns; ++a) add_scaled(s, ev.e(a), 1);
        bool passed = s == K.unit();
        if (passed) {
            SparseVec probe;
            for (long i = 0; i < K.dim(); ++i) {
                SparseVec v{{static_cast<int>(i), Rat(1)}};
                if (K.mult(s, v) != v || K.mult(v, s) != v) passed = false;
            }
        }
        record(fam, passed, "sum of idempotents is not the identity");
    }

    // (ii): orthogonal idempotents
    {
        auto& fam = rep.families["ii"];
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ns; ++b) {
                SparseVec prod = K.mult(ev.e(a), ev.e(b));
                bool passed = (a == b) ? prod == ev.e(a) : prod.empty();
                record(fam, passed, "e(" + name(a) + ") e(" + name(b) + ")");
            }
    }

    // (iii): mu(x,y) = 1 + p(x,y) p(y,x); the closed form must agree
    {
        auto& fam = rep.families["iii"];
        for (const auto& ar : ev.arrows()) {
            bool passed = ev.mu(ar.from, ar.to) == ev.mu_closed_form(ar.from, ar.to);
            record(fam, passed, "mu(" + name(ar.from) + "," + name(ar.to) + ")");
        }
    }

    // (iv): t p = p t, fanned out over the t position when threads > 1
    {
        auto& fam = rep.families["iv"];
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < ns; ++x)
            for (int y = 0; y < ns; ++y)
                if (adjacent(extend(K.seqs()[x]), extend(K.seqs()[y]))) edges.emplace_back(x, y);
        std::vector<RelationReport::Family> parts(std::max(threads, 1));
        auto work = [&](int tid) {
            for (int pos = 1 + tid; pos <= len; pos += static_cast<int>(parts.size()))
                for (auto [x, y] : edges) {
                    SparseVec lhs = K.mult(ev.t(x, pos), ev.p(x, y));
                    SparseVec rhs = K.mult(ev.p(x, y), ev.t(y, pos));
                    std::ostringstream what;
                    what << "t(pos " << pos << ") with p(" << name(x) << "," << name(y) << ")";
                    record(parts[tid], lhs == rhs, what.str());
                }
        };
        if (parts.size() == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (size_t i = 0; i < parts.size(); ++i) pool.emplace_back(work, static_cast<int>(i));
            for (auto& th : pool) th.join();
        }
        for (auto& part : parts) {
            fam.instances += part.instances;
            for (auto& f : part.failures) fam.failures.push_back(std::move(f));
        }
    }

    // (v): t's over distinct idempotents annihilate each other
    {
        auto& fam = rep.families["v"];
        for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ns; ++b) {
                if (a == b) continue;
                bool passed = true;
                for (int pos1 = 1; pos1 <= len && passed; ++pos1)
                    for (int pos2 = 1; pos2 <= len && passed; ++pos2)
                        if (!K.mult(ev.t(a, pos1), ev.t(b, pos2)).empty()) passed = false;
                record(fam, passed, "t(" + name(a) + ") t(" + name(b) + ")");
            }
    }

    // (vi): t's commute
    {
        auto& fam = rep.families["vi"];
        for (int a = 0; a < ns; ++a)
            for (int pos1 = 1; pos1 <= len; ++pos1)
                for (int pos2 = pos1 + 1; pos2 <= len; ++pos2) {
                    bool passed = K.mult(ev.t(a, pos1), ev.t(a, pos2)) ==
                                  K.mult(ev.t(a, pos2), ev.t(a, pos1));
                    std::ostringstream what;
                    what << "commute t at " << pos1 << "," << pos2 << " over " << name(a);
                    record(fam, passed, what.str());
                }
    }

    // (vii): paired t's multiply to the idempotent
    {
        auto& fam = rep.families["vii"];
        for (int a = 0; a < ns; ++a)
            for (auto [l, r] : K.ext_cup(a).arcs) {
                bool passed = K.mult(ev.t(a, l), ev.t(a, r)) == ev.e(a);
                std::ostringstream what;
                what << "t-pair (" << l << "," << r << ") over " << name(a);
                record(fam, passed, what.str());
            }
    }

    // (viii): t at outer points is the idempotent
    {
        auto& fam = rep.families["viii"];
        for (int a = 0; a < ns; ++a)
            for (int pos = 1; pos <= len; ++pos) {
                if (pos > K.n() && pos <= 3 * K.n()) continue;
                bool passed = ev.t(a, pos) == ev.e(a);
                std::ostringstream what;
                what << "outer t at " << pos << " over " << name(a);
                record(fam, passed, what.str());
            }
    }

    // (ix): mu^eta(beta) = t_alpha t_beta'
    {
        auto& fam = rep.families["ix"];
        for (const auto& ar : ev.arrows()) {
            const int n = K.n();
            CupDiagram cup = K.ext_cup(ar.from);
            auto par = parent(cup, ar.pair);
            if (!par) throw std::logic_error("arrow pair without parent");
            int et = eta(HalfIndex::from_pos(ar.pair.second, n));
            {
                SparseVec lhs = ev.unipotent_power(ev.mu(ar.to, ar.from), ar.to, et);
                SparseVec rhs =
                    K.mult(ev.t(ar.to, ar.pair.first), ev.t(ar.to, par->second));
                record(fam, lhs == rhs,
                       "mu(" + name(ar.to) + "," + name(ar.from) + ")^eta");
            }
            {
                SparseVec lhs = ev.unipotent_power(ev.mu(ar.from, ar.to), ar.from, et);
                SparseVec rhs =
                    K.mult(ev.t(ar.from, ar.pair.first), ev.t(ar.from, par->second));
                record(fam, lhs == rhs,
                       "mu(" + name(ar.from) + "," + name(ar.to) + ")^eta");
            }
        }
    }

    // (x): diamond relations, including the vanishing for diamonds leaving
    // the admissible set
    {
        auto& fam_in = rep.families["x-diamond"];
        auto& fam_zero = rep.families["x-zero"];
        auto seq_index = [&](const ExtSeq& s) -> int {
            if (!s.in_box()) return -1;
            return K.seq_index(restrict_ext(s));
        };
        for (const auto& dia : diamonds(K.n())) {
            int v[4];
            int out_count = 0, out_pos = -1;
            for (int i = 0; i < 4; ++i) {
                v[i] = seq_index(dia.v[i]);
                if (v[i] < 0) {
                    ++out_count;
                    out_pos = i;
                }
            }
            if (out_count == 0) {
                // all rotations/reflections of p(v2,v1)p(v1,v0) = p(v2,v3)p(v3,v0)
                for (int r = 0; r < 4; ++r) {
                    int a = v[r], b = v[(r + 1) % 4], c = v[(r + 2) % 4], d = v[(r + 3) % 4];
                    bool passed = K.mult(ev.p(c, b), ev.p(b, a)) == K.mult(ev.p(c, d), ev.p(d, a));
                    std::ostringstream what;
                    what << "diamond " << name(a) << " rotation " << r;
                    record(fam_in, passed, what.str());
                }
            } else if (out_count == 1) {
                // the in-box path through the vertex opposite the missing one
                int u = v[(out_pos + 2) % 4];
                int x = v[(out_pos + 1) % 4], y = v[(out_pos + 3) % 4];
                bool z1 = K.mult(ev.p(x, u), ev.p(u, y)).empty();
                bool z2 = K.mult(ev.p(y, u), ev.p(u, x)).empty();
                record(fam_zero, z1, "zero diamond via " + name(u) + " (forward)");
                record(fam_zero, z2, "zero diamond via " + name(u) + " (backward)");
            }
        }
    }

    return rep;
}

std::vector<std::vector<int>> ext_quiver(const KAlgebra& K) {
    const int ns = static_cast<int>(K.seqs().size());
    std::vector<std::vector<int>> adj(ns, std::vector<int>(ns, 0));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j)
            if (i != j && adjacent(extend(K.seqs()[i]), extend(K.seqs()[j]))) adj[i][j] = 1;
    return adj;
}

RegradeReport regraded_check(const KAlgebra& K) {
    Evaluator ev(K);
    RegradeReport rep;
    rep.degrees_ok = true;
    rep.ptilde_product_ok = true;
    const int ns = static_cast<int>(K.seqs().size());
    auto name = [&](int a) { return K.seqs()[a].str(); };

    for (int a = 0; a < ns; ++a) {
        if (!ev.homogeneous_of_degree(ev.e(a), 0)) {
            rep.degrees_ok = false;
            rep.failures.push_back("e(" + name(a) + ") not of degree 0");
        }
        for (int pos = 1; pos <= 4 * K.n(); ++pos) {
            SparseVec lnt = ev.ln_unipotent(ev.t(a, pos), a);
            if (!ev.homogeneous_of_degree(lnt, 2)) {
                rep.degrees_ok = false;
                rep.failures.push_back("ln t at " + std::to_string(pos) + " over " + name(a));
            }
        }
    }
    for (const auto& ar : ev.arrows()) {
        for (auto [x, y] : {std::pair{ar.from, ar.to}, std::pair{ar.to, ar.from}}) {
            SparseVec pt = ev.p_tilde(x, y);
            if (!ev.homogeneous_of_degree(pt, 1)) {
                rep.degrees_ok = false;
                rep.failures.push_back("p~(" + name(x) + "," + name(y) + ") not of degree 1");
            }
            SparseVec lnmu = ev.ln_unipotent(ev.mu(x, y), x);
            if (!ev.homogeneous_of_degree(lnmu, 2)) {
                rep.degrees_ok = false;
                rep.failures.push_back("ln mu(" + name(x) + "," + name(y) + ") not of degree 2");
            }
            if (K.mult(pt, ev.p_tilde(y, x)) != lnmu) {
                rep.ptilde_product_ok = false;
                rep.failures.push_back("p~ q~ != ln mu at (" + name(x) + "," + name(y) + ")");
            }
        }
    }
    return rep;
}

bool generation_check(const KAlgebra& K) {
    Evaluator ev(K);
    const int ns = static_cast<int>(K.seqs().size());
    std::vector<SparseVec> gens;
    for (int a = 0; a < ns; ++a) {
        gens.push_back(ev.e(a));
        for (int pos = 1; pos <= 4 * K.n(); ++pos) gens.push_back(ev.t(a, pos));
    }
    for (int x = 0; x < ns; ++x)
        for (int y = 0; y < ns; ++y)
            if (adjacent(extend(K.seqs()[x]), extend(K.seqs()[y]))) gens.push_back(ev.p(x, y));

    Echelon span;
    std::vector<SparseVec> basis;
    for (const auto& g : gens) {
        SparseVec red = span.reduce(g);
        if (span.insert(red)) basis.push_back(std::move(red));
    }
    for (size_t next = 0; next < basis.size(); ++next) {
        for (const auto& g : gens) {
            SparseVec red = span.reduce(K.mult(g, basis[next]));
            if (span.insert(red)) basis.push_back(std::move(red));
        }
    }
    return span.rank() == K.dim();
}

}  // namespace arcalg
