#include "arcalg/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace arcalg {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

void Poly::add_term(Monomial m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    return r += o;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    return r -= o;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, c0] : terms_) r.add_term(m, c0 * c);
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("bad point");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

Poly Poly::zero_out_from(int first) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int i = first; i < nvars_; ++i)
            if (m[i] > 0) {
                keep = false;
                break;
            }
        if (keep) r.add_term(m, c);
    }
    return r;
}

Poly Poly::restricted(int nvars) const {
    Poly r(nvars);
    for (const auto& [m, c] : terms_) {
        for (int i = nvars; i < nvars_; ++i)
            if (m[i] > 0) throw std::invalid_argument("variable in use");
        r.add_term(Monomial(m.begin(), m.begin() + nvars), c);
    }
    return r;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
        int md = std::accumulate(m.begin(), m.end(), 0);
        if (d == -2) d = md;
        else if (d != md) return false;
    }
    return true;
}

Poly elementary_symmetric(int nvars, const std::vector<int>& vars, int l) {
    // coefficient extraction from prod (1 + x_i u)
    std::vector<Poly> e(l + 1, Poly(nvars));
    e[0] = Poly::constant(nvars, 1);
    for (int v : vars)
        for (int j = l; j >= 1; --j) e[j] += e[j - 1] * Poly::var(nvars, v);
    return e[l];
}

int TPoly::deg() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;
}

void TPoly::normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

std::pair<TPoly, TPoly> tpoly_divmod(TPoly num, const TPoly& den) {
    int dd = den.deg();
    if (dd < 0) throw std::invalid_argument("division by zero");
    const Poly& lead = den.coeffs[dd];
    if (!(lead == Poly::constant(lead.nvars(), 1)))
        throw std::invalid_argument("divisor must be monic in t");
    TPoly quot;
    num.normalize();
    while (num.deg() >= dd) {
        int nd = num.deg();
        Poly c = num.coeffs[nd];
        if (static_cast<int>(quot.coeffs.size()) < nd - dd + 1)
            quot.coeffs.resize(nd - dd + 1, Poly(c.nvars()));
        quot.coeffs[nd - dd] += c;
        for (int i = 0; i <= dd; ++i) num.coeffs[nd - dd + i] -= den.coeffs[i] * c;
        num.normalize();
    }
    return {std::move(quot), std::move(num)};
}

}  // namespace arcalg
