#pragma once

#include <map>
#include <vector>

#include "arcalg/rational.hpp"

namespace arcalg {

// Multivariate polynomial over Q with a fixed number of variables.
class Poly {
public:
    using Monomial = std::vector<int>;  // exponent vector

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rat& c);
    static Poly var(int nvars, int i);  // x_i, 0-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    void add_term(Monomial m, const Rat& c);
    Rat eval(const std::vector<Rat>& point) const;
    // Substitute zero for all variables with index >= first.
    Poly zero_out_from(int first) const;
    // Drop trailing variables (all terms must not use them).
    Poly restricted(int nvars) const;
    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rat> terms_;
};

// l-th elementary symmetric polynomial in the given variables (0-based).
Poly elementary_symmetric(int nvars, const std::vector<int>& vars, int l);

// Univariate polynomial in t with Poly coefficients, coeffs[i] * t^i.
struct TPoly {
    std::vector<Poly> coeffs;

    int deg() const;
    void normalize();
};

// Long division by a monic (in t) divisor: returns {quotient, remainder}.
std::pair<TPoly, TPoly> tpoly_divmod(TPoly num, const TPoly& den);

}  // namespace arcalg
