#pragma once

#include <map>
#include <string>
#include <vector>

#include "arcalg/colored_algebra.hpp"

namespace arcalg {

// c_0 = 1, c_k = 1/2 ((-1)^k/(k+1) - sum_{l+m=k, 0<l,m<k} c_l c_m)
std::vector<Rat> ck_table(int K);

struct ArrowInst {
    int from, to;              // sequence indices, from -> to
    std::pair<int, int> pair;  // moved pair, positions 1..4n
};

// Images of the presented generators inside the diagram algebra.
class Evaluator {
public:
    explicit Evaluator(const KAlgebra& K) : K_(&K) {}
    const KAlgebra& alg() const { return *K_; }

    SparseVec e(int a) const { return K_->idempotent(a); }
    // t at the point `pos` (1..4n) of the extended diagram of a
    SparseVec t(int a, int pos) const;
    // generator p(x,y), an element of the (x,y) block; requires x <-> y
    SparseVec p(int x, int y) const;
    // mu(x,y) := e_x + p(x,y) p(y,x)  (its defining relation)
    SparseVec mu(int x, int y) const;
    // e + X_alpha + X_alpha' + X_alpha * X_alpha', for from -> to only
    SparseVec mu_closed_form(int from, int to) const;

    SparseVec p_tilde(int x, int y) const;  // sum_k c_k (pq)^k p
    SparseVec ln_unipotent(const SparseVec& u, int a) const;
    SparseVec unipotent_power(const SparseVec& u, int a, int exp) const;

    std::vector<ArrowInst> arrows() const;  // all in-box arrows
    bool homogeneous_of_degree(const SparseVec& v, int deg) const;

private:
    const KAlgebra* K_;
};

struct RelationReport {
    struct Family {
        long instances = 0;
        std::vector<std::string> failures;
    };
    std::map<std::string, Family> families;
    bool ok() const;
    long total_instances() const;
    long total_failures() const;
};

RelationReport check_relations(const KAlgebra& K, int threads = 1);

std::vector<std::vector<int>> ext_quiver(const KAlgebra& K);

struct RegradeReport {
    bool degrees_ok = false;        // images homogeneous of degree 0,2,1,2
    bool ptilde_product_ok = false; // p~ q~ = ln mu on every edge
    std::vector<std::string> failures;
};
RegradeReport regraded_check(const KAlgebra& K);

bool generation_check(const KAlgebra& K);

}  // namespace arcalg
