#include "arcalg/arc_algebra.hpp"

#include <stdexcept>

namespace arcalg {

HAlgebra::HAlgebra(int m) : m_(m) {
    cups_ = all_cup_diagrams(m);
    ncups_ = static_cast<int>(cups_.size());
    dim_ = 0;
    blocks_.reserve(static_cast<size_t>(ncups_) * ncups_);
    for (int t = 0; t < ncups_; ++t)
        for (int b = 0; b < ncups_; ++b) {
            Block blk;
            blk.g = glue(cups_[b], cups_[t]);
            blk.offset = static_cast<int>(dim_);
            blk.dim = 1 << blk.g.num_circles();
            dim_ += blk.dim;
            blocks_.push_back(std::move(blk));
        }
}

int HAlgebra::index(int top, int bottom, Labeling f) const {
    const Block& blk = block(top, bottom);
    if (f >= static_cast<Labeling>(blk.dim)) throw std::out_of_range("bad labeling");
    return blk.offset + static_cast<int>(f);
}

HBasisElt HAlgebra::decode(int idx) const {
    // blocks are laid out contiguously in (top, bottom) order
    int lo = 0, hi = static_cast<int>(blocks_.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (blocks_[mid].offset <= idx) lo = mid;
        else hi = mid - 1;
    }
    return {lo / ncups_, lo % ncups_, static_cast<Labeling>(idx - blocks_[lo].offset)};
}

const GluedDiagram& HAlgebra::glued(int top, int bottom) const {
    return block(top, bottom).g;
}

int HAlgebra::degree(int idx) const {
    HBasisElt e = decode(idx);
    int ncirc = block(e.top, e.bottom).g.num_circles();
    int x = labeling_weight(e.f, ncirc);
    return x - (ncirc - x) + m_;
}

const SparseVec& HAlgebra::mult_basis(int i, int j) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find({i, j});
        if (it != cache_.end()) return it->second;
    }
    SparseVec out;
    HBasisElt x = decode(i), y = decode(j);
    if (x.bottom == y.top) {
        auto terms = surgery_multiply(cups_[x.top], cups_[x.bottom], cups_[y.bottom], x.f, y.f);
        for (Labeling t : terms) out[index(x.top, y.bottom, t)] += 1;
        for (auto it2 = out.begin(); it2 != out.end();)
            it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
    }
    std::lock_guard lock(cache_mutex_);
    return cache_.emplace(std::pair{i, j}, std::move(out)).first->second;
}

SparseVec HAlgebra::mult(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) add_scaled(out, mult_basis(i, j), ci * cj);
    return out;
}

SparseVec HAlgebra::idempotent(int a) const {
    return {{index(a, a, 0), Rat(1)}};
}

SparseVec HAlgebra::unit() const {
    SparseVec u;
    for (int a = 0; a < ncups_; ++a) u[index(a, a, 0)] = 1;
    return u;
}

}  // namespace arcalg
