#include "arcalg/colored_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcalg {

KAlgebra::KAlgebra(int n) : n_(n) {
    seqs_ = enumerate_sequences(n);
    nseq_ = static_cast<int>(seqs_.size());
    ext_.reserve(nseq_);
    for (const auto& s : seqs_) ext_.push_back(lambda_pairs(extend(s)));

    dim_ = 0;
    blocks_.reserve(static_cast<size_t>(nseq_) * nseq_);
    for (int t = 0; t < nseq_; ++t)
        for (int b = 0; b < nseq_; ++b) {
            Block blk;
            blk.g = glue_colored(ext_[b], ext_[t], n_);
            for (int c = 0; c < blk.g.num_circles(); ++c)
                if (blk.g.colors[c] == Color::Black) blk.black_circles.push_back(c);
            blk.offset = static_cast<int>(dim_);
            blk.dim = blk.g.red > 0 ? 0 : 1 << blk.black_circles.size();
            dim_ += blk.dim;
            blocks_.push_back(std::move(blk));
        }
}

int KAlgebra::seq_index(const SignSeq& s) const {
    auto it = std::lower_bound(seqs_.begin(), seqs_.end(), s);
    if (it == seqs_.end() || !(*it == s)) throw std::invalid_argument("unknown sequence");
    return static_cast<int>(it - seqs_.begin());
}

int KAlgebra::index(int top, int bottom, Labeling f) const {
    const Block& blk = block(top, bottom);
    if (blk.dim == 0) throw std::invalid_argument("zero block");
    if (f >= static_cast<Labeling>(blk.dim)) throw std::out_of_range("bad labeling");
    return blk.offset + static_cast<int>(f);
}

KBasisElt KAlgebra::decode(int idx) const {
    int lo = 0, hi = static_cast<int>(blocks_.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (blocks_[mid].offset <= idx) lo = mid;
        else hi = mid - 1;
    }
    // zero blocks share their offset with the next real block
    while (blocks_[lo].dim == 0) ++lo;
    return {lo / nseq_, lo % nseq_, static_cast<Labeling>(idx - blocks_[lo].offset)};
}

int KAlgebra::degree(int idx) const {
    KBasisElt e = decode(idx);
    const Block& blk = block(e.top, e.bottom);
    int x = labeling_weight(e.f, static_cast<int>(blk.black_circles.size()));
    return 2 * x - blk.g.num_circles() + 2 * n_;
}

Labeling KAlgebra::up(int top, int bottom, Labeling black) const {
    const Block& blk = block(top, bottom);
    Labeling full = 0;
    for (size_t k = 0; k < blk.black_circles.size(); ++k)
        if (black >> k & 1) full |= Labeling{1} << blk.black_circles[k];
    return full;
}

std::optional<Labeling> KAlgebra::down(int top, int bottom, Labeling full) const {
    const Block& blk = block(top, bottom);
    Labeling black = 0;
    for (int c = 0; c < blk.g.num_circles(); ++c) {
        if (!(full >> c & 1)) continue;
        if (blk.g.colors[c] != Color::Black) return std::nullopt;  // eps'(X) = 0
        auto it = std::lower_bound(blk.black_circles.begin(), blk.black_circles.end(), c);
        black |= Labeling{1} << (it - blk.black_circles.begin());
    }
    return black;
}

const SparseVec& KAlgebra::mult_basis(int i, int j) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find({i, j});
        if (it != cache_.end()) return it->second;
    }
    SparseVec out;
    KBasisElt x = decode(i), y = decode(j);
    if (x.bottom == y.top && block(x.top, y.bottom).dim > 0) {
        Labeling fx = up(x.top, x.bottom, x.f), fy = up(y.top, y.bottom, y.f);
        auto terms =
            surgery_multiply(ext_[x.top], ext_[x.bottom], ext_[y.bottom], fx, fy);
        for (Labeling t : terms)
            if (auto b = down(x.top, y.bottom, t)) out[index(x.top, y.bottom, *b)] += 1;
        for (auto it2 = out.begin(); it2 != out.end();)
            it2 = it2->second == 0 ? out.erase(it2) : std::next(it2);
    }
    std::lock_guard lock(cache_mutex_);
    return cache_.emplace(std::pair{i, j}, std::move(out)).first->second;
}

SparseVec KAlgebra::mult(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) add_scaled(out, mult_basis(i, j), ci * cj);
    return out;
}

SparseVec KAlgebra::idempotent(int a) const {
    return {{index(a, a, 0), Rat(1)}};
}

SparseVec KAlgebra::unit() const {
    SparseVec u;
    for (int a = 0; a < nseq_; ++a) u[index(a, a, 0)] = 1;
    return u;
}

SparseVec KAlgebra::x_alpha(int top, int bottom, HalfIndex alpha) const {
    const Block& blk = block(top, bottom);
    if (blk.dim == 0) return {};
    int p = alpha.pos(n_);
    if (p < 1 || p > 4 * n_) throw std::out_of_range("alpha outside diagram");
    int c = blk.g.circle_of_point(p);
    if (blk.g.colors[c] != Color::Black) return {};
    auto it = std::lower_bound(blk.black_circles.begin(), blk.black_circles.end(), c);
    Labeling f = Labeling{1} << (it - blk.black_circles.begin());
    return {{index(top, bottom, f), Rat(1)}};
}

SparseVec KAlgebra::star(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x) {
        KBasisElt a = decode(i);
        for (const auto& [j, cj] : y) {
            KBasisElt b = decode(j);
            if (a.top != b.top || a.bottom != b.bottom) continue;
            if (a.f & b.f) continue;  // X*X = 0
            Rat& slot = out[index(a.top, a.bottom, a.f | b.f)];
            slot += ci * cj;
            if (slot == 0) out.erase(index(a.top, a.bottom, a.f | b.f));
        }
    }
    return out;
}

}  // namespace arcalg
