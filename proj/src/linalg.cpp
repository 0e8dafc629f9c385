#include "arcalg/linalg.hpp"

namespace arcalg {

SparseVec Echelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.begin()->first);
        if (it == rows_.end()) break;
        add_scaled(v, it->second, -v.begin()->second);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat lead = v.begin()->second;
    for (auto& [i, c] : v) c /= lead;
    int pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

int rank_of(const std::vector<SparseVec>& vecs) {
    Echelon e;
    for (const auto& v : vecs) e.insert(v);
    return e.rank();
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& cols) {
    // Gaussian elimination with an explicit combination tracker: a column
    // that reduces to zero yields its tracker as a kernel vector.
    std::vector<SparseVec> ker;
    const int k = static_cast<int>(cols.size());
    std::map<int, std::pair<SparseVec, SparseVec>> rows;  // pivot -> (row, comb)
    for (int i = 0; i < k; ++i) {
        SparseVec v = cols[i], comb{{i, Rat(1)}};
        while (!v.empty()) {
            auto it = rows.find(v.begin()->first);
            if (it == rows.end()) break;
            Rat c = -v.begin()->second;
            add_scaled(v, it->second.first, c);
            add_scaled(comb, it->second.second, c);
        }
        if (v.empty()) {
            ker.push_back(std::move(comb));
        } else {
            Rat lead = v.begin()->second;
            for (auto& [j, c] : v) c /= lead;
            for (auto& [j, c] : comb) c /= lead;
            int pivot = v.begin()->first;
            rows.emplace(pivot, std::pair{std::move(v), std::move(comb)});
        }
    }
    return ker;
}

}  // namespace arcalg
