#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace arcalg {

using Rat = mpq_class;

// Sparse vector over an externally defined basis, index -> coefficient.
// Invariant: no zero coefficients stored.
using SparseVec = std::map<int, Rat>;

inline void add_scaled(SparseVec& dst, const SparseVec& src, const Rat& c) {
    if (c == 0) return;
    for (const auto& [i, v] : src) {
        Rat& slot = dst[i];
        slot += c * v;
        if (slot == 0) dst.erase(i);
    }
}

inline SparseVec scaled(const SparseVec& v, const Rat& c) {
    SparseVec out;
    add_scaled(out, v, c);
    return out;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace arcalg
