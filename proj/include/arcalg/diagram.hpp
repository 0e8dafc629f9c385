#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arcalg {

// Half-integer coordinate alpha in H = Z + 1/2, stored as 2*alpha (odd).
// Positions of a 4n-point extended diagram are 1..4n with alpha = i - 2n - 1/2.
struct HalfIndex {
    int twice;  // 2*alpha, odd

    static HalfIndex from_pos(int pos, int n) { return HalfIndex{2 * (pos - 2 * n) - 1}; }
    int pos(int n) const { return (twice + 1) / 2 + 2 * n; }
    bool operator==(const HalfIndex&) const = default;
    auto operator<=>(const HalfIndex&) const = default;
    std::string str() const;  // e.g. "-3/2"
};

// eta(alpha) = (-1)^(alpha + 1/2)
int eta(HalfIndex alpha);

// Balanced {+,-}-sequence of length 2n; entries +1 / -1.
struct SignSeq {
    std::vector<int8_t> s;

    SignSeq() = default;
    explicit SignSeq(std::vector<int8_t> v);
    int n() const { return static_cast<int>(s.size()) / 2; }
    std::string str() const;                // "-++-"
    static SignSeq parse(const std::string&);
    bool operator==(const SignSeq&) const = default;
    auto operator<=>(const SignSeq&) const = default;
};

// Length-4n sign sequence. Sequences built by extend() satisfy the box
// constraint (n leading minuses, n trailing pluses); diamond vertices may
// violate it, so the constraint is queried, not enforced.
struct ExtSeq {
    std::vector<int8_t> s;

    int n() const { return static_cast<int>(s.size()) / 4; }
    bool in_box() const;
    std::string str() const;
    static ExtSeq parse(const std::string&);
    bool operator==(const ExtSeq&) const = default;
    auto operator<=>(const ExtSeq&) const = default;
};

// Young diagram in an n x n box (weakly decreasing parts, each <= n).
struct BoxPartition {
    std::vector<int> parts;  // nonzero parts only
    int n = 0;

    bool fits_upper() const;  // under the staircase (n-1, n-2, ...)
};

// Crossingless perfect matching on points 1..2m.
struct CupDiagram {
    int m = 0;
    std::vector<std::pair<int, int>> arcs;  // (left,right), sorted by left

    static CupDiagram from_arcs(int m, std::vector<std::pair<int, int>> arcs);
    int partner(int p) const;
    bool has_arc(std::pair<int, int> a) const;
    bool operator==(const CupDiagram&) const = default;
    auto operator<=>(const CupDiagram&) const = default;
};

// Two-row tableau with strictly decreasing rows and columns.
struct TwoRowTableau {
    std::vector<int> top, bottom;
};

std::vector<SignSeq> enumerate_sequences(int n);  // lexicographic, - < +

BoxPartition seq_to_partition(const SignSeq&);
SignSeq partition_to_seq(const BoxPartition&);

ExtSeq extend(const SignSeq&);
SignSeq restrict_ext(const ExtSeq&);  // middle 2n entries

// Bracket matching (- opens, + closes); throws if some point stays unmatched.
CupDiagram lambda_pairs(const std::vector<int8_t>& signs);
CupDiagram lambda_pairs(const ExtSeq&);
CupDiagram lambda_pairs(const SignSeq&);  // requires is_cup_sequence

std::optional<std::pair<int, int>> parent(const CupDiagram&, std::pair<int, int> arc);

bool is_cup_sequence(const SignSeq&);

// The unique lambda-pair (positions) turning lam into nu, if lam -> nu.
std::optional<std::pair<int, int>> arrow(const ExtSeq& lam, const ExtSeq& nu);
bool adjacent(const ExtSeq& a, const ExtSeq& b);  // a -> b or b -> a

struct Diamond {
    std::array<ExtSeq, 4> v;  // v[0] <-> v[1] <-> v[2] <-> v[3] <-> v[0]
    bool in_box;
};
std::vector<Diamond> diamonds(int n);

CupDiagram tableau_to_cup(const TwoRowTableau&);
TwoRowTableau cup_to_tableau(const CupDiagram&);

std::vector<CupDiagram> all_cup_diagrams(int n);  // Cup(n), Catalan(n) many

long long binomial(int n, int k);
long long catalan(int n);

}  // namespace arcalg
