// Command-line front end for the diagram-algebra library.
//
// Subcommands: enum, render, mult, dims, center, check-relations,
// corner-check, tanisaki.  Exit codes: 0 success, 1 argument error,
// 2 failed mathematical check.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "arcalg/arc_algebra.hpp"
#include "arcalg/presented.hpp"
#include "arcalg/colored_algebra.hpp"
#include "arcalg/diagram.hpp"
#include "arcalg/gluing.hpp"
#include "arcalg/invariants.hpp"
#include "arcalg/tanisaki.hpp"

using nlohmann::json;
using namespace arcalg;

namespace {

constexpr int kDefaultCap = 4;

int check_cap(int n, bool force) {
    if (n < 1) {
        std::cerr << "error: --n must be >= 1\n";
        return 1;
    }
    if (n > kDefaultCap && !force) {
        std::cerr << "error: n > " << kDefaultCap
                  << " is slow; pass --force to override\n";
        return 1;
    }
    return 0;
}

// Sequence tokens: either a sign string like "-++-" or a single-letter
// alias a, b, c, ... into the lexicographic enumeration.
int parse_seq(const KAlgebra& K, const std::string& tok) {
    if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') {
        int idx = tok[0] - 'a';
        if (idx >= static_cast<int>(K.seqs().size()))
            throw std::invalid_argument("sequence alias out of range: " + tok);
        return idx;
    }
    return K.seq_index(SignSeq::parse(tok));
}

std::string seq_alias(int idx) {
    return idx < 26 ? std::string(1, static_cast<char>('a' + idx)) : std::to_string(idx);
}

// Labels are tensor strings like "X(x)1" or "X⊗1": black-circle factors
// first (in circle order), then one "1" per green circle.
std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "⊗") == 0) {
            out.push_back(cur);
            cur.clear();
            i += 3;
        } else if (s[i] == '*' || s[i] == '.') {
            out.push_back(cur);
            cur.clear();
            ++i;
        } else {
            cur += s[i++];
        }
    }
    out.push_back(cur);
    return out;
}

Labeling parse_label(const KAlgebra& K, int top, int bottom, const std::string& s) {
    const GluedDiagram& g = K.glued(top, bottom);
    if (K.block_dim(top, bottom) == 0)
        throw std::invalid_argument("the requested block is zero (red circle)");
    std::vector<int> blacks;
    for (int c = 0; c < g.num_circles(); ++c)
        if (g.colors[c] == Color::Black) blacks.push_back(c);
    auto factors = split_factors(s);
    // A bare "1" means the all-ones labeling regardless of circle count.
    if (factors.size() == 1 && factors[0] == "1") return 0;
    if (static_cast<int>(factors.size()) != g.num_circles())
        throw std::invalid_argument("label has " + std::to_string(factors.size()) +
                                    " factors, block has " +
                                    std::to_string(g.num_circles()) + " circles");
    Labeling f = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] == "X") {
            if (i >= blacks.size())
                throw std::invalid_argument("X placed on a green circle");
            f |= Labeling{1} << i;
        } else if (factors[i] != "1") {
            throw std::invalid_argument("bad tensor factor: " + factors[i]);
        }
    }
    return f;
}

std::string label_str(const KAlgebra& K, int top, int bottom, Labeling f) {
    const GluedDiagram& g = K.glued(top, bottom);
    int nblack = 0;
    for (int c = 0; c < g.num_circles(); ++c)
        if (g.colors[c] == Color::Black) ++nblack;
    std::string out;
    for (int i = 0; i < g.num_circles(); ++i) {
        if (!out.empty()) out += "⊗";
        out += (i < nblack && (f >> i & 1)) ? "X" : "1";
    }
    return out.empty() ? "1" : out;
}

std::string term_str(const KAlgebra& K, int idx) {
    KBasisElt e = K.decode(idx);
    return seq_alias(e.top) + "|" + seq_alias(e.bottom) + "|" +
           label_str(K, e.top, e.bottom, e.f);
}

int cmd_enum(int n, bool as_json) {
    auto seqs = enumerate_sequences(n);
    json arr = json::array();
    for (const auto& s : seqs) {
        BoxPartition p = seq_to_partition(s);
        json item;
        item["seq"] = s.str();
        item["partition"] = p.parts;
        item["cup_closable"] = is_cup_sequence(s);
        arr.push_back(item);
    }
    if (as_json) {
        std::cout << json{{"n", n}, {"count", seqs.size()}, {"sequences", arr}}.dump(2)
                  << "\n";
    } else {
        std::cout << "sequences for n = " << n << " (" << seqs.size() << ")\n";
        for (const auto& item : arr) {
            std::cout << "  " << item["seq"].get<std::string>() << "  partition=(";
            bool first = true;
            for (int x : item["partition"]) {
                if (!first) std::cout << ",";
                std::cout << x;
                first = false;
            }
            std::cout << ")  cup_closable=" << (item["cup_closable"].get<bool>() ? "yes" : "no")
                      << "\n";
        }
    }
    return 0;
}

int cmd_render(int n, const std::string& seq, const std::string& top) {
    KAlgebra K(n);
    int b = parse_seq(K, seq);
    if (top.empty()) {
        std::cout << render(K.ext_cup(b));
        return 0;
    }
    int t = parse_seq(K, top);
    std::cout << render(K.glued(t, b));
    return 0;
}

struct Elt {
    int top, bottom;
    Labeling f;
};

Elt parse_elt(const KAlgebra& K, const std::string& s) {
    auto p1 = s.find('|');
    auto p2 = s.find('|', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("element must be top|bottom|label");
    int top = parse_seq(K, s.substr(0, p1));
    int bottom = parse_seq(K, s.substr(p1 + 1, p2 - p1 - 1));
    Labeling f = parse_label(K, top, bottom, s.substr(p2 + 1));
    return {top, bottom, f};
}

int cmd_mult(int n, const std::string& left, const std::string& right, bool as_json) {
    KAlgebra K(n);
    Elt l = parse_elt(K, left), r = parse_elt(K, right);
    SparseVec prod = K.mult_basis(K.index(l.top, l.bottom, l.f),
                                  K.index(r.top, r.bottom, r.f));
    if (as_json) {
        json terms = json::array();
        for (const auto& [i, c] : prod)
            terms.push_back({{"elt", term_str(K, i)}, {"coeff", rat_to_string(c)}});
        std::cout << json{{"n", n}, {"terms", terms}}.dump(2) << "\n";
        return 0;
    }
    if (prod.empty()) {
        std::cout << "0\n";
        return 0;
    }
    bool first = true;
    for (const auto& [i, c] : prod) {
        if (!first) std::cout << " + ";
        if (c != 1) std::cout << rat_to_string(c) << "*";
        std::cout << term_str(K, i);
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_dims(int n, bool as_json) {
    KAlgebra K(n);
    auto table = dim_table(K);
    if (as_json) {
        json rows = json::array();
        for (const auto& row : table) rows.push_back(row);
        json seqs = json::array();
        for (const auto& s : K.seqs()) seqs.push_back(s.str());
        std::cout << json{{"n", n}, {"sequences", seqs}, {"dims", rows},
                          {"total", K.dim()}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    int w = 2 * n + 2;
    std::cout << std::string(w, ' ');
    for (const auto& s : K.seqs()) std::cout << " " << s.str();
    std::cout << "\n";
    for (size_t i = 0; i < table.size(); ++i) {
        std::cout << K.seqs()[i].str() << "  ";
        for (size_t j = 0; j < table[i].size(); ++j) {
            std::ostringstream cell;
            cell << table[i][j];
            std::string c = cell.str();
            std::cout << " " << std::string(2 * n - c.size() > 0 ? 2 * n - c.size() : 0, ' ')
                      << c;
        }
        std::cout << "\n";
    }
    std::cout << "total dim = " << K.dim() << "\n";
    return 0;
}

template <class A>
int center_report(const A& alg, const char* name, bool as_json) {
    auto graded = center_graded(alg);
    long total = 0;
    for (const auto& [d, basis] : graded) total += static_cast<long>(basis.size());
    if (as_json) {
        json by_deg = json::object();
        for (const auto& [d, basis] : graded)
            by_deg[std::to_string(d)] = basis.size();
        std::cout << json{{"algebra", name}, {"graded", by_deg}, {"total", total}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "center of " << name << "\n  deg  dim\n";
    for (const auto& [d, basis] : graded)
        std::cout << "  " << d << "    " << basis.size() << "\n";
    std::cout << "  total " << total << "\n";
    return 0;
}

int cmd_center(int n, const std::string& which, bool as_json) {
    if (which == "k") return center_report(KAlgebra(n), "colored", as_json);
    if (which == "h") return center_report(HAlgebra(n), "arc", as_json);
    std::cerr << "error: --algebra must be k or h\n";
    return 1;
}

int cmd_check_relations(int n, int threads, bool as_json) {
    KAlgebra K(n);
    RelationReport rep = check_relations(K, threads);
    if (as_json) {
        json fams = json::object();
        for (const auto& [name, fam] : rep.families)
            fams[name] = {{"instances", fam.instances}, {"failures", fam.failures}};
        std::cout << json{{"n", n}, {"families", fams}, {"ok", rep.ok()}}.dump(2) << "\n";
    } else {
        for (const auto& [name, fam] : rep.families) {
            std::cout << "family " << name << ": " << fam.instances << " instances, "
                      << fam.failures.size() << " failures\n";
            for (const auto& f : fam.failures) std::cout << "    " << f << "\n";
        }
        std::cout << (rep.ok() ? "all relations hold" : "RELATION FAILURES") << "\n";
    }
    return rep.ok() ? 0 : 2;
}

int cmd_corner_check(int n, bool as_json) {
    KAlgebra K(n);
    HAlgebra H(n);
    CornerReport rep = corner_isomorphism_check(K, H, n <= 2);
    bool ok = rep.dims_match && rep.degrees_match && rep.endo_dims_match &&
              (n > 2 || rep.structure_match);
    if (as_json) {
        std::cout << json{{"n", n},
                          {"dims_match", rep.dims_match},
                          {"structure_match", rep.structure_match},
                          {"degrees_match", rep.degrees_match},
                          {"endo_dims_match", rep.endo_dims_match},
                          {"corner_dim", rep.corner_dim},
                          {"arc_algebra_dim", rep.h_dim},
                          {"ok", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "corner dim = " << rep.corner_dim
                  << ", arc algebra dim = " << rep.h_dim << "\n"
                  << "dims " << (rep.dims_match ? "match" : "MISMATCH") << ", degrees "
                  << (rep.degrees_match ? "match" : "MISMATCH") << ", endo dims "
                  << (rep.endo_dims_match ? "match" : "MISMATCH") << "\n";
        if (n <= 2)
            std::cout << "structure constants "
                      << (rep.structure_match ? "match" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_tanisaki(const std::string& mu_str, int cutoff, bool as_json) {
    std::vector<int> mu;
    std::stringstream ss(mu_str);
    std::string part;
    while (std::getline(ss, part, ',')) mu.push_back(std::stoi(part));
    if (mu.empty()) {
        std::cerr << "error: --mu must be a comma-separated composition\n";
        return 1;
    }
    IdealBasis ideal = tanisaki_generators(mu);
    QuotientDims q = graded_quotient_dims(ideal, cutoff);
    json gens = json::array();
    for (const auto& g : ideal.gens) {
        json item;
        item["k"] = g.k;
        item["l"] = g.l;
        json sub = json::array();
        for (int v : g.subset) sub.push_back(v + 1);
        item["subset"] = sub;
        gens.push_back(item);
    }
    bool ok = q.total == expected_total(mu);
    if (as_json) {
        std::cout << json{{"mu", ideal.mu},
                          {"generators", gens},
                          {"hilbert", q.hilbert},
                          {"total", q.total},
                          {"top", q.top},
                          {"hilbert_symmetric", q.hilbert_symmetric},
                          {"expected_total", expected_total(mu)},
                          {"ok", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "generators: " << ideal.gens.size() << "\nhilbert:";
        for (long h : q.hilbert) std::cout << " " << h;
        std::cout << "\ntotal = " << q.total << " (expected " << expected_total(mu)
                  << "), top degree = " << q.top << "\n";
        if (!q.hilbert_symmetric)
            std::cout << "note: hilbert vector is not symmetric (soft check)\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cup-diagram algebra toolkit"};
    app.require_subcommand(1);

    bool as_json = false, force = false;
    int threads = 1;
    if (const char* env = std::getenv("ARCALG_THREADS")) threads = std::atoi(env);
    app.add_flag("--json", as_json, "emit JSON instead of ASCII");
    app.add_flag("--force", force, "override the n <= 4 size cap");
    app.add_option("--threads", threads, "worker threads (env: ARCALG_THREADS)");

    int n = 1, cutoff = 100;
    std::string seq, top, left, right, algebra = "k", mu;

    auto* c_enum = app.add_subcommand("enum", "list balanced sign sequences");
    c_enum->add_option("--n", n)->required();

    auto* c_render = app.add_subcommand("render", "draw extended cup or glued diagrams");
    c_render->add_option("--n", n)->required();
    c_render->add_option("--seq", seq, "bottom sequence (sign string or letter alias)")
        ->required();
    c_render->add_option("--top", top, "optional top sequence; glues and colors");

    auto* c_mult = app.add_subcommand("mult", "multiply two basis elements");
    c_mult->add_option("--n", n)->required();
    c_mult->add_option("--left", left, "top|bottom|label")->required();
    c_mult->add_option("--right", right, "top|bottom|label")->required();

    auto* c_dims = app.add_subcommand("dims", "table of hom-space dimensions");
    c_dims->add_option("--n", n)->required();

    auto* c_center = app.add_subcommand("center", "graded center dimensions");
    c_center->add_option("--n", n)->required();
    c_center->add_option("--algebra", algebra, "k (colored) or h (arc)");

    auto* c_rel = app.add_subcommand("check-relations", "verify the presented relations");
    c_rel->add_option("--n", n)->required();

    auto* c_corner = app.add_subcommand("corner-check", "compare the corner with the arc algebra");
    c_corner->add_option("--n", n)->required();

    auto* c_tan = app.add_subcommand("tanisaki", "graded quotient by the symmetric-function ideal");
    c_tan->add_option("--mu", mu, "composition, e.g. 2,2")->required();
    c_tan->add_option("--cutoff", cutoff, "maximum degree scanned");

    // Let --json / --force / --threads appear after the subcommand too.
    for (auto* sub : {c_enum, c_render, c_mult, c_dims, c_center, c_rel, c_corner, c_tan})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(c_tan)) return cmd_tanisaki(mu, cutoff, as_json);
        if (int rc = check_cap(n, force)) return rc;
        if (app.got_subcommand(c_enum)) return cmd_enum(n, as_json);
        if (app.got_subcommand(c_render)) return cmd_render(n, seq, top);
        if (app.got_subcommand(c_mult)) return cmd_mult(n, left, right, as_json);
        if (app.got_subcommand(c_dims)) return cmd_dims(n, as_json);
        if (app.got_subcommand(c_center)) return cmd_center(n, algebra, as_json);
        if (app.got_subcommand(c_rel)) return cmd_check_relations(n, threads, as_json);
        if (app.got_subcommand(c_corner)) return cmd_corner_check(n, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
