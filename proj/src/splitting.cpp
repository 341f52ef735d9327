#include "bettisplit/splitting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bettisplit/hochster.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/matrix.hpp"

namespace bettisplit {

namespace {

void validate_decomposition(const SimplicialComplex& c,
                            const StandardDecomposition& d) {
    if (d.part1.empty() || d.part2.empty())
        throw std::invalid_argument("decomposition parts must be nonempty");
    std::vector<face_t> merged;
    merged.reserve(d.part1.size() + d.part2.size());
    merged.insert(merged.end(), d.part1.begin(), d.part1.end());
    merged.insert(merged.end(), d.part2.begin(), d.part2.end());
    std::sort(merged.begin(), merged.end(), face_lex_less);
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw std::invalid_argument("decomposition parts overlap");
    if (merged != c.facets())
        throw std::invalid_argument("decomposition is not a facet partition");
}

long betti_at(const std::vector<long>& betti, int k) {
    // betti[k+1] = betti_k; outside the stored range everything is 0
    const int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[idx];
}

// Shared homology-splitting equation check for a decomposition of `whole`
// into two explicit subcomplexes.
SplittingReport homology_splitting_eq(const SimplicialComplex& whole,
                                      const SimplicialComplex& p1,
                                      const SimplicialComplex& p2,
                                      const FieldSpec& field) {
    SplittingReport report;
    report.mode = SplitMode::homology;
    const SimplicialComplex inter = p1.intersect(p2);
    if (inter.is_irrelevant()) {
        report.yes = true;
        return report;
    }
    const auto bw = reduced_betti_all(whole, field);
    const auto b1 = reduced_betti_all(p1, field);
    const auto b2 = reduced_betti_all(p2, field);
    const auto bi = reduced_betti_all(inter, field);
    for (int k = 0; k <= whole.dim(); ++k) {
        const long lhs = betti_at(bw, k);
        const long r1 = betti_at(b1, k);
        const long r2 = betti_at(b2, k);
        const long ri = betti_at(bi, k - 1);
        if (lhs != r1 + r2 + ri) {
            report.yes = false;
            report.witness = SplittingReport::Witness::homology_degree;
            report.k = k;
            report.lhs = lhs;
            report.part1 = r1;
            report.part2 = r2;
            report.inter = ri;
            return report;
        }
    }
    report.yes = true;
    return report;
}

}  // namespace

SplittingReport is_homology_splitting(const SimplicialComplex& c,
                                      const StandardDecomposition& d,
                                      const FieldSpec& field) {
    validate_decomposition(c, d);
    const SimplicialComplex p1 = subcomplex(c, d.part1);
    const SimplicialComplex p2 = subcomplex(c, d.part2);
    return homology_splitting_eq(c, p1, p2, field);
}

SplittingReport is_betti_splitting_direct(const SimplicialComplex& c,
                                          const StandardDecomposition& d,
                                          const FieldSpec& field) {
    validate_decomposition(c, d);
    SplittingReport report;
    report.mode = SplitMode::betti_direct;
    const SimplicialComplex p1 = subcomplex(c, d.part1);
    const SimplicialComplex p2 = subcomplex(c, d.part2);
    const SimplicialComplex inter = p1.intersect(p2);
    const BettiTable tw = graded_betti(c, field);
    const BettiTable t1 = graded_betti(p1, field);
    const BettiTable t2 = graded_betti(p2, field);
    const BettiTable ti = graded_betti(inter, field);

    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : tw.graded) keys.insert(k);
    for (const auto& [k, v] : t1.graded) keys.insert(k);
    for (const auto& [k, v] : t2.graded) keys.insert(k);
    for (const auto& [k, v] : ti.graded) keys.insert({k.first + 1, k.second});

    for (const auto& [i, j] : keys) {
        const long lhs = tw.graded_at(i, j);
        const long r1 = t1.graded_at(i, j);
        const long r2 = t2.graded_at(i, j);
        const long ri = ti.graded_at(i - 1, j);
        if (lhs != r1 + r2 + ri) {
            report.yes = false;
            report.witness = SplittingReport::Witness::degree_pair;
            report.i = i;
            report.j = j;
            report.lhs = lhs;
            report.part1 = r1;
            report.part2 = r2;
            report.inter = ri;
            return report;
        }
    }
    report.yes = true;
    return report;
}

SplittingReport is_betti_splitting_recursive(const SimplicialComplex& c,
                                             const StandardDecomposition& d,
                                             const FieldSpec& field) {
    validate_decomposition(c, d);
    SplittingReport report;
    report.mode = SplitMode::betti_recursive;
    const SimplicialComplex p1 = subcomplex(c, d.part1);
    const SimplicialComplex p2 = subcomplex(c, d.part2);
    const SimplicialComplex inter = p1.intersect(p2);
    // faces() yields ∅ first, then increasing cardinality, lex within
    for (face_t f : inter.faces()) {
        const SplittingReport sub = homology_splitting_eq(
            c.link(f), p1.link(f), p2.link(f), field);
        if (!sub.yes) {
            report.yes = false;
            report.witness = SplittingReport::Witness::face;
            report.face = f;
            return report;
        }
    }
    report.yes = true;
    return report;
}

SplittingReport mayer_vietoris_maps_vanish(const SimplicialComplex& c,
                                           const StandardDecomposition& d,
                                           const FieldSpec& field) {
    validate_decomposition(c, d);
    SplittingReport report;
    report.mode = SplitMode::mayer_vietoris;
    const SimplicialComplex p1 = subcomplex(c, d.part1);
    const SimplicialComplex p2 = subcomplex(c, d.part2);
    const SimplicialComplex inter = p1.intersect(p2);
    if (inter.is_irrelevant())
        throw std::invalid_argument(
            "Mayer-Vietoris check needs a nontrivial intersection");

    const ChainComplexData ci = build_chain_complex(inter);
    const ChainComplexData c1 = build_chain_complex(p1);
    const ChainComplexData c2 = build_chain_complex(p2);

    for (int k = 0; k <= inter.dim(); ++k) {
        const auto cycles = kernel_basis(ci.boundary[k], field);
        if (cycles.empty()) continue;

        const auto& faces1 = c1.bases[k + 1];
        const auto& faces2 = c2.bases[k + 1];
        const int rows = static_cast<int>(faces1.size() + faces2.size());
        std::map<face_t, int> row1, row2;
        for (std::size_t i = 0; i < faces1.size(); ++i) row1[faces1[i]] = i;
        for (std::size_t i = 0; i < faces2.size(); ++i)
            row2[faces2[i]] = static_cast<int>(faces1.size() + i);

        // boundary image columns of both parts
        std::vector<std::vector<bigint>> bcols;
        auto add_boundary = [&](const ChainComplexData& part,
                                const std::map<face_t, int>& rowmap) {
            if (k + 1 > part.dim) return;
            const SparseIntMatrix& bd = part.boundary[k + 1];
            std::vector<std::vector<bigint>> cols(
                bd.cols, std::vector<bigint>(rows, 0));
            for (const auto& e : bd.entries)
                cols[e.col][rowmap.at(part.bases[k + 1][e.row])] = e.value;
            for (auto& col : cols) bcols.push_back(std::move(col));
        };
        add_boundary(c1, row1);
        add_boundary(c2, row2);

        const int rank_b = rank_columns(bcols, rows, field);

        // x |-> (x, -x) on the cycle basis of the intersection
        std::vector<std::vector<bigint>> all = bcols;
        const auto& facesI = ci.bases[k + 1];
        for (const auto& z : cycles) {
            std::vector<bigint> col(rows, 0);
            for (std::size_t t = 0; t < facesI.size(); ++t) {
                if (z[t] == 0) continue;
                col[row1.at(facesI[t])] = z[t];
                col[row2.at(facesI[t])] = -z[t];
            }
            all.push_back(std::move(col));
        }
        const int rank_all = rank_columns(all, rows, field);
        const int map_rank = rank_all - rank_b;
        if (map_rank > 0) {
            report.yes = false;
            report.witness = SplittingReport::Witness::mv_degree;
            report.k = k;
            report.map_rank = map_rank;
            return report;
        }
    }
    report.yes = true;
    return report;
}

std::vector<face_t> essential_facets(const SimplicialComplex& c,
                                     const FieldSpec& field,
                                     bool verify_full_pattern) {
    const int d = c.dim();
    std::vector<face_t> out;
    if (d < 0 || c.facets().size() < 2) return out;
    const auto base = reduced_betti_all(c, field);
    if (betti_at(base, d) < 1) return out;  // no d-cycle to lie on
    for (face_t f : c.facets()) {
        if (face_dim(f) != d) continue;
        std::vector<face_t> rest;
        for (face_t g : c.facets())
            if (g != f) rest.push_back(g);
        const SimplicialComplex sub = subcomplex(c, rest);
        const auto bb = reduced_betti_all(sub, field);
        if (betti_at(bb, d) != betti_at(base, d) - 1) continue;
        if (verify_full_pattern) {
            bool clean = true;
            const int top = std::max(c.dim(), sub.dim());
            for (int k = -1; k <= top && clean; ++k)
                if (k != d && betti_at(bb, k) != betti_at(base, k)) clean = false;
            if (!clean) continue;
        }
        out.push_back(f);
    }
    return out;
}

std::string orientability_str(Orientability o) {
    switch (o) {
        case Orientability::orientable: return "orientable";
        case Orientability::non_orientable: return "non_orientable";
        default: return "not_applicable";
    }
}

Orientability orientability(const SimplicialComplex& c) {
    if (!is_closed_pseudomanifold(c).value || !is_connected(c))
        return Orientability::not_applicable;
    return reduced_betti(c, c.dim(), FieldSpec::rationals()) != 0
               ? Orientability::orientable
               : Orientability::non_orientable;
}

}  // namespace bettisplit
