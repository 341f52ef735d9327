#pragma once

#include <string>
#include <vector>

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"

namespace bettisplit {

enum class SplitMode { homology, betti_direct, betti_recursive, mayer_vietoris };

// Verdict plus a self-contained witness on failure. Witness kinds:
//   degree_pair      (i, j) with the four graded Betti values
//   face             F in Δ1∩Δ2 whose link decomposition fails
//   homology_degree  k with the two sides of the splitting equation
//   mv_degree        k with the nonzero Mayer-Vietoris map rank
struct SplittingReport {
    bool yes = false;
    SplitMode mode = SplitMode::homology;

    enum class Witness { none, degree_pair, face, homology_degree, mv_degree };
    Witness witness = Witness::none;
    int i = -1, j = -1;
    long lhs = 0, part1 = 0, part2 = 0, inter = 0;
    face_t face = 0;
    int k = -1;
    long map_rank = 0;
};

// Def. of homology splitting: trivially yes when Δ1∩Δ2 = {∅}; otherwise
// betti_k(Δ) = betti_k(Δ1) + betti_k(Δ2) + betti_{k-1}(Δ1∩Δ2) for every
// k in [0, dim Δ]. Witness: smallest failing k.
SplittingReport is_homology_splitting(const SimplicialComplex& c,
                                      const StandardDecomposition& d,
                                      const FieldSpec& field);

// Additivity of the four dual-ideal Betti tables over the full (i, j)
// rectangle. Witness: lexicographically first failing pair.
SplittingReport is_betti_splitting_direct(const SimplicialComplex& c,
                                          const StandardDecomposition& d,
                                          const FieldSpec& field);

// Equivalent characterization: the link decomposition at every face F of
// Δ1∩Δ2 (∅ first, then by cardinality and lex) is a homology splitting of
// link_Δ F. Witness: first failing face.
SplittingReport is_betti_splitting_recursive(const SimplicialComplex& c,
                                             const StandardDecomposition& d,
                                             const FieldSpec& field);

// Ranks of the maps H_k(Δ1∩Δ2) -> H_k(Δ1) ⊕ H_k(Δ2) for k in
// [0, dim Δ1∩Δ2]; yes iff all vanish. Requires Δ1∩Δ2 != {∅}.
SplittingReport mayer_vietoris_maps_vanish(const SimplicialComplex& c,
                                           const StandardDecomposition& d,
                                           const FieldSpec& field);

// Facets of top dimension d whose removal drops betti_d by exactly one.
// With verify_full_pattern, the whole removal pattern (no other betti
// changes) is checked instead of the k = d shortcut alone.
std::vector<face_t> essential_facets(const SimplicialComplex& c,
                                     const FieldSpec& field,
                                     bool verify_full_pattern = false);

enum class Orientability { orientable, non_orientable, not_applicable };
std::string orientability_str(Orientability o);

// For connected closed pseudomanifolds: orientable iff betti_d(Δ; Q) != 0.
// Anything else is not_applicable.
Orientability orientability(const SimplicialComplex& c);

}  // namespace bettisplit
