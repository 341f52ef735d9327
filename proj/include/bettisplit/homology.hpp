#pragma once

#include <vector>

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/matrix.hpp"

namespace bettisplit {

// Augmented chain complex: bases[k+1] lists the k-faces (k = -1..dim) in
// (cardinality, lex) order; boundary[k] is ∂_k : C_k -> C_{k-1} for
// k = 0..dim, with sign (-1)^i for omitting the i-th vertex of a sorted
// face. ∂_0 maps every vertex to the empty face (augmentation).
struct ChainComplexData {
    int n = 0;
    int dim = -1;
    std::vector<std::vector<face_t>> bases;
    std::vector<SparseIntMatrix> boundary;
};

ChainComplexData build_chain_complex(const SimplicialComplex& c);

// Reduced Betti numbers for k = -1..dim, index shifted by one
// (result[k+1] = betti_k). Results are memoized per (complex, field).
std::vector<long> reduced_betti_all(const SimplicialComplex& c,
                                    const FieldSpec& field);

// betti_k; 0 for k > dim, and the {∅} convention betti_{-1}({∅}) = 1.
long reduced_betti(const SimplicialComplex& c, int k, const FieldSpec& field);

// True iff betti_k = 0 for all k >= 0. Requires c != {∅}.
bool is_acyclic(const SimplicialComplex& c, const FieldSpec& field);

void clear_homology_cache();

}  // namespace bettisplit
