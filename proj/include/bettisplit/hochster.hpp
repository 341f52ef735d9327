#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"

namespace bettisplit {

// Squarefree monomial ideal given by its minimal generators (an antichain
// of nonempty supports over [n]).
struct MonomialIdeal {
    int n = 0;
    std::vector<face_t> generators;  // sorted lex
};

// I*_Δ = (x_{[n]\F} : F facet of Δ). Errors if some facet equals [n]
// itself (empty generator support = unit ideal) unless Δ = {∅}.
MonomialIdeal alexander_dual_ideal(const SimplicialComplex& c);

// Inverse of the above: facets are complements of the generators. A sole
// full-set generator yields {∅}.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal);

// Graded and multigraded Betti numbers of I*_Δ. The multigrading is keyed
// by the face G (multidegree support = [n] \ G); only nonzero counts are
// stored.
struct BettiTable {
    int n = 0;
    std::map<std::pair<int, int>, long> graded;          // (i, j) -> count
    std::map<std::pair<int, face_t>, long> multigraded;  // (i, G) -> count

    long graded_at(int i, int j) const;
    long total(int i) const;
    int max_i() const;
};

// Hochster's formula: beta_{i,j}(I*_Δ) = sum over faces G with |G| = n - j
// of betti_{i-1}(link_Δ G). Never computes a resolution.
BettiTable graded_betti(const SimplicialComplex& c, const FieldSpec& field);

long total_betti(const BettiTable& table, int i);

// (f_{-1}, f_0, ..., f_d) with f_{-1} = 1.
std::vector<long> f_vector(const SimplicialComplex& c);

}  // namespace bettisplit
