#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bettisplit/field.hpp"

namespace bettisplit {

using bigint = boost::multiprecision::cpp_int;

// Sparse integer matrix: explicit entry list, no stored zeros. Boundary
// maps fill these with coefficients in {-1, 0, +1}. Duplicate (row, col)
// entries are a caller bug and are rejected by the elimination paths.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        std::int64_t value;
    };
    std::vector<Entry> entries;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c) {}
    void add(int r, int c, std::int64_t v);
};

// Rank over the given field. Over Q the elimination is fraction-free
// (integer rows, cross-multiplication, gcd normalization); over F_p it is
// modular with a precomputed inverse table. Pivots are chosen sparsest-row
// first, then least-populated column, to limit fill-in.
int rank(const SparseIntMatrix& m, const FieldSpec& field);

// Basis of the right kernel {x : Mx = 0}, as integer vectors of length
// m.cols. Over Q the vectors are denominator-free (content removed); over
// F_p entries are representatives in [0, p). Size = cols - rank.
std::vector<std::vector<bigint>> kernel_basis(const SparseIntMatrix& m,
                                              const FieldSpec& field);

// Rank of a matrix given by dense columns (each of length rows). Used by
// the Mayer-Vietoris path, whose columns come from kernel vectors.
int rank_columns(const std::vector<std::vector<bigint>>& columns, int rows,
                 const FieldSpec& field);

}  // namespace bettisplit
