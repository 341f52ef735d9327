#pragma once

// Deliberately naive dense Gaussian elimination, kept structurally
// independent from the sparse fraction-free production path: dense
// row-major storage, exact rational (or mod-p) arithmetic, plain
// left-to-right column pivoting. Used as the rank referee in tests.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bettisplit/field.hpp"
#include "bettisplit/matrix.hpp"

namespace testref {

using rational = boost::multiprecision::cpp_rational;

inline int dense_rank_q(std::vector<std::vector<rational>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const rational factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

inline int dense_rank_fp(std::vector<std::vector<std::uint64_t>> m,
                         std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        const std::uint64_t inv = mod_pow(m[row][col], p - 2, p);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const std::uint64_t factor = m[r][col] * inv % p;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = (m[r][c] + (p - factor) * m[row][c]) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int dense_rank(const bettisplit::SparseIntMatrix& m,
                      const bettisplit::FieldSpec& field) {
    if (field.is_rationals()) {
        std::vector<std::vector<rational>> dense(
            m.rows, std::vector<rational>(m.cols, 0));
        for (const auto& e : m.entries) dense[e.row][e.col] += e.value;
        return dense_rank_q(std::move(dense));
    }
    const std::uint64_t p = field.prime();
    std::vector<std::vector<std::uint64_t>> dense(
        m.rows, std::vector<std::uint64_t>(m.cols, 0));
    for (const auto& e : m.entries) {
        const long long v = e.value % static_cast<long long>(p);
        const std::uint64_t add = v < 0 ? v + static_cast<long long>(p) : v;
        dense[e.row][e.col] = (dense[e.row][e.col] + add) % p;
    }
    return dense_rank_fp(std::move(dense), p);
}

}  // namespace testref
