#include "bettisplit/matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bettisplit {

namespace {

// Rows as sorted (col, value) vectors; the two elimination paths share the
// pivoting loop through a small policy type.

std::vector<std::uint32_t> inverse_table(std::uint32_t p) {
    std::vector<std::uint32_t> inv(p, 0);
    if (p > 1) inv[1] = 1;
    for (std::uint32_t i = 2; i < p; ++i)
        inv[i] = static_cast<std::uint32_t>(
            (std::uint64_t)(p - p / i) * inv[p % i] % p);
    return inv;
}

template <typename Value>
using SparseRow = std::vector<std::pair<int, Value>>;

template <typename Value>
const Value* row_find(const SparseRow<Value>& row, int col) {
    auto it = std::lower_bound(
        row.begin(), row.end(), col,
        [](const std::pair<int, Value>& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

// Generic sparse elimination counting pivots. combine(target, source,
// target_coeff_col_value, pivot_value) replaces target with a row whose
// pivot-column entry is zero.
template <typename Value, typename Combine>
int eliminate(std::vector<SparseRow<Value>>& rows, int ncols, Combine combine) {
    std::vector<int> col_count(ncols, 0);
    std::vector<char> active(rows.size(), 1);
    std::size_t live = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) {
            active[r] = 0;
            continue;
        }
        ++live;
        for (auto& [c, v] : rows[r]) ++col_count[c];
    }

    int rank = 0;
    while (live > 0) {
        // Sparsest live row, then its least-populated column.
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r]) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size())
                best = r;
        }
        const SparseRow<Value>& prow = rows[best];
        int pcol = prow[0].first;
        for (auto& [c, v] : prow)
            if (col_count[c] < col_count[pcol]) pcol = c;
        const Value pval = *row_find(prow, pcol);

        ++rank;
        active[best] = 0;
        --live;
        for (auto& [c, v] : prow) --col_count[c];

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r]) continue;
            const Value* coeff = row_find(rows[r], pcol);
            if (!coeff) continue;
            for (auto& [c, v] : rows[r]) --col_count[c];
            combine(rows[r], prow, *coeff, pval);
            if (rows[r].empty()) {
                active[r] = 0;
                --live;
            } else {
                for (auto& [c, v] : rows[r]) ++col_count[c];
            }
        }
    }
    return rank;
}

int rank_rows_fp(std::vector<SparseRow<std::uint32_t>>& rows, int ncols,
                 std::uint32_t p) {
    const std::vector<std::uint32_t> inv = inverse_table(p);
    auto combine = [&](SparseRow<std::uint32_t>& target,
                       const SparseRow<std::uint32_t>& pivot,
                       std::uint32_t coeff, std::uint32_t pval) {
        // target -= (coeff / pval) * pivot  (mod p)
        const std::uint64_t f = (std::uint64_t)coeff * inv[pval] % p;
        SparseRow<std::uint32_t> out;
        out.reserve(target.size() + pivot.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < pivot.size()) {
            if (b == pivot.size() ||
                (a < target.size() && target[a].first < pivot[b].first)) {
                out.push_back(target[a++]);
            } else if (a == target.size() || pivot[b].first < target[a].first) {
                std::uint32_t v = static_cast<std::uint32_t>(
                    (p - f * pivot[b].second % p) % p);
                if (v) out.emplace_back(pivot[b].first, v);
                ++b;
            } else {
                std::uint64_t v =
                    (target[a].second + (p - f * pivot[b].second % p)) % p;
                if (v) out.emplace_back(target[a].first,
                                        static_cast<std::uint32_t>(v));
                ++a;
                ++b;
            }
        }
        target = std::move(out);
    };
    return eliminate<std::uint32_t>(rows, ncols, combine);
}

void normalize_content(SparseRow<bigint>& row) {
    if (row.empty()) return;
    bigint g = 0;
    for (auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

int rank_rows_q(std::vector<SparseRow<bigint>>& rows, int ncols) {
    auto combine = [&](SparseRow<bigint>& target, const SparseRow<bigint>& pivot,
                       const bigint& coeff, const bigint& pval) {
        // target <- pval * target - coeff * pivot, then strip content.
        SparseRow<bigint> out;
        out.reserve(target.size() + pivot.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < pivot.size()) {
            if (b == pivot.size() ||
                (a < target.size() && target[a].first < pivot[b].first)) {
                out.emplace_back(target[a].first, pval * target[a].second);
                ++a;
            } else if (a == target.size() || pivot[b].first < target[a].first) {
                out.emplace_back(pivot[b].first, -coeff * pivot[b].second);
                ++b;
            } else {
                bigint v = pval * target[a].second - coeff * pivot[b].second;
                if (v != 0) out.emplace_back(target[a].first, std::move(v));
                ++a;
                ++b;
            }
        }
        normalize_content(out);
        target = std::move(out);
    };
    return eliminate<bigint>(rows, ncols, combine);
}

}  // namespace

void SparseIntMatrix::add(int r, int c, std::int64_t v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("matrix entry out of bounds");
    if (v != 0) entries.push_back({r, c, v});
}

int rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.is_rationals()) {
        std::vector<SparseRow<bigint>> rows(m.rows);
        for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, e.value);
        for (auto& row : rows) {
            std::sort(row.begin(), row.end());
            for (std::size_t i = 1; i < row.size(); ++i)
                if (row[i].first == row[i - 1].first)
                    throw std::invalid_argument("duplicate matrix entry");
        }
        return rank_rows_q(rows, m.cols);
    }
    const std::uint32_t p = field.prime();
    std::vector<SparseRow<std::uint32_t>> rows(m.rows);
    for (const auto& e : m.entries) {
        std::int64_t v = e.value % static_cast<std::int64_t>(p);
        if (v < 0) v += p;
        if (v) rows[e.row].emplace_back(e.col, static_cast<std::uint32_t>(v));
    }
    for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i].first == row[i - 1].first)
                throw std::invalid_argument("duplicate matrix entry");
    }
    return rank_rows_fp(rows, m.cols, p);
}

namespace {

// Column elimination on [M; I]: columns of M reduced fraction-free, the
// identity block tracking the combinations. Zero M-columns leave kernel
// vectors in the identity block.
struct ColumnWork {
    std::vector<std::vector<bigint>> work;  // length rows each
    std::vector<std::vector<bigint>> aug;   // length cols each
};

std::vector<std::vector<bigint>> kernel_impl(ColumnWork w, int rows, int cols,
                                             const FieldSpec& field) {
    const bool rational = field.is_rationals();
    const bigint p = rational ? 0 : bigint(field.prime());
    auto reduce = [&](bigint& v) {
        if (!rational) {
            v %= p;
            if (v < 0) v += p;
        }
    };
    int next = 0;
    for (int r = 0; r < rows && next < cols; ++r) {
        int pivot = -1;
        for (int j = next; j < cols; ++j)
            if (w.work[j][r] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w.work[pivot], w.work[next]);
        std::swap(w.aug[pivot], w.aug[next]);
        const bigint pv = w.work[next][r];
        for (int j = next + 1; j < cols; ++j) {
            if (w.work[j][r] == 0) continue;
            const bigint c = w.work[j][r];
            for (int t = 0; t < rows; ++t) {
                w.work[j][t] = pv * w.work[j][t] - c * w.work[next][t];
                reduce(w.work[j][t]);
            }
            for (int t = 0; t < cols; ++t) {
                w.aug[j][t] = pv * w.aug[j][t] - c * w.aug[next][t];
                reduce(w.aug[j][t]);
            }
            if (rational) {
                bigint g = 0;
                for (int t = 0; t < rows && g != 1; ++t)
                    g = boost::multiprecision::gcd(g, w.work[j][t]);
                for (int t = 0; t < cols && g != 1; ++t)
                    g = boost::multiprecision::gcd(g, w.aug[j][t]);
                if (g > 1) {
                    for (int t = 0; t < rows; ++t) w.work[j][t] /= g;
                    for (int t = 0; t < cols; ++t) w.aug[j][t] /= g;
                }
            }
        }
        ++next;
    }
    std::vector<std::vector<bigint>> kernel;
    for (int j = next; j < cols; ++j) {
        auto& vec = w.aug[j];
        if (rational) {
            bigint g = 0;
            for (auto& v : vec) g = boost::multiprecision::gcd(g, v);
            if (g > 1)
                for (auto& v : vec) v /= g;
            // sign convention: first nonzero positive
            for (auto& v : vec) {
                if (v == 0) continue;
                if (v < 0)
                    for (auto& u : vec) u = -u;
                break;
            }
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

}  // namespace

std::vector<std::vector<bigint>> kernel_basis(const SparseIntMatrix& m,
                                              const FieldSpec& field) {
    ColumnWork w;
    w.work.assign(m.cols, std::vector<bigint>(m.rows, 0));
    w.aug.assign(m.cols, std::vector<bigint>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j) w.aug[j][j] = 1;
    for (const auto& e : m.entries) {
        bigint v = e.value;
        if (!field.is_rationals()) {
            v %= field.prime();
            if (v < 0) v += field.prime();
        }
        w.work[e.col][e.row] += v;
    }
    return kernel_impl(std::move(w), m.rows, m.cols, field);
}

int rank_columns(const std::vector<std::vector<bigint>>& columns, int rows,
                 const FieldSpec& field) {
    if (columns.empty() || rows == 0) return 0;
    if (field.is_rationals()) {
        std::vector<SparseRow<bigint>> r(rows);
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (int i = 0; i < rows; ++i)
                if (columns[j][i] != 0)
                    r[i].emplace_back(static_cast<int>(j), columns[j][i]);
        return rank_rows_q(r, static_cast<int>(columns.size()));
    }
    const std::uint32_t p = field.prime();
    std::vector<SparseRow<std::uint32_t>> r(rows);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i < rows; ++i) {
            bigint v = columns[j][i] % p;
            if (v < 0) v += p;
            if (v != 0)
                r[i].emplace_back(static_cast<int>(j),
                                  v.convert_to<std::uint32_t>());
        }
    return rank_rows_fp(r, static_cast<int>(columns.size()), p);
}

}  // namespace bettisplit
