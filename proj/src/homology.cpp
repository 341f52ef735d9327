#include "bettisplit/homology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace bettisplit {

ChainComplexData build_chain_complex(const SimplicialComplex& c) {
    ChainComplexData data;
    data.n = c.n();
    data.dim = c.dim();
    data.bases.assign(data.dim + 2, {});
    for (face_t f : c.faces()) data.bases[face_card(f)].push_back(f);
    // faces() is (cardinality, lex) sorted already; keep the order.

    data.boundary.reserve(data.dim + 1);
    for (int k = 0; k <= data.dim; ++k) {
        const auto& domain = data.bases[k + 1];
        const auto& range = data.bases[k];
        std::map<face_t, int> index;
        for (std::size_t i = 0; i < range.size(); ++i) index[range[i]] = i;
        SparseIntMatrix mat(static_cast<int>(range.size()),
                            static_cast<int>(domain.size()));
        for (std::size_t j = 0; j < domain.size(); ++j) {
            int pos = 0;
            for (int v : face_vertices(domain[j])) {
                face_t g = domain[j] & ~(face_t(1) << (v - 1));
                mat.add(index.at(g), static_cast<int>(j), (pos % 2) ? -1 : 1);
                ++pos;
            }
        }
        data.boundary.push_back(std::move(mat));
    }
    return data;
}

namespace {

using CacheKey = std::tuple<std::uint32_t, int, std::vector<face_t>>;

std::mutex cache_mutex;
std::map<CacheKey, std::vector<long>> betti_cache;
constexpr std::size_t kCacheCap = 200000;

}  // namespace

std::vector<long> reduced_betti_all(const SimplicialComplex& c,
                                    const FieldSpec& field) {
    CacheKey key{field.characteristic(), c.n(), c.facets()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = betti_cache.find(key);
        if (it != betti_cache.end()) return it->second;
    }

    const int d = c.dim();
    std::vector<long> out(d + 2, 0);
    if (d == -1) {
        out[0] = 1;  // {∅}
    } else {
        ChainComplexData data = build_chain_complex(c);
        std::vector<int> ranks(d + 2, 0);  // ranks[k] = rank ∂_k, k = 0..dim
        for (int k = 0; k <= d; ++k) ranks[k] = rank(data.boundary[k], field);
        // betti_k = f_k - rank ∂_k - rank ∂_{k+1}; f_{-1} = 1, rank ∂_{d+1} = 0
        out[0] = 1 - ranks[0];
        for (int k = 0; k <= d; ++k)
            out[k + 1] = static_cast<long>(data.bases[k + 1].size()) - ranks[k] -
                         ranks[k + 1];
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    if (betti_cache.size() >= kCacheCap) betti_cache.clear();
    betti_cache.emplace(std::move(key), out);
    return out;
}

long reduced_betti(const SimplicialComplex& c, int k, const FieldSpec& field) {
    if (k < -1) throw std::invalid_argument("homology degree below -1");
    if (k > c.dim()) return 0;
    return reduced_betti_all(c, field)[k + 1];
}

bool is_acyclic(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_irrelevant())
        throw std::invalid_argument("acyclicity of {∅} is not defined here");
    const auto betti = reduced_betti_all(c, field);
    for (std::size_t i = 1; i < betti.size(); ++i)
        if (betti[i] != 0) return false;
    return true;
}

void clear_homology_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    betti_cache.clear();
}

}  // namespace bettisplit
