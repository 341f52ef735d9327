#include "bettisplit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bettisplit/homology.hpp"
#include "bettisplit/splitting.hpp"

namespace bettisplit {

namespace {

std::atomic<int> g_worker_cap{0};

int default_worker_cap() {
    if (const char* env = std::getenv("BETTISPLIT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

struct ScanOutcome {
    std::uint64_t hits = 0;
    std::optional<std::uint64_t> first_hit;
};

// Evaluates pred on decompositions indexed by `ids` (or by [0, total) when
// ids is null), split into contiguous ranges across workers. Merging by
// minimum index and by sum keeps the outcome independent of the worker
// count. stop_at_first lets workers abandon indices that can no longer
// beat the current best.
ScanOutcome scan_decompositions(
    const SimplicialComplex& c, std::uint64_t total,
    const std::vector<std::uint64_t>* ids, bool stop_at_first,
    const std::function<bool(const StandardDecomposition&)>& pred) {
    const std::uint64_t count = ids ? ids->size() : total;
    ScanOutcome out;
    if (count == 0) return out;
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(worker_cap(), count));

    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::vector<std::uint64_t> hit_counts(workers, 0);
    std::vector<std::exception_ptr> errors(workers);

    auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
        try {
            for (std::uint64_t pos = lo; pos < hi; ++pos) {
                if (stop_at_first && best.load(std::memory_order_relaxed) < pos)
                    break;
                const std::uint64_t t = ids ? (*ids)[pos] : pos;
                if (!pred(decomposition_at(c, t))) continue;
                ++hit_counts[w];
                if (stop_at_first) {
                    std::uint64_t cur = best.load();
                    while (pos < cur &&
                           !best.compare_exchange_weak(cur, pos)) {
                    }
                    break;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        run_range(0, 0, count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = count * w / workers;
            const std::uint64_t hi = count * (w + 1) / workers;
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (std::uint64_t h : hit_counts) out.hits += h;
    const std::uint64_t b = best.load();
    if (b != UINT64_MAX) out.first_hit = ids ? (*ids)[b] : b;
    return out;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// β̃_1 of a graph is E - V + C; no matrices needed, and the answer is the
// same over every field.
long graph_betti1(const SimplicialComplex& graph) {
    face_t support = 0;
    long edges = 0;
    for (face_t f : graph.facets()) {
        support |= f;
        if (face_card(f) == 2) ++edges;
    }
    const int vertices = face_card(support);
    if (vertices == 0) return 0;
    const auto verts = face_vertices(support);
    DisjointSet dsu(graph.n() + 1);
    for (face_t f : graph.facets()) {
        const auto vs = face_vertices(f);
        for (std::size_t i = 1; i < vs.size(); ++i) dsu.unite(vs[0], vs[i]);
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(dsu.find(v));
    const long components = static_cast<long>(roots.size());
    return edges - vertices + components;
}

void check_budget(const SimplicialComplex& c, int facet_budget) {
    if (static_cast<int>(c.facets().size()) > facet_budget)
        throw std::runtime_error(
            "facet budget exceeded for an exact scan (" +
            std::to_string(c.facets().size()) + " > " +
            std::to_string(facet_budget) + "); use sampling");
}

}  // namespace

int worker_cap() {
    int v = g_worker_cap.load();
    if (v <= 0) {
        v = default_worker_cap();
        g_worker_cap.store(v);
    }
    return v;
}

void set_worker_cap(int cap) { g_worker_cap.store(cap > 0 ? cap : 1); }

std::uint64_t decomposition_count(int m) {
    if (m > kMaxVertices)
        throw std::overflow_error("facet count exceeds 64-bit enumeration");
    if (m < 2) return 0;
    return (std::uint64_t{1} << (m - 1)) - 1;
}

StandardDecomposition decomposition_at(const SimplicialComplex& c,
                                       std::uint64_t t) {
    const std::uint64_t total =
        decomposition_count(static_cast<int>(c.facets().size()));
    if (t >= total)
        throw std::out_of_range("decomposition index out of range");
    return decompose(c, (t << 1) | 1);
}

void for_each_decomposition(
    const SimplicialComplex& c,
    const std::function<bool(std::uint64_t, const StandardDecomposition&)>&
        fn) {
    const std::uint64_t total =
        decomposition_count(static_cast<int>(c.facets().size()));
    for (std::uint64_t t = 0; t < total; ++t)
        if (!fn(t, decomposition_at(c, t))) return;
}

std::optional<StandardDecomposition> is_trivially_decomposable(
    const SimplicialComplex& c, const FieldSpec& field) {
    const int d = c.dim();
    if (d < 1)
        throw std::invalid_argument(
            "trivial-decomposability needs dimension >= 1");
    const std::uint64_t total =
        decomposition_count(static_cast<int>(c.facets().size()));
    auto pred = [&](const StandardDecomposition& dec) {
        const SimplicialComplex inter =
            subcomplex(c, dec.part1).intersect(subcomplex(c, dec.part2));
        if (inter.is_irrelevant()) return true;
        if (d == 2) return graph_betti1(inter) == 0;
        return reduced_betti(inter, d - 1, field) == 0;
    };
    const ScanOutcome out = scan_decompositions(c, total, nullptr, true, pred);
    if (!out.first_hit) return std::nullopt;
    return decomposition_at(c, *out.first_hit);
}

std::pair<std::uint64_t, std::uint64_t> ProbabilityReport::ratio() const {
    if (total == 0) return {0, 1};
    const std::uint64_t g = std::gcd(hits, total);
    return {hits / g, total / g};
}

ProbabilityReport splitting_probability(const SimplicialComplex& c,
                                        const FieldSpec& field,
                                        ProbabilityKind kind,
                                        std::optional<SampleSpec> sample,
                                        int facet_budget) {
    if (kind == ProbabilityKind::facet)
        return facet_splitting_probability(c, field);

    auto pred = [&](const StandardDecomposition& dec) {
        return kind == ProbabilityKind::betti
                   ? is_betti_splitting_direct(c, dec, field).yes
                   : is_homology_splitting(c, dec, field).yes;
    };

    ProbabilityReport report;
    report.kind = kind;
    const std::uint64_t space =
        decomposition_count(static_cast<int>(c.facets().size()));

    if (sample) {
        report.sampled = true;
        report.sample = *sample;
        const std::uint64_t draws = std::min(sample->size, space);
        std::vector<std::uint64_t> ids;
        if (draws == space) {
            ids.resize(space);
            std::iota(ids.begin(), ids.end(), 0);
        } else {
            std::mt19937_64 rng(sample->seed);
            std::uniform_int_distribution<std::uint64_t> dist(0, space - 1);
            std::set<std::uint64_t> seen;
            while (seen.size() < draws) seen.insert(dist(rng));
            ids.assign(seen.begin(), seen.end());
        }
        report.total = ids.size();
        report.hits = scan_decompositions(c, space, &ids, false, pred).hits;
        return report;
    }

    check_budget(c, facet_budget);
    report.total = space;
    report.hits = scan_decompositions(c, space, nullptr, false, pred).hits;
    return report;
}

ProbabilityReport facet_splitting_probability(const SimplicialComplex& c,
                                              const FieldSpec& field) {
    ProbabilityReport report;
    report.kind = ProbabilityKind::facet;
    const std::size_t m = c.facets().size();
    report.total = m;
    if (m < 2) return report;
    for (face_t f : c.facets())
        if (is_betti_splitting_direct(c, remove_facet(c, f), field).yes)
            ++report.hits;
    return report;
}

std::optional<StandardDecomposition> admits_betti_splitting(
    const SimplicialComplex& c, const FieldSpec& field, bool prune,
    int facet_budget) {
    const std::size_t m = c.facets().size();
    if (m < 2) return std::nullopt;
    check_budget(c, facet_budget);
    const int d = c.dim();

    if (prune && d >= 2 && reduced_betti(c, d, field) == 0 &&
        !is_trivially_decomposable(c, field))
        return std::nullopt;

    auto verified = [&](const StandardDecomposition& dec) {
        if (!is_betti_splitting_recursive(c, dec, field).yes)
            throw std::logic_error(
                "direct and recursive Betti verdicts disagree on a witness");
        return dec;
    };

    for (face_t f : essential_facets(c, field)) {
        const StandardDecomposition dec = remove_facet(c, f);
        if (is_betti_splitting_direct(c, dec, field).yes)
            return verified(dec);
    }

    auto pred = [&](const StandardDecomposition& dec) {
        return is_betti_splitting_direct(c, dec, field).yes;
    };
    const ScanOutcome out = scan_decompositions(
        c, decomposition_count(static_cast<int>(m)), nullptr, true, pred);
    if (!out.first_hit) return std::nullopt;
    return verified(decomposition_at(c, *out.first_hit));
}

std::optional<StandardDecomposition> admits_homology_splitting(
    const SimplicialComplex& c, const FieldSpec& field, int facet_budget) {
    const std::size_t m = c.facets().size();
    if (m < 2) return std::nullopt;
    check_budget(c, facet_budget);

    auto pred = [&](const StandardDecomposition& dec) {
        return is_homology_splitting(c, dec, field).yes;
    };
    const ScanOutcome out = scan_decompositions(
        c, decomposition_count(static_cast<int>(m)), nullptr, true, pred);
    if (!out.first_hit) return std::nullopt;
    StandardDecomposition dec = decomposition_at(c, *out.first_hit);

    // second route on the witness only
    const SimplicialComplex inter =
        subcomplex(c, dec.part1).intersect(subcomplex(c, dec.part2));
    if (!inter.is_irrelevant() &&
        !mayer_vietoris_maps_vanish(c, dec, field).yes)
        throw std::logic_error(
            "homology and Mayer-Vietoris verdicts disagree on a witness");
    return dec;
}

}  // namespace bettisplit
