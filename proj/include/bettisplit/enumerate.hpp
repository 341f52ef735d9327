#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "bettisplit/complex.hpp"
#include "bettisplit/field.hpp"

namespace bettisplit {

// Number of standard decompositions of an m-facet complex: 2^(m-1) - 1.
std::uint64_t decomposition_count(int m);

// The t-th decomposition in canonical order: part1 = facet 0 plus the
// facets whose (i-1)-th bit of t is set, t in [0, 2^(m-1) - 1).
StandardDecomposition decomposition_at(const SimplicialComplex& c,
                                       std::uint64_t t);

// Visits all decompositions in canonical order; stops early if the
// callback returns false.
void for_each_decomposition(
    const SimplicialComplex& c,
    const std::function<bool(std::uint64_t, const StandardDecomposition&)>& fn);

// First decomposition (canonical order) with betti_{d-1}(Δ1∩Δ2) = 0, if
// any. Requires dim >= 1. For dim 2 the intersection is a graph and
// betti_1 = E - V + C comes from union-find, no matrices.
std::optional<StandardDecomposition> is_trivially_decomposable(
    const SimplicialComplex& c, const FieldSpec& field);

enum class ProbabilityKind { betti, homology, facet };

struct SampleSpec {
    std::uint64_t size = 0;
    std::uint64_t seed = 0;
};

struct ProbabilityReport {
    ProbabilityKind kind = ProbabilityKind::betti;
    std::uint64_t total = 0;  // decompositions scanned (or facet count)
    std::uint64_t hits = 0;
    bool sampled = false;
    SampleSpec sample;
    // hits/total reduced to lowest terms (0/1 when total = 0).
    std::pair<std::uint64_t, std::uint64_t> ratio() const;
};

// Exact mode scans every decomposition (facet budget applies); sampled
// mode draws uniformly without replacement from the stated seed.
ProbabilityReport splitting_probability(
    const SimplicialComplex& c, const FieldSpec& field, ProbabilityKind kind,
    std::optional<SampleSpec> sample = std::nullopt, int facet_budget = 20);

// Fraction of facets whose removal decomposition is a Betti splitting.
ProbabilityReport facet_splitting_probability(const SimplicialComplex& c,
                                              const FieldSpec& field);

// First Betti splitting in scan order (essential-facet removals first,
// then the canonical counter). When betti_d = 0 and d >= 2, a failed
// trivially-decomposable scan proves non-existence with no Betti work;
// prune=false forces the raw exhaustive scan.
std::optional<StandardDecomposition> admits_betti_splitting(
    const SimplicialComplex& c, const FieldSpec& field, bool prune = true,
    int facet_budget = 20);

// Exhaustive scan for a homology splitting (no pruning).
std::optional<StandardDecomposition> admits_homology_splitting(
    const SimplicialComplex& c, const FieldSpec& field, int facet_budget = 20);

// Worker cap for the scan loops; default from BETTISPLIT_THREADS or
// hardware concurrency. Results are independent of the cap.
int worker_cap();
void set_worker_cap(int cap);

}  // namespace bettisplit
