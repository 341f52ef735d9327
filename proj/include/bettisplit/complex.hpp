#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bettisplit {

// A face is a subset of the ground set [1, n], stored as a bitmask:
// bit i set <=> vertex i+1 present. n <= 64.
using face_t = std::uint64_t;

constexpr int kMaxVertices = 64;

int face_card(face_t f);
inline int face_dim(face_t f) { return face_card(f) - 1; }
std::vector<int> face_vertices(face_t f);
face_t face_from_vertices(const std::vector<int>& vertices, int n);
// Lexicographic order on the increasing vertex sequences (so 123 < 13 < 2).
bool face_lex_less(face_t a, face_t b);
std::string face_str(face_t f);

// Abstract simplicial complex on ground set [n], held as the antichain of
// its facets in canonical (lex) order. {∅} is facets == {0}; the void
// complex is rejected at construction.
class SimplicialComplex {
public:
    SimplicialComplex(const std::vector<std::vector<int>>& facet_list,
                      std::optional<int> n = std::nullopt);
    static SimplicialComplex from_masks(int n, std::vector<face_t> facets);

    int n() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<face_t>& facets() const { return facets_; }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    // All faces including ∅, ordered by (cardinality, lex).
    std::vector<face_t> faces() const;
    std::size_t face_count() const;
    bool contains(face_t f) const;

    SimplicialComplex link(face_t f) const;
    SimplicialComplex intersect(const SimplicialComplex& other) const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    SimplicialComplex() = default;
    int n_ = 0;
    int dim_ = -1;
    std::vector<face_t> facets_;
};

// Unordered bipartition of the facet set; canonical form keeps the
// lex-least facet in part1. part1_index_mask uses bit i for the i-th facet
// of the parent's canonical facet list.
struct StandardDecomposition {
    std::vector<face_t> part1;
    std::vector<face_t> part2;
    std::uint64_t part1_index_mask = 0;
};

// Subcomplex generated by a facet subset, keeping the ambient n.
SimplicialComplex subcomplex(const SimplicialComplex& parent,
                             const std::vector<face_t>& part);

StandardDecomposition decompose(const SimplicialComplex& parent,
                                std::uint64_t part1_index_mask);
StandardDecomposition decompose(const SimplicialComplex& parent,
                                const std::vector<int>& part1_indices);
StandardDecomposition remove_facet(const SimplicialComplex& parent, face_t f);

struct PseudomanifoldCheck {
    bool value = false;
    // On failure: a facet of the wrong dimension, or the (d-1)-face with
    // facet count != 2.
    std::optional<face_t> offending;
};
PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& c);

bool is_connected(const SimplicialComplex& c);

}  // namespace bettisplit
