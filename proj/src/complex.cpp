#include "bettisplit/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bettisplit {

int face_card(face_t f) { return std::popcount(f); }

std::vector<int> face_vertices(face_t f) {
    std::vector<int> out;
    while (f) {
        int b = std::countr_zero(f);
        out.push_back(b + 1);
        f &= f - 1;
    }
    return out;
}

face_t face_from_vertices(const std::vector<int>& vertices, int n) {
    face_t f = 0;
    for (int v : vertices) {
        if (v < 1) throw std::invalid_argument("vertices are positive integers");
        if (v > n)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " exceeds ground set size " +
                                        std::to_string(n));
        const face_t bit = face_t(1) << (v - 1);
        if (f & bit)
            throw std::invalid_argument("duplicate vertex " +
                                        std::to_string(v) + " in face");
        f |= bit;
    }
    return f;
}

bool face_lex_less(face_t a, face_t b) {
    // lexicographic on increasing vertex sequences, e.g. 123 < 13 < 2
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string face_str(face_t f) {
    if (f == 0) return "-";
    std::ostringstream os;
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    return os.str();
}

namespace {

std::vector<face_t> maximalize(std::vector<face_t> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<face_t> out;
    for (face_t f : faces) {
        bool maximal = true;
        for (face_t g : faces)
            if (f != g && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    const std::vector<std::vector<int>>& facet_list, std::optional<int> n) {
    if (facet_list.empty())
        throw std::invalid_argument("the void complex is unsupported");
    int max_vertex = 0;
    for (const auto& f : facet_list)
        for (int v : f) max_vertex = std::max(max_vertex, v);
    int nn = n.value_or(max_vertex);
    if (nn < max_vertex)
        throw std::invalid_argument("vertex exceeds explicit n");
    if (nn > kMaxVertices)
        throw std::invalid_argument("ground sets beyond 64 vertices unsupported");
    std::vector<face_t> masks;
    masks.reserve(facet_list.size());
    for (const auto& f : facet_list) {
        face_t m = face_from_vertices(f, nn == 0 ? kMaxVertices : nn);
        if (static_cast<int>(f.size()) != face_card(m))
            throw std::invalid_argument("facet has repeated vertices");
        masks.push_back(m);
    }
    *this = from_masks(nn, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(int n,
                                                std::vector<face_t> facets) {
    if (facets.empty())
        throw std::invalid_argument("the void complex is unsupported");
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("ground set size out of range");
    for (face_t f : facets)
        if (n < kMaxVertices && (f >> n) != 0)
            throw std::invalid_argument("facet exceeds ground set");
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = maximalize(std::move(facets));
    c.dim_ = -1;
    for (face_t f : c.facets_) c.dim_ = std::max(c.dim_, face_dim(f));
    return c;
}

std::vector<face_t> SimplicialComplex::faces() const {
    std::unordered_set<face_t> seen;
    for (face_t f : facets_) {
        // enumerate all submasks of f, including 0
        face_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<face_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](face_t a, face_t b) {
        int ca = face_card(a), cb = face_card(b);
        if (ca != cb) return ca < cb;
        return face_lex_less(a, b);
    });
    return out;
}

std::size_t SimplicialComplex::face_count() const { return faces().size(); }

bool SimplicialComplex::contains(face_t f) const {
    for (face_t g : facets_)
        if ((f & g) == f) return true;
    return false;
}

SimplicialComplex SimplicialComplex::link(face_t f) const {
    if (!contains(f))
        throw std::invalid_argument("link of a non-face: " + face_str(f));
    std::vector<face_t> out;
    for (face_t g : facets_)
        if ((f & g) == f) out.push_back(g & ~f);
    return from_masks(n_, std::move(out));
}

SimplicialComplex SimplicialComplex::intersect(
    const SimplicialComplex& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("intersect requires matching ground sets");
    std::vector<face_t> out;
    out.reserve(facets_.size() * other.facets_.size());
    for (face_t a : facets_)
        for (face_t b : other.facets_) out.push_back(a & b);
    return from_masks(n_, std::move(out));
}

SimplicialComplex subcomplex(const SimplicialComplex& parent,
                             const std::vector<face_t>& part) {
    if (part.empty()) throw std::invalid_argument("empty facet subset");
    return SimplicialComplex::from_masks(parent.n(), part);
}

StandardDecomposition decompose(const SimplicialComplex& parent,
                                std::uint64_t part1_index_mask) {
    const auto& facets = parent.facets();
    const std::size_t m = facets.size();
    if (m < 2)
        throw std::invalid_argument(
            "standard decompositions need at least two facets");
    if (m > 64) throw std::invalid_argument("too many facets to index");
    const std::uint64_t all =
        (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
    std::uint64_t mask = part1_index_mask & all;
    if (mask == 0 || mask == all)
        throw std::invalid_argument("both parts must be nonempty");
    if ((mask & 1) == 0) mask = all & ~mask;  // canonical: facet 0 in part1
    StandardDecomposition d;
    d.part1_index_mask = mask;
    for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1)
            d.part1.push_back(facets[i]);
        else
            d.part2.push_back(facets[i]);
    }
    return d;
}

StandardDecomposition decompose(const SimplicialComplex& parent,
                                const std::vector<int>& part1_indices) {
    if (part1_indices.empty())
        throw std::invalid_argument("part1 index list is empty");
    std::uint64_t mask = 0;
    for (int i : part1_indices) {
        if (i < 0 || i >= static_cast<int>(parent.facets().size()))
            throw std::invalid_argument("facet index out of range: " +
                                        std::to_string(i));
        mask |= std::uint64_t(1) << i;
    }
    return decompose(parent, mask);
}

StandardDecomposition remove_facet(const SimplicialComplex& parent, face_t f) {
    const auto& facets = parent.facets();
    auto it = std::find(facets.begin(), facets.end(), f);
    if (it == facets.end())
        throw std::invalid_argument("not a facet: " + face_str(f));
    if (facets.size() < 2)
        throw std::invalid_argument("cannot remove the only facet");
    const std::size_t idx = it - facets.begin();
    const std::uint64_t all = (std::uint64_t(1) << facets.size()) - 1;
    return decompose(parent, all & ~(std::uint64_t(1) << idx));
}

PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& c) {
    const int d = c.dim();
    for (face_t f : c.facets())
        if (face_dim(f) != d) return {false, f};
    if (d < 0) return {true, std::nullopt};
    // count facets over each (d-1)-face
    std::vector<face_t> ridges;
    std::vector<int> counts;
    for (face_t f : c.facets()) {
        for (int v : face_vertices(f)) {
            face_t r = f & ~(face_t(1) << (v - 1));
            auto it = std::find(ridges.begin(), ridges.end(), r);
            if (it == ridges.end()) {
                ridges.push_back(r);
                counts.push_back(1);
            } else {
                ++counts[it - ridges.begin()];
            }
        }
    }
    for (std::size_t i = 0; i < ridges.size(); ++i)
        if (counts[i] != 2) return {false, ridges[i]};
    return {true, std::nullopt};
}

bool is_connected(const SimplicialComplex& c) {
    if (c.is_irrelevant()) return false;
    face_t verts = 0;
    for (face_t f : c.facets()) verts |= f;
    std::vector<int> vs = face_vertices(verts);
    if (vs.empty()) return false;
    // union-find over vertices; each facet merges its vertex set
    std::vector<int> parent(kMaxVertices);
    for (int i = 0; i < kMaxVertices; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (face_t f : c.facets()) {
        std::vector<int> fv = face_vertices(f);
        for (std::size_t i = 1; i < fv.size(); ++i) {
            int ra = find(fv[0] - 1), rb = find(fv[i] - 1);
            if (ra != rb) parent[ra] = rb;
        }
    }
    int root = find(vs[0] - 1);
    for (int v : vs)
        if (find(v - 1) != root) return false;
    return true;
}

}  // namespace bettisplit
