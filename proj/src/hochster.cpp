#include "bettisplit/hochster.hpp"

#include <algorithm>
#include <stdexcept>

#include "bettisplit/homology.hpp"

namespace bettisplit {

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& c) {
    const face_t full = (c.n() == 64) ? ~face_t(0)
                                      : ((face_t(1) << c.n()) - 1);
    MonomialIdeal ideal;
    ideal.n = c.n();
    for (face_t f : c.facets()) {
        face_t gen = full & ~f;
        if (gen == 0)
            throw std::invalid_argument(
                "facet equals the whole ground set: dual is the unit ideal");
        ideal.generators.push_back(gen);
    }
    std::sort(ideal.generators.begin(), ideal.generators.end(), face_lex_less);
    return ideal;
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal) {
    if (ideal.n < 1 || ideal.n > kMaxVertices)
        throw std::invalid_argument("variable count out of range");
    if (ideal.generators.empty())
        throw std::invalid_argument("ideal needs at least one generator");
    const face_t full =
        (ideal.n == 64) ? ~face_t(0) : ((face_t(1) << ideal.n) - 1);
    for (face_t g : ideal.generators) {
        if (g == 0) throw std::invalid_argument("unit ideal has no dual complex");
        if ((g & ~full) != 0)
            throw std::invalid_argument("generator exceeds variable range");
        for (face_t h : ideal.generators)
            if (g != h && (g & h) == g)
                throw std::invalid_argument(
                    "generators are not an antichain (not minimal)");
    }
    std::vector<face_t> facets;
    for (face_t g : ideal.generators) facets.push_back(full & ~g);
    return SimplicialComplex::from_masks(ideal.n, std::move(facets));
}

long BettiTable::graded_at(int i, int j) const {
    auto it = graded.find({i, j});
    return it == graded.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
    long sum = 0;
    for (const auto& [key, v] : graded)
        if (key.first == i) sum += v;
    return sum;
}

int BettiTable::max_i() const {
    int m = -1;
    for (const auto& [key, v] : graded) m = std::max(m, key.first);
    return m;
}

BettiTable graded_betti(const SimplicialComplex& c, const FieldSpec& field) {
    BettiTable table;
    table.n = c.n();
    for (face_t g : c.faces()) {
        const SimplicialComplex lk = c.link(g);
        const auto betti = reduced_betti_all(lk, field);
        const int j = c.n() - face_card(g);
        for (int k = -1; k <= lk.dim(); ++k) {
            const long v = betti[k + 1];
            if (v == 0) continue;
            const int i = k + 1;
            table.multigraded[{i, g}] += v;
            table.graded[{i, j}] += v;
        }
    }
    return table;
}

long total_betti(const BettiTable& table, int i) { return table.total(i); }

std::vector<long> f_vector(const SimplicialComplex& c) {
    std::vector<long> fv(c.dim() + 2, 0);
    for (face_t f : c.faces()) ++fv[face_card(f)];
    return fv;
}

}  // namespace bettisplit
