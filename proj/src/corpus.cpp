#include "bettisplit/corpus.hpp"

#include <stdexcept>

#include "bettisplit/hochster.hpp"
#include "bettisplit/homology.hpp"

namespace bettisplit {

namespace {

using V = std::vector<int>;
using B = std::vector<long>;

struct RawEntry {
    const char* name;
    const char* description;
    int n;
    std::vector<V> facets;
    CorpusExpected expected;
};

std::vector<RawEntry> raw_entries() {
    std::vector<RawEntry> raw;

    raw.push_back({"sphere2",
                   "boundary of the 3-simplex, the minimal 2-sphere",
                   4,
                   {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
                   {{1, 4, 6, 4},
                    {{0, {0, 0, 0, 1}},
                     {2, {0, 0, 0, 1}},
                     {3, {0, 0, 0, 1}},
                     {5, {0, 0, 0, 1}}},
                    true,
                    Orientability::orientable}});

    raw.push_back({"sphere3",
                   "boundary of the 4-simplex, the minimal 3-sphere",
                   5,
                   {{1, 2, 3, 4},
                    {1, 2, 3, 5},
                    {1, 2, 4, 5},
                    {1, 3, 4, 5},
                    {2, 3, 4, 5}},
                   {{1, 5, 10, 10, 5},
                    {{0, {0, 0, 0, 0, 1}},
                     {2, {0, 0, 0, 0, 1}},
                     {3, {0, 0, 0, 0, 1}},
                     {5, {0, 0, 0, 0, 1}}},
                    true,
                    Orientability::orientable}});

    raw.push_back({"disk4",
                   "four-triangle disk on five vertices",
                   5,
                   {{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}},
                   {{1, 5, 8, 4},
                    {{0, {0, 0, 0, 0}},
                     {2, {0, 0, 0, 0}},
                     {3, {0, 0, 0, 0}},
                     {5, {0, 0, 0, 0}}},
                    false,
                    Orientability::not_applicable}});

    raw.push_back({"necklace3",
                   "three triangles glued vertex-to-vertex in a cycle",
                   6,
                   {{1, 2, 3}, {3, 4, 5}, {2, 4, 6}},
                   {{1, 6, 9, 3},
                    {{0, {0, 0, 1, 0}},
                     {2, {0, 0, 1, 0}},
                     {3, {0, 0, 1, 0}},
                     {5, {0, 0, 1, 0}}},
                    false,
                    Orientability::not_applicable}});

    raw.push_back({"torus7",
                   "7-vertex torus, the unique vertex-minimal triangulation",
                   7,
                   {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 7}, {1, 5, 6},
                    {1, 5, 7}, {2, 3, 5}, {2, 3, 7}, {2, 4, 5}, {2, 6, 7},
                    {3, 4, 6}, {3, 5, 6}, {4, 5, 7}, {4, 6, 7}},
                   {{1, 7, 21, 14},
                    {{0, {0, 0, 2, 1}},
                     {2, {0, 0, 2, 1}},
                     {3, {0, 0, 2, 1}},
                     {5, {0, 0, 2, 1}}},
                    true,
                    Orientability::orientable}});

    raw.push_back({"rp2",
                   "6-vertex real projective plane",
                   6,
                   {{1, 2, 3}, {1, 2, 6}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}},
                   {{1, 6, 15, 10},
                    {{0, {0, 0, 0, 0}},
                     {2, {0, 0, 1, 1}},
                     {3, {0, 0, 0, 0}},
                     {5, {0, 0, 0, 0}}},
                    true,
                    Orientability::non_orientable}});

    raw.push_back({"klein8",
                   "8-vertex Klein bottle",
                   8,
                   {{1, 2, 5}, {1, 2, 8}, {1, 3, 4}, {1, 3, 7}, {1, 4, 5},
                    {1, 6, 7}, {1, 6, 8}, {2, 3, 5}, {2, 3, 7}, {2, 7, 8},
                    {3, 4, 6}, {3, 5, 8}, {3, 6, 8}, {4, 5, 7}, {4, 6, 7},
                    {5, 7, 8}},
                   {{1, 8, 24, 16},
                    {{0, {0, 0, 1, 0}},
                     {2, {0, 0, 2, 1}},
                     {3, {0, 0, 1, 0}},
                     {5, {0, 0, 1, 0}}},
                    true,
                    Orientability::non_orientable}});

    raw.push_back({"dunce8",
                   "8-vertex dunce hat, contractible but not collapsible",
                   8,
                   {{1, 2, 4}, {1, 2, 5}, {1, 2, 8}, {1, 3, 5}, {1, 3, 6},
                    {1, 3, 7}, {1, 4, 8}, {1, 6, 7}, {2, 3, 4}, {2, 3, 6},
                    {2, 3, 7}, {2, 5, 6}, {2, 7, 8}, {3, 4, 5}, {4, 5, 6},
                    {4, 6, 7}, {4, 7, 8}},
                   {{1, 8, 24, 17},
                    {{0, {0, 0, 0, 0}},
                     {2, {0, 0, 0, 0}},
                     {3, {0, 0, 0, 0}},
                     {5, {0, 0, 0, 0}}},
                    false,
                    Orientability::not_applicable}});

    raw.push_back({"moore9",
                   "9-vertex Moore space with 3-torsion in degree 1",
                   9,
                   {{1, 2, 4}, {1, 2, 6}, {1, 2, 8}, {1, 3, 5}, {1, 3, 7},
                    {1, 3, 9}, {1, 4, 9}, {1, 5, 6}, {1, 7, 8}, {2, 3, 4},
                    {2, 3, 6}, {2, 3, 8}, {3, 4, 5}, {3, 6, 7}, {3, 8, 9},
                    {4, 5, 6}, {4, 6, 7}, {4, 7, 8}, {4, 8, 9}},
                   {{1, 9, 27, 19},
                    {{0, {0, 0, 0, 0}},
                     {2, {0, 0, 0, 0}},
                     {3, {0, 0, 1, 1}},
                     {5, {0, 0, 0, 0}}},
                    false,
                    Orientability::not_applicable}});

    return raw;
}

FieldSpec field_of(std::uint32_t characteristic) {
    return characteristic == 0 ? FieldSpec::rationals()
                               : FieldSpec::prime_field(characteristic);
}

void validate(const CorpusEntry& e) {
    auto fail = [&](const std::string& what) {
        throw std::logic_error("corpus entry '" + e.name +
                               "' failed its expected record: " + what);
    };
    if (f_vector(e.complex) != e.expected.fvec) fail("f-vector");
    for (const auto& [ch, betti] : e.expected.betti)
        if (reduced_betti_all(e.complex, field_of(ch)) != betti)
            fail("betti vector, characteristic " + std::to_string(ch));
    if (is_closed_pseudomanifold(e.complex).value !=
        e.expected.closed_pseudomanifold)
        fail("pseudomanifold flag");
    if (orientability(e.complex) != e.expected.orient) fail("orientability");
}

const std::vector<CorpusEntry>& entries() {
    static const std::vector<CorpusEntry> all = [] {
        std::vector<CorpusEntry> out;
        for (const RawEntry& r : raw_entries()) {
            CorpusEntry e{r.name, r.description,
                          SimplicialComplex(r.facets, r.n), r.expected};
            validate(e);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return all;
}

}  // namespace

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : entries()) out.push_back(e.name);
        return out;
    }();
    return names;
}

const CorpusEntry& corpus_load(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown corpus complex: " + name);
}

}  // namespace bettisplit
