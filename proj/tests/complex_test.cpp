#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bettisplit/complex.hpp"

using namespace bettisplit;

namespace {
face_t F(const std::vector<int>& vs) { return face_from_vertices(vs, 64); }
}  // namespace

TEST_CASE("face mask round trip and helpers") {
    CHECK(face_card(0) == 0);
    CHECK(face_dim(0) == -1);
    auto f = F({2, 5, 7});
    CHECK(face_card(f) == 3);
    CHECK(face_vertices(f) == std::vector<int>{2, 5, 7});
    CHECK(face_str(f) == "2 5 7");
    CHECK(face_str(0) == "-");
    CHECK_THROWS_AS(face_from_vertices({0}, 5), std::invalid_argument);
    CHECK_THROWS_AS(face_from_vertices({6}, 5), std::invalid_argument);
    CHECK_THROWS_AS(face_from_vertices({1, 1}, 5), std::invalid_argument);
}

TEST_CASE("lex order on increasing vertex sequences") {
    // 123 < 13 < 2, and prefixes come first.
    auto f123 = F({1, 2, 3}), f13 = F({1, 3}), f2 = F({2}), f1 = F({1});
    CHECK(face_lex_less(f123, f13));
    CHECK(face_lex_less(f13, f2));
    CHECK(face_lex_less(f1, f123));
    CHECK_FALSE(face_lex_less(f2, f123));
    CHECK_FALSE(face_lex_less(f13, f13));
    // empty face precedes everything
    CHECK(face_lex_less(0, f1));

    std::vector<face_t> v = {f2, f13, f123};
    std::sort(v.begin(), v.end(), face_lex_less);
    CHECK(v == std::vector<face_t>{f123, f13, f2});
}

TEST_CASE("construction canonicalizes facets") {
    SimplicialComplex c({{3}, {1, 2, 3}, {1, 2}}, 4);
    // non-maximal faces dropped, lex order kept
    CHECK(c.facets() == std::vector<face_t>{F({1, 2, 3})});
    CHECK(c.n() == 4);
    CHECK(c.dim() == 2);

    // duplicate facets collapse
    SimplicialComplex d({{1, 2}, {2, 1}});
    CHECK(d.facets().size() == 1);
    CHECK(d.n() == 2);  // inferred from the largest vertex

    // {∅} is a valid complex, the void complex is not
    SimplicialComplex irr({{}}, 3);
    CHECK(irr.is_irrelevant());
    CHECK(irr.dim() == -1);
    CHECK_THROWS_AS(SimplicialComplex({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex({{1, 5}}, 4), std::invalid_argument);
}

TEST_CASE("faces are ordered by cardinality then lex") {
    SimplicialComplex disk({{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}, 5);
    auto fs = disk.faces();
    CHECK(fs.size() == 18);  // 1 + 5 + 8 + 4
    CHECK(disk.face_count() == 18);
    CHECK(fs.front() == 0);
    CHECK(fs[1] == F({1}));
    CHECK(fs[5] == F({5}));
    CHECK(fs[6] == F({1, 2}));
    CHECK(fs.back() == F({3, 4, 5}));
    for (std::size_t i = 1; i < fs.size(); ++i) {
        int ca = face_card(fs[i - 1]), cb = face_card(fs[i]);
        CHECK((ca < cb || (ca == cb && face_lex_less(fs[i - 1], fs[i]))));
    }
    CHECK(disk.contains(F({2, 4})));
    CHECK_FALSE(disk.contains(F({1, 4})));
    CHECK(disk.contains(0));
}

TEST_CASE("links") {
    SimplicialComplex disk({{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}, 5);
    auto lk2 = disk.link(F({2}));
    CHECK(lk2 == SimplicialComplex({{1, 3}, {3, 4}, {4, 5}}, 5));
    auto lk34 = disk.link(F({3, 4}));
    CHECK(lk34 == SimplicialComplex({{2}, {5}}, 5));
    // link of a facet is {∅}
    CHECK(disk.link(F({1, 2, 3})).is_irrelevant());
    // link of ∅ is the complex itself
    CHECK(disk.link(0) == disk);
    CHECK_THROWS_AS(disk.link(F({1, 4})), std::invalid_argument);
}

TEST_CASE("intersection of complexes") {
    SimplicialComplex a({{1, 2, 3}, {2, 4, 5}}, 5);
    SimplicialComplex b({{2, 3, 4}, {3, 4, 5}}, 5);
    CHECK(a.intersect(b) ==
          SimplicialComplex({{2, 3}, {2, 4}, {4, 5}}, 5));
    // intersection can collapse to {∅}
    SimplicialComplex p({{1, 2}}, 4), q({{3, 4}}, 4);
    CHECK(p.intersect(q).is_irrelevant());
    CHECK_THROWS_AS(p.intersect(SimplicialComplex({{1}}, 3)),
                    std::invalid_argument);
}

TEST_CASE("subcomplex keeps the ambient ground set") {
    SimplicialComplex disk({{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}, 5);
    auto sub = subcomplex(disk, {F({1, 2, 3})});
    CHECK(sub.n() == 5);
    CHECK(sub.facets() == std::vector<face_t>{F({1, 2, 3})});
}

TEST_CASE("decompose canonical form puts facet 0 in part1") {
    SimplicialComplex neck({{1, 2, 3}, {3, 4, 5}, {2, 4, 6}}, 6);
    // canonical facet order: 123, 246, 345
    CHECK(neck.facets() ==
          std::vector<face_t>{F({1, 2, 3}), F({2, 4, 6}), F({3, 4, 5})});

    auto d = decompose(neck, std::vector<int>{1});  // part chosen without facet 0
    CHECK((d.part1_index_mask & 1) == 1);           // flipped to the complement
    CHECK(d.part1 == std::vector<face_t>{F({1, 2, 3}), F({3, 4, 5})});
    CHECK(d.part2 == std::vector<face_t>{F({2, 4, 6})});

    auto same = decompose(neck, std::vector<int>{0, 2});
    CHECK(same.part1_index_mask == d.part1_index_mask);

    // parts must partition the facet set
    CHECK_THROWS_AS(decompose(neck, std::uint64_t{0}), std::invalid_argument);
    CHECK_THROWS_AS(decompose(neck, std::uint64_t{7}), std::invalid_argument);
    CHECK_THROWS_AS(decompose(neck, std::vector<int>{0, 3}),
                    std::invalid_argument);

    auto parts_cover = [&](const StandardDecomposition& sd) {
        std::vector<face_t> all = sd.part1;
        all.insert(all.end(), sd.part2.begin(), sd.part2.end());
        std::sort(all.begin(), all.end(), face_lex_less);
        return all == neck.facets();
    };
    CHECK(parts_cover(d));
}

TEST_CASE("remove_facet is the facet-vs-rest decomposition") {
    SimplicialComplex neck({{1, 2, 3}, {3, 4, 5}, {2, 4, 6}}, 6);
    auto r = remove_facet(neck, F({2, 4, 6}));
    CHECK(r.part2 == std::vector<face_t>{F({2, 4, 6})});
    CHECK(r.part1.size() == 2);
    // removing facet 0 still yields a canonical pair
    auto r0 = remove_facet(neck, F({1, 2, 3}));
    CHECK((r0.part1_index_mask & 1) == 1);
    CHECK(r0.part1 == std::vector<face_t>{F({1, 2, 3})});
    CHECK(r0.part2.size() == 2);
    CHECK_THROWS_AS(remove_facet(neck, F({1, 2})), std::invalid_argument);
    // needs at least two facets
    SimplicialComplex single({{1, 2}}, 2);
    CHECK_THROWS_AS(remove_facet(single, F({1, 2})), std::invalid_argument);
}

TEST_CASE("closed pseudomanifold check") {
    SimplicialComplex sphere({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 4);
    auto pm = is_closed_pseudomanifold(sphere);
    CHECK(pm.value);
    CHECK_FALSE(pm.offending.has_value());

    // a disk has boundary ridges in only one facet
    SimplicialComplex disk({{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}, 5);
    auto bad = is_closed_pseudomanifold(disk);
    CHECK_FALSE(bad.value);
    REQUIRE(bad.offending.has_value());
    CHECK(face_card(*bad.offending) == 2);

    // impure complex: offending facet of the wrong dimension
    SimplicialComplex impure({{1, 2, 3}, {4, 5}}, 5);
    auto imp = is_closed_pseudomanifold(impure);
    CHECK_FALSE(imp.value);
    REQUIRE(imp.offending.has_value());

    // three triangles around one edge: every ridge count is off
    SimplicialComplex fan({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}, 5);
    auto f = is_closed_pseudomanifold(fan);
    CHECK_FALSE(f.value);
    REQUIRE(f.offending.has_value());
    CHECK(face_card(*f.offending) == 2);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(SimplicialComplex({{1, 2, 3}, {3, 4}}, 4)));
    CHECK(is_connected(SimplicialComplex({{1}}, 1)));
    CHECK_FALSE(is_connected(SimplicialComplex({{1, 2}, {3, 4}}, 4)));
    CHECK_FALSE(is_connected(SimplicialComplex({{}}, 2)));
}

TEST_CASE("from_masks matches the vertex-list constructor") {
    auto a = SimplicialComplex::from_masks(
        5, {F({1, 2, 3}), F({2, 4, 5})});
    SimplicialComplex b({{1, 2, 3}, {2, 4, 5}}, 5);
    CHECK(a == b);
}
