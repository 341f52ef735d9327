#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bettisplit/complex.hpp"
#include "bettisplit/corpus.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/hochster.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/splitting.hpp"

using namespace bettisplit;

TEST_CASE("corpus inventory") {
    const auto& names = corpus_names();
    CHECK(names == std::vector<std::string>{"sphere2", "sphere3", "disk4",
                                            "necklace3", "torus7", "rp2",
                                            "klein8", "dunce8", "moore9"});
    CHECK_THROWS_AS(corpus_load("nope"), std::invalid_argument);
    for (const auto& n : names) {
        const auto& e = corpus_load(n);
        CHECK(e.name == n);
        CHECK_FALSE(e.description.empty());
        // loads are stable references
        CHECK(&corpus_load(n) == &e);
    }
}

TEST_CASE("vertex and facet counts") {
    auto dims = [](const std::string& n) {
        const auto& c = corpus_load(n).complex;
        return std::pair<int, std::size_t>(c.n(), c.facets().size());
    };
    CHECK(dims("sphere2") == std::pair<int, std::size_t>{4, 4});
    CHECK(dims("sphere3") == std::pair<int, std::size_t>{5, 5});
    CHECK(dims("disk4") == std::pair<int, std::size_t>{5, 4});
    CHECK(dims("necklace3") == std::pair<int, std::size_t>{6, 3});
    CHECK(dims("torus7") == std::pair<int, std::size_t>{7, 14});
    CHECK(dims("rp2") == std::pair<int, std::size_t>{6, 10});
    CHECK(dims("klein8") == std::pair<int, std::size_t>{8, 16});
    CHECK(dims("dunce8") == std::pair<int, std::size_t>{8, 17});
    CHECK(dims("moore9") == std::pair<int, std::size_t>{9, 19});
}

TEST_CASE("expected records hold") {
    for (const auto& n : corpus_names()) {
        const auto& e = corpus_load(n);
        CAPTURE(n);
        CHECK(f_vector(e.complex) == e.expected.fvec);
        for (const auto& [p, betti] : e.expected.betti) {
            auto field =
                p == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p);
            CHECK(reduced_betti_all(e.complex, field) == betti);
        }
        CHECK(is_closed_pseudomanifold(e.complex).value ==
              e.expected.closed_pseudomanifold);
        CHECK(orientability(e.complex) == e.expected.orient);
        CHECK(is_connected(e.complex));
    }
}

TEST_CASE("field-dependence pattern of the top betti number") {
    auto top_nonzero = [](const std::string& n, const FieldSpec& f) {
        const auto& c = corpus_load(n).complex;
        return reduced_betti(c, c.dim(), f) != 0;
    };
    const auto Q = FieldSpec::rationals();
    const auto F2 = FieldSpec::prime_field(2);
    const auto F3 = FieldSpec::prime_field(3);
    const auto F5 = FieldSpec::prime_field(5);

    for (const auto& f : {Q, F2, F3, F5}) {
        CHECK(top_nonzero("sphere2", f));
        CHECK(top_nonzero("torus7", f));
        CHECK_FALSE(top_nonzero("dunce8", f));
    }
    CHECK(top_nonzero("rp2", F2));
    CHECK_FALSE(top_nonzero("rp2", Q));
    CHECK_FALSE(top_nonzero("rp2", F3));
    CHECK(top_nonzero("klein8", F2));
    CHECK_FALSE(top_nonzero("klein8", Q));
    CHECK_FALSE(top_nonzero("klein8", F5));
    CHECK(top_nonzero("moore9", F3));
    CHECK_FALSE(top_nonzero("moore9", Q));
    CHECK_FALSE(top_nonzero("moore9", F2));
    CHECK_FALSE(top_nonzero("moore9", F5));
}
