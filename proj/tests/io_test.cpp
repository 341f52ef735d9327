#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bettisplit/complex.hpp"
#include "bettisplit/corpus.hpp"
#include "bettisplit/hochster.hpp"
#include "bettisplit/io.hpp"

using namespace bettisplit;
using nlohmann::json;

namespace {
face_t F(const std::vector<int>& vs) { return face_from_vertices(vs, 64); }

SimplicialComplex parse(const std::string& text) {
    std::istringstream in(text);
    return read_complex_text(in);
}
}  // namespace

TEST_CASE("complex text parsing") {
    auto c = parse("# comment\nn 5\n\n1 2 3\n2 4 5  # trailing\n");
    CHECK(c.n() == 5);
    CHECK(c.facets() == std::vector<face_t>{F({1, 2, 3}), F({2, 4, 5})});

    // without a header n is the largest vertex
    CHECK(parse("1 2\n3 4\n").n() == 4);

    // "-" names the empty facet
    auto irr = parse("n 3\n-\n");
    CHECK(irr.is_irrelevant());
    CHECK(irr.n() == 3);

    CHECK_THROWS_AS(parse(""), std::runtime_error);
    CHECK_THROWS_AS(parse("n 4\n# only comments\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("1 2 x\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("n 2\n1 5\n"), std::invalid_argument);
}

TEST_CASE("complex text round trip") {
    for (const auto& name : corpus_names()) {
        const auto& c = corpus_load(name).complex;
        CAPTURE(name);
        CHECK(parse(write_complex_text(c)) == c);
    }
    SimplicialComplex irr({{}}, 4);
    CHECK(parse(write_complex_text(irr)) == irr);
}

TEST_CASE("complex JSON round trip") {
    for (const auto& name : corpus_names()) {
        const auto& c = corpus_load(name).complex;
        CAPTURE(name);
        CHECK(complex_from_json(complex_to_json(c)) == c);
    }
    auto j = complex_to_json(corpus_load("disk4").complex);
    CHECK(j["n"] == 5);
    CHECK(j["facets"].is_array());
    CHECK(j["facets"].size() == 4);
}

TEST_CASE("complex JSON validation") {
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"n": 3})")),
                    std::runtime_error);
    // "n" is optional and inferred from the facets
    CHECK(complex_from_json(json::parse(R"({"facets": [[1, 2]]})")).n() == 2);
    CHECK_THROWS_AS(
        complex_from_json(json::parse(R"({"n": "x", "facets": []})")),
        std::runtime_error);
    CHECK_THROWS_AS(
        complex_from_json(json::parse(R"({"n": 2, "facets": [["a"]]})")),
        std::runtime_error);
}

TEST_CASE("ideal text parsing in both syntaxes") {
    std::istringstream xs("n 5\nx1*x2\nx4 * x5\n");
    auto a = read_ideal_text(xs);
    std::istringstream idx("n 5\n1 2\n4 5\n");
    auto b = read_ideal_text(idx);
    CHECK(a.n == 5);
    CHECK(a.generators == b.generators);
    CHECK(a.generators == std::vector<face_t>{F({1, 2}), F({4, 5})});

    // n inferred from the largest variable
    std::istringstream noheader("x2*x7\n");
    CHECK(read_ideal_text(noheader).n == 7);

    // non-minimal generators are pruned to the antichain
    std::istringstream notmin("n 3\nx1\nx1*x2\nx2*x3\n");
    auto m = read_ideal_text(notmin);
    CHECK(m.generators == std::vector<face_t>{F({1}), F({2, 3})});

    std::istringstream empty("");
    CHECK_THROWS_AS(read_ideal_text(empty), std::runtime_error);
    std::istringstream zero("n 3\nx0\n");
    CHECK_THROWS_AS(read_ideal_text(zero), std::runtime_error);
    std::istringstream dup("n 3\nx1*x1\n");
    CHECK_THROWS_AS(read_ideal_text(dup), std::invalid_argument);
}

TEST_CASE("ideal text round trip") {
    for (const auto& name : {"disk4", "necklace3", "torus7"}) {
        auto ideal = alexander_dual_ideal(corpus_load(name).complex);
        std::istringstream in(write_ideal_text(ideal));
        auto back = read_ideal_text(in);
        CAPTURE(name);
        CHECK(back.n == ideal.n);
        CHECK(back.generators == ideal.generators);
    }
    CHECK(monomial_str(F({1, 3})) == "x1*x3");
    CHECK(monomial_str(0) == "1");
}

TEST_CASE("load_complex_arg resolves corpus names and files") {
    auto c = load_complex_arg("corpus:disk4");
    CHECK(c == corpus_load("disk4").complex);
    CHECK_THROWS(load_complex_arg("corpus:nope"));

    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "bettisplit-io-test";
    fs::create_directories(dir);

    auto text_path = dir / "c.cplx";
    std::ofstream(text_path) << write_complex_text(c);
    CHECK(load_complex_arg(text_path.string()) == c);

    auto json_path = dir / "c.json";
    std::ofstream(json_path) << complex_to_json(c).dump();
    CHECK(load_complex_arg(json_path.string()) == c);

    CHECK_THROWS(load_complex_arg((dir / "missing.cplx").string()));
    fs::remove_all(dir);
}
