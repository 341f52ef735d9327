#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "bettisplit/complex.hpp"
#include "bettisplit/corpus.hpp"
#include "bettisplit/enumerate.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/hochster.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/splitting.hpp"

namespace py = pybind11;
using namespace bettisplit;

namespace {

FieldSpec field_of(const std::string& s) { return FieldSpec::parse(s); }

std::vector<std::vector<int>> to_lists(const std::vector<face_t>& faces) {
    std::vector<std::vector<int>> out;
    out.reserve(faces.size());
    for (face_t f : faces) out.push_back(face_vertices(f));
    return out;
}

face_t to_face(const std::vector<int>& vs, int n) {
    return face_from_vertices(vs, n);
}

py::dict report_dict(const SplittingReport& r) {
    py::dict d;
    d["yes"] = r.yes;
    switch (r.mode) {
        case SplitMode::homology: d["mode"] = "hom"; break;
        case SplitMode::betti_direct: d["mode"] = "betti"; break;
        case SplitMode::betti_recursive: d["mode"] = "betti-recursive"; break;
        default: d["mode"] = "mv"; break;
    }
    switch (r.witness) {
        case SplittingReport::Witness::degree_pair: {
            py::dict w;
            w["type"] = "degree_pair";
            w["i"] = r.i;
            w["j"] = r.j;
            w["lhs"] = r.lhs;
            w["part1"] = r.part1;
            w["part2"] = r.part2;
            w["inter"] = r.inter;
            d["witness"] = w;
            break;
        }
        case SplittingReport::Witness::homology_degree: {
            py::dict w;
            w["type"] = "homology_degree";
            w["k"] = r.k;
            w["lhs"] = r.lhs;
            w["part1"] = r.part1;
            w["part2"] = r.part2;
            w["inter"] = r.inter;
            d["witness"] = w;
            break;
        }
        case SplittingReport::Witness::face: {
            py::dict w;
            w["type"] = "face";
            w["face"] = face_vertices(r.face);
            d["witness"] = w;
            break;
        }
        case SplittingReport::Witness::mv_degree: {
            py::dict w;
            w["type"] = "mv_degree";
            w["k"] = r.k;
            w["map_rank"] = r.map_rank;
            d["witness"] = w;
            break;
        }
        default:
            d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "simplicial Betti-splitting toolkit";

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<int>>& facets,
                         std::optional<int> n) {
                 return SimplicialComplex(facets, n);
             }),
             py::arg("facets"), py::arg("n") = std::nullopt)
        .def_property_readonly("n", &SimplicialComplex::n)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def("facets",
             [](const SimplicialComplex& c) { return to_lists(c.facets()); })
        .def("faces",
             [](const SimplicialComplex& c) { return to_lists(c.faces()); })
        .def("contains",
             [](const SimplicialComplex& c, const std::vector<int>& f) {
                 return c.contains(to_face(f, c.n()));
             })
        .def("link",
             [](const SimplicialComplex& c, const std::vector<int>& f) {
                 return c.link(to_face(f, c.n()));
             })
        .def("intersect", &SimplicialComplex::intersect)
        .def("__eq__",
             [](const SimplicialComplex& a, const SimplicialComplex& b) {
                 return a == b;
             })
        .def("__repr__", [](const SimplicialComplex& c) {
            return "<SimplicialComplex n=" + std::to_string(c.n()) +
                   " facets=" + std::to_string(c.facets().size()) + ">";
        });

    py::class_<StandardDecomposition>(m, "StandardDecomposition")
        .def_property_readonly(
            "part1",
            [](const StandardDecomposition& d) { return to_lists(d.part1); })
        .def_property_readonly(
            "part2",
            [](const StandardDecomposition& d) { return to_lists(d.part2); })
        .def_property_readonly(
            "part1_indices", [](const StandardDecomposition& d) {
                std::vector<int> out;
                for (int i = 0; i < 64; ++i)
                    if ((d.part1_index_mask >> i) & 1) out.push_back(i);
                return out;
            });

    m.def(
        "reduced_betti_all",
        [](const SimplicialComplex& c, const std::string& field) {
            return reduced_betti_all(c, field_of(field));
        },
        py::arg("complex"), py::arg("field") = "Q",
        "reduced Betti numbers, k = -1..dim");
    m.def(
        "reduced_betti",
        [](const SimplicialComplex& c, int k, const std::string& field) {
            return reduced_betti(c, k, field_of(field));
        },
        py::arg("complex"), py::arg("k"), py::arg("field") = "Q");
    m.def(
        "is_acyclic",
        [](const SimplicialComplex& c, const std::string& field) {
            return is_acyclic(c, field_of(field));
        },
        py::arg("complex"), py::arg("field") = "Q");
    m.def("f_vector", &f_vector, py::arg("complex"));

    m.def(
        "graded_betti",
        [](const SimplicialComplex& c, const std::string& field) {
            py::dict out;
            for (const auto& [key, value] : graded_betti(c, field_of(field)).graded)
                out[py::make_tuple(key.first, key.second)] = value;
            return out;
        },
        py::arg("complex"), py::arg("field") = "Q",
        "graded Betti numbers of the Alexander-dual ideal as {(i, j): count}");

    m.def(
        "alexander_dual_ideal",
        [](const SimplicialComplex& c) {
            const MonomialIdeal ideal = alexander_dual_ideal(c);
            return py::make_tuple(ideal.n, to_lists(ideal.generators));
        },
        py::arg("complex"), "returns (n, generator supports)");
    m.def(
        "complex_from_ideal",
        [](int n, const std::vector<std::vector<int>>& gens) {
            MonomialIdeal ideal;
            ideal.n = n;
            for (const auto& g : gens) ideal.generators.push_back(to_face(g, n));
            std::sort(ideal.generators.begin(), ideal.generators.end(),
                      face_lex_less);
            return complex_from_ideal(ideal);
        },
        py::arg("n"), py::arg("generators"));

    m.def(
        "decompose",
        [](const SimplicialComplex& c, const std::vector<int>& part1_indices) {
            return decompose(c, part1_indices);
        },
        py::arg("complex"), py::arg("part1_indices"));
    m.def(
        "remove_facet",
        [](const SimplicialComplex& c, const std::vector<int>& facet) {
            return remove_facet(c, to_face(facet, c.n()));
        },
        py::arg("complex"), py::arg("facet"));
    m.def("decomposition_count", &decomposition_count, py::arg("m"));
    m.def("decomposition_at", &decomposition_at, py::arg("complex"),
          py::arg("t"));

    m.def(
        "is_homology_splitting",
        [](const SimplicialComplex& c, const StandardDecomposition& d,
           const std::string& field) {
            return report_dict(is_homology_splitting(c, d, field_of(field)));
        },
        py::arg("complex"), py::arg("decomposition"), py::arg("field") = "Q");
    m.def(
        "is_betti_splitting",
        [](const SimplicialComplex& c, const StandardDecomposition& d,
           const std::string& field) {
            return report_dict(
                is_betti_splitting_direct(c, d, field_of(field)));
        },
        py::arg("complex"), py::arg("decomposition"), py::arg("field") = "Q");
    m.def(
        "is_betti_splitting_recursive",
        [](const SimplicialComplex& c, const StandardDecomposition& d,
           const std::string& field) {
            return report_dict(
                is_betti_splitting_recursive(c, d, field_of(field)));
        },
        py::arg("complex"), py::arg("decomposition"), py::arg("field") = "Q");
    m.def(
        "mayer_vietoris_maps_vanish",
        [](const SimplicialComplex& c, const StandardDecomposition& d,
           const std::string& field) {
            return report_dict(
                mayer_vietoris_maps_vanish(c, d, field_of(field)));
        },
        py::arg("complex"), py::arg("decomposition"), py::arg("field") = "Q");

    m.def(
        "essential_facets",
        [](const SimplicialComplex& c, const std::string& field,
           bool full_pattern) {
            return to_lists(essential_facets(c, field_of(field), full_pattern));
        },
        py::arg("complex"), py::arg("field") = "Q",
        py::arg("full_pattern") = false);
    m.def(
        "orientability",
        [](const SimplicialComplex& c) {
            return orientability_str(orientability(c));
        },
        py::arg("complex"));
    m.def(
        "is_closed_pseudomanifold",
        [](const SimplicialComplex& c) {
            return is_closed_pseudomanifold(c).value;
        },
        py::arg("complex"));
    m.def("is_connected", &is_connected, py::arg("complex"));

    m.def(
        "is_trivially_decomposable",
        [](const SimplicialComplex& c, const std::string& field) {
            return is_trivially_decomposable(c, field_of(field));
        },
        py::arg("complex"), py::arg("field") = "Q",
        "first decomposition with acyclic-in-degree-(d-1) intersection, or None");
    m.def(
        "splitting_probability",
        [](const SimplicialComplex& c, const std::string& field,
           const std::string& kind, std::uint64_t sample_size,
           std::uint64_t seed, int budget) {
            ProbabilityKind k = ProbabilityKind::betti;
            if (kind == "hom") k = ProbabilityKind::homology;
            else if (kind == "facet") k = ProbabilityKind::facet;
            else if (kind != "betti")
                throw std::invalid_argument("kind must be betti, hom or facet");
            std::optional<SampleSpec> sample;
            if (sample_size > 0) sample = SampleSpec{sample_size, seed};
            const ProbabilityReport r =
                splitting_probability(c, field_of(field), k, sample, budget);
            py::dict d;
            d["kind"] = kind;
            d["total"] = r.total;
            d["hits"] = r.hits;
            d["ratio"] = r.ratio();
            d["sampled"] = r.sampled;
            return d;
        },
        py::arg("complex"), py::arg("field") = "Q", py::arg("kind") = "betti",
        py::arg("sample_size") = 0, py::arg("seed") = 0, py::arg("budget") = 20);
    m.def(
        "admits_betti_splitting",
        [](const SimplicialComplex& c, const std::string& field, bool prune,
           int budget) {
            return admits_betti_splitting(c, field_of(field), prune, budget);
        },
        py::arg("complex"), py::arg("field") = "Q", py::arg("prune") = true,
        py::arg("budget") = 20);
    m.def(
        "admits_homology_splitting",
        [](const SimplicialComplex& c, const std::string& field, int budget) {
            return admits_homology_splitting(c, field_of(field), budget);
        },
        py::arg("complex"), py::arg("field") = "Q", py::arg("budget") = 20);

    m.def("corpus_names",
          []() { return corpus_names(); });
    m.def(
        "corpus_load",
        [](const std::string& name) { return corpus_load(name).complex; },
        py::arg("name"));
    m.def(
        "corpus_description",
        [](const std::string& name) { return corpus_load(name).description; },
        py::arg("name"));
}
