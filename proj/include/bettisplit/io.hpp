#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bettisplit/complex.hpp"
#include "bettisplit/hochster.hpp"

namespace bettisplit {

// .cplx text: optional first line "n <int>"; one facet per line as
// space-separated vertices; "-" is the empty facet; "#" starts a comment.
SimplicialComplex read_complex_text(std::istream& in);
std::string write_complex_text(const SimplicialComplex& c);

// JSON form { "n": int, "facets": [[int, ...], ...] }; "n" is optional
// and defaults to the largest vertex.
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

// Ideal text: optional "n <int>" line; one squarefree monomial per line,
// either x-syntax (x1*x3*x4) or space-separated variable indices.
MonomialIdeal read_ideal_text(std::istream& in);
std::string write_ideal_text(const MonomialIdeal& ideal);
std::string monomial_str(face_t support);

// Resolves "corpus:<name>" or a filesystem path (JSON sniffed by a leading
// '{').
SimplicialComplex load_complex_arg(const std::string& arg);

}  // namespace bettisplit
