#pragma once

#include <map>
#include <string>
#include <vector>

#include "bettisplit/complex.hpp"
#include "bettisplit/splitting.hpp"

namespace bettisplit {

// Expected record validated on first load: f-vector, reduced Betti vectors
// (k = -1..dim) per characteristic (0 = Q), pseudomanifold flag,
// orientability.
struct CorpusExpected {
    std::vector<long> fvec;
    std::map<std::uint32_t, std::vector<long>> betti;
    bool closed_pseudomanifold = false;
    Orientability orient = Orientability::not_applicable;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    SimplicialComplex complex;
    CorpusExpected expected;
};

const std::vector<std::string>& corpus_names();
// Throws on unknown name; re-validates the expected record once per
// process before first use.
const CorpusEntry& corpus_load(const std::string& name);

}  // namespace bettisplit
