#include "bettisplit/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bettisplit/corpus.hpp"

namespace bettisplit {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (const auto hash = s.find('#'); hash != std::string::npos)
        s.erase(hash);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
    std::istringstream iss(s);
    std::vector<int> out;
    int v;
    while (iss >> v) out.push_back(v);
    if (!iss.eof()) {
        std::string tok;
        iss.clear();
        iss >> tok;
        throw std::runtime_error(std::string("bad ") + what + " token '" +
                                 tok + "' in line: " + s);
    }
    return out;
}

// "n <int>" header if present; returns the remaining significant lines
std::pair<std::optional<int>, std::vector<std::string>> split_header(
    std::istream& in) {
    std::optional<int> n;
    std::vector<std::string> lines;
    std::string raw;
    bool first = true;
    while (std::getline(in, raw)) {
        const std::string s = strip(raw);
        if (s.empty()) continue;
        if (first && (s[0] == 'n' || s[0] == 'N') &&
            (s.size() > 1 && (s[1] == ' ' || s[1] == '\t'))) {
            const auto vals = parse_ints(s.substr(1), "header");
            if (vals.size() != 1)
                throw std::runtime_error("malformed header line: " + raw);
            n = vals[0];
            first = false;
            continue;
        }
        first = false;
        lines.push_back(s);
    }
    return {n, lines};
}

}  // namespace

SimplicialComplex read_complex_text(std::istream& in) {
    const auto [n, lines] = split_header(in);
    std::vector<std::vector<int>> facets;
    for (const std::string& s : lines) {
        if (s == "-") {
            facets.push_back({});
            continue;
        }
        facets.push_back(parse_ints(s, "vertex"));
    }
    if (facets.empty())
        throw std::runtime_error("complex file lists no facets");
    return SimplicialComplex(facets, n);
}

std::string write_complex_text(const SimplicialComplex& c) {
    std::ostringstream out;
    out << "n " << c.n() << "\n";
    for (face_t f : c.facets()) {
        if (f == 0) {
            out << "-\n";
            continue;
        }
        const auto vs = face_vertices(f);
        for (std::size_t i = 0; i < vs.size(); ++i)
            out << (i ? " " : "") << vs[i];
        out << "\n";
    }
    return out.str();
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::runtime_error(
            "complex JSON must be an object with a 'facets' array");
    std::optional<int> n;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer())
            throw std::runtime_error("complex JSON field 'n' must be an int");
        n = j["n"].get<int>();
    }
    std::vector<std::vector<int>> facets;
    for (const auto& item : j["facets"]) {
        if (!item.is_array())
            throw std::runtime_error("each facet must be an array of ints");
        std::vector<int> f;
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw std::runtime_error("facet vertices must be ints");
            f.push_back(v.get<int>());
        }
        facets.push_back(std::move(f));
    }
    if (facets.empty()) throw std::runtime_error("complex JSON lists no facets");
    return SimplicialComplex(facets, n);
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json facets = nlohmann::json::array();
    for (face_t f : c.facets()) facets.push_back(face_vertices(f));
    return {{"n", c.n()}, {"facets", facets}};
}

MonomialIdeal read_ideal_text(std::istream& in) {
    const auto [n_opt, lines] = split_header(in);
    std::vector<std::vector<int>> supports;
    for (const std::string& s : lines) {
        if (s.find('x') != std::string::npos ||
            s.find('X') != std::string::npos) {
            std::string norm = s;
            for (char& ch : norm) {
                if (ch == '*' || ch == 'x' || ch == 'X') ch = ' ';
            }
            supports.push_back(parse_ints(norm, "variable"));
        } else {
            supports.push_back(parse_ints(s, "variable"));
        }
        if (supports.back().empty())
            throw std::runtime_error("empty monomial in line: " + s);
    }
    if (supports.empty()) throw std::runtime_error("ideal file lists no generators");

    int n = n_opt.value_or(0);
    for (const auto& sup : supports)
        for (int v : sup) {
            if (v < 1)
                throw std::runtime_error("variable indices start at 1");
            n = std::max(n, v);
        }
    if (n > kMaxVertices)
        throw std::runtime_error("more than 64 variables are not supported");

    std::vector<face_t> gens;
    for (const auto& sup : supports) gens.push_back(face_from_vertices(sup, n));
    std::sort(gens.begin(), gens.end(), face_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // keep only minimal supports
    std::vector<face_t> minimal;
    for (face_t g : gens) {
        bool keep = true;
        for (face_t h : gens)
            if (h != g && (h & g) == h) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(g);
    }
    return MonomialIdeal{n, std::move(minimal)};
}

std::string monomial_str(face_t support) {
    if (support == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (int v : face_vertices(support)) {
        out << (first ? "" : "*") << "x" << v;
        first = false;
    }
    return out.str();
}

std::string write_ideal_text(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "n " << ideal.n << "\n";
    for (face_t g : ideal.generators) out << monomial_str(g) << "\n";
    return out.str();
}

SimplicialComplex load_complex_arg(const std::string& arg) {
    constexpr const char* kPrefix = "corpus:";
    if (arg.rfind(kPrefix, 0) == 0)
        return corpus_load(arg.substr(std::string(kPrefix).size())).complex;
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{')
        return complex_from_json(nlohmann::json::parse(content));
    std::istringstream text(content);
    return read_complex_text(text);
}

}  // namespace bettisplit
