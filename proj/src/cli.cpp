#include "bettisplit/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bettisplit/complex.hpp"
#include "bettisplit/corpus.hpp"
#include "bettisplit/enumerate.hpp"
#include "bettisplit/field.hpp"
#include "bettisplit/hochster.hpp"
#include "bettisplit/homology.hpp"
#include "bettisplit/io.hpp"
#include "bettisplit/splitting.hpp"

namespace bettisplit {

namespace {

constexpr const char* kSchema = "bettisplit/1";

using nlohmann::json;

struct Emitter {
    bool as_json = false;
    std::ostream& out;
    void line(const std::string& text, json j) {
        if (as_json) {
            j["schema"] = kSchema;
            out << j.dump() << "\n";
        } else {
            out << text << "\n";
        }
    }
};

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& raw) {
    std::vector<FieldSpec> out;
    if (raw.empty()) {
        out.push_back(FieldSpec::rationals());
        return out;
    }
    for (const auto& s : raw) out.push_back(FieldSpec::parse(s));
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string mode_name(SplitMode m) {
    switch (m) {
        case SplitMode::homology: return "hom";
        case SplitMode::betti_direct: return "betti";
        case SplitMode::betti_recursive: return "betti-recursive";
        default: return "mv";
    }
}

std::string witness_text(const SplittingReport& r) {
    std::ostringstream os;
    switch (r.witness) {
        case SplittingReport::Witness::degree_pair:
            os << " witness=(i=" << r.i << ",j=" << r.j << "): " << r.lhs
               << " != " << r.part1 << "+" << r.part2 << "+" << r.inter;
            break;
        case SplittingReport::Witness::homology_degree:
            os << " witness=(k=" << r.k << "): " << r.lhs << " != " << r.part1
               << "+" << r.part2 << "+" << r.inter;
            break;
        case SplittingReport::Witness::face:
            os << " witness=face[" << face_str(r.face) << "]";
            break;
        case SplittingReport::Witness::mv_degree:
            os << " witness=(k=" << r.k << ") map_rank=" << r.map_rank;
            break;
        default:
            break;
    }
    return os.str();
}

json witness_json(const SplittingReport& r) {
    switch (r.witness) {
        case SplittingReport::Witness::degree_pair:
            return {{"type", "degree_pair"}, {"i", r.i},         {"j", r.j},
                    {"lhs", r.lhs},          {"part1", r.part1}, {"part2", r.part2},
                    {"inter", r.inter}};
        case SplittingReport::Witness::homology_degree:
            return {{"type", "homology_degree"}, {"k", r.k},
                    {"lhs", r.lhs},              {"part1", r.part1},
                    {"part2", r.part2},          {"inter", r.inter}};
        case SplittingReport::Witness::face:
            return {{"type", "face"}, {"face", face_vertices(r.face)}};
        case SplittingReport::Witness::mv_degree:
            return {{"type", "mv_degree"}, {"k", r.k}, {"map_rank", r.map_rank}};
        default:
            return nullptr;
    }
}

std::vector<int> mask_indices(std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

json faces_json(const std::vector<face_t>& faces) {
    json arr = json::array();
    for (face_t f : faces) arr.push_back(face_vertices(f));
    return arr;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    const double s =
        std::chrono::duration_cast<std::chrono::microseconds>(dt).count() /
        1e6;
    return std::round(s * 1000.0) / 1000.0;
}

std::string seconds_str(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << "s";
    return os.str();
}

std::vector<int> parse_index_list(const std::string& arg) {
    std::vector<int> out;
    std::string token;
    std::istringstream iss(arg);
    while (std::getline(iss, token, ',')) {
        if (token.empty())
            throw std::runtime_error("empty index in --split list");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw std::runtime_error("bad index '" + token + "' in --split");
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("--split needs at least one index");
    return out;
}

int run_homology(const std::string& input, const std::vector<FieldSpec>& fields,
                 Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    for (const FieldSpec& f : fields) {
        const auto betti = reduced_betti_all(c, f);
        std::ostringstream os;
        os << "field=" << f.str() << " n=" << c.n() << " dim=" << c.dim()
           << " betti(k=-1.." << c.dim() << ")= " << join_longs(betti);
        em.line(os.str(), {{"command", "homology"},
                           {"input", input},
                           {"field", f.str()},
                           {"n", c.n()},
                           {"dim", c.dim()},
                           {"k_min", -1},
                           {"betti", betti}});
    }
    return 0;
}

int run_betti(const std::string& input, const std::vector<FieldSpec>& fields,
              Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    for (const FieldSpec& f : fields) {
        const BettiTable table = graded_betti(c, f);
        json entries = json::array();
        for (const auto& [key, value] : table.graded)
            entries.push_back(
                {{"i", key.first}, {"j", key.second}, {"value", value}});
        json totals = json::array();
        for (int i = 0; i <= table.max_i(); ++i)
            totals.push_back({i, table.total(i)});

        std::ostringstream os;
        os << "field=" << f.str() << " n=" << table.n << "\n";
        std::vector<int> js;
        for (const auto& [key, value] : table.graded)
            if (js.empty() || js.back() != key.second) js.push_back(key.second);
        std::sort(js.begin(), js.end());
        js.erase(std::unique(js.begin(), js.end()), js.end());
        os << "  i\\j";
        for (int j : js) os << std::setw(6) << j;
        for (int i = 0; i <= table.max_i(); ++i) {
            os << "\n" << std::setw(5) << i;
            for (int j : js) {
                const long v = table.graded_at(i, j);
                if (v == 0)
                    os << std::setw(6) << ".";
                else
                    os << std::setw(6) << v;
            }
        }
        os << "\ntotal";
        for (int i = 0; i <= table.max_i(); ++i)
            os << " i=" << i << ":" << table.total(i);
        em.line(os.str(), {{"command", "betti"},
                           {"input", input},
                           {"field", f.str()},
                           {"n", table.n},
                           {"entries", entries},
                           {"totals", totals}});
    }
    return 0;
}

int run_dualize(const std::string& input, bool from_ideal, Emitter& em,
                std::ostream& out) {
    if (from_ideal) {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);
        const MonomialIdeal ideal = read_ideal_text(in);
        const SimplicialComplex c = complex_from_ideal(ideal);
        if (em.as_json) {
            json j = complex_to_json(c);
            out << j.dump() << "\n";
        } else {
            out << write_complex_text(c);
        }
        return 0;
    }
    const SimplicialComplex c = load_complex_arg(input);
    const MonomialIdeal ideal = alexander_dual_ideal(c);
    if (em.as_json) {
        json gens = json::array();
        for (face_t g : ideal.generators) gens.push_back(face_vertices(g));
        json j{{"schema", kSchema},
               {"command", "dualize"},
               {"n", ideal.n},
               {"generators", gens}};
        out << j.dump() << "\n";
    } else {
        out << write_ideal_text(ideal);
    }
    return 0;
}

int run_check(const std::string& input, const std::string& split_arg,
              const std::string& mode, const std::vector<FieldSpec>& fields,
              Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    const StandardDecomposition dec = decompose(c, parse_index_list(split_arg));
    int exit_code = 0;
    for (const FieldSpec& f : fields) {
        SplittingReport r;
        if (mode == "hom")
            r = is_homology_splitting(c, dec, f);
        else if (mode == "betti")
            r = is_betti_splitting_direct(c, dec, f);
        else if (mode == "betti-recursive")
            r = is_betti_splitting_recursive(c, dec, f);
        else
            r = mayer_vietoris_maps_vanish(c, dec, f);
        if (!r.yes) exit_code = 1;

        std::ostringstream os;
        os << "field=" << f.str() << " mode=" << mode_name(r.mode)
           << " verdict=" << (r.yes ? "yes" : "no") << witness_text(r);
        em.line(os.str(), {{"command", "check"},
                           {"input", input},
                           {"field", f.str()},
                           {"mode", mode_name(r.mode)},
                           {"part1_indices", mask_indices(dec.part1_index_mask)},
                           {"yes", r.yes},
                           {"witness", witness_json(r)}});
    }
    return exit_code;
}

int run_essential(const std::string& input,
                  const std::vector<FieldSpec>& fields, bool full_pattern,
                  Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    for (const FieldSpec& f : fields) {
        const auto ess = essential_facets(c, f, full_pattern);
        std::ostringstream os;
        os << "field=" << f.str() << " count=" << ess.size() << " facets=";
        for (face_t g : ess) os << " [" << face_str(g) << "]";
        em.line(os.str(), {{"command", "essential"},
                           {"input", input},
                           {"field", f.str()},
                           {"full_pattern", full_pattern},
                           {"facets", faces_json(ess)}});
    }
    return 0;
}

int run_orient(const std::string& input, Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    const Orientability o = orientability(c);
    em.line("result=" + orientability_str(o),
            {{"command", "orient"},
             {"input", input},
             {"result", orientability_str(o)}});
    return 0;
}

int run_enumerate(const std::string& input, const std::string& goal,
                  const std::vector<FieldSpec>& fields, int budget,
                  bool no_prune, Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    const std::uint64_t space =
        decomposition_count(static_cast<int>(c.facets().size()));
    int exit_code = 0;
    for (const FieldSpec& f : fields) {
        const auto t0 = std::chrono::steady_clock::now();
        std::optional<StandardDecomposition> witness;
        if (goal == "trivial")
            witness = is_trivially_decomposable(c, f);
        else if (goal == "hom")
            witness = admits_homology_splitting(c, f, budget);
        else
            witness = admits_betti_splitting(c, f, !no_prune, budget);
        const double sec = elapsed_since(t0);
        if (!witness) exit_code = 1;

        std::ostringstream os;
        os << "field=" << f.str() << " goal=" << goal << " space=" << space;
        json j{{"command", "enumerate"}, {"input", input},
               {"goal", goal},           {"field", f.str()},
               {"space", space},         {"found", witness.has_value()},
               {"elapsed_s", sec}};
        if (witness) {
            const auto idx = mask_indices(witness->part1_index_mask);
            os << " found=yes part1=" << join_ints(idx, ',');
            j["part1_indices"] = idx;
            j["part1"] = faces_json(witness->part1);
            j["part2"] = faces_json(witness->part2);
        } else {
            os << " found=none";
        }
        os << " elapsed=" << seconds_str(sec);
        em.line(os.str(), j);
    }
    return exit_code;
}

int run_prob(const std::string& input, const std::string& kind_name,
             const std::vector<FieldSpec>& fields, std::uint64_t sample_size,
             std::uint64_t seed, int budget, Emitter& em) {
    const SimplicialComplex c = load_complex_arg(input);
    ProbabilityKind kind = ProbabilityKind::betti;
    if (kind_name == "hom") kind = ProbabilityKind::homology;
    if (kind_name == "facet") kind = ProbabilityKind::facet;
    std::optional<SampleSpec> sample;
    if (sample_size > 0) sample = SampleSpec{sample_size, seed};

    for (const FieldSpec& f : fields) {
        const auto t0 = std::chrono::steady_clock::now();
        const ProbabilityReport r =
            splitting_probability(c, f, kind, sample, budget);
        const double sec = elapsed_since(t0);
        const auto [num, den] = r.ratio();

        std::ostringstream os;
        os << "field=" << f.str() << " kind=" << kind_name
           << " total=" << r.total << " hits=" << r.hits << " ratio=" << num
           << "/" << den;
        json j{{"command", "prob"},   {"input", input},
               {"kind", kind_name},   {"field", f.str()},
               {"total", r.total},    {"hits", r.hits},
               {"ratio", {num, den}}, {"sampled", r.sampled},
               {"elapsed_s", sec}};
        if (r.sampled) {
            os << " sampled seed=" << r.sample.seed
               << " requested=" << r.sample.size;
            j["seed"] = r.sample.seed;
            j["requested"] = r.sample.size;
        }
        os << " elapsed=" << seconds_str(sec);
        em.line(os.str(), j);
    }
    return 0;
}

int run_corpus(const std::string& action, const std::string& name, Emitter& em,
               std::ostream& out) {
    if (action == "list") {
        for (const std::string& nm : corpus_names()) {
            const CorpusEntry& e = corpus_load(nm);
            std::ostringstream os;
            os << std::left << std::setw(10) << e.name << " n="
               << e.complex.n() << " dim=" << e.complex.dim()
               << " facets=" << e.complex.facets().size() << "  "
               << e.description;
            em.line(os.str(), {{"command", "corpus"},
                               {"action", "list"},
                               {"name", e.name},
                               {"n", e.complex.n()},
                               {"dim", e.complex.dim()},
                               {"facets", e.complex.facets().size()},
                               {"description", e.description}});
        }
        return 0;
    }
    if (name.empty())
        throw std::runtime_error("corpus " + action + " needs a name");
    const CorpusEntry& e = corpus_load(name);
    if (action == "dump") {
        if (em.as_json)
            out << complex_to_json(e.complex).dump() << "\n";
        else
            out << write_complex_text(e.complex);
        return 0;
    }
    // show
    std::ostringstream os;
    os << "name " << e.name << "\ndescription " << e.description << "\nn "
       << e.complex.n() << "\ndim " << e.complex.dim() << "\nfacets "
       << e.complex.facets().size() << "\nfvec "
       << join_longs(e.expected.fvec);
    json betti_j = json::object();
    for (const auto& [ch, betti] : e.expected.betti) {
        const FieldSpec f = ch == 0 ? FieldSpec::rationals()
                                    : FieldSpec::prime_field(ch);
        os << "\nbetti[" << f.str() << "] " << join_longs(betti);
        betti_j[f.str()] = betti;
    }
    os << "\nclosed_pseudomanifold "
       << (e.expected.closed_pseudomanifold ? "yes" : "no")
       << "\norientability " << orientability_str(e.expected.orient);
    em.line(os.str(), {{"command", "corpus"},
                       {"action", "show"},
                       {"name", e.name},
                       {"description", e.description},
                       {"n", e.complex.n()},
                       {"dim", e.complex.dim()},
                       {"facets", faces_json(e.complex.facets())},
                       {"fvec", e.expected.fvec},
                       {"betti", betti_j},
                       {"closed_pseudomanifold",
                        e.expected.closed_pseudomanifold},
                       {"orientability", orientability_str(e.expected.orient)}});
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"simplicial Betti-splitting toolkit"};
    app.require_subcommand(1);

    std::string input, format = "text", split_arg, mode = "betti";
    std::string goal, kind, corpus_action, corpus_name;
    std::vector<std::string> field_args;
    bool from_ideal = false, full_pattern = false, no_prune = false;
    int budget = 20, threads = 0;
    std::uint64_t sample_size = 0, seed = 0;

    const auto add_common = [&](CLI::App* sub, bool with_fields = true) {
        sub->add_option("input", input, "complex file or corpus:<name>")
            ->required();
        if (with_fields)
            sub->add_option("--field", field_args,
                            "coefficient field, Q or Fp:<p> (repeatable)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hom = app.add_subcommand("homology", "reduced Betti numbers");
    add_common(hom);

    CLI::App* betti =
        app.add_subcommand("betti", "graded Betti table of the dual ideal");
    add_common(betti);

    CLI::App* dual = app.add_subcommand(
        "dualize", "Alexander-dual ideal of a complex (or back)");
    add_common(dual, false);
    dual->add_flag("--ideal", from_ideal,
                   "input is an ideal file; emit its complex");

    CLI::App* check =
        app.add_subcommand("check", "decide a given standard decomposition");
    add_common(check);
    check
        ->add_option("--split", split_arg,
                     "comma-separated 0-based facet indices of part 1")
        ->required();
    check->add_option("--mode", mode, "verdict mode")
        ->check(CLI::IsMember({"hom", "betti", "betti-recursive", "mv"}));

    CLI::App* ess = app.add_subcommand("essential", "essential facets");
    add_common(ess);
    ess->add_flag("--full-pattern", full_pattern,
                  "verify the whole removal Betti pattern");

    CLI::App* orient = app.add_subcommand("orient", "orientability");
    add_common(orient, false);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "scan all standard decompositions");
    add_common(enumerate);
    enumerate->add_option("--goal", goal, "what to search for")
        ->required()
        ->check(CLI::IsMember({"trivial", "hom", "betti"}));
    enumerate->add_option("--budget", budget, "facet budget for exact scans");
    enumerate->add_flag("--no-prune", no_prune,
                        "disable the vanishing-top-homology shortcut");
    enumerate->add_option("--threads", threads, "worker cap");

    CLI::App* prob = app.add_subcommand("prob", "splitting probability");
    add_common(prob);
    prob->add_option("--kind", kind, "probability kind")
        ->required()
        ->check(CLI::IsMember({"betti", "hom", "facet"}));
    prob->add_option("--sample", sample_size, "sample size (0 = exact scan)");
    prob->add_option("--seed", seed, "sampling seed");
    prob->add_option("--budget", budget, "facet budget for exact scans");
    prob->add_option("--threads", threads, "worker cap");

    CLI::App* corpus =
        app.add_subcommand("corpus", "built-in validated complexes");
    corpus->add_option("action", corpus_action, "list | show | dump")
        ->required()
        ->check(CLI::IsMember({"list", "show", "dump"}));
    corpus->add_option("name", corpus_name, "corpus entry name");
    corpus->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv_store;
    argv_store.push_back("bettisplit");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Emitter em{format == "json", out};
    if (threads > 0) set_worker_cap(threads);

    try {
        const std::vector<FieldSpec> fields = parse_fields(field_args);
        if (app.got_subcommand(hom)) return run_homology(input, fields, em);
        if (app.got_subcommand(betti)) return run_betti(input, fields, em);
        if (app.got_subcommand(dual))
            return run_dualize(input, from_ideal, em, out);
        if (app.got_subcommand(check))
            return run_check(input, split_arg, mode, fields, em);
        if (app.got_subcommand(ess))
            return run_essential(input, fields, full_pattern, em);
        if (app.got_subcommand(orient)) return run_orient(input, em);
        if (app.got_subcommand(enumerate))
            return run_enumerate(input, goal, fields, budget, no_prune, em);
        if (app.got_subcommand(prob))
            return run_prob(input, kind, fields, sample_size, seed, budget, em);
        if (app.got_subcommand(corpus))
            return run_corpus(corpus_action, corpus_name, em, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace bettisplit
