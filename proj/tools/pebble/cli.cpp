#include "cli.hpp"

#include "pebbling/certificate.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"
#include "pebbling/experiments.hpp"
#include "pebbling/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pebbling::cli {

namespace
{
    using nlohmann::ordered_json;

    /// A bad flag value discovered after CLI11 accepted the command line.
    class UsageError : public Error
    {
    public:
        using Error::Error;
    };

    struct Config
    {
        std::string input;
        bool use_stdin = false;
        bool no_prune = false;
        unsigned workers = 1;
        std::string format = "text";
        bool timing = false;
        std::string output;

        Count t = 0;
        Count k = 0;
        Vertex v = 0;
        int m = 0;
        std::string distribution;
        std::string map_path;
        std::string cert_path;
        std::string family;
        std::string claim;
        std::uint64_t seed = 1;
        int samples = 100;
        int n_min = 6;
        int n_max = 6;

        int solve_max_order = 16;
        experiments::Caps caps;
    };

    std::string read_file(const std::string & path, const std::string & flag)
    {
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw UsageError(flag + ": cannot open '" + path + "'");
        std::ostringstream text;
        text << file.rdbuf();
        return text.str();
    }

    class Session
    {
    public:
        Session(Config & config, std::istream & in, std::ostream & out) :
            config_(config),
            in_(in),
            out_(out)
        {
        }

        SolverOptions solver() const { return {!config_.no_prune, config_.workers}; }
        bool records() const { return config_.format == "records"; }

        Graph graph()
        {
            if (config_.use_stdin) {
                std::ostringstream text;
                text << in_.rdbuf();
                return parse_edge_list(text.str());
            }
            if (config_.input.empty())
                throw UsageError("a graph is required: pass -i <file> or --stdin");
            return parse_edge_list(read_file(config_.input, "--input"));
        }

        void check_solvable_size(const Graph & g) const
        {
            if (g.order() > config_.solve_max_order)
                throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds the solver cap of " +
                        std::to_string(config_.solve_max_order) + "; raise it with --cap-solve or PEBBLE_CAP_SOLVE");
        }

        // Writes to -o when given, stdout otherwise.
        void emit(const std::string & text)
        {
            if (config_.output.empty()) {
                out_ << text;
                return;
            }
            std::ofstream file(config_.output, std::ios::binary);
            if (!file)
                throw UsageError("--output: cannot write '" + config_.output + "'");
            file << text;
        }

        void record(const ordered_json & j) { out_ << j.dump() << '\n'; }

        int solve()
        {
            Graph g = graph();
            check_solvable_size(g);
            PebblingResult r = config_.t > 0 ? restricted_optimal_pebbling_number(g, config_.t, solver())
                                             : optimal_pebbling_number(g, solver());
            if (records()) {
                ordered_json j;
                j["command"] = "solve";
                j["t"] = config_.t;
                j["value"] = r.value;
                j["witness"] = r.witness.to_string();
                j["explored"] = r.explored;
                j["pruned"] = r.pruned;
                record(j);
            }
            else
                out_ << r.value << "\nwitness " << r.witness.to_string() << '\n';
            return yes;
        }

        int decide()
        {
            Graph g = graph();
            check_solvable_size(g);
            PebblingResult r = config_.t > 0 ? restricted_optimal_pebbling_number(g, config_.t, solver())
                                             : optimal_pebbling_number(g, solver());
            std::optional<Distribution> found;
            if (r.value <= config_.k)
                found = r.witness;
            if (records()) {
                ordered_json j;
                j["command"] = "decide";
                j["t"] = config_.t;
                j["k"] = config_.k;
                j["answer"] = found ? "yes" : "no";
                if (found)
                    j["witness"] = found->to_string();
                record(j);
            }
            else {
                out_ << (found ? "yes" : "no") << '\n';
                if (found)
                    out_ << "witness " << found->to_string() << '\n';
            }
            return found ? yes : no;
        }

        int reach()
        {
            Graph g = graph();
            if (!g.contains(config_.v))
                throw UsageError("-v: vertex " + std::to_string(config_.v) + " is not in the graph");
            if (config_.k < 1)
                throw UsageError("-k: must be at least 1");
            Distribution d = parse_distribution(g.order(), config_.distribution);
            auto sequence = k_reachable(g, d, config_.v, config_.k, {!config_.no_prune});
            if (records()) {
                ordered_json j;
                j["command"] = "reach";
                j["v"] = config_.v;
                j["k"] = config_.k;
                j["answer"] = sequence ? "yes" : "no";
                if (sequence)
                    j["moves"] = to_string(*sequence);
                record(j);
            }
            else {
                out_ << (sequence ? "yes" : "no") << '\n';
                if (sequence)
                    out_ << "moves " << to_string(*sequence) << '\n';
            }
            return sequence ? yes : no;
        }

        int product()
        {
            Graph g = graph();
            if (config_.m < 1)
                throw UsageError("-m: must be at least 1");
            emit(format_edge_list(lexicographic_product(g, complete_graph(config_.m)).graph));
            return yes;
        }

        int family()
        {
            if (config_.family != "hm")
                throw UsageError("family: unknown family '" + config_.family + "' (known: hm)");
            if (config_.m > config_.caps.h_family_max_m)
                throw CapExceeded("-m " + std::to_string(config_.m) + " exceeds the H_m cap of " +
                        std::to_string(config_.caps.h_family_max_m) + "; raise it with --cap-hm or PEBBLE_CAP_HM");
            emit(format_edge_list(h_family(config_.m)));
            return yes;
        }

        int reduce()
        {
            emit(format_edge_list(opn_to_ropn_reduction(graph()).graph));
            return yes;
        }

        int collapse()
        {
            Graph g = graph();
            VertexMap phi = parse_vertex_map(read_file(config_.map_path, "--map"));
            Distribution d = parse_distribution(g.order(), config_.distribution);
            Quotient q = pebbling::collapse(g, phi, d);
            std::string text = format_edge_list(q.graph);
            if (!config_.distribution.empty())
                text = "# distribution " + q.distribution.to_string() + "\n" + text;
            emit(text);
            return yes;
        }

        int cert_emit()
        {
            Graph g = graph();
            Distribution d(g.order());
            if (config_.distribution.empty()) {
                check_solvable_size(g);
                d = (config_.t > 0 ? restricted_optimal_pebbling_number(g, config_.t, solver())
                                   : optimal_pebbling_number(g, solver()))
                            .witness;
            }
            else
                d = parse_distribution(g.order(), config_.distribution);
            emit(emit_certificate(make_certificate(g, d, config_.t)));
            return yes;
        }

        int cert_verify()
        {
            Graph g = graph();
            SolvabilityCertificate cert = parse_certificate(read_file(config_.cert_path, "--cert"));
            bool valid = false;
            std::string reason;
            try {
                auto defect = certificate_defect(g, cert);
                valid = !defect;
                if (defect)
                    reason = *defect;
            }
            catch (const CertificateError & e) {
                reason = e.what();
            }
            if (records()) {
                ordered_json j;
                j["command"] = "cert-verify";
                j["valid"] = valid;
                j["restriction"] = cert.restriction;
                j["bound"] = cert.bound;
                if (!valid)
                    j["reason"] = reason;
                record(j);
            }
            else if (valid)
                out_ << "valid: pi*" << (cert.restriction > 0 ? "_" + std::to_string(cert.restriction) : "")
                     << " <= " << cert.bound << '\n';
            else
                out_ << "invalid: " << reason << '\n';
            return valid ? yes : no;
        }

        int verify_paper()
        {
            std::vector<experiments::ClaimReport> reports;
            if (config_.m > 0) {
                if (!config_.claim.empty() && config_.claim != "h-family" && config_.claim != "claim8-weights")
                    throw UsageError("-m applies to --claim h-family or claim8-weights only");
                if (config_.claim.empty() || config_.claim == "h-family")
                    reports.push_back(experiments::verify_h_family(config_.m, config_.caps, solver()));
                if (config_.claim.empty() || config_.claim == "claim8-weights")
                    reports.push_back(experiments::claim8_weight_cases(config_.m, config_.caps));
            }
            else
                reports = experiments::verify_paper(config_.claim, config_.caps, solver());
            return report(reports);
        }

        int search()
        {
            if (config_.n_min > config_.n_max)
                throw UsageError("--n-min must not exceed --n-max");
            return report({experiments::conjecture_search(config_.n_min, config_.n_max, config_.samples,
                    config_.seed, config_.caps, solver())});
        }

    private:
        int report(const std::vector<experiments::ClaimReport> & reports)
        {
            bool all = true;
            std::string text;
            for (const auto & r : reports) {
                text += records() ? experiments::format_record(r, config_.timing) + "\n"
                                  : experiments::format_text(r, config_.timing);
                all = all && r.pass;
            }
            if (!records()) {
                std::size_t passed = 0;
                for (const auto & r : reports)
                    passed += r.pass;
                text += std::to_string(passed) + "/" + std::to_string(reports.size()) + " passed\n";
            }
            emit(text);
            return all ? yes : no;
        }

        Config & config_;
        std::istream & in_;
        std::ostream & out_;
    };

    // Environment overrides for caps; flags given later take precedence.
    void apply_environment(Config & config)
    {
        const std::pair<const char *, int *> table[] = {
                {"PEBBLE_CAP_HM", &config.caps.h_family_max_m},
                {"PEBBLE_CAP_PRODUCT", &config.caps.product_max_order},
                {"PEBBLE_CAP_CHAIN", &config.caps.chain_max_order},
                {"PEBBLE_CAP_SCAN", &config.caps.scan_max_order},
                {"PEBBLE_CAP_MIN_DEGREE", &config.caps.min_degree_max_order},
                {"PEBBLE_CAP_SEARCH", &config.caps.search_max_order},
                {"PEBBLE_CAP_SOLVE", &config.solve_max_order},
        };
        for (auto [name, slot] : table) {
            const char * value = std::getenv(name);
            if (!value)
                continue;
            try {
                std::size_t used = 0;
                int parsed = std::stoi(value, &used);
                if (used != std::string_view(value).size() || parsed < 0)
                    throw std::invalid_argument(name);
                *slot = parsed;
            }
            catch (const std::logic_error &) {
                throw UsageError(std::string(name) + ": expected a non-negative integer, got '" + value + "'");
            }
        }
    }

    void add_input(CLI::App * sub, Config & config)
    {
        auto * file = sub->add_option("-i,--input", config.input, "Graph edge-list file");
        auto * std_in = sub->add_flag("--stdin", config.use_stdin, "Read the graph from standard input");
        file->excludes(std_in);
    }

    void add_solver(CLI::App * sub, Config & config)
    {
        sub->add_flag("--no-prune", config.no_prune, "Disable weight pruning");
        sub->add_option("--workers", config.workers, "Solver threads")->check(CLI::Range(1u, 256u));
    }

    void add_format(CLI::App * sub, Config & config)
    {
        sub->add_option("--format", config.format, "text or records (one JSON object per line)")
                ->check(CLI::IsMember({"text", "records"}));
    }

    void add_caps(CLI::App * sub, Config & config)
    {
        sub->add_option("--cap-hm", config.caps.h_family_max_m, "Largest m for H_m");
        sub->add_option("--cap-product", config.caps.product_max_order, "Largest product order");
        sub->add_option("--cap-chain", config.caps.chain_max_order, "Largest order for chain checks");
        sub->add_option("--cap-scan", config.caps.scan_max_order, "Largest order for exhaustive scans");
        sub->add_option("--cap-min-degree", config.caps.min_degree_max_order, "Largest order for the degree scan");
        sub->add_option("--cap-search", config.caps.search_max_order, "Largest order for conjecture search");
    }
}

int run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err)
{
    Config config;
    try {
        apply_environment(config);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    CLI::App app{"Exact optimal pebbling numbers, certificates and experiments", "pebble"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto * solve = app.add_subcommand("solve", "Compute pi*(G), or pi*_t(G) with -t");
    add_input(solve, config);
    add_solver(solve, config);
    add_format(solve, config);
    solve->add_option("-t", config.t, "Pebbles allowed per vertex")->check(CLI::PositiveNumber);
    solve->add_option("--cap-solve", config.solve_max_order, "Largest graph order to solve");

    auto * decide = app.add_subcommand("decide", "Is pi*(G) <= k (pi*_t with -t)? Exit 0 yes, 1 no");
    add_input(decide, config);
    add_solver(decide, config);
    add_format(decide, config);
    decide->add_option("-k", config.k, "Pebble budget")->required()->check(CLI::NonNegativeNumber);
    decide->add_option("-t", config.t, "Pebbles allowed per vertex")->check(CLI::PositiveNumber);
    decide->add_option("--cap-solve", config.solve_max_order, "Largest graph order to solve");

    auto * reach = app.add_subcommand("reach", "Can D put k pebbles on v? Exit 0 yes, 1 no");
    add_input(reach, config);
    add_format(reach, config);
    reach->add_flag("--no-prune", config.no_prune, "Disable weight pruning");
    reach->add_option("-v", config.v, "Target vertex")->required();
    reach->add_option("-k", config.k, "Pebbles wanted on v")->required();
    reach->add_option("-D", config.distribution, "Distribution as v:count pairs, e.g. 0:2,3:1")->required();

    auto * product = app.add_subcommand("product", "Emit G.K_m");
    add_input(product, config);
    product->add_option("-m", config.m, "Clique order")->required();
    product->add_option("-o,--output", config.output, "Write to a file instead of stdout");

    auto * family = app.add_subcommand("family", "Emit a named graph family");
    family->add_option("name", config.family, "Family name (hm)")->required();
    family->add_option("-m", config.m, "Family parameter")->required();
    family->add_option("--cap-hm", config.caps.h_family_max_m, "Largest m for H_m");
    family->add_option("-o,--output", config.output, "Write to a file instead of stdout");

    auto * reduce = app.add_subcommand("reduce", "Emit f(G) = G.K_n");
    add_input(reduce, config);
    reduce->add_option("-o,--output", config.output, "Write to a file instead of stdout");

    auto * collapse = app.add_subcommand("collapse", "Emit the quotient of G under a vertex map");
    add_input(collapse, config);
    collapse->add_option("--map", config.map_path, "Vertex map file")->required();
    collapse->add_option("-D", config.distribution, "Distribution to collapse along with the graph");
    collapse->add_option("-o,--output", config.output, "Write to a file instead of stdout");

    auto * cert = app.add_subcommand("cert", "Solvability certificates");
    cert->require_subcommand(1);
    auto * cert_emit = cert->add_subcommand("emit", "Certify a distribution (default: an optimal witness)");
    add_input(cert_emit, config);
    add_solver(cert_emit, config);
    cert_emit->add_option("-t", config.t, "Restriction to claim (0: none)")->check(CLI::NonNegativeNumber);
    cert_emit->add_option("-D", config.distribution, "Distribution to certify");
    cert_emit->add_option("-o,--output", config.output, "Certificate output path");
    cert_emit->add_option("--cap-solve", config.solve_max_order, "Largest graph order to solve");
    auto * cert_verify = cert->add_subcommand("verify", "Check a certificate against G. Exit 0 valid, 1 invalid");
    add_input(cert_verify, config);
    add_format(cert_verify, config);
    cert_verify->add_option("--cert", config.cert_path, "Certificate file")->required();

    auto * paper = app.add_subcommand("verify-paper", "Re-check the stated results on their default instances");
    add_solver(paper, config);
    add_format(paper, config);
    add_caps(paper, config);
    paper->add_option("--claim", config.claim, "Claim id")
            ->check(CLI::IsMember(experiments::claim_ids()));
    paper->add_option("-m", config.m, "H_m instance for h-family and claim8-weights");
    paper->add_flag("--timing", config.timing, "Include elapsed times");
    paper->add_option("-o,--output", config.output, "Write the report to a file");

    auto * search = app.add_subcommand("search", "Seeded random search for counterexamples to the conjectures");
    add_solver(search, config);
    add_format(search, config);
    add_caps(search, config);
    search->add_option("--seed", config.seed, "Random seed")->required();
    search->add_option("--samples", config.samples, "Number of graphs")->required()->check(CLI::NonNegativeNumber);
    search->add_option("--n-min", config.n_min, "Smallest order");
    search->add_option("--n-max", config.n_max, "Largest order");
    search->add_flag("--timing", config.timing, "Include elapsed times");
    search->add_option("-o,--output", config.output, "Write the report to a file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return yes;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return yes;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    Session session(config, in, out);
    try {
        if (*solve)
            return session.solve();
        if (*decide)
            return session.decide();
        if (*reach)
            return session.reach();
        if (*product)
            return session.product();
        if (*family)
            return session.family();
        if (*reduce)
            return session.reduce();
        if (*collapse)
            return session.collapse();
        if (*cert_emit)
            return session.cert_emit();
        if (*cert_verify)
            return session.cert_verify();
        if (*paper)
            return session.verify_paper();
        if (*search)
            return session.search();
    }
    catch (const FormatError & e) {
        err << "format error: " << e.what() << '\n';
        return format;
    }
    catch (const CapExceeded & e) {
        err << "cap exceeded: " << e.what() << '\n';
        return cap;
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const PreconditionError & e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
    err << "error: no subcommand\n";
    return usage;
}

} // namespace pebbling::cli
