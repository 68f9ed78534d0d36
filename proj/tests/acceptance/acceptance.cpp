// Acceptance checks. Prints one PASS/FAIL line per criterion; with
// --criterion <id> runs only that one. Exit status is 0 iff all ran checks
// passed.

#include "cli.hpp"
#include "oracles.hpp"

#include "pebbling/certificate.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/enumerate.hpp"
#include "pebbling/experiments.hpp"
#include "pebbling/solver.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace pebbling;
namespace ex = pebbling::experiments;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    std::string value(const ex::ClaimReport & r, std::string_view name)
    {
        for (const auto & [k, v] : r.values)
            if (k == name)
                return v;
        return "?";
    }

    std::vector<ex::NamedGraph> labeled_connected_up_to(int n_max)
    {
        std::vector<ex::NamedGraph> out;
        for (int n = 1; n <= n_max; ++n) {
            int i = 0;
            for (Graph & g : labeled_graphs(n, true))
                out.push_back({"n" + std::to_string(n) + "/L" + std::to_string(i++), std::move(g)});
        }
        return out;
    }

    std::vector<ex::NamedGraph> random_connected(int count, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::vector<ex::NamedGraph> out;
        for (int i = 0; i < count; ++i) {
            int n = 6 + i % 2;
            out.push_back({"random#" + std::to_string(i), random_connected_graph(n, 1, rng)});
        }
        return out;
    }

    // The graph pool shared by criteria 3 to 5.
    const std::vector<ex::NamedGraph> & test_graphs()
    {
        static const std::vector<ex::NamedGraph> pool = [] {
            auto graphs = labeled_connected_up_to(5);
            for (auto & g : random_connected(200, 2024))
                graphs.push_back(std::move(g));
            return graphs;
        }();
        return pool;
    }

    template <typename Visit>
    void for_each_distribution(int n, Count max_total, Visit && visit)
    {
        std::vector<Count> c(n, 0);
        for (;;) {
            Count sum = 0;
            for (Count x : c)
                sum += x;
            if (sum <= max_total)
                visit(c);
            int i = 0;
            while (i < n && c[i] == max_total)
                c[i++] = 0;
            if (i == n)
                return;
            ++c[i];
        }
    }

    Outcome criterion_1()
    {
        ex::ClaimReport r4 = ex::verify_h_family(4);
        ex::ClaimReport r6 = ex::verify_h_family(6);
        bool ok = value(r4, "pi*") == "4" && value(r4, "pi*_2") == "5" && value(r6, "pi*") == "4" &&
                value(r6, "pi*_2") == "5" && r4.pass && r6.pass;
        return {ok, "H_4: pi*=" + value(r4, "pi*") + " pi*_2=" + value(r4, "pi*_2") + "; H_6: pi*=" +
                value(r6, "pi*") + " pi*_2=" + value(r6, "pi*_2")};
    }

    Outcome criterion_2()
    {
        auto reports = ex::verify_paper("product-theorem");
        int passed = 0;
        std::string failed;
        for (const auto & r : reports) {
            passed += r.pass;
            if (!r.pass)
                failed += " " + r.instance;
        }
        return {passed == static_cast<int>(reports.size()) && reports.size() == 10,
                std::to_string(passed) + "/" + std::to_string(reports.size()) + " instances equal with a valid Q" +
                        (failed.empty() ? "" : "; failed:" + failed)};
    }

    Outcome criterion_3()
    {
        int violations = 0, labeled = 0, random = 0;
        for (const auto & g : test_graphs()) {
            ex::ClaimReport r = ex::verify_chain(g, 4);
            (g.name.rfind("random", 0) == 0 ? random : labeled) += 1;
            if (!r.pass)
                ++violations;
        }
        return {violations == 0 && random >= 200, std::to_string(labeled) + " labeled (n<=5) + " +
                        std::to_string(random) + " random (n in {6,7}) graphs, " + std::to_string(violations) +
                        " violations"};
    }

    Outcome criterion_4()
    {
        int mismatches = 0, checked = 0;
        for (const auto & [name, g] : test_graphs()) {
            ++checked;
            if (restricted_optimal_pebbling_number(g, 1).value != g.order())
                ++mismatches;
            // Independently: no 1-restricted distribution of n-1 pebbles is
            // solvable (no move is ever possible).
            if (g.order() <= 5 && first_solvable_of_size(g, g.order() - 1, 1))
                ++mismatches;
            if (g.order() <= 4 && oracle::optimal_pebbling(g, 1) != g.order())
                ++mismatches;
        }
        return {mismatches == 0, std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches"};
    }

    Outcome criterion_5()
    {
        int over = 0, checked = 0;
        for (const auto & [name, g] : test_graphs()) {
            ++checked;
            const Count bound = pebbling_upper_bound(g.order());
            if (optimal_pebbling_number(g).value > bound || restricted_optimal_pebbling_number(g, 2).value > bound)
                ++over;
        }
        return {over == 0, std::to_string(checked) + " graphs, " + std::to_string(over) + " above ceil(2n/3)"};
    }

    Outcome criterion_6()
    {
        long long cases = 0, unsound = 0;
        for (int n = 1; n <= 5; ++n)
            for (const Graph & g : labeled_graphs(n, false))
                for_each_distribution(n, 4, [&](const std::vector<Count> & c) {
                    auto best = oracle::max_reachable(g, c);
                    Distribution d(c);
                    for (Vertex u = 0; u < n; ++u) {
                        ++cases;
                        if (component_weight(g, d, u) < Dyadic(1) && best[u] >= 1)
                            ++unsound;
                    }
                });
        int disagreements = 0, graphs = 0;
        for (int n = 1; n <= 5; ++n)
            for (const Graph & g : labeled_graphs(n, true)) {
                ++graphs;
                for (Count t : {0, 2}) {
                    auto solve = [&](bool prune) {
                        SolverOptions o{prune, 1};
                        return t == 0 ? optimal_pebbling_number(g, o) : restricted_optimal_pebbling_number(g, t, o);
                    };
                    PebblingResult a = solve(true), b = solve(false);
                    if (a.value != b.value || a.witness != b.witness)
                        ++disagreements;
                }
            }
        return {unsound == 0 && disagreements == 0,
                std::to_string(cases) + " (graph, D, u) cases with W<1 never reachable: " + std::to_string(unsound) +
                        " exceptions; pruned vs unpruned pi*, pi*_2 on " + std::to_string(graphs) + " graphs: " +
                        std::to_string(disagreements) + " disagreements"};
    }

    // The three weight statements, on H_4 and H_6.
    Outcome criterion_7(int which)
    {
        const char * names[] = {"case_w_odd_exact_3/4", "case_w_even_exact_1", "case_mixed_at_most_3/4"};
        bool ok = true;
        std::string detail;
        for (int m : {4, 6}) {
            ex::ClaimReport r = ex::claim8_weight_cases(m);
            std::string v = value(r, names[which]);
            auto slash = v.find('/');
            ok = ok && slash != std::string::npos && v.substr(0, slash) == v.substr(slash + 1);
            detail += (detail.empty() ? "" : "; ") + std::string("H_") + std::to_string(m) + " " + names[which] +
                    " " + v;
            if (which == 2)
                for (const auto & w : r.witnesses)
                    if (w.find("{v_2k+1,u_2l+1}") != std::string::npos) {
                        detail += " [" + w + "]";
                        break;
                    }
        }
        return {ok, detail};
    }

    Outcome criterion_8()
    {
        ex::ClaimReport r = ex::normalization_scan(6);
        return {r.pass, value(r, "graphs") + " graphs, " + value(r, "witnesses_changed") + " witnesses moved, " +
                        value(r, "failures") + " failures"};
    }

    Outcome criterion_9()
    {
        ex::ClaimReport r = ex::three_pile_lemma_scan(5);
        return {r.pass, value(r, "graphs") + " graphs, " + value(r, "solvable") + " solvable 3-pile distributions, " +
                        value(r, "violations") + " violations"};
    }

    Outcome criterion_10()
    {
        ex::ClaimReport r = ex::two_pile_scan(6);
        bool h4_absent = !two_pile_witness(h_family(4));
        return {r.pass && h4_absent, value(r, "graphs") + " graphs, " + value(r, "mismatches") +
                        " mismatches; H_4 two-pile witness " + (h4_absent ? "absent" : "present")};
    }

    Outcome criterion_11()
    {
        auto reports = ex::verify_paper("min-degree");
        const auto & r = reports.at(0);
        return {r.pass, value(r, "tested") + " graphs with 3 delta >= 2n-3 (n <= 7), " + value(r, "violations") +
                        " violations"};
    }

    Outcome criterion_12()
    {
        long long pairs = 0, disagreements = 0, feasible = 0;
        for (int n = 1; n <= 5; ++n)
            for (const Graph & g : nonisomorphic_graphs(n)) {
                std::vector<Move> moves;
                for (auto [a, b] : g.edges()) {
                    moves.push_back({a, b});
                    moves.push_back({b, a});
                }
                std::sort(moves.begin(), moves.end());
                for_each_distribution(n, 5, [&](const std::vector<Count> & c) {
                    Distribution d(c);
                    Count total = d.total();
                    // Transcripts as non-decreasing index sequences of length
                    // <= min(5, |D|); longer ones cannot keep counts >= 0.
                    std::vector<std::size_t> idx;
                    std::function<void()> extend = [&]() {
                        Transcript t;
                        oracle::MoveCounts mc;
                        for (std::size_t i : idx) {
                            t.add(moves[i]);
                            ++mc[{moves[i].from, moves[i].to}];
                        }
                        bool expected = oracle::some_order_executes(g, c, mc);
                        for (Vertex target = 0; target < n; ++target) {
                            auto check = transcript_feasible(g, d, t, target);
                            ++pairs;
                            bool reaches = check.final_counts[target] >= 1;
                            if (check.executable != expected || check.reaches_target != reaches ||
                                    (check.executable && !is_executable(g, d, check.order)))
                                ++disagreements;
                            feasible += check.feasible();
                        }
                        if (static_cast<Count>(idx.size()) >= std::min<Count>(5, total))
                            return;
                        for (std::size_t i = idx.empty() ? 0 : idx.back(); i < moves.size(); ++i) {
                            idx.push_back(i);
                            extend();
                            idx.pop_back();
                        }
                    };
                    extend();
                });
            }

        int certificates = 0, rejected = 0;
        for (int n = 1; n <= 6; ++n)
            for (const Graph & g : connected_graphs(n))
                for (Count t : {0, 2, 3}) {
                    PebblingResult r = t == 0 ? optimal_pebbling_number(g) : restricted_optimal_pebbling_number(g, t);
                    auto cert = parse_certificate(emit_certificate(make_certificate(g, r.witness, t)));
                    ++certificates;
                    if (!verify_certificate(g, cert) || cert.bound < r.value)
                        ++rejected;
                }
        return {disagreements == 0 && rejected == 0,
                std::to_string(pairs) + " (transcript, target) checks, " + std::to_string(feasible) + " feasible, " +
                        std::to_string(disagreements) + " disagreements with exhaustive ordering; " +
                        std::to_string(certificates) + " solver certificates, " + std::to_string(rejected) +
                        " rejected"};
    }

    Outcome criterion_13()
    {
        int checks = 0, mismatches = 0;
        for (const Graph & g : {path_graph(2), path_graph(3), complete_graph(3)}) {
            Graph f = opn_to_ropn_reduction(g).graph;
            for (Count t : {2, 3})
                for (Count k = 0; k <= pebbling_upper_bound(g.order()); ++k) {
                    ++checks;
                    if (opn_decision(g, k) != ropn_decision(f, t, k))
                        ++mismatches;
                }
        }
        return {mismatches == 0, std::to_string(checks) + " (G, t, k) decisions, " + std::to_string(mismatches) +
                        " mismatches"};
    }

    std::string run_cli(std::vector<std::string> args)
    {
        args.insert(args.begin(), "pebble");
        std::vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        std::istringstream in;
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
        return std::to_string(code) + "\n" + out.str() + err.str();
    }

    Outcome criterion_14()
    {
        const std::vector<std::vector<std::string>> commands = {
                {"search", "--seed", "5", "--samples", "60", "--n-min", "4", "--n-max", "8"},
                {"search", "--seed", "5", "--samples", "60", "--n-min", "4", "--n-max", "8", "--format", "records"},
                {"verify-paper", "--claim", "h-family"},
                {"verify-paper", "--claim", "product-theorem", "--format", "records"},
                {"verify-paper", "--claim", "two-pile"},
        };
        int differing = 0;
        for (auto command : commands) {
            std::string first = run_cli(command);
            std::string again = run_cli(command);
            command.push_back("--workers");
            command.push_back("4");
            std::string parallel = run_cli(command);
            if (first != again || first != parallel)
                ++differing;
        }
        int solver_differences = 0;
        for (const Graph & g : connected_graphs(6))
            for (Count t : {0, 2}) {
                auto solve = [&](unsigned w) {
                    return t == 0 ? optimal_pebbling_number(g, {true, w}) : restricted_optimal_pebbling_number(g, t, {true, w});
                };
                PebblingResult a = solve(1), b = solve(4);
                if (a.value != b.value || a.witness != b.witness || a.explored != b.explored || a.pruned != b.pruned)
                    ++solver_differences;
            }
        return {differing == 0 && solver_differences == 0,
                std::to_string(commands.size()) + " CLI reports x 3 runs (1, 1, 4 workers): " +
                        std::to_string(differing) + " differ; solver on 112 graphs x 2: " +
                        std::to_string(solver_differences) + " differ"};
    }

    struct Criterion
    {
        std::string id;
        std::string title;
        std::function<Outcome()> check;
    };

    const std::vector<Criterion> & criteria()
    {
        static const std::vector<Criterion> list = {
                {"1", "H_m values", criterion_1},
                {"2", "product theorem", criterion_2},
                {"3", "chain inequalities", criterion_3},
                {"4", "t = 1 identity", criterion_4},
                {"5", "upper bound ceil(2n/3)", criterion_5},
                {"6", "weight soundness", criterion_6},
                {"7a", "W(u_{2k+2}) = 3/4 under {w:2, v_{2k+1}:2}", [] { return criterion_7(0); }},
                {"7b", "W(u_{2k+2}) = 1 under {w:2, v_{2k}:2}", [] { return criterion_7(1); }},
                {"7c", "W(u_{2k+2}) <= 3/4 under {v_{2k+1}:2, u_{2l+1}:2}", [] { return criterion_7(2); }},
                {"8", "normalization", criterion_8},
                {"9", "three-pile scan", criterion_9},
                {"10", "two-pile equivalence", criterion_10},
                {"11", "minimum degree claim", criterion_11},
                {"12", "transcript machinery", criterion_12},
                {"13", "reduction sanity", criterion_13},
                {"14", "determinism", criterion_14},
        };
        return list;
    }
}

int main(int argc, char ** argv)
{
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = argv[++i];
        else {
            std::cerr << "usage: acceptance [--criterion <id>]\n";
            return 2;
        }
    }

    bool all = true, ran = false;
    for (const auto & c : criteria()) {
        if (!only.empty() && c.id != only)
            continue;
        ran = true;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail
                  << " [" << static_cast<long long>(seconds * 1000) << " ms]" << std::endl;
    }
    if (!ran) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return 2;
    }
    return all ? 0 : 1;
}
