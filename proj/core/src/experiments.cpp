#include "pebbling/experiments.hpp"

#include "pebbling/certificate.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/enumerate.hpp"
#include "pebbling/error.hpp"

#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

namespace pebbling::experiments {

namespace
{
    class Stopwatch
    {
    public:
        double elapsed_ms() const
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    std::string describe(const Graph & g)
    {
        std::string out = "n=" + std::to_string(g.order()) + " edges=";
        bool first = true;
        for (auto [a, b] : g.edges()) {
            if (!first)
                out += ',';
            first = false;
            out += std::to_string(a) + '-' + std::to_string(b);
        }
        return out;
    }

    std::string bracket(const Distribution & d) { return "{" + d.to_string() + "}"; }

    void require_connected(const NamedGraph & g)
    {
        if (g.graph.order() < 1 || !is_connected(g.graph))
            throw PreconditionError(g.name + " must be a non-empty connected graph");
    }

    int ceil_div(int a, int b) { return (a + b - 1) / b; }
}

ClaimReport verify_h_family(int m, const Caps & caps, SolverOptions options)
{
    if (m < 4 || m % 2 != 0)
        throw PreconditionError("H_m is defined for even m >= 4, got m = " + std::to_string(m));
    if (m > caps.h_family_max_m)
        throw CapExceeded("m = " + std::to_string(m) + " exceeds the H_m cap of " +
                std::to_string(caps.h_family_max_m) + "; raise it with --cap-hm or PEBBLE_CAP_HM");

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "h-family";
    r.instance = "H_" + std::to_string(m);
    r.expected = "pi* = 4, pi*_2 = 5";

    Graph h = h_family(m);
    HFamilyLabels label{m};
    auto opt = optimal_pebbling_number(h, options);
    auto two = restricted_optimal_pebbling_number(h, 2, options);
    r.add("order", h.order());
    r.add("min_degree", min_degree(h));
    r.add("pi*", opt.value);
    r.add("pi*_2", two.value);
    r.witnesses.push_back("pi* witness " + bracket(opt.witness));
    r.witnesses.push_back("pi*_2 witness " + bracket(two.witness));

    Distribution hub(h.order());
    hub.set(label.w(), 4);
    bool hub_solvable = is_solvable(h, hub);
    r.add("four_on_w_solvable", hub_solvable ? "yes" : "no");

    Distribution star(h.order());
    star.set(label.u(1), 2);
    star.set(label.v(1), 2);
    star.set(label.w(), 1);
    bool star_ok = is_solvable(h, star) && star.is_restricted(2);
    r.add("D*_solvable_2_restricted", star_ok ? "yes" : "no");

    auto pair = two_pile_witness(h, options);
    r.add("two_pile_witness", pair ? std::to_string(pair->first) + "," + std::to_string(pair->second) : "none");

    r.pass = opt.value == 4 && two.value == 5 && hub_solvable && star_ok && !pair;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport verify_product_theorem(const NamedGraph & g, int m, Count t, const Caps & caps, SolverOptions options)
{
    require_connected(g);
    const int n = g.graph.order();
    if (m < ceil_div(n, 3))
        throw PreconditionError("m must be at least ceil(n/3) = " + std::to_string(ceil_div(n, 3)));
    if (t < 2)
        throw PreconditionError("t must be at least 2");
    if (n * m > caps.product_max_order)
        throw CapExceeded("product order " + std::to_string(n * m) + " exceeds the cap of " +
                std::to_string(caps.product_max_order) + "; raise it with --cap-product or PEBBLE_CAP_PRODUCT");

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "product-theorem";
    r.instance = g.name + " m=" + std::to_string(m) + " t=" + std::to_string(t);
    r.expected = "pi*(G) = pi*(G.K_m) = pi*_t(G.K_m); lifted witness solvable, 2-restricted, size pi*(G)";

    auto product = lexicographic_product(g.graph, complete_graph(m));
    auto base = optimal_pebbling_number(g.graph, options);
    auto lifted_opt = optimal_pebbling_number(product.graph, options);
    auto lifted_t = restricted_optimal_pebbling_number(product.graph, t, options);
    r.add("pi*(G)", base.value);
    r.add("pi*(G.K_m)", lifted_opt.value);
    r.add("pi*_t(G.K_m)", lifted_t.value);

    Distribution normalized = n >= 2 ? normalize_optimal(g.graph, base.witness) : base.witness;
    Distribution q = product_witness(g.graph, normalized, m);
    bool q_solvable = is_solvable(product.graph, q);
    bool q_restricted = q.is_restricted(2);
    bool q_fibres = fibre_sums(product.labeling, q) == normalized;
    r.add("witness_size", q.total());
    r.add("witness_solvable", q_solvable ? "yes" : "no");
    r.add("witness_2_restricted", q_restricted ? "yes" : "no");
    r.add("witness_fibre_sums_match", q_fibres ? "yes" : "no");
    r.witnesses.push_back("normalized D " + bracket(normalized));
    r.witnesses.push_back("Q " + bracket(q));

    r.pass = base.value == lifted_opt.value && base.value == lifted_t.value && q_solvable && q_restricted && q_fibres
            && q.total() == base.value;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport verify_chain(const NamedGraph & g, Count t_max, const Caps & caps, SolverOptions options)
{
    require_connected(g);
    if (t_max < 2)
        throw PreconditionError("t_max must be at least 2");
    if (g.graph.order() > caps.chain_max_order)
        throw CapExceeded("order " + std::to_string(g.graph.order()) + " exceeds the chain cap of " +
                std::to_string(caps.chain_max_order));

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "chain";
    r.instance = g.name;
    r.expected = "n = pi*_1 >= pi*_2 >= ... >= pi*_tmax >= pi*; pi*_2 <= gamma_R; gamma <= gamma_R <= 2 gamma";

    const int n = g.graph.order();
    auto opt = optimal_pebbling_number(g.graph, options);
    std::vector<Count> restricted;
    for (Count t = 1; t <= t_max; ++t)
        restricted.push_back(restricted_optimal_pebbling_number(g.graph, t, options).value);
    auto gamma = domination_number(g.graph);
    auto roman = roman_domination_number(g.graph);

    r.add("pi*", opt.value);
    for (Count t = 1; t <= t_max; ++t)
        r.add("pi*_" + std::to_string(t), restricted[t - 1]);
    r.add("gamma", gamma.value);
    r.add("gamma_R", roman.value);

    bool ok = restricted[0] == n;
    for (std::size_t i = 1; i + 1 < restricted.size(); ++i)
        ok = ok && restricted[i] >= restricted[i + 1];
    ok = ok && restricted[0] >= restricted[1] && restricted.back() >= opt.value;
    ok = ok && restricted[1] <= roman.value;
    ok = ok && gamma.value <= roman.value && roman.value <= 2 * gamma.value;
    ok = ok && opt.value <= pebbling_upper_bound(n) && restricted[1] <= pebbling_upper_bound(n);
    r.pass = ok;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport verify_min_degree_claim(const std::vector<NamedGraph> & graphs, const Caps & caps, SolverOptions options)
{
    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "min-degree";
    r.instance = std::to_string(graphs.size()) + " graphs";
    r.expected = "3 delta >= 2n - 3 implies diameter <= 2, pi* <= 4, pi*_2 = pi*, and pi* <= 3 or a dominating pair";

    long long tested = 0, skipped = 0, violations = 0, by_three = 0, by_pair = 0;
    for (const auto & [name, g] : graphs) {
        const int n = g.order();
        if (n < 1 || !is_connected(g))
            throw PreconditionError(name + " must be a non-empty connected graph");
        if (n > caps.min_degree_max_order)
            throw CapExceeded(name + " exceeds the min-degree scan cap of " + std::to_string(caps.min_degree_max_order));
        if (3 * min_degree(g) < 2 * n - 3) {
            ++skipped;
            continue;
        }
        ++tested;
        auto opt = optimal_pebbling_number(g, options);
        auto two = restricted_optimal_pebbling_number(g, 2, options);
        bool explained = false;
        if (opt.value <= 3) {
            explained = true;
            ++by_three;
        }
        else if (dominating_pair_witness(g)) {
            explained = true;
            ++by_pair;
        }
        bool ok = diameter(g) <= 2 && opt.value <= 4 && two.value == opt.value && explained;
        if (!ok) {
            ++violations;
            r.witnesses.push_back("violation " + name + " (" + describe(g) + ") pi*=" + std::to_string(opt.value) +
                    " pi*_2=" + std::to_string(two.value));
        }
    }
    r.add("tested", tested);
    r.add("skipped", skipped);
    r.add("explained_by_pi*<=3", by_three);
    r.add("explained_by_dominating_pair", by_pair);
    r.add("violations", violations);
    r.pass = violations == 0;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport three_pile_lemma_scan(int n_max, const Caps & caps, SolverOptions options)
{
    if (n_max < 1)
        throw PreconditionError("n_max must be at least 1");
    if (n_max > caps.scan_max_order)
        throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the scan cap of " +
                std::to_string(caps.scan_max_order));

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "three-pile";
    r.instance = "connected graphs n<=" + std::to_string(n_max);
    r.expected = "solvable 3-pile distribution stays solvable after removing one pebble from the pile";

    const ReachOptions reach{options.weight_pruning};
    long long graphs = 0, distributions = 0, solvable = 0, violations = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const Graph & g : connected_graphs(n)) {
            ++graphs;
            for (Vertex pile = 0; pile < n; ++pile) {
                // Every subset of the other vertices gets one pebble each.
                for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
                    Distribution d(n);
                    d.set(pile, 3);
                    int bit = 0;
                    for (Vertex v = 0; v < n; ++v) {
                        if (v == pile)
                            continue;
                        if (subset >> bit & 1)
                            d.set(v, 1);
                        ++bit;
                    }
                    ++distributions;
                    if (!is_solvable(g, d, reach))
                        continue;
                    ++solvable;
                    Distribution reduced = d;
                    reduced.add(pile, -1);
                    if (!is_solvable(g, reduced, reach)) {
                        ++violations;
                        r.witnesses.push_back("violation " + describe(g) + " D=" + bracket(d));
                    }
                }
            }
        }
    r.add("graphs", graphs);
    r.add("distributions", distributions);
    r.add("solvable", solvable);
    r.add("violations", violations);
    r.pass = violations == 0;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport two_pile_scan(int n_max, const Caps & caps, SolverOptions options)
{
    if (n_max < 2)
        throw PreconditionError("n_max must be at least 2");
    if (n_max > caps.scan_max_order)
        throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the scan cap of " +
                std::to_string(caps.scan_max_order));

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "two-pile";
    r.instance = "connected graphs 2<=n<=" + std::to_string(n_max);
    r.expected = "pi*_2 <= 4 iff some {x:2, y:2} is solvable";

    long long graphs = 0, small = 0, mismatches = 0;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph & g : connected_graphs(n)) {
            ++graphs;
            bool at_most_four = restricted_optimal_pebbling_number(g, 2, options).value <= 4;
            bool pair = two_pile_witness(g, options).has_value();
            small += at_most_four;
            if (at_most_four != pair) {
                ++mismatches;
                r.witnesses.push_back("mismatch " + describe(g));
            }
        }
    r.add("graphs", graphs);
    r.add("pi*_2<=4", small);
    r.add("mismatches", mismatches);
    r.pass = mismatches == 0;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport claim8_weight_cases(int m, const Caps & caps)
{
    if (m > caps.h_family_max_m)
        throw CapExceeded("m = " + std::to_string(m) + " exceeds the H_m cap of " + std::to_string(caps.h_family_max_m));
    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "claim8-weights";
    r.instance = "H_" + std::to_string(m);
    r.expected = "W(u_{2k+2}) = 3/4 under {w:2, v_{2k+1}:2}; = 1 under {w:2, v_{2k}:2}; "
                 "<= 3/4 under {v_{2k+1}:2, u_{2l+1}:2}";

    Graph h = h_family(m);
    HFamilyLabels label{m};
    const int half = m / 2;
    const Dyadic three_quarters = Dyadic::fraction(3, 2);
    auto pile = [&](Vertex a, Vertex b) {
        Distribution d(h.order());
        d.set(a, 2);
        d.set(b, 2);
        return d;
    };

    long long odd_ok = 0, even_ok = 0, mixed_ok = 0, mixed_total = 0;
    for (int k = 1; k <= half; ++k) {
        Dyadic a = weight(h, pile(label.w(), label.v(2 * k + 1)), label.u(2 * k + 2));
        Dyadic b = weight(h, pile(label.w(), label.v(2 * k)), label.u(2 * k + 2));
        if (a == three_quarters)
            ++odd_ok;
        else
            r.witnesses.push_back("k=" + std::to_string(k) + " {w,v_2k+1}: W=" + a.to_string());
        if (b == Dyadic(1))
            ++even_ok;
        else
            r.witnesses.push_back("k=" + std::to_string(k) + " {w,v_2k}: W=" + b.to_string());
        for (int l = 1; l <= half; ++l) {
            ++mixed_total;
            Distribution d = pile(label.v(2 * k + 1), label.u(2 * l + 1));
            Dyadic c = weight(h, d, label.u(2 * k + 2));
            if (c <= three_quarters)
                ++mixed_ok;
            else
                r.witnesses.push_back("k=" + std::to_string(k) + " l=" + std::to_string(l) +
                        " {v_2k+1,u_2l+1}: W(u_2k+2)=" + c.to_string() + " > 3/4; distribution " +
                        (is_solvable(h, d) ? "solvable" : "unsolvable"));
        }
    }
    r.add("case_w_odd_exact_3/4", std::to_string(odd_ok) + "/" + std::to_string(half));
    r.add("case_w_even_exact_1", std::to_string(even_ok) + "/" + std::to_string(half));
    r.add("case_mixed_at_most_3/4", std::to_string(mixed_ok) + "/" + std::to_string(mixed_total));
    r.pass = odd_ok == half && even_ok == half && mixed_ok == mixed_total;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport verify_reduction(const NamedGraph & g, Count t, const Caps & caps, SolverOptions options)
{
    require_connected(g);
    if (t < 2)
        throw PreconditionError("t must be at least 2");
    const int n = g.graph.order();
    if (n * n > caps.product_max_order)
        throw CapExceeded("reduction order " + std::to_string(n * n) + " exceeds the cap of " +
                std::to_string(caps.product_max_order));

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "reduction";
    r.instance = g.name + " t=" + std::to_string(t);
    r.expected = "OPN(G, k) = ROPN(G.K_n, t, k) for k <= ceil(2n/3)";

    auto reduced = opn_to_ropn_reduction(g.graph);
    // Each decision is answered from the exact values, computed once.
    Count opt = optimal_pebbling_number(g.graph, options).value;
    Count lifted = restricted_optimal_pebbling_number(reduced.graph, t, options).value;
    long long agree = 0;
    const Count bound = pebbling_upper_bound(n);
    for (Count k = 0; k <= bound; ++k) {
        bool a = opt <= k, b = lifted <= k;
        if (a == b)
            ++agree;
        else
            r.witnesses.push_back("k=" + std::to_string(k) + " disagrees");
    }
    r.add("pi*(G)", opt);
    r.add("pi*_t(f(G))", lifted);
    r.add("agreeing_k", std::to_string(agree) + "/" + std::to_string(bound + 1));
    r.pass = agree == bound + 1;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport normalization_scan(int n_max, const Caps & caps, SolverOptions options)
{
    if (n_max < 2)
        throw PreconditionError("n_max must be at least 2");
    if (n_max > caps.scan_max_order)
        throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the scan cap of " +
                std::to_string(caps.scan_max_order));

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "normalization";
    r.instance = "optimal witnesses, connected graphs 2<=n<=" + std::to_string(n_max);
    r.expected = "normalized witness is solvable, same size, every loaded vertex 2-reachable, idempotent";

    long long graphs = 0, changed = 0, failures = 0;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph & g : connected_graphs(n)) {
            ++graphs;
            auto opt = optimal_pebbling_number(g, options);
            Distribution once = normalize_optimal(g, opt.witness);
            Distribution twice = normalize_optimal(g, once);
            bool ok = is_solvable(g, once) && once.total() == opt.witness.total()
                    && lone_unmovable_vertices(g, once).empty() && twice == once;
            changed += once != opt.witness;
            if (!ok) {
                ++failures;
                r.witnesses.push_back("failure " + describe(g) + " D=" + bracket(opt.witness));
            }
        }
    r.add("graphs", graphs);
    r.add("witnesses_changed", changed);
    r.add("failures", failures);
    r.pass = failures == 0;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

ClaimReport conjecture_search(int n_min, int n_max, int samples, std::uint64_t seed, const Caps & caps,
        SolverOptions options)
{
    if (n_min < 2 || n_min > n_max)
        throw PreconditionError("need 2 <= n_min <= n_max (a single vertex cannot have degree >= 1)");
    if (samples < 0)
        throw PreconditionError("samples must be non-negative");
    if (n_max > caps.search_max_order)
        throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the search cap of " +
                std::to_string(caps.search_max_order) + "; raise it with --cap-search or PEBBLE_CAP_SEARCH");

    Stopwatch clock;
    ClaimReport r;
    r.claim_id = "conjecture-search";
    r.instance = "n in [" + std::to_string(n_min) + "," + std::to_string(n_max) + "] samples=" +
            std::to_string(samples) + " seed=" + std::to_string(seed);
    r.expected = "delta >= n/2 implies pi*_2 = pi* and a dominating pair {u,v} + (N(u) & N(v))";

    std::mt19937_64 rng(seed);
    long long equal_counterexamples = 0, pair_counterexamples = 0;
    const int span = n_max - n_min + 1;
    for (int s = 0; s < samples; ++s) {
        const int n = n_min + s % span;
        Graph g = random_connected_graph(n, (n + 1) / 2, rng);
        auto opt = optimal_pebbling_number(g, options);
        auto two = restricted_optimal_pebbling_number(g, 2, options);
        if (opt.value != two.value) {
            ++equal_counterexamples;
            r.witnesses.push_back("pi*_2 != pi* on " + describe(g) + " pi*=" + std::to_string(opt.value) +
                    " pi*_2=" + std::to_string(two.value) + "\n" + emit_certificate(make_certificate(g, opt.witness)));
        }
        if (!dominating_pair_witness(g)) {
            ++pair_counterexamples;
            r.witnesses.push_back("no dominating pair on " + describe(g));
        }
    }
    r.add("samples", samples);
    r.add("conjecture1_counterexamples", equal_counterexamples);
    r.add("conjecture2_counterexamples", pair_counterexamples);
    r.add("summary", equal_counterexamples + pair_counterexamples == 0
                    ? "no counterexample among " + std::to_string(samples) + " samples"
                    : "counterexample found");
    r.pass = equal_counterexamples == 0 && pair_counterexamples == 0;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

const std::vector<std::string> & claim_ids()
{
    static const std::vector<std::string> ids = {"h-family", "claim8-weights", "product-theorem", "reduction",
            "chain", "min-degree", "three-pile", "two-pile", "normalization"};
    return ids;
}

std::vector<ClaimReport> verify_paper(std::string_view claim, const Caps & caps, SolverOptions options)
{
    if (!claim.empty() && std::find(claim_ids().begin(), claim_ids().end(), claim) == claim_ids().end())
        throw PreconditionError("unknown claim '" + std::string(claim) + "'");
    auto wanted = [&](std::string_view id) { return claim.empty() || claim == id; };

    std::vector<ClaimReport> reports;
    if (wanted("h-family"))
        for (int m : {4, 6})
            if (m <= caps.h_family_max_m)
                reports.push_back(verify_h_family(m, caps, options));
    if (wanted("claim8-weights"))
        for (int m : {4, 6})
            if (m <= caps.h_family_max_m)
                reports.push_back(claim8_weight_cases(m, caps));
    if (wanted("product-theorem")) {
        const std::vector<std::pair<NamedGraph, int>> instances = {{{"P_3", path_graph(3)}, 1},
                {{"P_3", path_graph(3)}, 2}, {{"P_4", path_graph(4)}, 2}, {{"C_4", cycle_graph(4)}, 2},
                {{"K_3", complete_graph(3)}, 1}};
        for (const auto & [g, m] : instances)
            for (Count t : {2, 3})
                reports.push_back(verify_product_theorem(g, m, t, caps, options));
    }
    if (wanted("reduction"))
        for (const NamedGraph & g : {NamedGraph{"P_2", path_graph(2)}, NamedGraph{"P_3", path_graph(3)},
                     NamedGraph{"K_3", complete_graph(3)}})
            for (Count t : {2, 3})
                reports.push_back(verify_reduction(g, t, caps, options));
    if (wanted("chain"))
        for (const NamedGraph & g : {NamedGraph{"K_5", complete_graph(5)}, NamedGraph{"H_4", h_family(4)},
                     NamedGraph{"P_6", path_graph(6)}})
            reports.push_back(verify_chain(g, 4, caps, options));
    if (wanted("min-degree")) {
        std::vector<NamedGraph> graphs;
        for (int n = 1; n <= caps.min_degree_max_order; ++n) {
            auto keep = [](int order, std::uint64_t mask) { return 3 * mask_min_degree(order, mask) >= 2 * order - 3; };
            int index = 0;
            for (Graph & g : nonisomorphic_graphs(n, keep))
                graphs.push_back({"n" + std::to_string(n) + "#" + std::to_string(index++), std::move(g)});
        }
        graphs.push_back({"C_5", cycle_graph(5)});
        graphs.push_back({"P_4", path_graph(4)});
        reports.push_back(verify_min_degree_claim(graphs, caps, options));
    }
    if (wanted("three-pile"))
        reports.push_back(three_pile_lemma_scan(std::min(5, caps.scan_max_order), caps, options));
    if (wanted("two-pile"))
        reports.push_back(two_pile_scan(std::min(6, caps.scan_max_order), caps, options));
    if (wanted("normalization"))
        reports.push_back(normalization_scan(std::min(6, caps.scan_max_order), caps, options));
    return reports;
}

std::string format_text(const ClaimReport & report, bool timing)
{
    std::ostringstream out;
    out << "[" << (report.pass ? "PASS" : "FAIL") << "] " << report.claim_id << ": " << report.instance << '\n';
    out << "  expected: " << report.expected << '\n';
    for (const auto & [name, value] : report.values)
        out << "  " << name << " = " << value << '\n';
    for (const auto & w : report.witnesses)
        out << "  witness: " << w << '\n';
    if (timing)
        out << "  elapsed_ms = " << std::fixed << std::setprecision(1) << report.elapsed_ms << '\n';
    return out.str();
}

std::string format_record(const ClaimReport & report, bool timing)
{
    nlohmann::ordered_json record;
    record["claim"] = report.claim_id;
    record["instance"] = report.instance;
    record["expected"] = report.expected;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto & [name, value] : report.values)
        values[name] = value;
    record["values"] = values;
    record["verdict"] = report.pass ? "pass" : "fail";
    record["witnesses"] = report.witnesses;
    if (timing)
        record["elapsed_ms"] = report.elapsed_ms;
    return record.dump();
}

} // namespace pebbling::experiments
