#pragma once

#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pebbling::experiments {

/// Size limits for the exact computations behind each report. Exceeding
/// one throws CapExceeded; raising it is an explicit user decision.
struct Caps
{
    int h_family_max_m = 6;
    int product_max_order = 12;
    int chain_max_order = 10;
    int scan_max_order = 6;
    int min_degree_max_order = 7;
    int search_max_order = 10;
};

struct NamedGraph
{
    std::string name;
    Graph graph;
};

/// Outcome of re-checking one stated result on one instance (or one scan).
struct ClaimReport
{
    std::string claim_id;
    std::string instance;
    std::string expected;
    /// Computed quantities in the order they were produced.
    std::vector<std::pair<std::string, std::string>> values;
    bool pass = false;
    double elapsed_ms = 0.0;
    /// Witness distributions, certificates or counterexamples, as text.
    std::vector<std::string> witnesses;

    void add(std::string name, std::string value) { values.emplace_back(std::move(name), std::move(value)); }
    void add(std::string name, long long value) { add(std::move(name), std::to_string(value)); }
};

/// pi*(H_m) = 4 and pi*_2(H_m) = 5, plus the two explicit solutions (four
/// pebbles on w; the 2-restricted five-pebble distribution) and the absence
/// of a solvable two-pile distribution.
ClaimReport verify_h_family(int m, const Caps & caps = {}, SolverOptions options = {});

/// pi*(G) = pi*(G·K_m) = pi*_t(G·K_m) for m >= ceil(n/3), t >= 2, with the
/// lifted witness checked to be solvable, 2-restricted and of size pi*(G).
ClaimReport verify_product_theorem(const NamedGraph & g, int m, Count t, const Caps & caps = {},
        SolverOptions options = {});

/// pi*_1 = n >= pi*_2 >= ... >= pi*_{t_max} >= pi*, pi*_2 <= gamma_R and
/// gamma <= gamma_R <= 2 gamma.
ClaimReport verify_chain(const NamedGraph & g, Count t_max, const Caps & caps = {}, SolverOptions options = {});

/// For every graph with 3 delta >= 2n - 3: diameter <= 2, pi* <= 4,
/// pi*_2 = pi*, and either pi* <= 3 or a dominating pair set exists. Other
/// graphs are counted as skipped.
ClaimReport verify_min_degree_claim(const std::vector<NamedGraph> & graphs, const Caps & caps = {},
        SolverOptions options = {});

/// Every connected graph up to n_max vertices (one per isomorphism class)
/// and every distribution with a single 3-pile and all other vertices <= 1:
/// solvable implies still solvable with the pile reduced to 2.
ClaimReport three_pile_lemma_scan(int n_max, const Caps & caps = {}, SolverOptions options = {});

/// pi*_2 <= 4 iff some two-pile distribution {x:2, y:2} is solvable, for
/// every connected graph on 2..n_max vertices.
ClaimReport two_pile_scan(int n_max, const Caps & caps = {}, SolverOptions options = {});

/// The exact weights used to rule out two-pile solutions on H_m.
ClaimReport claim8_weight_cases(int m, const Caps & caps = {});

/// pi*(G) <= k iff pi*_t(G·K_n) <= k for every k up to ceil(2n/3).
ClaimReport verify_reduction(const NamedGraph & g, Count t, const Caps & caps = {}, SolverOptions options = {});

/// Optimal witnesses of every connected graph on 2..n_max vertices are
/// normalized; the result must be solvable, equally large, have every loaded
/// vertex 2-reachable, and be a fixed point.
ClaimReport normalization_scan(int n_max, const Caps & caps = {}, SolverOptions options = {});

/// Seeded random graphs with delta >= ceil(n/2), n cycling through
/// [n_min, n_max], checked against pi*_2 = pi* and the dominating-pair
/// property. Deterministic in (n_min, n_max, samples, seed).
ClaimReport conjecture_search(int n_min, int n_max, int samples, std::uint64_t seed, const Caps & caps = {},
        SolverOptions options = {});

/// Claim ids accepted by verify_paper, in run order.
const std::vector<std::string> & claim_ids();

/// Runs the named claim's default instances ("" runs everything).
/// Unknown ids throw PreconditionError.
std::vector<ClaimReport> verify_paper(std::string_view claim, const Caps & caps = {}, SolverOptions options = {});

/// Human-readable block. Timings are omitted unless asked for, keeping
/// output byte-identical between runs.
std::string format_text(const ClaimReport & report, bool timing = false);

/// One JSON object on one line.
std::string format_record(const ClaimReport & report, bool timing = false);

} // namespace pebbling::experiments
