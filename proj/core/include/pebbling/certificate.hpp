#pragma once

#include "pebbling/distribution.hpp"
#include "pebbling/engine.hpp"
#include "pebbling/error.hpp"
#include "pebbling/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pebbling {

/// A certificate does not belong to the graph it is checked against, or
/// names a move that is not an edge.
class CertificateError : public Error
{
public:
    using Error::Error;
};

/// Order-free record of a move sequence: how many times each directed move
/// occurs.
class Transcript
{
public:
    Transcript() = default;

    /// Throws PreconditionError when count < 1.
    void add(const Move & m, Count count = 1);

    Count count(const Move & m) const;
    Count total_moves() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }

    /// Sorted by (from, to); every count is >= 1.
    const std::map<Move, Count> & entries() const noexcept { return entries_; }

    friend bool operator==(const Transcript &, const Transcript &) = default;

private:
    std::map<Move, Count> entries_;
};

Transcript transcript_of(std::span<const Move> sequence);

/// d(v) + in(v) - 2 out(v) for every vertex: the distribution left after
/// running all of the transcript's moves in any executable order. Entries
/// may be negative, in which case no order is executable.
std::vector<long long> final_counts(const Distribution & d, const Transcript & tr);

struct TranscriptCheck
{
    /// Some ordering of exactly the transcript's moves is executable.
    bool executable = false;
    /// The final distribution puts at least one pebble on the target.
    bool reaches_target = false;
    /// An executable ordering when `executable`, else the prefix that was
    /// scheduled before no move could be placed.
    MoveSequence order;
    std::vector<long long> final_counts;

    bool feasible() const noexcept { return executable && reaches_target; }
};

/// Decides whether the transcript can be scheduled under d, and if so
/// produces an ordering.
///
/// Pebbles at a vertex can only be spent if they eventually arrive, so the
/// question reduces to the reversed process, where undoing a move v->u takes
/// one pebble from u and gives two back to v, starting from the final
/// distribution. That process consumes a single pebble per step, and such
/// schedules exist exactly when the final counts are non-negative and every
/// closed set of the move graph (a bottom strongly connected component)
/// ends with a pebble on it.
///
/// The schedule is built by saturation: repeatedly run the lowest (from, to)
/// move whose source holds two pebbles and whose removal keeps the rest of
/// the transcript schedulable. Polynomial in the number of moves.
///
/// Non-edge moves or a bad target throw PreconditionError.
TranscriptCheck transcript_feasible(const Graph & g, const Distribution & d, const Transcript & tr, Vertex target);

/// Witness that pi*_t(G) <= k (t = 0: pi*(G) <= k): a distribution of size k
/// and one transcript per vertex delivering a pebble there.
struct SolvabilityCertificate
{
    int order = 0;
    int edge_count = 0;
    std::uint64_t graph_fingerprint = 0;
    Count restriction = 0;
    Count bound = 0;
    Distribution distribution;
    std::vector<Transcript> transcripts;

    friend bool operator==(const SolvabilityCertificate &, const SolvabilityCertificate &) = default;
};

/// Builds a certificate for a solvable distribution, taking each transcript
/// from a reachability witness. Throws PreconditionError if d is not
/// solvable or violates the restriction.
SolvabilityCertificate make_certificate(const Graph & g, const Distribution & d, Count restriction = 0);

/// Checks size, restriction and every transcript. Throws CertificateError
/// when the certificate describes a different graph or names a non-edge.
bool verify_certificate(const Graph & g, const SolvabilityCertificate & cert);

/// The first failed check, in the order verify_certificate runs them, or
/// nullopt for a valid certificate. Same exceptions as verify_certificate.
std::optional<std::string> certificate_defect(const Graph & g, const SolvabilityCertificate & cert);

/// Canonical text:
///
///     PEBBLING-CERTIFICATE 1
///     GRAPH <order> <edge count> <fingerprint>
///     CLAIM <t> <k>
///     DISTRIBUTION <c_0> ... <c_{n-1}>
///     TRANSCRIPT <v> <entry count>      (one block per vertex, v ascending)
///     <from> <to> <count>               (entries sorted by (from, to))
///     END
std::string emit_certificate(const SolvabilityCertificate & cert);

/// Accepts exactly the canonical form; throws FormatError with the line
/// number otherwise.
SolvabilityCertificate parse_certificate(std::string_view text);

} // namespace pebbling
