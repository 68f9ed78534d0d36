#include "pebbling/certificate.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pebbling {

void Transcript::add(const Move & m, Count count)
{
    if (count < 1)
        throw PreconditionError("transcript counts must be at least 1");
    entries_[m] += count;
}

Count Transcript::count(const Move & m) const
{
    auto it = entries_.find(m);
    return it == entries_.end() ? 0 : it->second;
}

Count Transcript::total_moves() const noexcept
{
    Count total = 0;
    for (const auto & [m, c] : entries_)
        total += c;
    return total;
}

Transcript transcript_of(std::span<const Move> sequence)
{
    Transcript tr;
    for (const auto & m : sequence)
        tr.add(m);
    return tr;
}

std::vector<long long> final_counts(const Distribution & d, const Transcript & tr)
{
    std::vector<long long> result(d.counts().begin(), d.counts().end());
    for (const auto & [m, c] : tr.entries()) {
        result.at(m.from) -= 2LL * c;
        result.at(m.to) += c;
    }
    return result;
}

namespace
{
    // True when every bottom strongly connected component of the graph
    // formed by the moves with a positive remaining count contains a vertex
    // whose final count is positive.
    bool closed_sets_marked(int n, const std::vector<std::pair<Move, Count>> & moves,
            const std::vector<long long> & final)
    {
        std::vector<std::vector<Vertex>> out(n);
        std::vector<bool> involved(n, false);
        for (const auto & [m, c] : moves)
            if (c > 0) {
                out[m.from].push_back(m.to);
                involved[m.from] = involved[m.to] = true;
            }

        // reach[v] = vertices reachable from v (n is small).
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n; ++s) {
            if (!involved[s])
                continue;
            reach[s][s] = true;
            stack.assign(1, s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : out[v])
                    if (!reach[s][w]) {
                        reach[s][w] = true;
                        stack.push_back(w);
                    }
            }
        }
        for (Vertex s = 0; s < n; ++s) {
            if (!involved[s])
                continue;
            // s lies in a bottom component iff everything it reaches reaches
            // it back.
            bool bottom = true;
            bool marked = false;
            for (Vertex v = 0; v < n && bottom; ++v)
                if (reach[s][v]) {
                    if (!reach[v][s])
                        bottom = false;
                    else if (final[v] > 0)
                        marked = true;
                }
            if (bottom && !marked)
                return false;
        }
        return true;
    }
}

TranscriptCheck transcript_feasible(const Graph & g, const Distribution & d, const Transcript & tr, Vertex target)
{
    if (d.order() != g.order())
        throw PreconditionError("distribution order does not match the graph");
    if (!g.contains(target))
        throw PreconditionError("target vertex " + std::to_string(target) + " out of range");
    for (const auto & [m, c] : tr.entries())
        if (!g.contains(m.from) || !g.contains(m.to) || !g.adjacent(m.from, m.to))
            throw PreconditionError("transcript move " + to_string(m) + " is not along an edge");

    TranscriptCheck check;
    check.final_counts = final_counts(d, tr);
    check.reaches_target = check.final_counts[target] >= 1;
    if (std::any_of(check.final_counts.begin(), check.final_counts.end(), [](long long c) { return c < 0; }))
        return check;

    const int n = g.order();
    std::vector<std::pair<Move, Count>> remaining(tr.entries().begin(), tr.entries().end());
    if (!closed_sets_marked(n, remaining, check.final_counts))
        return check;

    std::vector<long long> state(d.counts().begin(), d.counts().end());
    Count left = tr.total_moves();
    check.order.reserve(left);
    while (left > 0) {
        bool placed = false;
        for (auto & [m, c] : remaining) {
            if (c == 0 || state[m.from] < 2)
                continue;
            --c;
            if (c > 0 || closed_sets_marked(n, remaining, check.final_counts)) {
                state[m.from] -= 2;
                state[m.to] += 1;
                check.order.push_back(m);
                placed = true;
                break;
            }
            ++c;
        }
        if (!placed)
            return check;
        --left;
    }
    check.executable = true;
    return check;
}

SolvabilityCertificate make_certificate(const Graph & g, const Distribution & d, Count restriction)
{
    if (d.order() != g.order())
        throw PreconditionError("distribution order does not match the graph");
    if (restriction < 0)
        throw PreconditionError("restriction must be non-negative");
    if (restriction >= 1 && !d.is_restricted(restriction))
        throw PreconditionError("distribution is not " + std::to_string(restriction) + "-restricted");

    SolvabilityCertificate cert;
    cert.order = g.order();
    cert.edge_count = g.edge_count();
    cert.graph_fingerprint = fingerprint(g);
    cert.restriction = restriction;
    cert.bound = d.total();
    cert.distribution = d;
    cert.transcripts.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d[v] > 0)
            continue;
        auto witness = k_reachable(g, d, v, 1);
        if (!witness)
            throw PreconditionError("distribution is not solvable: vertex " + std::to_string(v) + " unreachable");
        cert.transcripts[v] = transcript_of(*witness);
    }
    return cert;
}

std::optional<std::string> certificate_defect(const Graph & g, const SolvabilityCertificate & cert)
{
    if (cert.order != g.order() || cert.edge_count != g.edge_count() || cert.graph_fingerprint != fingerprint(g))
        throw CertificateError("certificate was issued for a different graph");
    if (cert.distribution.order() != g.order() || static_cast<int>(cert.transcripts.size()) != g.order())
        throw CertificateError("certificate does not cover every vertex");
    for (const auto & tr : cert.transcripts)
        for (const auto & [m, c] : tr.entries())
            if (!g.contains(m.from) || !g.contains(m.to) || !g.adjacent(m.from, m.to))
                throw CertificateError("transcript move " + to_string(m) + " is not along an edge");

    if (cert.distribution.total() != cert.bound)
        return "distribution has " + std::to_string(cert.distribution.total()) + " pebbles, claim says " +
                std::to_string(cert.bound);
    if (cert.restriction < 0)
        return std::string("negative restriction");
    if (cert.restriction >= 1 && !cert.distribution.is_restricted(cert.restriction))
        return "distribution is not " + std::to_string(cert.restriction) + "-restricted";
    for (Vertex v = 0; v < g.order(); ++v) {
        auto check = transcript_feasible(g, cert.distribution, cert.transcripts[v], v);
        if (!check.executable)
            return "transcript " + std::to_string(v) + " has no executable order";
        if (!check.reaches_target)
            return "transcript " + std::to_string(v) + " leaves no pebble on " + std::to_string(v);
    }
    return std::nullopt;
}

bool verify_certificate(const Graph & g, const SolvabilityCertificate & cert)
{
    return !certificate_defect(g, cert).has_value();
}

std::string emit_certificate(const SolvabilityCertificate & cert)
{
    std::ostringstream out;
    out << "PEBBLING-CERTIFICATE 1\n";
    out << "GRAPH " << cert.order << ' ' << cert.edge_count << ' ' << cert.graph_fingerprint << '\n';
    out << "CLAIM " << cert.restriction << ' ' << cert.bound << '\n';
    out << "DISTRIBUTION";
    for (Count c : cert.distribution.counts())
        out << ' ' << c;
    out << '\n';
    for (std::size_t v = 0; v < cert.transcripts.size(); ++v) {
        const auto & entries = cert.transcripts[v].entries();
        out << "TRANSCRIPT " << v << ' ' << entries.size() << '\n';
        for (const auto & [m, c] : entries)
            out << m.from << ' ' << m.to << ' ' << c << '\n';
    }
    out << "END\n";
    return out.str();
}

namespace
{
    class CertificateReader
    {
    public:
        explicit CertificateReader(std::string_view text) : text_(text) {}

        // Next line split on single spaces; the document must end in '\n'.
        std::vector<std::string_view> line(std::string_view what)
        {
            if (pos_ >= text_.size())
                throw FormatError("unexpected end of document, expected " + std::string(what), line_no_ + 1);
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                throw FormatError("missing newline at end of line", line_no_ + 1);
            std::string_view raw = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            std::vector<std::string_view> tokens;
            std::size_t start = 0;
            for (;;) {
                auto space = raw.find(' ', start);
                auto token = raw.substr(start, space == std::string_view::npos ? raw.npos : space - start);
                if (token.empty())
                    fail("empty field (stray or doubled space)");
                tokens.push_back(token);
                if (space == std::string_view::npos)
                    break;
                start = space + 1;
            }
            return tokens;
        }

        template <typename Int>
        Int number(std::string_view token)
        {
            bool canonical = !token.empty() && std::all_of(token.begin(), token.end(),
                    [](char ch) { return ch >= '0' && ch <= '9'; }) && (token.size() == 1 || token[0] != '0');
            Int value{};
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (!canonical || ec != std::errc() || ptr != token.data() + token.size())
                fail("expected a non-negative integer, found '" + std::string(token) + "'");
            return value;
        }

        void expect(const std::vector<std::string_view> & tokens, std::string_view keyword, std::size_t size)
        {
            if (tokens[0] != keyword)
                fail("expected '" + std::string(keyword) + "', found '" + std::string(tokens[0]) + "'");
            if (tokens.size() != size)
                fail("'" + std::string(keyword) + "' line needs " + std::to_string(size - 1) + " fields");
        }

        bool at_end() const { return pos_ >= text_.size(); }

        [[noreturn]] void fail(const std::string & message) const { throw FormatError(message, line_no_); }
        [[noreturn]] void fail_next(const std::string & message) const { throw FormatError(message, line_no_ + 1); }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;
        int line_no_ = 0;
    };
}

SolvabilityCertificate parse_certificate(std::string_view text)
{
    CertificateReader in(text);
    SolvabilityCertificate cert;

    auto header = in.line("header");
    if (header.size() != 2 || header[0] != "PEBBLING-CERTIFICATE" || header[1] != "1")
        in.fail("expected 'PEBBLING-CERTIFICATE 1'");

    auto graph = in.line("GRAPH");
    in.expect(graph, "GRAPH", 4);
    cert.order = in.number<int>(graph[1]);
    cert.edge_count = in.number<int>(graph[2]);
    cert.graph_fingerprint = in.number<std::uint64_t>(graph[3]);

    auto claim = in.line("CLAIM");
    in.expect(claim, "CLAIM", 3);
    cert.restriction = in.number<Count>(claim[1]);
    cert.bound = in.number<Count>(claim[2]);

    auto dist = in.line("DISTRIBUTION");
    in.expect(dist, "DISTRIBUTION", static_cast<std::size_t>(cert.order) + 1);
    std::vector<Count> counts;
    for (std::size_t i = 1; i < dist.size(); ++i)
        counts.push_back(in.number<Count>(dist[i]));
    cert.distribution = Distribution(std::move(counts));

    cert.transcripts.resize(cert.order);
    for (int v = 0; v < cert.order; ++v) {
        auto head = in.line("TRANSCRIPT " + std::to_string(v));
        in.expect(head, "TRANSCRIPT", 3);
        if (in.number<int>(head[1]) != v)
            in.fail("expected TRANSCRIPT " + std::to_string(v));
        int entries = in.number<int>(head[2]);
        std::optional<Move> previous;
        for (int e = 0; e < entries; ++e) {
            auto row = in.line("transcript entry");
            if (row.size() != 3)
                in.fail("transcript entry needs 'from to count'");
            Move m{in.number<int>(row[0]), in.number<int>(row[1])};
            Count c = in.number<Count>(row[2]);
            if (m.from >= cert.order || m.to >= cert.order)
                in.fail("vertex label out of range");
            if (c < 1)
                in.fail("transcript count must be at least 1");
            if (previous && !(*previous < m))
                in.fail("transcript entries must be strictly increasing by (from, to)");
            previous = m;
            cert.transcripts[v].add(m, c);
        }
    }

    auto end = in.line("END");
    if (end.size() != 1 || end[0] != "END")
        in.fail("expected 'END'");
    if (!in.at_end())
        in.fail_next("trailing content after END");
    return cert;
}

} // namespace pebbling
