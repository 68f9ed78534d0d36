#include "oracles.hpp"

#include "pebbling/certificate.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/enumerate.hpp"
#include "pebbling/solver.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pebbling;
namespace fs = std::filesystem;

namespace
{
    std::string slurp(const fs::path & p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Graph graph_for(const fs::path & cert)
    {
        std::string stem = cert.filename().string();
        std::string name = stem.substr(0, stem.find("__"));
        return parse_edge_list(slurp(fs::path(PEBBLING_TEST_DATA) / "graphs" / (name + ".txt")));
    }

    std::vector<fs::path> files_in(const fs::path & dir)
    {
        std::vector<fs::path> out;
        for (const auto & entry : fs::directory_iterator(dir))
            out.push_back(entry.path());
        std::sort(out.begin(), out.end());
        return out;
    }

    Transcript transcript(std::initializer_list<std::pair<Move, Count>> entries)
    {
        Transcript t;
        for (auto [m, c] : entries)
            t.add(m, c);
        return t;
    }

    oracle::MoveCounts counts_of(const Transcript & t)
    {
        oracle::MoveCounts out;
        for (const auto & [m, c] : t.entries())
            out[{m.from, m.to}] = c;
        return out;
    }
}

// P_3 labelled 1 - 0 - 2 with D = (3, 0, 1). Running 0->1 first strands
// the pebble on 2; the order 0->2, 2->0, 0->1 works.
TEST(TranscriptFeasible, LowestFirstGreedyIsNotEnough)
{
    Graph g(3, std::vector<Edge>{{0, 1}, {0, 2}});
    std::vector<Count> d{3, 0, 1};
    Transcript t = transcript({{{0, 1}, 1}, {{0, 2}, 1}, {{2, 0}, 1}});
    EXPECT_FALSE(oracle::naive_greedy_executes(d, counts_of(t)));
    EXPECT_TRUE(oracle::some_order_executes(g, d, counts_of(t)));
    auto check = transcript_feasible(g, Distribution(d), t, 1);
    EXPECT_TRUE(check.feasible());
    EXPECT_EQ(check.order, (MoveSequence{{0, 2}, {2, 0}, {0, 1}}));
}

TEST(TranscriptFeasible, ClosedCycleWithoutPebblesIsStuck)
{
    Graph g = path_graph(4);
    Distribution d(std::vector<Count>{2, 1, 1, 0});
    Transcript t = transcript({{{1, 2}, 1}, {{2, 1}, 1}});
    auto check = transcript_feasible(g, d, t, 0);
    EXPECT_FALSE(check.executable);
    EXPECT_TRUE(check.reaches_target);
    EXPECT_FALSE(oracle::some_order_executes(g, {2, 1, 1, 0}, counts_of(t)));
}

TEST(TranscriptFeasible, NegativeBalanceAndBadMoves)
{
    Graph g = path_graph(3);
    auto check = transcript_feasible(g, Distribution(std::vector<Count>{2, 0, 0}), transcript({{{0, 1}, 2}}), 1);
    EXPECT_FALSE(check.executable);
    EXPECT_EQ(check.final_counts, (std::vector<long long>{-2, 2, 0}));
    EXPECT_THROW(transcript_feasible(g, Distribution(3), transcript({{{0, 2}, 1}}), 2), PreconditionError);
    EXPECT_THROW(transcript_feasible(g, Distribution(3), Transcript{}, 3), PreconditionError);
    EXPECT_THROW(transcript({{{0, 1}, 0}}), PreconditionError);
}

// All transcripts of up to 4 moves on graphs of up to 4 vertices against
// the exhaustive ordering oracle; the full sweep is an acceptance check.
TEST(TranscriptFeasible, AgreesWithExhaustiveOrdering)
{
    for (int n = 2; n <= 4; ++n)
        for (const Graph & g : nonisomorphic_graphs(n)) {
            std::vector<Move> moves;
            for (auto [a, b] : g.edges()) {
                moves.push_back({a, b});
                moves.push_back({b, a});
            }
            std::sort(moves.begin(), moves.end());
            std::vector<std::vector<std::size_t>> multisets{{}};
            for (int len = 1; len <= 4; ++len) {
                std::vector<std::vector<std::size_t>> next;
                for (const auto & ms : multisets)
                    if (static_cast<int>(ms.size()) == len - 1)
                        for (std::size_t i = ms.empty() ? 0 : ms.back(); i < moves.size(); ++i) {
                            auto grown = ms;
                            grown.push_back(i);
                            next.push_back(grown);
                        }
                multisets.insert(multisets.end(), next.begin(), next.end());
            }
            std::vector<Count> c(n, 0);
            for (;;) {
                Count total = 0;
                for (Count x : c)
                    total += x;
                if (total <= 4) {
                    Distribution d(c);
                    for (const auto & ms : multisets) {
                        Transcript t;
                        for (std::size_t i : ms)
                            t.add(moves[i]);
                        bool expected = oracle::some_order_executes(g, c, counts_of(t));
                        auto check = transcript_feasible(g, d, t, 0);
                        ASSERT_EQ(check.executable, expected) << format_edge_list(g) << d.to_string();
                        if (check.executable)
                            ASSERT_TRUE(is_executable(g, d, check.order));
                    }
                }
                int i = 0;
                while (i < n && c[i] == 4)
                    c[i++] = 0;
                if (i == n)
                    break;
                ++c[i];
            }
        }
}

TEST(Certificate, SolverWitnessesRoundTrip)
{
    for (int n = 1; n <= 5; ++n)
        for (const Graph & g : connected_graphs(n))
            for (Count t : {0, 2}) {
                PebblingResult r = t == 0 ? optimal_pebbling_number(g) : restricted_optimal_pebbling_number(g, t);
                auto cert = make_certificate(g, r.witness, t);
                EXPECT_TRUE(verify_certificate(g, cert));
                std::string text = emit_certificate(cert);
                auto back = parse_certificate(text);
                EXPECT_EQ(back, cert);
                EXPECT_EQ(emit_certificate(back), text);
                EXPECT_GE(cert.bound, r.value);
            }
}

TEST(Certificate, MakeRejectsBadInput)
{
    Graph p3 = path_graph(3);
    EXPECT_THROW(make_certificate(p3, Distribution(std::vector<Count>{2, 0, 0})), PreconditionError);
    EXPECT_THROW(make_certificate(p3, Distribution(std::vector<Count>{0, 3, 0}), 2), PreconditionError);
    EXPECT_THROW(make_certificate(p3, Distribution(2)), PreconditionError);
}

TEST(Certificate, WrongGraphThrows)
{
    auto cert = make_certificate(path_graph(3), Distribution(std::vector<Count>{0, 2, 0}));
    EXPECT_THROW(verify_certificate(complete_graph(3), cert), CertificateError);
    EXPECT_THROW(verify_certificate(path_graph(4), cert), CertificateError);
}

TEST(Certificate, ParseErrorLines)
{
    std::string good = emit_certificate(make_certificate(path_graph(3), Distribution(std::vector<Count>{0, 2, 0})));
    auto line_of = [](const std::string & text) {
        try {
            parse_certificate(text);
        }
        catch (const FormatError & e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of(good), -1);
    std::string bad = good;
    bad.replace(bad.find("CLAIM 0 2"), 9, "CLAIM 0 x");
    EXPECT_EQ(line_of(bad), 3);
    EXPECT_EQ(line_of(good + "\n"), 11);
    EXPECT_EQ(line_of(good.substr(0, good.size() - 4)), 10);
}

TEST(Conformance, ValidCorpus)
{
    auto files = files_in(fs::path(PEBBLING_TEST_DATA) / "certificates" / "valid");
    ASSERT_FALSE(files.empty());
    for (const auto & file : files) {
        std::string text = slurp(file);
        auto cert = parse_certificate(text);
        EXPECT_EQ(emit_certificate(cert), text) << file;
        EXPECT_TRUE(verify_certificate(graph_for(file), cert)) << file;
    }
}

TEST(Conformance, FormatCorpusIsRejectedByTheParser)
{
    auto files = files_in(fs::path(PEBBLING_TEST_DATA) / "certificates" / "invalid" / "format");
    ASSERT_GE(files.size(), 10u);
    for (const auto & file : files)
        EXPECT_THROW(parse_certificate(slurp(file)), FormatError) << file;
}

TEST(Conformance, SemanticCorpusParsesButFailsVerification)
{
    auto files = files_in(fs::path(PEBBLING_TEST_DATA) / "certificates" / "invalid" / "semantic");
    ASSERT_GE(files.size(), 5u);
    for (const auto & file : files) {
        auto cert = parse_certificate(slurp(file));
        bool accepted = true;
        try {
            accepted = verify_certificate(graph_for(file), cert);
        }
        catch (const CertificateError &) {
            accepted = false;
        }
        EXPECT_FALSE(accepted) << file;
    }
}
