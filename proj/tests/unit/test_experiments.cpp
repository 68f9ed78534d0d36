#include "pebbling/constructions.hpp"
#include "pebbling/error.hpp"
#include "pebbling/experiments.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace pebbling;
using namespace pebbling::experiments;

namespace
{
    std::string value(const ClaimReport & r, std::string_view name)
    {
        for (const auto & [k, v] : r.values)
            if (k == name)
                return v;
        return "<missing " + std::string(name) + ">";
    }
}

TEST(Experiments, HFamily)
{
    ClaimReport r = verify_h_family(4);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(value(r, "pi*"), "4");
    EXPECT_EQ(value(r, "pi*_2"), "5");
    EXPECT_EQ(value(r, "four_on_w_solvable"), "yes");
    EXPECT_THROW(verify_h_family(3), PreconditionError);
    EXPECT_THROW(verify_h_family(8), CapExceeded);
    Caps wide;
    wide.h_family_max_m = 8;
    EXPECT_NO_THROW(claim8_weight_cases(8, wide));
}

TEST(Experiments, ProductTheorem)
{
    ClaimReport r = verify_product_theorem({"P_3", path_graph(3)}, 1, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(value(r, "pi*(G)"), "2");
    EXPECT_EQ(value(r, "pi*(G.K_m)"), "2");
    EXPECT_EQ(value(r, "pi*_t(G.K_m)"), "2");
    ClaimReport p4 = verify_product_theorem({"P_4", path_graph(4)}, 2, 2);
    EXPECT_TRUE(p4.pass);
    EXPECT_EQ(value(p4, "pi*(G)"), value(p4, "pi*(G.K_m)"));
    EXPECT_THROW(verify_product_theorem({"2K_1", Graph(2, {})}, 1, 2), PreconditionError);
    EXPECT_THROW(verify_product_theorem({"P_6", path_graph(6)}, 1, 2), PreconditionError);
    EXPECT_THROW(verify_product_theorem({"P_3", path_graph(3)}, 1, 1), PreconditionError);
    EXPECT_THROW(verify_product_theorem({"P_4", path_graph(4)}, 4, 2), CapExceeded);
}

TEST(Experiments, Chain)
{
    ClaimReport k5 = verify_chain({"K_5", complete_graph(5)}, 4);
    EXPECT_TRUE(k5.pass);
    EXPECT_EQ(value(k5, "pi*"), "2");
    EXPECT_EQ(value(k5, "pi*_2"), "2");
    EXPECT_EQ(value(k5, "gamma_R"), "2");
    ClaimReport p6 = verify_chain({"P_6", path_graph(6)}, 4);
    EXPECT_TRUE(p6.pass);
    EXPECT_EQ(value(p6, "pi*_1"), "6");
    EXPECT_THROW(verify_chain({"P_11", path_graph(11)}, 3), CapExceeded);
}

TEST(Experiments, MinDegreeSkipsGraphsOutsideTheHypothesis)
{
    ClaimReport r = verify_min_degree_claim({{"K_6", complete_graph(6)}, {"C_5", cycle_graph(5)}});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(value(r, "tested"), "1");
    EXPECT_EQ(value(r, "skipped"), "1");
}

TEST(Experiments, SmallScans)
{
    EXPECT_TRUE(three_pile_lemma_scan(4).pass);
    EXPECT_TRUE(two_pile_scan(5).pass);
    EXPECT_TRUE(normalization_scan(5).pass);
    EXPECT_THROW(three_pile_lemma_scan(7), CapExceeded);
    EXPECT_TRUE(verify_reduction({"P_3", path_graph(3)}, 2).pass);
}

TEST(Experiments, ConjectureSearchIsReproducible)
{
    ClaimReport a = conjecture_search(4, 7, 30, 99);
    ClaimReport b = conjecture_search(4, 7, 30, 99, {}, {true, 3});
    EXPECT_EQ(format_text(a), format_text(b));
    EXPECT_EQ(format_record(a), format_record(b));
    ClaimReport k2 = conjecture_search(2, 2, 5, 1);
    EXPECT_TRUE(k2.pass);
    EXPECT_THROW(conjecture_search(1, 3, 5, 1), PreconditionError);
    EXPECT_THROW(conjecture_search(4, 11, 5, 1), CapExceeded);
}

TEST(Experiments, RecordsAreJsonLines)
{
    ClaimReport r = verify_h_family(4);
    std::string line = format_record(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["claim"], "h-family");
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["values"]["pi*_2"], "5");
    EXPECT_FALSE(j.contains("elapsed_ms"));
    EXPECT_TRUE(nlohmann::json::parse(format_record(r, true)).contains("elapsed_ms"));
    EXPECT_EQ(format_text(r).find("elapsed"), std::string::npos);
}

TEST(Experiments, VerifyPaperSelectsClaims)
{
    auto reports = verify_paper("chain");
    ASSERT_EQ(reports.size(), 3u);
    for (const auto & r : reports)
        EXPECT_EQ(r.claim_id, "chain");
    EXPECT_THROW(verify_paper("nope"), PreconditionError);
}
