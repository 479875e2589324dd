#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "coverlab/coverlab.hpp"
#include "oracle.hpp"

using namespace coverlab;

namespace {
std::string v(const BoundValue& b) { return b.value.str(); }
}  // namespace

TEST(Ramsey, Identities) {
    EXPECT_EQ(v(ramsey(2, 5)), "5");
    EXPECT_EQ(ramsey(2, 5).status, BoundStatus::Exact);
    EXPECT_EQ(v(ramsey(1, 7)), "1");
    EXPECT_EQ(v(ramsey(7, 2)), "7");
}

TEST(Ramsey, ExhaustiveSearch) {
    const auto r33 = ramsey(3, 3), r34 = ramsey(3, 4);
    EXPECT_EQ(v(r33), "6");
    EXPECT_EQ(r33.status, BoundStatus::Exact);
    EXPECT_EQ(v(r34), "9");
    EXPECT_EQ(r34.status, BoundStatus::Exact);
    const auto [r, witness] = ramsey_search(3, 4);
    EXPECT_EQ(r, 9u);
    EXPECT_EQ(witness.order(), 8u);
    EXPECT_FALSE(oracle::has_clique(witness, 3, false));
    EXPECT_FALSE(oracle::has_clique(witness, 4, true));
}

TEST(Ramsey, TableAndBinomial) {
    EXPECT_EQ(v(ramsey(4, 4)), "18");
    EXPECT_EQ(ramsey(4, 4).status, BoundStatus::TableExact);
    EXPECT_EQ(v(ramsey(5, 4)), "25");
    EXPECT_EQ(v(ramsey(3, 9)), "36");
    const auto r55 = ramsey(5, 5);
    EXPECT_EQ(r55.status, BoundStatus::UpperBoundOnly);
    EXPECT_EQ(v(r55), "70");  // C(8, 4)
}

TEST(Ramsey, SymmetricAndWithinBinomialBound) {
    for (std::size_t s = 1; s <= 6; ++s)
        for (std::size_t t = 1; t <= 9; ++t) {
            const auto a = ramsey(s, t), b = ramsey(t, s);
            EXPECT_EQ(v(a), v(b));
            EXPECT_EQ(a.status, b.status);
            EXPECT_TRUE(a.value <= Magnitude(detail::binomial(s + t - 2, s - 1)));
        }
}

TEST(Ramsey, TableOverride) {
    const std::string path = ::testing::TempDir() + "/ramsey_table.txt";
    {
        std::ofstream f(path);
        f << "# s t value\n5 5 43\n";
    }
    const auto table = detail::load_table(path);
    ASSERT_EQ(table.size(), 1u);
    EXPECT_EQ(table.begin()->second, 43u);
}

TEST(Alpha, Examples) {
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(v(alpha_value(n, 1)), "1");
        EXPECT_EQ(alpha_value(n, 1).status, BoundStatus::Exact);
    }
    EXPECT_EQ(v(alpha_value(3, 2)), "5");
    EXPECT_EQ(alpha_value(3, 2).status, BoundStatus::Exact);
    EXPECT_EQ(v(alpha_value(4, 2)), "17");
    EXPECT_EQ(alpha_value(4, 2).status, BoundStatus::TableExact);
    // alpha_{3,3} = R(3, 11) - 1, beyond the table: an upper bound
    EXPECT_EQ(alpha_value(3, 3).status, BoundStatus::UpperBoundOnly);
}

TEST(Alpha, MonotoneInH) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t h = 1; h < 6; ++h) EXPECT_TRUE(alpha_value(n, h).value <= alpha_value(n, h + 1).value);
}

TEST(Xi, Examples) {
    for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(v(xi_value(n, 1)), "1");
    EXPECT_EQ(v(xi_value(3, 2)), "3");
    EXPECT_EQ(v(xi_value(4, 2)), "9");
    EXPECT_EQ(xi_value(4, 2).status, BoundStatus::Exact);
}

TEST(Xi, EqualsSummationForm) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto base = ramsey(n - 1, n).value - 1;
        Magnitude sum(0ull);
        for (std::size_t i = 1; i <= 8; ++i) {
            sum = sum + base.pow(static_cast<unsigned>(i - 1));
            EXPECT_EQ(v(xi_value(n, i)), sum.str()) << n << "," << i;
        }
    }
}

TEST(Constants, KnownValues) {
    const auto pc = paper_constants(4);
    EXPECT_EQ(v(pc.nu), "8");
    EXPECT_EQ(pc.nu.status, BoundStatus::Exact);
    EXPECT_EQ(v(pc.xi), "9");
    // c_2 = dominating bound * xi_{4,2}
    const auto dom = dominating_bound(4, 2);
    EXPECT_EQ(v(dom), "307");  // 18 * 17 + 1
    EXPECT_EQ(v(c2_value(4, 2)), "2763");
    EXPECT_TRUE(pc.c_inspc.symbolic());
    EXPECT_EQ(pc.c_inspc.status(), BoundStatus::UpperBoundOnly);
    EXPECT_EQ(pc.c_inspp.status, BoundStatus::UpperBoundOnly);
    EXPECT_THROW(paper_constants(3), Error);
}

TEST(Constants, ChiOverrideEvaluates) {
    const auto c1 = c1_value(4, 2, BigInt(3));
    ASSERT_FALSE(c1.symbolic());
    EXPECT_EQ(v(*c1.evaluated), "921");
    EXPECT_EQ(c1.status(), BoundStatus::TableExact);
}

TEST(Magnitude, ExactArithmeticAndEstimates) {
    const Magnitude a(BigInt("123456789012345678901234567890"));
    EXPECT_EQ((a * a).str(), "15241578753238836750495351562536198787501905199875019052100");
    const auto huge = Magnitude(10ull).pow(20000);
    EXPECT_FALSE(huge.materialized());
    EXPECT_NEAR(huge.log10(), 20000.0, 1e-6);
    EXPECT_TRUE(a <= huge);
    EXPECT_THROW(huge.exact(), Error);
}
