#include <gtest/gtest.h>

#include "coverlab/coverlab.hpp"

using namespace coverlab;

namespace {
std::vector<std::size_t> degrees(const Graph& g) { return g.degree_sequence(); }
}  // namespace

TEST(Generate, SStar) {
    const Graph g = generate("sstar:3");
    EXPECT_EQ(g.order(), 7u);
    EXPECT_EQ(g.edge_count(), 6u);
    EXPECT_EQ(degrees(g), (std::vector<std::size_t>{3, 2, 2, 2, 1, 1, 1}));
}

TEST(Generate, STilde) {
    const Graph g = generate("stilde:2");
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.edge_count(), 6u);
    EXPECT_EQ(g.degree(0), 4u);
}

TEST(Generate, F3) {
    const Graph g = generate("f3:2");
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.edge_count(), 6u);
    // x_i y_1, x_i z_1, y_1 y_2, z_1 z_2
    for (Vertex x : {0u, 1u}) {
        EXPECT_TRUE(g.adjacent(x, 2));
        EXPECT_TRUE(g.adjacent(x, 4));
    }
    EXPECT_TRUE(g.adjacent(2, 3));
    EXPECT_TRUE(g.adjacent(4, 5));
}

TEST(Generate, H1) {
    const Graph g = generate("h1:2,3");
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(g.edge_count(), 2u * 2 + 3);
    EXPECT_TRUE(g.adjacent(6, 7));  // v_1 w_1
    EXPECT_TRUE(g.adjacent(6, 2));  // v_1 u^(3)_1
    EXPECT_TRUE(g.adjacent(6, 3));  // v_1 u^(1)_2
}

TEST(Generate, KStar) {
    const Graph g = generate("kstar:3");
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Generate, OrdersOfAllFamilies) {
    EXPECT_EQ(generate("h3:2,3").order(), 8u);
    EXPECT_EQ(generate("h2:3,4").order(), 14u);
    EXPECT_EQ(generate("h4:3,3").order(), 13u);
    EXPECT_EQ(generate("h5:4,4").order(), 22u);
    EXPECT_EQ(generate("h3:4,4").order(), 28u);
    EXPECT_EQ(generate("f1:4").order(), 10u);
    EXPECT_EQ(generate("f2:4").order(), 9u);
    EXPECT_EQ(generate("f4:4").order(), 10u);
    EXPECT_EQ(generate("f5:4").edge_count(), generate("f4:4").edge_count() + 1);
    EXPECT_EQ(generate("star:5").order(), 6u);
    EXPECT_EQ(generate("empty:4").edge_count(), 0u);
}

TEST(Generate, LabelsRoundTripThroughParser) {
    for (const char* s : {"k:4", "sstar:3", "h5:3,3", "f2:5", "path:9"}) {
        const auto spec = parse_named_spec(s);
        EXPECT_EQ(to_string(spec), s);
        EXPECT_EQ(generate(s).label(), s);
    }
}

TEST(Generate, Errors) {
    for (const char* s : {"f9:4", "sstar", "h1:3", "path:x", ""}) {
        try {
            generate(s);
            FAIL() << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << s;
        }
    }
    for (const char* s : {"sstar:1", "h1:1,3", "h1:2,2", "cycle:2", "k:300"}) {
        try {
            generate(s);
            FAIL() << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadParameter) << s;
        }
    }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(generate("k:4")).edge_count(), 0u);
    const Graph c5 = generate("cycle:5");
    const Graph cc = complement(complement(c5));
    EXPECT_EQ(cc.edges(), c5.edges());
    EXPECT_TRUE(are_isomorphic(complement(c5), c5));
}
