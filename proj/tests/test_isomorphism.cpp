#include <gtest/gtest.h>

#include "coverlab/coverlab.hpp"
#include "oracle.hpp"

using namespace coverlab;

namespace {
ForbiddenFamily fam(std::initializer_list<const char*> specs) {
    ForbiddenFamily f;
    for (auto s : specs) f.members.push_back(generate(s));
    return f;
}
}  // namespace

TEST(ContainsInduced, Examples) {
    const auto e = contains_induced(generate("cycle:4"), generate("path:3"));
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(is_induced_embedding(generate("cycle:4"), generate("path:3"), *e));
    EXPECT_FALSE(contains_induced(generate("k:4"), generate("star:3")));
    EXPECT_TRUE(contains_induced(generate("f3:4"), generate("f4:4")));
}

TEST(ContainsInduced, AgreesWithOracle) {
    Rng rng(3);
    const std::vector<Graph> patterns{generate("path:3"), generate("path:4"), generate("star:3"), generate("cycle:4"),
                                      generate("k:3"),    generate("cycle:5"), generate("kstar:2"), generate("sstar:2")};
    for (int k = 0; k < 200; ++k) {
        const Graph host = random_graph(4 + k % 5, 0.25 + 0.05 * (k % 9), rng);
        for (const auto& p : patterns) {
            const auto e = contains_induced(host, p);
            EXPECT_EQ(e.has_value(), oracle::contains_induced(host, p)) << to_graph6(host) << " " << p.label();
            if (e) EXPECT_TRUE(is_induced_embedding(host, p, *e));
        }
    }
}

TEST(FamilyFree, Examples) {
    EXPECT_TRUE(is_family_free(generate("cycle:5"), fam({"k:3"})));
    EXPECT_FALSE(is_family_free(generate("k:5"), fam({"k:4"})));
    EXPECT_TRUE(is_family_free(generate("path:9"), theorem_target(Invariant::inspc, 4)));
}

TEST(FamilyLeq, Examples) {
    EXPECT_TRUE(family_leq(fam({"k:2"}), fam({"k:4", "sstar:4"})));
    EXPECT_FALSE(family_leq(fam({"path:4"}), fam({"k:5"})));
    const auto t = theorem_target(Invariant::inspp, 4);
    EXPECT_TRUE(family_leq(t, t));
}

TEST(Characterize, Examples) {
    EXPECT_EQ(characterize(fam({"k:4", "sstar:4", "f1:4", "f2:4", "f3:4"}), Invariant::inspc), 4u);
    EXPECT_EQ(characterize(fam({"k:2"}), Invariant::inspc), 4u);
    EXPECT_FALSE(characterize(fam({"path:4"}), Invariant::inspc).has_value());
}

TEST(Characterize, Errors) {
    try {
        characterize(ForbiddenFamily{{build_graph(2, {})}, "two isolated"}, Invariant::inspc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DisconnectedMember);
    }
    try {
        characterize(ForbiddenFamily{}, Invariant::inspc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BadInput);
    }
}

TEST(Characterize, TargetsAreSelfCharacterizing) {
    for (std::size_t n = 4; n <= 5; ++n)
        for (auto inv : kAllInvariants) EXPECT_EQ(characterize(theorem_target(inv, n), inv), n) << to_string(inv);
}

TEST(Isomorphic, Basics) {
    EXPECT_TRUE(are_isomorphic(build_graph(3, {{0, 1}, {1, 2}}), build_graph(3, {{0, 2}, {2, 1}})));
    EXPECT_FALSE(are_isomorphic(generate("path:4"), generate("star:3")));
}
