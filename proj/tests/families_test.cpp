#include <gtest/gtest.h>

#include "slc/canonical.hpp"
#include "slc/charpoly.hpp"
#include "slc/families.hpp"
#include "slc/oracle.hpp"
#include "support.hpp"

using namespace slc;
using namespace slc::testing;

namespace {

IntPoly hi(std::initializer_list<long long> high_to_low) {
    std::vector<BigInt> c(high_to_low.begin(), high_to_low.end());
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no slc::Error thrown";
    return Errc::ConvergenceFailure;
}

} // namespace

TEST(BuildBase, Examples) {
    EXPECT_TRUE(isomorphic(build_base(BaseSpec::vertex_shared(3, 3)), bowtie()));
    EXPECT_TRUE(isomorphic(build_base(BaseSpec::theta(2, 2, 1)), k4_minus_edge()));
    EXPECT_TRUE(isomorphic(build_base(BaseSpec::theta(2, 2, 2)), k23()));
    EXPECT_TRUE(isomorphic(build_base(BaseSpec::path_joined(3, 1, 3)), two_triangles_bridge()));
    EXPECT_TRUE(isomorphic(build_base(BaseSpec::theta(3, 2, 1)), theta123()));
    EXPECT_EQ(code_of([] { build_base(BaseSpec::vertex_shared(2, 3)); }), Errc::InvalidSpec);
    EXPECT_EQ(code_of([] { build_base(BaseSpec::theta(2, 1, 1)); }), Errc::InvalidSpec);
}

TEST(BuildBase, ClassifiesBackToItsSpec) {
    std::vector<BaseSpec> specs;
    for (int p = 3; p <= 6; ++p)
        for (int q = p; q <= 6; ++q) {
            specs.push_back(BaseSpec::vertex_shared(p, q));
            for (int l = 1; l <= 3; ++l) specs.push_back(BaseSpec::path_joined(p, l, q));
        }
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= k; ++l)
            for (int m = 1; m <= l; ++m)
                if (BaseSpec::theta(k, l, m).valid()) specs.push_back(BaseSpec::theta(k, l, m));
    for (const auto& s : specs) {
        Graph g = build_base(s);
        EXPECT_EQ(g.order(), s.vertex_count());
        EXPECT_EQ(g.size(), g.order() + 1);
        EXPECT_EQ(classify_bicyclic(g).shape, s) << s.to_string();
    }
}

TEST(Families, BaseShapes) {
    for (Family f : kAllFamilies) {
        const auto& b = family_base(f);
        Graph g = build_family({f, std::vector<int>(b.names.size(), 0)});
        EXPECT_EQ(classify_bicyclic(g).shape, b.shape) << to_string(f);
        EXPECT_TRUE(isomorphic(g, build_base(b.shape))) << to_string(f);
    }
}

TEST(Families, BuildExamples) {
    EXPECT_TRUE(isomorphic(build_family({Family::B3, {1, 0, 0, 0}}), extremal_graph(5, ParityClass::OddClass)));
    Graph b62 = build_family({Family::B7, {1, 0, 0, 0, 0}});
    EXPECT_EQ(b62.order(), 6);
    EXPECT_TRUE(isomorphic(b62, k23().with_vertices(1).with_edge(0, 5)));
    EXPECT_TRUE(isomorphic(build_family({Family::B1, {0, 0, 0, 0, 0}}), bowtie()));
    EXPECT_EQ(code_of([] { build_family({Family::B1, {0, 0, 0}}); }), Errc::InvalidSpec);
    EXPECT_EQ(code_of([] { build_family({Family::B3, {-1, 0, 0, 0}}); }), Errc::InvalidSpec);
    // Pendant vertices follow the base, grouped by host.
    Graph g = build_family({Family::B3, {0, 2, 1, 0}});
    EXPECT_TRUE(g.has_edge(1, 4));
    EXPECT_TRUE(g.has_edge(1, 5));
    EXPECT_TRUE(g.has_edge(2, 6));
}

TEST(Families, ExtremalGraphs) {
    EXPECT_TRUE(isomorphic(extremal_graph(4, ParityClass::OddClass), k4_minus_edge()));
    EXPECT_TRUE(isomorphic(extremal_graph(5, ParityClass::EvenClass), k23()));
    Graph g7 = extremal_graph(7, ParityClass::OddClass);
    EXPECT_EQ(g7.order(), 7);
    EXPECT_EQ(g7.size(), 8);
    EXPECT_EQ(g7.degree(0), 6);
    EXPECT_EQ(code_of([] { extremal_graph(3, ParityClass::OddClass); }), Errc::TooSmall);
    EXPECT_EQ(code_of([] { extremal_graph(4, ParityClass::EvenClass); }), Errc::TooSmall);
}

TEST(ClosedForms, Examples) {
    EXPECT_EQ(closed_form_poly(Family::B3, 5), hi({1, -12, 49, -86, 64, -16}));
    EXPECT_EQ(closed_form_poly(Family::B3, 5), signless_charpoly(extremal_graph(5, ParityClass::OddClass)));
    EXPECT_EQ(closed_form_poly(Family::B1, 5), hi({1, -12, 50, -92, 77, -24}));
    EXPECT_EQ(closed_form_poly(Family::B3, 4), hi({1, -10, 32, -40, 16}));
    EXPECT_EQ(signless_coeffs_oracle(bowtie()).values.back(), 24);
    EXPECT_EQ(code_of([] { closed_form_poly(Family::B7, 5); }), Errc::OutOfRange);
    EXPECT_EQ(code_of([] { closed_form_poly(Family::B8, 7); }), Errc::OutOfRange);
}

TEST(ClosedForms, MatchCharpolyUpToSixteen) {
    for (Family f : kAllFamilies) {
        for (int n = closed_form_min_order(f); n <= 16; ++n) {
            const IntPoly cf = closed_form_poly(f, n);
            EXPECT_TRUE(cf.is_monic());
            EXPECT_EQ(cf.degree(), n);
            EXPECT_EQ(cf, signless_charpoly(build_family(hub_family(f, n)))) << to_string(f) << " n=" << n;
        }
    }
}

TEST(DifferenceIdentities, Examples) {
    auto d = difference_identity(1, 5);
    EXPECT_EQ(d.lhs, hi({1, -6, 13, -8}));
    EXPECT_EQ(d.rhs, hi({1, -6, 13, -8}));
    EXPECT_EQ(code_of([] { difference_identity(1, 4); }), Errc::OutOfRange);
    EXPECT_EQ(code_of([] { difference_identity(7, 10); }), Errc::OutOfRange);
    EXPECT_TRUE(difference_identity(4, 7).holds());
}

TEST(DifferenceIdentities, HoldUpToSixteen) {
    for (int eq = 1; eq <= 6; ++eq)
        for (int n = difference_identity_min_order(eq); n <= 16; ++n)
            EXPECT_TRUE(difference_identity(eq, n).holds()) << "eq " << eq << " n=" << n;
}

TEST(ExtremalCubics, Examples) {
    auto [a5, b5] = extremal_cubics(5);
    EXPECT_EQ(a5, hi({1, -9, 20, -8}));
    EXPECT_EQ(b5, hi({1, -9, 23, -15}));
    auto [a31, b31] = extremal_cubics(31);
    EXPECT_EQ(a31, hi({1, -35, 124, -8}));
    EXPECT_EQ(b31, hi({1, -35, 153, -93}));
    for (int n = 5; n < 40; ++n) EXPECT_EQ(extremal_cubics(n).first.evaluate(0), -8);
}

// Hub B3 is coefficientwise minimal among hubs B1..B4, and hub B7 among B6..B8.
TEST(ClosedForms, HubMinimality) {
    for (int n = 7; n <= 16; ++n) {
        const auto b3 = coeff_vector(closed_form_poly(Family::B3, n), MatrixKind::Signless);
        for (Family f : {Family::B1, Family::B2, Family::B4}) {
            const auto other = coeff_vector(closed_form_poly(f, n), MatrixKind::Signless);
            EXPECT_EQ(compare_dominance(other, b3).relation, Relation::Dominates) << to_string(f) << n;
        }
        if (n < 8) continue;
        const auto b7 = coeff_vector(closed_form_poly(Family::B7, n), MatrixKind::Signless);
        for (Family f : {Family::B6, Family::B8}) {
            const auto other = coeff_vector(closed_form_poly(f, n), MatrixKind::Signless);
            EXPECT_EQ(compare_dominance(other, b7).relation, Relation::Dominates) << to_string(f) << n;
        }
    }
}
