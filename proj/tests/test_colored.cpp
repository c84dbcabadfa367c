#include <gtest/gtest.h>

#include <tvpm/colored.hpp>
#include <tvpm/instance_gen.hpp>

#include "oracles.hpp"

using namespace tvpm;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

ColorClasses two_segments() { return ColorClasses(1, 2, {{RVec{0}, RVec{4}}, {RVec{1}, RVec{3}}}); }

}  // namespace

TEST(ColorClasses, Validation) {
    EXPECT_EQ(ColorClasses::expected_classes(2, 3), 5u);
    EXPECT_THROW(ColorClasses(1, 2, {{RVec{0}, RVec{4}}}), std::invalid_argument);
    EXPECT_THROW(ColorClasses(1, 2, {{RVec{0}, RVec{4}}, {RVec{1}}}), std::invalid_argument);
    EXPECT_THROW(ColorClasses(1, 2, {{RVec{0}, RVec{4}}, {RVec{4}, RVec{3}}}), std::invalid_argument);
    EXPECT_THROW(ColorClasses(1, 2, {{RVec{0}, RVec{4}}, {RVec{1, 1}, RVec{3}}}), std::invalid_argument);
}

TEST(PermutationLift, SegmentExample) {
    const auto s = companion_simplex(2);
    auto l = permutation_lift({RVec{1}, RVec{3}}, false, s);
    EXPECT_EQ(l.points, (std::vector<RVec>{RVec{-2}, RVec{2}}));
    EXPECT_EQ(l.perms, (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));
    auto f = permutation_lift({RVec{1}, RVec{3}}, true, s);
    EXPECT_EQ(f.points, (std::vector<RVec>{RVec{2}, RVec{-2}}));
}

TEST(PermutationLift, UniformAverageIsOrigin) {
    for (std::size_t r = 2; r <= 4; ++r) {
        const auto cc = random_color_classes(2, r, r);
        const auto s = companion_simplex(r);
        auto l = permutation_lift(cc.cls(0), false, s);
        std::size_t perms = 1;
        for (std::size_t k = 2; k <= r; ++k) perms *= k;
        EXPECT_EQ(l.points.size(), perms);
        RVec sum(2 * (r - 1));
        for (const auto& p : l.points) sum += p;
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(PermutationLift, CapacityLimit) {
    std::vector<RVec> f;
    for (long i = 0; i < 6; ++i) f.push_back(RVec{i});
    EXPECT_THROW(permutation_lift(f, false, companion_simplex(6)), std::length_error);
}

TEST(Colored, SegmentExample) {
    auto res = colored_tverberg_pm(two_segments(), {});
    ASSERT_FALSE(res.degenerate_gamma);
    ASSERT_TRUE(res.partition);
    const auto& cp = *res.partition;
    EXPECT_EQ(cp.coefficients, (std::vector<Rat>{R("1/3"), R("2/3")}));
    EXPECT_EQ(cp.z, RVec{2});
    // parts {0, 3} and {4, 1}, up to part labels
    EXPECT_EQ(oracle::normalize_assignment(cp.assignment), (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));
    EXPECT_TRUE(verify_colorful(two_segments(), cp).ok);
    EXPECT_EQ(res.alternative, ColoredAlternative::MNegative);
}

TEST(Colored, VerifyRejectsBrokenCertificates) {
    const auto cc = two_segments();
    ColorfulPartition good{{{0, 1}, {1, 0}}, {R("1/3"), R("2/3")}, RVec{2}};
    ASSERT_TRUE(verify_colorful(cc, good).ok);

    auto not_perm = good;
    not_perm.assignment[1] = {0, 0};
    EXPECT_FALSE(verify_colorful(cc, not_perm).ok);

    auto bad_sum = good;
    bad_sum.coefficients[1] = R("1/3");
    EXPECT_FALSE(verify_colorful(cc, bad_sum).ok);

    auto bad_z = good;
    bad_z.z = RVec{3};
    auto rep = verify_colorful(cc, bad_z);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.violations.size(), 2u);

    auto bad_shape = good;
    bad_shape.coefficients.pop_back();
    EXPECT_FALSE(verify_colorful(cc, bad_shape).ok);
}

// Results agree with the exhaustive solution of every colorful equal-coefficient system.
TEST(Colored, AgreesWithEnumerationOracle) {
    for (auto [d, r] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {1, 3}}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const auto cc = random_color_classes(d, r, 40 + seed);
            const auto all = oracle::enumerate_colorful(cc);
            const auto m = random_subset(cc.n(), seed);
            auto res = colored_tverberg_pm(cc, m);
            ASSERT_FALSE(res.degenerate_gamma);
            ASSERT_TRUE(res.partition);
            const auto& cp = *res.partition;
            EXPECT_TRUE(verify_colorful(cc, cp).ok);
            const auto norm = oracle::normalize_assignment(cp.assignment);
            bool matched = false;
            for (const auto& s : all)
                if (s.assignment == norm) {
                    matched = true;
                    EXPECT_EQ(s.coefficients, cp.coefficients);
                    EXPECT_EQ(s.z, cp.z);
                }
            EXPECT_TRUE(matched) << "d=" << d << " r=" << r << " seed=" << seed;
            // one of the two sign alternatives is realized
            EXPECT_TRUE(res.alternative.has_value());
            bool any = false;
            for (const auto& s : all) any = any || classify_split(s.coefficients, m).has_value();
            EXPECT_TRUE(any);
        }
    }
}

TEST(Colored, NormDecreasesAndObserverFires) {
    const auto cc = random_color_classes(2, 3, 9);
    std::size_t steps = 0;
    auto res = colored_tverberg_pm(cc, {0, 2}, [&](const PivotStep&) { ++steps; });
    EXPECT_EQ(steps, res.run.norm_history.size());
    for (std::size_t i = 1; i < res.run.norm_history.size(); ++i)
        EXPECT_LT(res.run.norm_history[i], res.run.norm_history[i - 1]);
    ASSERT_TRUE(res.partition);
    EXPECT_TRUE(verify_colorful(cc, *res.partition).ok);
}

TEST(ClassifySplit, Cases) {
    EXPECT_EQ(classify_split({R("1/2"), R("1/2")}, {0, 1}), ColoredAlternative::MPositive);
    EXPECT_EQ(classify_split({2, -1}, {0}), ColoredAlternative::MPositive);
    EXPECT_EQ(classify_split({-1, 2}, {0}), ColoredAlternative::MNegative);
    EXPECT_FALSE(classify_split({R("1/2"), R("1/2")}, {0}).has_value());
    EXPECT_FALSE(classify_split({0, 1}, {}).has_value());
}
