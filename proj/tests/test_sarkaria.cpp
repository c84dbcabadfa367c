#include <gtest/gtest.h>

#include <tvpm/instance_gen.hpp>
#include <tvpm/partition_search.hpp>
#include <tvpm/sarkaria.hpp>

using namespace tvpm;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

PointConfig line3() { return PointConfig(1, 2, {RVec{0}, RVec{1}, RVec{2}}); }

// Certificate must be the unique solution of the affine system on its partition.
void expect_cross_checked(const PointConfig& cfg, const RecoverResult& rec) {
    ASSERT_EQ(rec.kind, RecoverKind::Certificate);
    ASSERT_TRUE(rec.proper);
    auto direct = intersect_affine_hulls(cfg, *rec.partition);
    ASSERT_EQ(direct.kind, HullIntersection::Point);
    EXPECT_EQ(direct.cert->z, rec.cert->z);
    EXPECT_EQ(direct.cert->alpha, rec.cert->alpha);
    EXPECT_TRUE(verify_certificate(cfg, *rec.partition, *rec.cert).ok);
}

void expect_strictly_decreasing(const PivotRun& run) {
    for (std::size_t i = 1; i < run.norm_history.size(); ++i)
        EXPECT_LT(run.norm_history[i], run.norm_history[i - 1]);
    EXPECT_TRUE(run.norm_history.back().is_zero());
}

}  // namespace

TEST(CompanionSimplex, Shapes) {
    auto s2 = companion_simplex(2);
    EXPECT_EQ(s2.vectors, (std::vector<RVec>{RVec{1}, RVec{-1}}));
    auto s3 = companion_simplex(3);
    EXPECT_EQ(s3.vectors, (std::vector<RVec>{RVec{1, 0}, RVec{0, 1}, RVec{-1, -1}}));
    for (std::size_t r = 2; r <= 6; ++r) {
        auto s = companion_simplex(r);
        RVec sum(r - 1);
        for (const auto& v : s.vectors) sum += v;
        EXPECT_TRUE(sum.is_zero());
        // dropping any one vector leaves a basis
        for (std::size_t drop = 0; drop < r; ++drop) {
            RMat m(r - 1, r - 1);
            for (std::size_t j = 0, c = 0; j < r; ++j) {
                if (j == drop) continue;
                for (std::size_t t = 0; t + 1 < r; ++t) m(t, c) = s.vectors[j][t];
                ++c;
            }
            EXPECT_EQ(rank(m), r - 1);
        }
    }
    EXPECT_THROW(companion_simplex(1), std::invalid_argument);
}

TEST(Lift, SingleCoordinateExamples) {
    PointConfig cfg(1, 2, {RVec{2}, RVec{5}, RVec{7}});
    auto out = lift(cfg, {});
    EXPECT_EQ(out.sets[0], (std::vector<RVec>{RVec{2, 1}, RVec{-2, -1}}));
    auto in = lift(cfg, {0});
    EXPECT_EQ(in.sets[0], (std::vector<RVec>{RVec{-2, -1}, RVec{2, 1}}));
    EXPECT_EQ(in.lifted[0], (RVec{-2, -1}));
}

TEST(Lift, DimensionsAndUniformWitness) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t r = 2; r <= 4; ++r) {
            const auto cfg = random_config(d, r, d * 10 + r);
            const auto ls = lift(cfg, separated_subset(cfg, 1, 3));
            for (const auto& s : ls.sets) {
                ASSERT_EQ(s.size(), r);
                RVec avg(cfg.n() - 1);
                for (const auto& v : s) {
                    ASSERT_EQ(v.dim(), (r - 1) * (d + 1));
                    avg += v / Rat(static_cast<long>(r));
                }
                EXPECT_TRUE(avg.is_zero());
            }
        }
    EXPECT_THROW(lift(PointConfig(1, 2, {RVec{0}, RVec{1}}), {}), std::invalid_argument);
}

TEST(ColorfulCaratheodory, OneDimensionalExample) {
    const ColorSets sets{{RVec{-1}, RVec{1}}, {RVec{-2}, RVec{2}}};
    auto run = colorful_caratheodory(sets, {1, 1});
    EXPECT_EQ(run.transversal.choice, (std::vector<std::size_t>{1, 0}));  // {1, -2}
    EXPECT_EQ(run.transversal.weights, (std::vector<Rat>{R("2/3"), R("1/3")}));
    expect_strictly_decreasing(run);

    auto mirrored = colorful_caratheodory(sets, {0, 0});
    EXPECT_EQ(mirrored.transversal.choice, (std::vector<std::size_t>{0, 1}));  // {-1, 2}
    EXPECT_EQ(mirrored.transversal.weights, (std::vector<Rat>{R("2/3"), R("1/3")}));
}

TEST(ColorfulCaratheodory, ImmediateWhenStartContainsOrigin) {
    const ColorSets sets{{RVec{0, 0}, RVec{1, 1}, RVec{-1, -1}}, {RVec{3, 0}, RVec{-3, 0}},
                         {RVec{0, 5}, RVec{0, -5}}};
    auto run = colorful_caratheodory(sets, {0, 0, 0});
    EXPECT_EQ(run.norm_history.size(), 1u);
    EXPECT_TRUE(run.norm_history[0].is_zero());
}

TEST(ColorfulCaratheodory, RejectsColorWithoutOrigin) {
    const ColorSets sets{{RVec{1}, RVec{2}}, {RVec{-1}, RVec{1}}};
    EXPECT_THROW(colorful_caratheodory(sets, {0, 0}), std::invalid_argument);
}

TEST(ColorfulCaratheodory, ObserverSeesEveryStep) {
    const auto cfg = random_config(2, 3, 5);
    const auto ls = lift(cfg, {});
    std::vector<PivotStep> steps;
    auto run = colorful_caratheodory(ls, [&](const PivotStep& s) { steps.push_back(s); });
    ASSERT_EQ(steps.size(), run.norm_history.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        EXPECT_EQ(steps[i].iteration, i);
        EXPECT_EQ(steps[i].norm2, run.norm_history[i]);
        EXPECT_EQ(norm2(steps[i].w), steps[i].norm2);
    }
    EXPECT_EQ(steps.back().choice, run.transversal.choice);
}

TEST(TverbergPm, LineNoNegatives) {
    auto res = tverberg_pm(line3(), {});
    expect_cross_checked(line3(), res.recovered);
    EXPECT_EQ(*res.recovered.partition, Partition({{0, 2}, {1}}));
    EXPECT_TRUE(res.recovered.cert->negatives.empty());
    EXPECT_EQ(res.recovered.alternative, Alternative::InM);
}

TEST(TverbergPm, LinePrescribedEnd) {
    auto res = tverberg_pm(line3(), {2});
    const auto& rec = res.recovered;
    expect_cross_checked(line3(), rec);
    const bool in_m = rec.cert->negatives == IndexSet{2};
    const bool compl_m = rec.cert->negatives == IndexSet{0, 1};
    EXPECT_TRUE(in_m || compl_m);
    auto oracle = search_prescribed(line3(), rec.cert->negatives);
    ASSERT_TRUE(oracle.found());
    EXPECT_EQ(*oracle.partition, *rec.partition);
}

TEST(TverbergPm, TransversalIsExact) {
    const auto cfg = random_config(2, 3, 8);
    const auto ls = lift(cfg, separated_subset(cfg, 2, 8));
    auto run = colorful_caratheodory(ls);
    RVec sum(cfg.n() - 1);
    Rat wsum;
    for (Index i = 0; i < cfg.n(); ++i) {
        EXPECT_GE(run.transversal.weights[i].sign(), 0);
        wsum += run.transversal.weights[i];
        sum += ls.sets[i][run.transversal.choice[i]] * run.transversal.weights[i];
    }
    EXPECT_EQ(wsum, Rat(1));
    EXPECT_TRUE(sum.is_zero());
    expect_strictly_decreasing(run);
}

TEST(TverbergPm, SizeOneSeparatedInPlane) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto cfg = random_config(2, 2, seed);
        const auto m = separated_subset(cfg, 1, seed);
        auto res = tverberg_pm(cfg, m);
        EXPECT_TRUE(res.separated);
        expect_cross_checked(cfg, res.recovered);
        EXPECT_EQ(res.recovered.cert->negatives, m);
        EXPECT_TRUE(search_prescribed(cfg, m).found());
    }
}

// |M| <= r-1 and separated: negatives are exactly M.
TEST(TverbergPm, SmallSeparatedSetsGiveInM) {
    int runs = 0;
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t r = 2; r <= 4; ++r)
            for (std::uint64_t seed = 0; seed < 8; ++seed) {
                const auto cfg = random_config(d, r, 500 + seed);
                const auto m = separated_subset(cfg, seed % r, seed + 1);
                auto res = tverberg_pm(cfg, m);
                expect_cross_checked(cfg, res.recovered);
                EXPECT_EQ(res.recovered.alternative, Alternative::InM);
                EXPECT_EQ(res.recovered.cert->negatives, m);
                EXPECT_GT(res.recovered.gamma.sign(), 0);
                expect_strictly_decreasing(res.run);
                ++runs;
            }
    EXPECT_EQ(runs, 72);
}

// |M| >= r and separated: negatives are M or its complement, and the search oracle agrees.
TEST(TverbergPm, LargeSeparatedSetsGiveOneAlternative) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t d = 1 + seed % 2, r = 2 + seed % 2;
        const auto cfg = random_config(d, r, 900 + seed);
        const std::size_t k = r + seed % (cfg.n() - r);
        const auto m = separated_subset(cfg, k, seed);
        auto res = tverberg_pm(cfg, m);
        expect_cross_checked(cfg, res.recovered);
        const auto& neg = res.recovered.cert->negatives;
        if (res.recovered.alternative == Alternative::InM) EXPECT_EQ(neg, m);
        else EXPECT_EQ(neg, complement(m, cfg.n()));
        EXPECT_TRUE(search_prescribed(cfg, neg).found());
    }
}

TEST(TverbergPm, ExampleTwoOnlyComplement) {
    const auto inst = example2(2, 3, R("1/100"), 1);
    auto res = tverberg_pm(inst.config, inst.m_set);
    EXPECT_TRUE(res.separated);
    expect_cross_checked(inst.config, res.recovered);
    EXPECT_EQ(res.recovered.alternative, Alternative::Complement);
    EXPECT_EQ(res.recovered.cert->negatives, complement(inst.m_set, inst.config.n()));
    EXPECT_FALSE(search_prescribed(inst.config, inst.m_set).found());
}

TEST(TverbergPm, NonSeparatedIsFlagged) {
    const auto inst = example1(2, 3, R("1/100"), 2);
    auto res = tverberg_pm(inst.config, inst.m_set);
    EXPECT_FALSE(res.separated);
    // whatever comes back must be internally consistent
    if (res.recovered.kind == RecoverKind::Certificate && res.recovered.proper)
        expect_cross_checked(inst.config, res.recovered);
}

TEST(Recover, EmptyPartYieldsSeparationEvidence) {
    // Hand-made transversal: all colors in part 0 with M = {1}; a_0 = 0, a_1 = 1, a_2 = 2.
    // alpha = (1/4, -1/2, 1/4) gives sum alpha (a, 1) = 0 in part 0, so part 1 is empty.
    const auto ls = lift(line3(), {1});
    Transversal t{{0, 0, 0}, {R("1/4"), R("1/2"), R("1/4")}};
    auto rec = recover(ls, t);
    ASSERT_EQ(rec.kind, RecoverKind::SeparationViolated);
    ASSERT_TRUE(rec.evidence);
    EXPECT_EQ(rec.evidence->point, RVec{1});
    EXPECT_EQ(rec.evidence->weights_rest[0], R("1/2"));
    EXPECT_EQ(rec.evidence->weights_rest[2], R("1/2"));
    EXPECT_EQ(rec.evidence->weights_m[1], Rat(1));
}

TEST(Recover, GammaZeroIsDegenerate) {
    // Branch check: every part nonempty and every lifted sum zero.
    const auto ls = lift(line3(), {1});
    Transversal t{{0, 0, 1}, {0, 0, 0}};
    auto rec = recover(ls, t);
    EXPECT_EQ(rec.kind, RecoverKind::DegenerateGamma);
    EXPECT_TRUE(rec.partition);
    EXPECT_FALSE(rec.cert);
}

TEST(Recover, InconsistentTransversalThrows) {
    const auto ls = lift(line3(), {});
    Transversal t{{0, 0, 1}, {R("1/3"), R("1/3"), R("1/3")}};
    EXPECT_THROW(recover(ls, t), std::logic_error);
}
