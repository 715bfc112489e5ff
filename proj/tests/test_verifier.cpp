#include "mstd/error.hpp"
#include "mstd/verifier.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace mstd;

namespace {
    auto set_of(std::vector<Element> v) -> IntegerSet { return make_set(v).set; }
}

TEST(Verify, Conway)
{
    auto report = verify(set_of(mstd::test::conway));
    EXPECT_EQ(report.classification, (Classification{ 26, 25, Label::mstd }));
    EXPECT_EQ(report.op_counts.additions, 36u);
    EXPECT_EQ(report.op_counts.subtractions, 56u);
    EXPECT_GT(report.op_counts.comparisons, 0u);
    EXPECT_EQ(report.bit_cost.paper_model, 64u);
    // (3*64 - 8)/2 = 92, ceil(log2(15)) = 4
    EXPECT_EQ(report.bit_cost.practical_model, 368u);
}

TEST(Verify, Singleton)
{
    auto report = verify(set_of({ 0 }));
    EXPECT_EQ(report.classification, (Classification{ 1, 1, Label::balanced }));
    EXPECT_EQ(report.op_counts.additions, 1u);
    EXPECT_EQ(report.op_counts.subtractions, 0u);
}

TEST(Verify, Empty)
{
    auto report = verify(IntegerSet{});
    EXPECT_EQ(report.classification, (Classification{ 0, 0, Label::balanced }));
    EXPECT_EQ(report.op_counts.additions, 0u);
    EXPECT_EQ(report.op_counts.subtractions, 0u);
    EXPECT_EQ(report.bit_cost.paper_model, 0u);
}

TEST(Verify, FiftyElements)
{
    std::vector<Element> v;
    for (Element i = 0 ; i < 50 ; ++i)
        v.push_back(i * i - 300);
    auto report = verify(set_of(v));
    EXPECT_EQ(report.op_counts.additions, 1275u);
    EXPECT_EQ(report.op_counts.subtractions, 2450u);
}

TEST(Verify, OverflowPropagates)
{
    EXPECT_THROW(verify(set_of({ 1, INT64_MAX })), OverflowError);
    EXPECT_THROW(verify(set_of({ INT64_MIN, 0 })), OverflowError);
}

TEST(Verify, CountsFollowCardinalityOnly)
{
    std::mt19937_64 rng{ 5 };
    for (std::uint64_t n = 1 ; n <= 200 ; ++n) {
        IntegerSet s;
        while (s.size() != n) {
            std::uniform_int_distribution<Element> d(-1'000'000, 1'000'000);
            std::vector<Element> raw;
            for (std::uint64_t i = 0 ; i < n ; ++i)
                raw.push_back(d(rng));
            s = make_set(raw).set;
        }
        auto counts = verify(s).op_counts;
        ASSERT_EQ(counts.additions, n * (n + 1) / 2) << n;
        ASSERT_EQ(counts.subtractions, n * (n - 1)) << n;
    }
}

TEST(Verify, AgreesWithClassify)
{
    std::mt19937_64 rng{ 31 };
    for (int i = 0 ; i < 2000 ; ++i) {
        auto s = mstd::test::random_set(rng, 30, -60, 60);
        ASSERT_EQ(verify(s).classification, classify(s)) << format_set(s);
    }
}

TEST(BitCost, Examples)
{
    EXPECT_EQ(bit_cost_estimate(set_of({ 4, 5, 6 })).paper_model, 18u);
    EXPECT_EQ(bit_cost_estimate(set_of(mstd::test::conway)).paper_model, 64u);
    EXPECT_EQ(bit_cost_estimate(set_of({ 1024 })).paper_model, 10u);
    EXPECT_THROW(bit_cost_estimate(IntegerSet{}), DomainError);
}

TEST(BitCost, GuardRule)
{
    // k = 1 and negative k use |k| floored at 2, so the log factor is 1
    EXPECT_EQ(bit_cost_estimate(set_of({ 1, 2 })).paper_model, 4u);
    EXPECT_EQ(bit_cost_estimate(set_of({ -1, 2 })).paper_model, 4u);
    // |k| = 5 -> ceil(log2 5) = 3
    EXPECT_EQ(bit_cost_estimate(set_of({ -5, 2 })).paper_model, 12u);
    // |k| = 2^63 -> 63
    EXPECT_EQ(bit_cost_estimate(set_of({ INT64_MIN })).paper_model, 63u);
}

TEST(BitCost, PracticalModel)
{
    // n = 3: (27 - 3)/2 = 12; max |a| = 6 -> ceil(log2 7) = 3
    EXPECT_EQ(bit_cost_estimate(set_of({ 4, 5, 6 })).practical_model, 36u);
    // {0}: max |a| = 0 -> factor floored at 1; (3 - 1)/2 = 1
    EXPECT_EQ(bit_cost_estimate(set_of({ 0 })).practical_model, 1u);
    // 1 + 2^63 -> 64
    EXPECT_EQ(bit_cost_estimate(set_of({ INT64_MIN })).practical_model, 64u);
    // 1 + 1023 = 1024 -> 10
    EXPECT_EQ(bit_cost_estimate(set_of({ -1023, 0 })).practical_model, 50u);
}
