#include <gtest/gtest.h>

#include "tpshape/dompoly.hpp"
#include "tpshape/oracle.hpp"
#include "tpshape/tpcheck.hpp"

using namespace tpshape;

namespace {
const Kernel A({{-1, -2, -3, -4}, {-5, -6, -7, -8}, {-9, -10, -11, -11}, {-13, -14, -15, -11}});
using E = std::vector<OrderSign>;
constexpr auto P = OrderSign::positive, N = OrderSign::negative, Z = OrderSign::zero_only,
               X = OrderSign::mixed;
} // namespace

TEST(Det, SmallCases)
{
    EXPECT_EQ(det(Kernel(std::vector<std::vector<Rational>>{{7}})), 7);
    EXPECT_EQ(det(Kernel({{1, 2}, {3, 4}})), -2);
    EXPECT_EQ(det(Kernel({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(det(Kernel::identity(5)), 1);
    EXPECT_EQ(det(Kernel({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})),
              Rational(1, 10) - Rational(1, 12));
    EXPECT_EQ(det(A), 0);
    EXPECT_THROW(det(Kernel(2, 3)), input_error);
}

TEST(Det, NeedsPivoting)
{
    EXPECT_EQ(det(Kernel({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), -1);
    EXPECT_EQ(det(Kernel({{0, 2, 1}, {3, 0, 0}, {1, 1, 1}})), -3);
}

TEST(Minors, Examples)
{
    const auto a = minors(Kernel::identity(2), 2);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].value, 1);

    const auto b = minors(Kernel({{1, 2}, {3, 4}}), 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].value, -2);

    Kernel ones(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
    const auto c = minors(ones, 2);
    ASSERT_EQ(c.size(), 9u);
    for (const auto& mn : c) EXPECT_EQ(mn.value, 0);
}

TEST(Minors, LexicographicOneBasedOrder)
{
    const auto ms = minors(A, 2);
    ASSERT_EQ(ms.size(), 36u);
    EXPECT_EQ(ms.front().rows, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(ms.front().cols, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(ms[1].cols, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(ms.back().rows, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(ms.back().cols, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(contiguous_minors(A, 2).size(), 9u);
    EXPECT_THROW(minors(A, 5), input_error);
    EXPECT_THROW(minors(A, 0), input_error);
}

// Every minor of A: order 1 negative, order 2 negative, order 3 negative or
// zero, order 4 zero. So A is TN_4, and order 2 is negative rather than positive.
TEST(Classify, MatrixA)
{
    const auto rep = classify(A, 3);
    EXPECT_EQ(rep.eps, (E{N, N, N}));
    EXPECT_TRUE(rep.sr(3));
    EXPECT_TRUE(rep.tn(3));
    EXPECT_FALSE(rep.tp(3));
    EXPECT_FALSE(rep.witness.has_value());
    EXPECT_EQ(classify(A).eps, (E{N, N, N, Z}));
    EXPECT_TRUE(classify(A).tn(4));
    EXPECT_EQ(rep.eps, oracle::naive_signature(A, 3));
    auto zero_based = [](std::vector<std::size_t> v) {
        for (auto& i : v) --i;
        return v;
    };
    for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& mn : minors(A, k))
            EXPECT_EQ(mn.value, oracle::naive_det(A.sub(zero_based(mn.rows), zero_based(mn.cols))));
}

TEST(Classify, IdentityAndBand)
{
    EXPECT_EQ(build_band_kernel(2, 6), Kernel({{0, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 0},
                                               {1, 1, 0, 0, 0, 0},
                                               {0, 1, 1, 0, 0, 0},
                                               {0, 0, 1, 1, 0, 0},
                                               {0, 0, 0, 1, 1, 0}}));
    const auto id = classify(Kernel::identity(4));
    EXPECT_EQ(id.eps, (E{P, P, P, P}));
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(id.tp(k));

    const auto band = classify(build_band_kernel(2, 6));
    EXPECT_TRUE(band.tp(6));
}

// [[1,2],[2,1]] has a single 2x2 minor, -3: order 2 is sign-definite.
TEST(Classify, TwoByTwoWithNegativeMinor)
{
    const auto rep = classify(Kernel({{1, 2}, {2, 1}}), 2);
    EXPECT_EQ(rep.eps, (E{P, N}));
    EXPECT_TRUE(rep.sr(2));
    EXPECT_FALSE(rep.tp(2));
    EXPECT_EQ(minors(Kernel({{1, 2}, {2, 1}}), 2).front().value, -3);
}

TEST(Classify, MixedOrderHasWitness)
{
    const auto rep = classify(Kernel({{1, -1}, {1, 1}}), 2);
    EXPECT_EQ(rep.eps[0], X);
    EXPECT_FALSE(rep.sr(1));
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_GT(rep.witness->first.value, 0);
    EXPECT_LT(rep.witness->second.value, 0);
}

TEST(Classify, OrdersPastTheShapeAreVacuous)
{
    const auto rep = classify(Kernel({{1, 2, 3}}));
    EXPECT_EQ(rep.r_max, 1u);
    EXPECT_EQ(rep.eps_at(2), Z);
    EXPECT_TRUE(rep.tp(5));
    EXPECT_TRUE(rep.covers(3));
}

TEST(Classify, NegationAndTranspose)
{
    const auto rep = classify(-A);
    EXPECT_EQ(rep.eps, (E{P, N, P, Z}));
    EXPECT_TRUE(rep.neg_tn(4));
    EXPECT_EQ(classify(A.transpose()).eps, classify(A).eps);
}

TEST(Toeplitz, Examples)
{
    EXPECT_EQ(toeplitz_kernel(Seq{1, 1}, 3), Kernel({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
    EXPECT_EQ(toeplitz_kernel(Seq{1, 2, 1}, 3), Kernel({{1, 0, 0}, {2, 1, 0}, {1, 2, 1}}));
    EXPECT_TRUE(classify(toeplitz_kernel(Seq{1, 2, 1}, 4)).tp(4));
}

TEST(OrderSignText, RoundTrip)
{
    for (auto s : {P, N, Z, X}) EXPECT_EQ(order_sign_from_string(to_string(s)), s);
    EXPECT_STREQ(to_string(P), "+1");
    EXPECT_STREQ(to_string(X), "mixed");
    EXPECT_THROW(order_sign_from_string("?"), input_error);
}

TEST(UpUrVerdict, Examples)
{
    EXPECT_EQ(up_ur_verdict(E{P, P, P}).kind, VerdictKind::UP);
    EXPECT_EQ(up_ur_verdict(E{N, P, N}).kind, VerdictKind::UR);
    EXPECT_EQ(up_ur_verdict(E{P, P, N}).kind, VerdictKind::none);
    EXPECT_EQ(up_ur_verdict(E{P, X, P}).kind, VerdictKind::not_sign_regular);
    EXPECT_EQ(up_ur_verdict(E{P, N, N}).kind, VerdictKind::UP);
    EXPECT_EQ(up_ur_verdict(E{N, N, P}).kind, VerdictKind::UR);
    EXPECT_EQ(up_ur_verdict(E{P, Z, N}).kind, VerdictKind::UP);
    EXPECT_EQ(up_ur_verdict(E{Z, P, P}).kind, VerdictKind::none);
    EXPECT_EQ(up_ur_verdict(classify(Kernel::identity(3))).kind, VerdictKind::UP);
    // Matrix A is (-1,-1,-1): it satisfies neither rule.
    EXPECT_EQ(up_ur_verdict(classify(A)).kind, VerdictKind::none);
    EXPECT_THROW(up_ur_verdict(E{P, P}), input_error);
}

TEST(PreserverVerdicts, Examples)
{
    const auto id = classify(Kernel::identity(3));
    EXPECT_EQ(modality_verdict(id, 1).kind, VerdictKind::modality_preserver);
    EXPECT_EQ(convexity_verdict(id, 1).kind, VerdictKind::convexity_preserver);

    const auto a = classify(A);
    EXPECT_EQ(modality_verdict(a, 1).kind, VerdictKind::modality_reverser);
    EXPECT_EQ(modality_verdict(a, 1).clause, "K is TN_3");
    EXPECT_EQ(convexity_verdict(a, 1).kind, VerdictKind::convexity_reverser);
    EXPECT_EQ(convexity_verdict(a, 2).kind, VerdictKind::convexity_reverser);

    const auto neg = classify(-Kernel::identity(3));
    EXPECT_EQ(modality_verdict(neg, 1).kind, VerdictKind::modality_reverser);
    EXPECT_EQ(modality_verdict(neg, 1).clause, "-K is TP_3");
    EXPECT_EQ(modality_verdict(classify(-A), 1).kind, VerdictKind::modality_preserver);

    const auto mixed = classify(Kernel({{1, 2}, {3, 1}, {1, 5}}));
    EXPECT_EQ(mixed.eps[1], X);
    EXPECT_EQ(modality_verdict(mixed, 1).kind, VerdictKind::not_sign_regular);
    EXPECT_THROW(modality_verdict(classify(A, 1), 1), input_error);
}
