#include <gtest/gtest.h>

#include "tpshape/decompose.hpp"

using namespace tpshape;

TEST(Decompose, PartitionAndDecompositionOfBimodalExample)
{
    const Seq u{1, 5, 3, 4, 2};
    const auto p = decompose(u, 2, SplitKind::partition);
    ASSERT_EQ(p.parts.size(), 2u);
    EXPECT_EQ(p.parts[0], (Seq{1, 5, 3}));
    EXPECT_EQ(p.parts[1], (Seq{4, 2}));
    EXPECT_EQ(reassemble(p), u);

    const auto d = decompose(u, 2, SplitKind::decomposition);
    ASSERT_EQ(d.parts.size(), 2u);
    EXPECT_EQ(d.parts[0], (Seq{1, 5, 3}));
    EXPECT_EQ(d.parts[1], (Seq{3, 4, 2}));
    EXPECT_EQ(d.shared_boundaries, std::vector<std::size_t>{3});
    EXPECT_EQ(reassemble(d), u);
}

TEST(Decompose, UnimodalIsASinglePart)
{
    const Seq u{0, 3, 3, 1};
    for (auto kind : {SplitKind::partition, SplitKind::decomposition}) {
        const auto d = decompose(u, 1, kind);
        ASSERT_EQ(d.parts.size(), 1u);
        EXPECT_EQ(d.parts[0], u);
    }
}

TEST(Decompose, WrongModalityIsAnInputError)
{
    EXPECT_THROW(decompose(Seq{1, 5, 3, 4, 2}, 1, SplitKind::partition), input_error);
    EXPECT_THROW(decompose(Seq{1, 5, 3, 4, 2}, 3, SplitKind::decomposition), input_error);
}

TEST(Decompose, CutsAtFirstIndexOfValleyPlateau)
{
    const Seq u{3, 1, 1, 2, 0};
    const auto p = decompose(u, 2, SplitKind::partition);
    EXPECT_EQ(p.parts[0], (Seq{3, 1}));
    EXPECT_EQ(p.parts[1], (Seq{1, 2, 0}));
    const auto d = decompose(u, 2, SplitKind::decomposition);
    EXPECT_EQ(d.parts[0], (Seq{3, 1}));
    EXPECT_EQ(d.parts[1], (Seq{1, 1, 2, 0}));
}

TEST(ModeAlign, Examples)
{
    const auto a = mode_align(decompose(Seq{1, 5, 3, 4, 2}, 2, SplitKind::decomposition));
    EXPECT_EQ(a.shifts, (std::vector<Rational>{1, 0}));
    EXPECT_EQ(a.common_mode, 4);
    EXPECT_EQ(a.parts[0], (Seq{0, 4, 2}));
    EXPECT_EQ(a.parts[1], (Seq{3, 4, 2}));
    EXPECT_EQ(a.flatten(), (Seq{0, 4, 2, 3, 4, 2}));

    Decomposition one{{Seq{1, 2, 1}}, SplitKind::decomposition, {}};
    EXPECT_EQ(mode_align(one).shifts, std::vector<Rational>{0});

    Decomposition eq{{Seq{2, 2}, Seq{2, 2}}, SplitKind::decomposition, {2}};
    EXPECT_EQ(mode_align(eq).shifts, (std::vector<Rational>{0, 0}));
}

TEST(ConcatAnalyze, Examples)
{
    EXPECT_EQ(concat_analyze(Seq{3, 2, 1}, Seq{1, 0, -1}), ConcatShape::unimodal);
    EXPECT_EQ(concat_analyze(Seq{1, 5, 3}, Seq{3, 4, 2}), ConcatShape::bimodal);
    EXPECT_EQ(concat_analyze(Seq{1, 2}, Seq{3, 4}), ConcatShape::invalid);
    EXPECT_EQ(concat_analyze(Seq{1, 2, 3}, Seq{3, 1}), ConcatShape::unimodal);
    EXPECT_EQ(concat_analyze(Seq{2, 2}, Seq{2, 1}), ConcatShape::invalid);
}

// A nonincreasing u followed by an increasing v is bimodal, contrary to a
// rule that would call every nonincreasing u unimodal.
TEST(ConcatAnalyze, NonincreasingThenIncreasingIsBimodal)
{
    EXPECT_EQ(concat_analyze(Seq{3, 2, 1}, Seq{1, 2, 3}), ConcatShape::bimodal);
    EXPECT_EQ(modality(Seq{3, 2, 1, 2, 3}).m, 2u);
}

TEST(NegateModality, Examples)
{
    const auto a = negate_modality(Seq{1, 5, 3, 4, 2});
    EXPECT_EQ(a.m, 2u);
    EXPECT_EQ(a.aligned_s_plus, 4u);
    EXPECT_EQ(a.m_neg, 3u);
    EXPECT_EQ(a.m_neg, modality(-Seq{1, 5, 3, 4, 2}).m);

    // Interior single peak: pattern -+- at the best lambda, -u has two modes.
    const auto b = negate_modality(Seq{1, 3, 2});
    EXPECT_EQ(b.aligned_s_plus, 2u);
    EXPECT_EQ(b.m_neg, 2u);

    // Bimodal with both modes on the boundary: S+ = 2m - 2 gives a unimodal -u.
    const auto c = negate_modality(Seq{3, 1, 3});
    EXPECT_EQ(c.m, 2u);
    EXPECT_EQ(c.aligned_s_plus, 2u);
    EXPECT_EQ(c.m_neg, 1u);

    EXPECT_THROW(negate_modality(Seq{4, 4}), input_error);
}

TEST(CheckMmodalBySigns, Examples)
{
    EXPECT_TRUE(check_mmodal_by_signs(Seq{1, 5, 3, 4, 2}, 2));
    EXPECT_FALSE(check_mmodal_by_signs(Seq{1, 5, 3, 4, 2}, 1));
    EXPECT_FALSE(check_mmodal_by_signs(Seq{1, 5, 3, 4, 2}, 3));
    EXPECT_TRUE(check_mmodal_by_signs(Seq{6, 6, 6}, 1));
    EXPECT_FALSE(check_mmodal_by_signs(Seq{6, 6, 6}, 2));
    EXPECT_TRUE(check_mmodal_by_signs(Seq{1, 2, 3, 2, 3, 1, 4}, 3));
    EXPECT_THROW(check_mmodal_by_signs(Seq{1, 2}, 0), input_error);
}
