#ifndef TPSHAPE_DECOMPOSE_HPP
#define TPSHAPE_DECOMPOSE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"
#include "tpshape/seqshape.hpp"

namespace tpshape {

enum class SplitKind { partition, decomposition };

/*
 * A split of u into consecutive unimodal parts.
 *
 * partition:     parts tile u exactly.
 * decomposition: each cut term belongs to both neighbouring parts, so
 *                m parts carry 2m - 2 duplicated terms.
 */
struct Decomposition {
    std::vector<Seq> parts;
    SplitKind kind = SplitKind::partition;
    /// 1-based indices of the cut terms (the last term of each part but the
    /// final one); for a decomposition these are the shared terms.
    std::vector<std::size_t> shared_boundaries;
};

/// Cuts an m-modal u at the first index of each valley interval.
inline Decomposition decompose(const Seq& u, std::size_t m, SplitKind kind)
{
    const auto prof = modality(u);
    if (prof.m != m)
        throw input_error("sequence is " + std::to_string(prof.m) + "-modal, not "
                          + std::to_string(m) + "-modal");

    Decomposition d;
    d.kind = kind;
    std::size_t start = 1;
    for (const auto& valley : prof.valley_intervals) {
        const std::size_t cut = valley.first;
        d.parts.push_back(u.slice(start, cut));
        d.shared_boundaries.push_back(cut);
        start = kind == SplitKind::partition ? cut + 1 : cut;
    }
    d.parts.push_back(u.slice(start, u.size()));
    return d;
}

/// Concatenates the parts back; shared terms of a decomposition appear once.
inline Seq reassemble(const Decomposition& d)
{
    Seq out = d.parts.front();
    for (std::size_t k = 1; k < d.parts.size(); ++k)
        out = concat(out, d.parts[k], d.kind == SplitKind::decomposition);
    return out;
}

struct AlignedDecomposition {
    std::vector<Seq> parts;
    std::vector<Rational> shifts;
    Rational common_mode;

    /// All shifted parts laid end to end, duplicated terms kept.
    Seq flatten() const
    {
        std::vector<Rational> out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return Seq(std::move(out));
    }
};

/// Shifts part k down by d_k - d_*, where d_k = max(part k) and
/// d_* = min_k d_k, so every part peaks at d_*.
inline AlignedDecomposition mode_align(const Decomposition& d)
{
    AlignedDecomposition out;
    std::vector<Rational> maxima;
    for (const auto& p : d.parts) maxima.push_back(p.max());
    out.common_mode = *std::min_element(maxima.begin(), maxima.end());
    for (std::size_t k = 0; k < d.parts.size(); ++k) {
        Rational shift = maxima[k] - out.common_mode;
        out.parts.push_back(d.parts[k] - shift);
        out.shifts.push_back(std::move(shift));
    }
    return out;
}

enum class ConcatShape { unimodal, bimodal, invalid };

inline const char* to_string(ConcatShape s)
{
    switch (s) {
    case ConcatShape::unimodal: return "unimodal";
    case ConcatShape::bimodal: return "bimodal";
    case ConcatShape::invalid: return "invalid";
    }
    return "?";
}

/*
 * Shape of u followed by v when u's last term equals v's first.
 *
 * u's trailing stretch falls unless u is nondecreasing; v's leading stretch
 * rises unless v is nonincreasing. A falling tail meeting a rising head
 * makes a second mode; every other combination stays unimodal. The answer
 * is checked against modality() of the joined sequence.
 */
inline ConcatShape concat_analyze(const Seq& u, const Seq& v)
{
    if (u[u.size() - 1] != v[0]) return ConcatShape::invalid;
    if (u.is_constant() || v.is_constant()) return ConcatShape::invalid;
    if (!is_unimodal(u) || !is_unimodal(v)) return ConcatShape::invalid;

    const bool tail_falls = !u.is_nondecreasing();
    const bool head_rises = !v.is_nonincreasing();
    const auto shape = tail_falls && head_rises ? ConcatShape::bimodal : ConcatShape::unimodal;

    const auto joined = modality(concat(u, v, true)).m;
    const std::size_t expected = shape == ConcatShape::bimodal ? 2 : 1;
    if (joined != expected)
        throw falsified("concatenation rule predicts " + std::string(to_string(shape))
                        + " but the joined sequence is " + std::to_string(joined) + "-modal");
    return shape;
}

struct NegationReport {
    std::size_t m = 0;              ///< modality of u
    std::size_t aligned_s_plus = 0; ///< S+ of the mode-aligned m-decomposition
    std::size_t m_neg = 0;          ///< modality of -u
};

/*
 * Modality of -u predicted from the mode-aligned m-decomposition v of u:
 * S+(v) = 2m gives m + 1, 2m - 1 gives m, 2m - 2 gives m - 1. The prediction
 * is compared with modality(-u) and a mismatch throws falsified.
 */
inline NegationReport negate_modality(const Seq& u)
{
    if (u.is_constant()) throw input_error("negate_modality needs a nonconstant sequence");

    NegationReport r;
    r.m = modality(u).m;
    const auto aligned = mode_align(decompose(u, r.m, SplitKind::decomposition)).flatten();
    r.aligned_s_plus = s_plus(aligned).value;

    const std::size_t two_m = 2 * r.m;
    if (r.aligned_s_plus == two_m)
        r.m_neg = r.m + 1;
    else if (r.aligned_s_plus + 1 == two_m)
        r.m_neg = r.m;
    else if (r.aligned_s_plus + 2 == two_m)
        r.m_neg = r.m - 1;
    else
        throw falsified("aligned decomposition has S+ = " + std::to_string(r.aligned_s_plus)
                        + ", outside [2m-2, 2m] for m = " + std::to_string(r.m));

    const auto direct = modality(-u).m;
    if (direct != r.m_neg)
        throw falsified("reversal rule predicts " + std::to_string(r.m_neg)
                        + "-modal negation, direct analysis gives " + std::to_string(direct));
    return r;
}

/*
 * m-modality decided from sign arrangements.
 *
 * The unimodal decomposition is cut at every interior valley run (a run
 * strictly below both neighbours), found by a direct scan rather than by
 * modality(). Each part must pass the sign test for unimodality, the parts
 * are mode-aligned, and at every shift level attaining S+ of the aligned
 * sequence the pattern must hold exactly m plus runs with
 * 2m - 2 <= S+ <= 2m. Constant sequences are 1-modal.
 */
inline bool check_mmodal_by_signs(const Seq& u, std::size_t m)
{
    if (m < 1) throw input_error("modality order must be at least 1");
    if (u.is_constant()) return m == 1;

    const auto rs = runs(u);
    std::vector<std::size_t> cuts;
    for (std::size_t i = 1; i + 1 < rs.size(); ++i)
        if (rs[i].value < rs[i - 1].value && rs[i].value < rs[i + 1].value)
            cuts.push_back(rs[i].span.first);
    if (cuts.size() + 1 != m) return false;

    Decomposition d;
    d.kind = SplitKind::decomposition;
    std::size_t start = 1;
    for (auto c : cuts) {
        d.parts.push_back(u.slice(start, c));
        start = c;
    }
    d.parts.push_back(u.slice(start, u.size()));
    for (const auto& p : d.parts)
        if (!is_unimodal_by_signs(p)) return false;

    const auto aligned = mode_align(d).flatten();
    const auto best = s_plus(aligned).value;
    if (best + 2 < 2 * m || best > 2 * m) return false;
    for (const auto& lambda : shift_candidates(aligned)) {
        auto p = sign_changes_shifted(aligned, lambda);
        if (p.count == best && p.plus_runs() != m) return false;
    }
    return true;
}

} // namespace tpshape

#endif
