#ifndef TPSHAPE_SEQSHAPE_HPP
#define TPSHAPE_SEQSHAPE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"

namespace tpshape {

enum class Sign : signed char { minus = -1, plus = 1 };

/// Signs of the nonzero terms, in order, with the number of flips.
struct SignPattern {
    std::vector<Sign> signs;
    std::size_t count = 0;

    /// Number of maximal runs of plus signs.
    std::size_t plus_runs() const
    {
        std::size_t runs = 0;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] == Sign::plus && (i == 0 || signs[i - 1] != Sign::plus)) ++runs;
        return runs;
    }

    /// The pattern with each run collapsed to one symbol, e.g. "-+-".
    std::string compressed() const
    {
        std::string out;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (i == 0 || signs[i] != signs[i - 1]) out += signs[i] == Sign::plus ? '+' : '-';
        return out;
    }

    SignPattern flipped() const
    {
        SignPattern p = *this;
        for (auto& s : p.signs) s = s == Sign::plus ? Sign::minus : Sign::plus;
        return p;
    }

    friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// S(u): zeros are dropped and each adjacent flip counts once.
inline SignPattern sign_changes(const std::vector<Rational>& terms)
{
    SignPattern p;
    for (const auto& t : terms) {
        int s = sgn(t);
        if (s == 0) continue;
        Sign sign = s > 0 ? Sign::plus : Sign::minus;
        if (!p.signs.empty() && p.signs.back() != sign) ++p.count;
        p.signs.push_back(sign);
    }
    return p;
}

inline SignPattern sign_changes(const Seq& u) { return sign_changes(u.terms()); }

/// Pattern of u - lambda without materialising the shifted sequence.
inline SignPattern sign_changes_shifted(const Seq& u, const Rational& lambda)
{
    SignPattern p;
    for (const auto& t : u) {
        int c = cmp(t, lambda);
        if (c == 0) continue;
        Sign sign = c > 0 ? Sign::plus : Sign::minus;
        if (!p.signs.empty() && p.signs.back() != sign) ++p.count;
        p.signs.push_back(sign);
    }
    return p;
}

/*
 * Shift levels that realise every distinct sign pattern of u - lambda with
 * no term equal to lambda: one level below min(u) and the midpoint of each
 * pair of consecutive distinct values. S(u - lambda) only changes when
 * lambda crosses a value of u, and a level equal to a value just drops
 * terms, so these levels dominate every other choice.
 */
inline std::vector<Rational> shift_candidates(const Seq& u)
{
    std::vector<Rational> values(u.begin(), u.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Rational> out;
    out.reserve(values.size());
    out.emplace_back(values.front() - 1);
    for (std::size_t i = 1; i < values.size(); ++i)
        out.emplace_back((values[i - 1] + values[i]) / 2);
    return out;
}

struct SPlus {
    std::size_t value = 0;
    Rational witness_lambda;
};

/// S+(u) = max over lambda of S(u - lambda). The witness is the lowest
/// candidate level attaining the maximum.
inline SPlus s_plus(const Seq& u)
{
    SPlus best;
    bool first = true;
    for (const auto& lambda : shift_candidates(u)) {
        std::size_t c = sign_changes_shifted(u, lambda).count;
        if (first || c > best.value) {
            best.value = c;
            best.witness_lambda = lambda;
            first = false;
        }
    }
    return best;
}

/// Smallest 1-based M such that u_M >= u_{M+1} >= ... >= u_N.
inline std::size_t regularity(const Seq& u)
{
    std::size_t m = u.size();
    while (m > 1 && u[m - 2] >= u[m - 1]) --m;
    return m;
}

/// A maximal block of equal adjacent terms, 1-based inclusive span.
struct Run {
    Rational value;
    IndexInterval span;
};

inline std::vector<Run> runs(const Seq& u)
{
    std::vector<Run> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!out.empty() && out.back().value == u[i])
            out.back().span.last = i + 1;
        else
            out.push_back({u[i], {i + 1, i + 1}});
    }
    return out;
}

struct ModalityProfile {
    std::size_t m = 0;
    std::vector<IndexInterval> mode_intervals;
    std::vector<IndexInterval> valley_intervals;
    SPlus s_plus;
    std::size_t regular_M = 0;
};

/*
 * Modality order with its mode and valley intervals.
 *
 * Works on the run-compressed sequence. The last mode is the run starting
 * at the regularity index M (the tail from M is nonincreasing, so u_M is
 * its maximum). From there we walk left: descend to a valley run, climb to
 * the next peak run, and repeat until index 1. A climb that reaches index 1
 * ends on a peak (its value exceeds the valley, hence exceeds inf u); a
 * descent that reaches index 1 adds nothing.
 *
 * Constant sequences are unimodal with the whole index range as the mode
 * interval; the boundary convention u_0 = u_{N+1} = inf u would otherwise
 * reject them.
 */
inline ModalityProfile modality(const Seq& u)
{
    ModalityProfile prof;
    prof.s_plus = s_plus(u);
    prof.regular_M = regularity(u);

    if (u.is_constant()) {
        prof.m = 1;
        prof.mode_intervals.push_back({1, u.size()});
        return prof;
    }

    const auto rs = runs(u);
    auto peak = static_cast<std::ptrdiff_t>(
        std::find_if(rs.begin(), rs.end(),
                     [&](const Run& r) { return r.span.first == prof.regular_M; })
        - rs.begin());

    std::vector<IndexInterval> modes{rs[peak].span};
    std::vector<IndexInterval> valleys;
    std::ptrdiff_t i = peak;
    while (i > 0) {
        // descend leftwards: values keep dropping
        while (i > 0 && rs[i - 1].value < rs[i].value) --i;
        if (i == 0) break;
        valleys.push_back(rs[i].span);
        // climb leftwards
        while (i > 0 && rs[i - 1].value > rs[i].value) --i;
        modes.push_back(rs[i].span);
    }

    std::reverse(modes.begin(), modes.end());
    std::reverse(valleys.begin(), valleys.end());
    prof.m = modes.size();
    prof.mode_intervals = std::move(modes);
    prof.valley_intervals = std::move(valleys);
    return prof;
}

inline bool is_unimodal(const Seq& u) { return modality(u).m == 1; }

/*
 * Unimodality through sign arrangements alone: S+(u) <= 2 and every shift
 * lambda with S(u - lambda) = 2 shows the pattern -+-. Independent of the
 * peak-walking route in modality().
 */
inline bool is_unimodal_by_signs(const Seq& u)
{
    for (const auto& lambda : shift_candidates(u)) {
        auto p = sign_changes_shifted(u, lambda);
        if (p.count > 2) return false;
        if (p.count == 2 && p.signs.front() != Sign::minus) return false;
    }
    return true;
}

} // namespace tpshape

#endif
