#ifndef TPSHAPE_TRANSFORM_HPP
#define TPSHAPE_TRANSFORM_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"
#include "tpshape/seqshape.hpp"
#include "tpshape/tpcheck.hpp"

namespace tpshape {

inline Seq apply(const Kernel& K, const Seq& u) { return K.apply(u); }

namespace detail {

inline SRReport classify_upto(const Kernel& K, std::size_t r)
{
    return classify(K, std::max<std::size_t>(1, std::min(r, std::min(K.rows(), K.cols()))));
}

inline bool all_positive(const Seq& u)
{
    return std::all_of(u.begin(), u.end(), [](const Rational& x) { return x > 0; });
}

inline Rational max_abs(const Seq& u)
{
    Rational best = 0;
    for (const auto& x : u) best = std::max(best, Rational(abs(x)));
    return best;
}

/// Exact solve of A x = b by Gauss-Jordan elimination.
inline Seq solve(Kernel A, const Seq& b)
{
    const std::size_t n = A.rows();
    if (!A.is_square() || b.size() != n) throw input_error("solve needs a square system");
    std::vector<Rational> x(b.begin(), b.end());
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t r = p;
        while (r < n && A(r, p) == 0) ++r;
        if (r == n) throw input_error("singular system");
        if (r != p) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(r, j));
            std::swap(x[p], x[r]);
        }
        const Rational piv = A(p, p);
        for (std::size_t j = p; j < n; ++j) A(p, j) /= piv;
        x[p] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || A(i, p) == 0) continue;
            const Rational f = A(i, p);
            for (std::size_t j = p; j < n; ++j) A(i, j) -= f * A(p, j);
            x[i] -= f * x[p];
        }
    }
    return Seq(std::move(x));
}

} // namespace detail

struct VDResult {
    bool holds = false;
    std::size_t s_in = 0;
    std::size_t s_out = 0;
};

/// S(Ku) <= S(u) for K in SR_r and S(u) <= r - 1.
inline VDResult vd_check(const Kernel& K, const Seq& u, std::size_t r)
{
    if (r < 1) throw input_error("order must be at least 1");
    VDResult res;
    res.s_in = sign_changes(u).count;
    if (res.s_in + 1 > r)
        throw hypothesis_unmet("S(u) = " + std::to_string(res.s_in) + " exceeds r - 1 = "
                               + std::to_string(r - 1));
    if (!detail::classify_upto(K, r).sr(r))
        throw hypothesis_unmet("kernel is not SR_" + std::to_string(r));
    res.s_out = sign_changes(K.apply(u)).count;
    res.holds = res.s_out <= res.s_in;
    return res;
}

enum class PatternRelation { same, reversed, fewer };

inline const char* to_string(PatternRelation r)
{
    switch (r) {
    case PatternRelation::same: return "same";
    case PatternRelation::reversed: return "reversed";
    case PatternRelation::fewer: return "fewer";
    }
    return "?";
}

/*
 * With k = S(u) and K in SR_{k+1}: if S(Ku) = k the patterns agree when
 * eps_k eps_{k+1} = +1 and are opposite when it is -1 (eps_0 = +1). The
 * observed relation is checked against that prediction; when one of the
 * two orders has only zero minors nothing is predicted.
 */
inline PatternRelation sign_pattern_relation(const Kernel& K, const Seq& u)
{
    const auto in = sign_changes(u);
    if (in.signs.empty()) throw hypothesis_unmet("u has no nonzero terms");
    const std::size_t k = in.count;
    const auto rep = detail::classify_upto(K, k + 1);
    if (!rep.sr(k + 1)) throw hypothesis_unmet("kernel is not SR_" + std::to_string(k + 1));

    const auto out = sign_changes(K.apply(u));
    if (out.count > k)
        throw falsified("S(Ku) = " + std::to_string(out.count) + " exceeds S(u) = " + std::to_string(k));
    if (out.signs.empty() || out.count < k) return PatternRelation::fewer;

    const auto actual = out.signs.front() == in.signs.front() ? PatternRelation::same
                                                              : PatternRelation::reversed;
    const OrderSign ek = k == 0 ? OrderSign::positive : rep.eps_at(k);
    const OrderSign ek1 = rep.eps_at(k + 1);
    if (ek == OrderSign::zero_only || ek1 == OrderSign::zero_only) return actual;
    const auto predicted = ek == ek1 ? PatternRelation::same : PatternRelation::reversed;
    if (predicted != actual)
        throw falsified(std::string("eps_k eps_{k+1} predicts a ") + to_string(predicted)
                        + " pattern, observed " + to_string(actual));
    return actual;
}

struct ModeLocation {
    bool holds = false;
    bool output_unimodal = false;
    IndexInterval input;  ///< [a, b]
    IndexInterval output; ///< [c, d], meaningful when output_unimodal
};

/// For UP K and unimodal u with mode interval [a, b]: Ku is unimodal with
/// mode interval [c, d], a <= c and b <= d.
inline ModeLocation mode_location_check(const Kernel& K, const Seq& u)
{
    const auto v = up_ur_verdict(detail::classify_upto(K, 3));
    if (v.kind != VerdictKind::UP) throw hypothesis_unmet("kernel is not UP: " + v.clause);
    const auto pin = modality(u);
    if (pin.m != 1) throw hypothesis_unmet("u is not unimodal");

    ModeLocation res;
    res.input = pin.mode_intervals.front();
    const auto pout = modality(K.apply(u));
    res.output_unimodal = pout.m == 1;
    res.output = pout.mode_intervals.front();
    res.holds = res.output_unimodal && res.input.first <= res.output.first
             && res.input.last <= res.output.last;
    return res;
}

enum class SumKind { L, E, O };

struct SumSpec {
    SumKind kind = SumKind::L;
    unsigned m = 1;
    unsigned n = 0;

    /// Exponents j with K^j in the sum.
    std::vector<unsigned> exponents() const
    {
        std::vector<unsigned> e;
        for (unsigned i = 0; i <= n; ++i) {
            switch (kind) {
            case SumKind::L: e.push_back(m + i); break;
            case SumKind::E: e.push_back(2 * m + 2 * i); break;
            case SumKind::O: e.push_back(2 * m + 2 * i + 1); break;
            }
        }
        return e;
    }
};

/// (sum_j K^j) u over the exponents of the chosen sum. For O the
/// unimodality statement concerns the negation of this result.
inline Seq sum_transform(const Kernel& K, const SumSpec& spec, const Seq& u)
{
    if (!K.is_square()) throw input_error("power sums need a square kernel");
    if (K.cols() != u.size()) throw input_error("dimension mismatch");
    Kernel total = Kernel::zero(K.rows(), K.cols());
    for (auto e : spec.exponents()) total = total + K.power(e);
    return total.apply(u);
}

enum class GeometricForm { inv_I_minus_K, inv_I_plus_K, inv_I_minus_K2 };

struct NormCertificate {
    bool holds = false;
    Rational norm;    ///< the smaller of the two norms
    std::string kind; ///< "row-sum" or "column-sum"
};

/// Exact max-row-sum and max-column-sum norms; either below 1 bounds the
/// spectral radius below 1.
inline NormCertificate norm_certificate(const Kernel& K)
{
    Rational row = 0, col = 0;
    for (std::size_t i = 0; i < K.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < K.cols(); ++j) s += abs(K(i, j));
        row = std::max(row, s);
    }
    for (std::size_t j = 0; j < K.cols(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < K.rows(); ++i) s += abs(K(i, j));
        col = std::max(col, s);
    }
    NormCertificate c;
    c.kind = row <= col ? "row-sum" : "column-sum";
    c.norm = std::min(row, col);
    c.holds = c.norm < 1;
    return c;
}

/// Exact value of the geometric series: solves (I - K) x = u,
/// (I + K) x = u or (I - K^2) x = u. Refuses without a norm certificate.
inline Seq geometric_transform(const Kernel& K, GeometricForm form, const Seq& u)
{
    if (!K.is_square()) throw input_error("geometric series need a square kernel");
    const auto cert = norm_certificate(K);
    if (!cert.holds)
        throw hypothesis_unmet("no norm certificate: row-sum and column-sum norms are >= 1 (min "
                               + to_string(cert.norm) + ")");
    const auto I = Kernel::identity(K.rows());
    switch (form) {
    case GeometricForm::inv_I_minus_K: return detail::solve(I - K, u);
    case GeometricForm::inv_I_plus_K: return detail::solve(I + K, u);
    case GeometricForm::inv_I_minus_K2: return detail::solve(I - K * K, u);
    }
    throw input_error("unknown geometric form");
}

/// Partial sum of the series through `terms` summands (u counts as one).
inline Seq geometric_partial_sum(const Kernel& K, GeometricForm form, const Seq& u, unsigned terms)
{
    const Kernel step = form == GeometricForm::inv_I_minus_K  ? K
                      : form == GeometricForm::inv_I_plus_K   ? Kernel(-K)
                                                              : K * K;
    Seq acc = u, term = u;
    for (unsigned t = 1; t < terms; ++t) {
        term = step.apply(term);
        acc = acc + term;
    }
    return acc;
}

/// Bound on max_i |x_i - partial_i| after `terms` summands: q^T / (1 - q) * ||u||,
/// with q the certified norm of one step and ||u|| in the matching norm.
inline Rational geometric_tail_bound(const Kernel& K, GeometricForm form, const Seq& u, unsigned terms)
{
    const auto cert = norm_certificate(K);
    if (!cert.holds) throw hypothesis_unmet("no norm certificate");
    Rational q = form == GeometricForm::inv_I_minus_K2 ? Rational(cert.norm * cert.norm) : cert.norm;
    Rational qt = 1;
    for (unsigned t = 0; t < terms; ++t) qt *= q;
    Rational unorm = 0;
    if (cert.kind == "row-sum")
        unorm = detail::max_abs(u);
    else
        for (const auto& x : u) unorm += abs(x);
    return qt / (1 - q) * unorm;
}

struct DiffQuotReport {
    VerdictKind kernel_verdict = VerdictKind::none;
    std::vector<Seq> v;                ///< v_(0) = u, ..., v_(n+1)
    std::vector<bool> diff_unimodal;   ///< v_(j) - v_(j+1)
    std::vector<bool> diff_twisted;    ///< (-1)^j (v_(j) - v_(j+1))
    bool quotient_branch = false;      ///< K > 0 and u >= 0, u != 0
    std::vector<Seq> h;                ///< h_j = v_(j) / v_(j+1)
    std::vector<bool> quot_unimodal;
    std::vector<bool> quot_twisted;    ///< (-1)^j h_j
    bool sign_identity_pointwise = true; ///< sgn(h_j - l) = sgn(h_{j-1} - l) at every tested l
    std::vector<std::string> violations; ///< claims whose hypotheses held but conclusions failed
};

/*
 * Iterates v_(j) = K^j u and records the shape of successive differences
 * and quotients, plain and with the (-1)^j twist. The algebraic identity
 *     h_j - l = K(v_(j-1) - l v_(j)) / v_(j+1)
 * is verified exactly at every shift candidate of h_{j-1}; a failure there
 * is an arithmetic bug and throws. Pointwise sign agreement of h_j - l
 * with h_{j-1} - l is only recorded.
 */
inline DiffQuotReport iterate_diff_quot(const Kernel& K, const Seq& u, unsigned n)
{
    if (!K.is_square()) throw input_error("iteration needs a square kernel");
    if (K.cols() != u.size()) throw input_error("dimension mismatch");

    DiffQuotReport rep;
    rep.kernel_verdict = up_ur_verdict(detail::classify_upto(K, 3)).kind;
    rep.v.push_back(u);
    for (unsigned j = 0; j <= n; ++j) rep.v.push_back(K.apply(rep.v.back()));

    const bool up = rep.kernel_verdict == VerdictKind::UP;
    const bool ur = rep.kernel_verdict == VerdictKind::UR;
    const bool diff_hyp = is_unimodal(rep.v[0] - rep.v[1]);
    for (unsigned j = 0; j <= n; ++j) {
        const Seq d = rep.v[j] - rep.v[j + 1];
        rep.diff_unimodal.push_back(is_unimodal(d));
        rep.diff_twisted.push_back(is_unimodal(j % 2 ? -d : d));
        if (diff_hyp && up && !rep.diff_unimodal.back())
            rep.violations.push_back("UP: v(" + std::to_string(j) + ") - v(" + std::to_string(j + 1)
                                     + ") is not unimodal");
        if (diff_hyp && ur && !rep.diff_twisted.back())
            rep.violations.push_back("UR: twisted difference " + std::to_string(j) + " is not unimodal");
    }

    bool kpos = true;
    for (std::size_t i = 0; i < K.rows(); ++i)
        for (std::size_t j = 0; j < K.cols(); ++j) kpos = kpos && K(i, j) > 0;
    const bool unonneg = std::all_of(u.begin(), u.end(), [](const Rational& x) { return x >= 0; });
    const bool unonzero = std::any_of(u.begin(), u.end(), [](const Rational& x) { return x != 0; });
    rep.quotient_branch = kpos && unonneg && unonzero;
    if (!rep.quotient_branch) return rep;

    for (unsigned j = 0; j <= n; ++j) rep.h.push_back(quotient(rep.v[j], rep.v[j + 1]));
    const bool quot_hyp = is_unimodal(rep.h[0]);
    for (unsigned j = 0; j <= n; ++j) {
        rep.quot_unimodal.push_back(is_unimodal(rep.h[j]));
        rep.quot_twisted.push_back(is_unimodal(j % 2 ? -rep.h[j] : rep.h[j]));
        if (quot_hyp && up && !rep.quot_unimodal.back())
            rep.violations.push_back("UP: h(" + std::to_string(j) + ") is not unimodal");
        if (quot_hyp && ur && !rep.quot_twisted.back())
            rep.violations.push_back("UR: twisted h(" + std::to_string(j) + ") is not unimodal");
        if (j == 0) continue;
        for (const auto& l : shift_candidates(rep.h[j - 1])) {
            const Seq lhs = rep.h[j] - l;
            const Seq rhs = quotient(K.apply(rep.v[j - 1] - l * rep.v[j]), rep.v[j + 1]);
            if (!(lhs == rhs)) throw falsified("quotient identity fails at step " + std::to_string(j));
            for (std::size_t i = 0; i < lhs.size(); ++i)
                if (sgn(lhs[i]) != sgn(rep.h[j - 1][i] - l)) rep.sign_identity_pointwise = false;
        }
    }
    return rep;
}

struct ClosureSum {
    bool hypothesis = false; ///< both unimodal and a <= c <= b or c = b + 1
    std::size_t m_sum = 0;
    bool unimodal = false;
};

/// u + v for unimodal u, v with mode intervals [a, b], [c, d]; unimodality of
/// the sum is asserted when a <= c <= b or c = b + 1.
inline ClosureSum closure_sum_check(const Seq& u, const Seq& v)
{
    ClosureSum res;
    const auto pu = modality(u), pv = modality(v);
    res.m_sum = modality(u + v).m;
    res.unimodal = res.m_sum == 1;
    if (pu.m == 1 && pv.m == 1) {
        const auto [a, b] = pu.mode_intervals.front();
        const auto c = pv.mode_intervals.front().first;
        res.hypothesis = (a <= c && c <= b) || c == b + 1;
    }
    if (res.hypothesis && !res.unimodal)
        throw falsified("mode intervals satisfy the closure condition but u + v is "
                        + std::to_string(res.m_sum) + "-modal");
    return res;
}

enum class ConvexityClass { convex, concave, both, neither };

inline const char* to_string(ConvexityClass c)
{
    switch (c) {
    case ConvexityClass::convex: return "convex";
    case ConvexityClass::concave: return "concave";
    case ConvexityClass::both: return "both";
    case ConvexityClass::neither: return "neither";
    }
    return "?";
}

inline bool is_convex_like(ConvexityClass c) { return c == ConvexityClass::convex || c == ConvexityClass::both; }
inline bool is_concave_like(ConvexityClass c) { return c == ConvexityClass::concave || c == ConvexityClass::both; }

/// m-th forward difference, length N - m.
inline std::vector<Rational> forward_difference(const std::vector<Rational>& u, std::size_t m)
{
    std::vector<Rational> d = u;
    for (std::size_t t = 0; t < m && !d.empty(); ++t) {
        for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
        d.pop_back();
    }
    return d;
}

/// m-convex iff Delta^m u >= 0; m-concave iff Delta^m u <= 0; both when it vanishes.
inline ConvexityClass convexity_order(const Seq& u, std::size_t m)
{
    if (u.size() <= m)
        throw input_error("need more than " + std::to_string(m) + " terms for order " + std::to_string(m));
    bool nonneg = true, nonpos = true;
    for (const auto& x : forward_difference(u.terms(), m)) {
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
    }
    if (nonneg && nonpos) return ConvexityClass::both;
    if (nonneg) return ConvexityClass::convex;
    if (nonpos) return ConvexityClass::concave;
    return ConvexityClass::neither;
}

struct DegreeCertificate {
    bool holds = true;
    std::size_t failed_degree = 0; ///< first k in [m-1] whose image is not of exact degree k
};

/*
 * K maps the grid monomial (j^k)_{j=1..C} to a sequence of exact degree k
 * on the row grid, for every k = 1..m-1. Exact degree k means Delta^k is
 * not identically zero and Delta^{k+1} is; fewer than k + 1 rows cannot
 * show degree k.
 */
inline DegreeCertificate degree_certificate(const Kernel& K, std::size_t m)
{
    DegreeCertificate cert;
    for (std::size_t k = 1; k + 1 <= m; ++k) {
        std::vector<Rational> mono(K.cols());
        for (std::size_t j = 0; j < K.cols(); ++j) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), j + 1, k);
            mono[j] = Rational(p);
        }
        const auto img = K.apply(Seq(mono)).terms();
        bool ok = img.size() >= k + 1;
        if (ok) {
            const auto dk = forward_difference(img, k);
            const auto dk1 = forward_difference(img, k + 1);
            ok = std::any_of(dk.begin(), dk.end(), [](const Rational& x) { return x != 0; })
              && std::all_of(dk1.begin(), dk1.end(), [](const Rational& x) { return x == 0; });
        }
        if (!ok) {
            cert.holds = false;
            cert.failed_degree = k;
            return cert;
        }
    }
    return cert;
}

/// Which quotient clause a signature satisfies at order r. K and -K give
/// the same quotient, so only the TP-like / TN-like split matters.
enum class QuotientClause { tp_like, tn_like, none };

inline std::pair<QuotientClause, std::string> quotient_clause(const SRReport& rep, std::size_t r)
{
    const std::string o = std::to_string(r);
    if (!rep.sr(r)) return {QuotientClause::none, "kernel is not SR_" + o};
    if (rep.tp(r)) return {QuotientClause::tp_like, "K is TP_" + o};
    if (rep.neg_tp(r)) return {QuotientClause::tp_like, "-K is TP_" + o};
    if (rep.tn(r)) return {QuotientClause::tn_like, "K is TN_" + o};
    if (rep.neg_tn(r)) return {QuotientClause::tn_like, "-K is TN_" + o};
    return {QuotientClause::none, "no TP/TN clause holds at order " + o};
}

struct QuotientResult {
    Seq Ku{0}, Kv{0}, w{0}, ratio{0}; ///< ratio = u / v
    std::size_t ratio_m = 0;          ///< modality of u / v
    std::size_t p = 0;                ///< modality of w
    std::optional<ConvexityClass> ratio_class;
    std::optional<ConvexityClass> convexity_class; ///< of w
    QuotientClause clause_kind = QuotientClause::none;
    std::string clause;
    bool asserted = false;            ///< hypotheses held and the conclusion was checked
    std::string hypothesis_note;      ///< why nothing was asserted, when asserted is false
};

namespace detail {

inline QuotientResult quotient_core(const Kernel& K, const Seq& u, const Seq& v)
{
    if (u.size() != v.size()) throw input_error("u and v differ in length");
    QuotientResult res;
    res.Ku = K.apply(u);
    res.Kv = K.apply(v);
    for (std::size_t i = 0; i < res.Kv.size(); ++i)
        if (res.Kv[i] == 0)
            throw input_error("(Kv)_" + std::to_string(i + 1) + " = 0; quotient undefined");
    res.w = quotient(res.Ku, res.Kv);
    res.p = modality(res.w).m;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == 0) throw input_error("v_" + std::to_string(i + 1) + " = 0; u/v undefined");
    res.ratio = quotient(u, v);
    res.ratio_m = modality(res.ratio).m;
    return res;
}

} // namespace detail

/*
 * w = Ku / Kv and its modality p. With v > 0, u/v m-modal and K in SR_{2m+1}:
 * p <= m when K or -K is TP_{2m+1}, p <= m + 1 when K or -K is TN_{2m+1}.
 * Those bounds are checked; a failure throws falsified. When a hypothesis
 * fails the result is returned with asserted = false.
 */
inline QuotientResult quotient_transform(const Kernel& K, const Seq& u, const Seq& v, std::size_t m)
{
    if (m < 1) throw input_error("modality order must be at least 1");
    auto res = detail::quotient_core(K, u, v);
    const std::size_t r = 2 * m + 1;
    std::tie(res.clause_kind, res.clause) = quotient_clause(detail::classify_upto(K, r), r);

    if (!detail::all_positive(v))
        res.hypothesis_note = "v is not strictly positive";
    else if (res.ratio_m != m)
        res.hypothesis_note = "u/v is " + std::to_string(res.ratio_m) + "-modal, not "
                            + std::to_string(m) + "-modal";
    else if (res.clause_kind == QuotientClause::none)
        res.hypothesis_note = res.clause;
    if (!res.hypothesis_note.empty()) return res;

    res.asserted = true;
    const std::size_t bound = res.clause_kind == QuotientClause::tp_like ? m : m + 1;
    if (res.p < 1 || res.p > bound)
        throw falsified("w is " + std::to_string(res.p) + "-modal; " + res.clause + " bounds it by "
                        + std::to_string(bound));
    return res;
}

/*
 * Convexity of w = Ku / Kv. With v > 0, u/v m-convex (or m-concave), K in
 * SR_{m+1} and K carrying exact degree k to degree k for k < m: TP-like
 * kernels keep the class of u/v, TN-like kernels swap convex and concave.
 */
inline QuotientResult quotient_convexity(const Kernel& K, const Seq& u, const Seq& v, std::size_t m)
{
    if (m < 1) throw input_error("convexity order must be at least 1");
    auto res = detail::quotient_core(K, u, v);
    res.ratio_class = convexity_order(res.ratio, m);
    res.convexity_class = convexity_order(res.w, m);
    const std::size_t r = m + 1;
    std::tie(res.clause_kind, res.clause) = quotient_clause(detail::classify_upto(K, r), r);

    const auto cert = degree_certificate(K, m);
    if (!detail::all_positive(v))
        res.hypothesis_note = "v is not strictly positive";
    else if (*res.ratio_class == ConvexityClass::neither)
        res.hypothesis_note = "u/v is neither " + std::to_string(m) + "-convex nor "
                            + std::to_string(m) + "-concave";
    else if (res.clause_kind == QuotientClause::none)
        res.hypothesis_note = res.clause;
    else if (!cert.holds)
        res.hypothesis_note = "K does not carry degree " + std::to_string(cert.failed_degree)
                            + " polynomials to degree " + std::to_string(cert.failed_degree);
    if (!res.hypothesis_note.empty()) return res;

    res.asserted = true;
    const bool flip = res.clause_kind == QuotientClause::tn_like;
    const auto in = *res.ratio_class, out = *res.convexity_class;
    bool ok = true;
    if (is_convex_like(in)) ok = ok && (flip ? is_concave_like(out) : is_convex_like(out));
    if (is_concave_like(in)) ok = ok && (flip ? is_convex_like(out) : is_concave_like(out));
    if (!ok)
        throw falsified(std::string("u/v is ") + to_string(in) + ", w is " + to_string(out)
                        + " under " + res.clause);
    return res;
}

/// Parity rule for composing preservers and reversers of one family and m.
inline TransformVerdict composition_verdict(const std::vector<TransformVerdict>& vs)
{
    if (vs.empty()) throw input_error("nothing to compose");
    auto family = [](VerdictKind k) {
        switch (k) {
        case VerdictKind::UP:
        case VerdictKind::UR: return 0;
        case VerdictKind::modality_preserver:
        case VerdictKind::modality_reverser: return 1;
        case VerdictKind::convexity_preserver:
        case VerdictKind::convexity_reverser: return 2;
        default: return -1;
        }
    };
    const int fam = family(vs.front().kind);
    std::size_t reversers = 0;
    for (const auto& v : vs) {
        if (family(v.kind) < 0) throw input_error("only preserver/reverser verdicts compose");
        if (family(v.kind) != fam) throw input_error("cannot compose verdicts of different kinds");
        if (v.m != vs.front().m) throw input_error("cannot compose verdicts at different m");
        if (v.is_reversing()) ++reversers;
    }
    static constexpr VerdictKind pres[] = {VerdictKind::UP, VerdictKind::modality_preserver,
                                           VerdictKind::convexity_preserver};
    static constexpr VerdictKind revs[] = {VerdictKind::UR, VerdictKind::modality_reverser,
                                           VerdictKind::convexity_reverser};
    TransformVerdict out;
    out.m = vs.front().m;
    out.kind = reversers % 2 ? revs[fam] : pres[fam];
    out.clause = std::to_string(reversers) + " reverser(s) among " + std::to_string(vs.size());
    return out;
}

} // namespace tpshape

#endif
