#ifndef TPSHAPE_TPCHECK_HPP
#define TPSHAPE_TPCHECK_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"

namespace tpshape {

/*
 * Determinant by fraction-free (Bareiss) elimination.
 *
 * Each row is first scaled by the lcm of its denominators so the working
 * matrix is integral; every Bareiss quotient is then exact in Z. The
 * result is divided by the product of the row scales.
 */
inline Rational det(const Kernel& k)
{
    if (!k.is_square()) throw input_error("determinant of a non-square " + k.shape() + " matrix");
    const std::size_t n = k.rows();

    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = k(i, j).get_num() * (l / k(i, j).get_den());
        scale *= l;
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < n && a[r][p] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    Rational d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return d;
}

/// A k x k minor; index sets are 1-based and strictly increasing.
struct Minor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational value;
};

namespace detail {

/// Advances a strictly increasing 0-based k-subset of {0..n-1}; false when done.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n)
{
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

inline std::vector<std::size_t> first_combination(std::size_t k)
{
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& c)
{
    std::vector<std::size_t> out(c);
    for (auto& x : out) ++x;
    return out;
}

inline void require_order(const Kernel& K, std::size_t k)
{
    if (k < 1 || k > std::min(K.rows(), K.cols()))
        throw input_error("minor order " + std::to_string(k) + " outside 1.."
                          + std::to_string(std::min(K.rows(), K.cols())) + " for a "
                          + K.shape() + " kernel");
}

} // namespace detail

/// Visits every order-k minor, row sets outer and column sets inner, both
/// in lexicographic order. The visitor returns false to stop early.
inline void for_each_minor(const Kernel& K, std::size_t k, const std::function<bool(const Minor&)>& visit)
{
    detail::require_order(K, k);
    auto rc = detail::first_combination(k);
    do {
        auto cc = detail::first_combination(k);
        do {
            Minor mn{detail::one_based(rc), detail::one_based(cc), det(K.sub(rc, cc))};
            if (!visit(mn)) return;
        } while (detail::next_combination(cc, K.cols()));
    } while (detail::next_combination(rc, K.rows()));
}

inline std::vector<Minor> minors(const Kernel& K, std::size_t k)
{
    std::vector<Minor> out;
    for_each_minor(K, k, [&](const Minor& mn) {
        out.push_back(mn);
        return true;
    });
    return out;
}

/// Minors on consecutive rows and consecutive columns only.
inline std::vector<Minor> contiguous_minors(const Kernel& K, std::size_t k)
{
    detail::require_order(K, k);
    std::vector<Minor> out;
    for (std::size_t r = 0; r + k <= K.rows(); ++r)
        for (std::size_t c = 0; c + k <= K.cols(); ++c) {
            std::vector<std::size_t> ri(k), ci(k);
            for (std::size_t t = 0; t < k; ++t) ri[t] = r + t, ci[t] = c + t;
            out.push_back({detail::one_based(ri), detail::one_based(ci), det(K.sub(ri, ci))});
        }
    return out;
}

/// Sign of the order-k minors taken together.
enum class OrderSign { positive, negative, zero_only, mixed };

inline const char* to_string(OrderSign s)
{
    switch (s) {
    case OrderSign::positive: return "+1";
    case OrderSign::negative: return "-1";
    case OrderSign::zero_only: return "0";
    case OrderSign::mixed: return "mixed";
    }
    return "?";
}

inline OrderSign order_sign_from_string(const std::string& s)
{
    if (s == "+1" || s == "1") return OrderSign::positive;
    if (s == "-1") return OrderSign::negative;
    if (s == "0") return OrderSign::zero_only;
    if (s == "mixed") return OrderSign::mixed;
    throw input_error("unknown minor sign '" + s + "'");
}

/// Sign (-1)^k as an OrderSign.
inline OrderSign alternating(std::size_t k) { return k % 2 ? OrderSign::negative : OrderSign::positive; }

inline OrderSign flip(OrderSign s)
{
    if (s == OrderSign::positive) return OrderSign::negative;
    if (s == OrderSign::negative) return OrderSign::positive;
    return s;
}

struct SRReport {
    std::size_t rows = 0, cols = 0;
    std::size_t r_max = 0;
    std::vector<OrderSign> eps; ///< eps[k-1] for order k
    std::vector<bool> is_TP;    ///< is_TP[k-1]: TP at every order <= k
    std::vector<bool> is_TN;
    std::optional<std::pair<Minor, Minor>> witness; ///< opposing minors at the first mixed order

    std::size_t dim_limit() const { return std::min(rows, cols); }

    /// Orders past min(R, C) have no minors and constrain nothing.
    OrderSign eps_at(std::size_t k) const
    {
        return k > dim_limit() ? OrderSign::zero_only : eps.at(k - 1);
    }

    bool covers(std::size_t r) const { return r_max >= std::min(r, dim_limit()); }

    bool sr(std::size_t r) const
    {
        for (std::size_t k = 1; k <= std::min(r, r_max); ++k)
            if (eps[k - 1] == OrderSign::mixed) return false;
        return true;
    }

    /// Every order k <= r has sign expected(k) or only zero minors.
    bool matches(std::size_t r, const std::function<OrderSign(std::size_t)>& expected) const
    {
        for (std::size_t k = 1; k <= r; ++k) {
            auto e = eps_at(k);
            if (e != OrderSign::zero_only && e != expected(k)) return false;
        }
        return true;
    }

    bool tp(std::size_t r) const { return matches(r, [](std::size_t) { return OrderSign::positive; }); }
    bool tn(std::size_t r) const { return matches(r, [](std::size_t) { return OrderSign::negative; }); }
    /// -K is TP_r: (-1)^k eps_k >= 0.
    bool neg_tp(std::size_t r) const { return matches(r, alternating); }
    /// -K is TN_r: (-1)^k eps_k <= 0.
    bool neg_tn(std::size_t r) const
    {
        return matches(r, [](std::size_t k) { return flip(alternating(k)); });
    }
};

/// Signature of K through order r, 1 <= r <= min(R, C).
inline SRReport classify(const Kernel& K, std::size_t r)
{
    detail::require_order(K, r);
    SRReport rep;
    rep.rows = K.rows();
    rep.cols = K.cols();
    rep.r_max = r;

    for (std::size_t k = 1; k <= r; ++k) {
        std::optional<Minor> pos, neg;
        for_each_minor(K, k, [&](const Minor& mn) {
            int s = sgn(mn.value);
            if (s > 0 && !pos) pos = mn;
            if (s < 0 && !neg) neg = mn;
            return !(pos && neg);
        });
        OrderSign e = pos && neg ? OrderSign::mixed
                    : pos        ? OrderSign::positive
                    : neg        ? OrderSign::negative
                                 : OrderSign::zero_only;
        if (e == OrderSign::mixed && !rep.witness) rep.witness = std::make_pair(*pos, *neg);
        rep.eps.push_back(e);
    }
    for (std::size_t k = 1; k <= r; ++k) {
        rep.is_TP.push_back(rep.tp(k));
        rep.is_TN.push_back(rep.tn(k));
    }
    return rep;
}

inline SRReport classify(const Kernel& K) { return classify(K, std::min(K.rows(), K.cols())); }

/// n x n lower-triangular Toeplitz matrix (a_{i-j}), a_k = 0 outside 0..len-1.
inline Kernel toeplitz_kernel(const Seq& a, std::size_t n)
{
    if (n < 1) throw input_error("Toeplitz size must be at least 1");
    Kernel k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (i - j < a.size()) k(i, j) = a[i - j];
    return k;
}

enum class VerdictKind {
    UP,
    UR,
    modality_preserver,
    modality_reverser,
    convexity_preserver,
    convexity_reverser,
    none,
    not_sign_regular
};

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::UP: return "UP";
    case VerdictKind::UR: return "UR";
    case VerdictKind::modality_preserver: return "modality_preserver";
    case VerdictKind::modality_reverser: return "modality_reverser";
    case VerdictKind::convexity_preserver: return "convexity_preserver";
    case VerdictKind::convexity_reverser: return "convexity_reverser";
    case VerdictKind::none: return "none";
    case VerdictKind::not_sign_regular: return "not_sign_regular";
    }
    return "?";
}

struct TransformVerdict {
    VerdictKind kind = VerdictKind::none;
    std::size_t m = 1;
    std::string clause;
    std::optional<SRReport> evidence;

    bool is_preserving() const
    {
        return kind == VerdictKind::UP || kind == VerdictKind::modality_preserver
            || kind == VerdictKind::convexity_preserver;
    }
    bool is_reversing() const
    {
        return kind == VerdictKind::UR || kind == VerdictKind::modality_reverser
            || kind == VerdictKind::convexity_reverser;
    }
};

/*
 * UP iff eps1 = +1 and eps2 = eps3; UR iff eps1 = -1 and eps2 = -eps3.
 * An order whose minors all vanish satisfies either equality.
 */
inline TransformVerdict up_ur_verdict(const std::vector<OrderSign>& eps)
{
    TransformVerdict v;
    if (eps.size() < 3) throw input_error("unimodality verdict needs signs for orders 1..3");
    if (std::find(eps.begin(), eps.begin() + 3, OrderSign::mixed) != eps.begin() + 3) {
        v.kind = VerdictKind::not_sign_regular;
        v.clause = "kernel is not SR_3";
        return v;
    }
    auto wild = [](OrderSign s) { return s == OrderSign::zero_only; };
    const bool e23_wild = wild(eps[1]) || wild(eps[2]);
    if (eps[0] == OrderSign::positive && (e23_wild || eps[1] == eps[2])) {
        v.kind = VerdictKind::UP;
        v.clause = "eps1 = +1 and eps2 = eps3";
    } else if (eps[0] == OrderSign::negative && (e23_wild || eps[1] == flip(eps[2]))) {
        v.kind = VerdictKind::UR;
        v.clause = "eps1 = -1 and eps2 = -eps3";
    } else {
        v.clause = "signature fits neither the UP nor the UR rule";
    }
    return v;
}

inline TransformVerdict up_ur_verdict(const SRReport& rep)
{
    if (!rep.covers(3)) throw input_error("report must cover orders 1..3");
    std::vector<OrderSign> eps{rep.eps_at(1), rep.eps_at(2), rep.eps_at(3)};
    auto v = up_ur_verdict(eps);
    v.evidence = rep;
    return v;
}

namespace detail {

inline TransformVerdict tp_tn_verdict(const SRReport& rep, std::size_t m, std::size_t order,
                                      VerdictKind preserver, VerdictKind reverser)
{
    if (!rep.covers(order))
        throw input_error("report covers order " + std::to_string(rep.r_max) + ", need "
                          + std::to_string(std::min(order, rep.dim_limit())));
    TransformVerdict v;
    v.m = m;
    v.evidence = rep;
    const std::string r = std::to_string(order);
    if (!rep.sr(order)) {
        v.kind = VerdictKind::not_sign_regular;
        v.clause = "kernel is not SR_" + r;
    } else if (rep.tp(order)) {
        v.kind = preserver;
        v.clause = "K is TP_" + r;
    } else if (rep.neg_tn(order)) {
        v.kind = preserver;
        v.clause = "-K is TN_" + r;
    } else if (rep.neg_tp(order)) {
        v.kind = reverser;
        v.clause = "-K is TP_" + r;
    } else if (rep.tn(order)) {
        v.kind = reverser;
        v.clause = "K is TN_" + r;
    } else {
        v.clause = "no TP/TN clause holds at order " + r;
    }
    return v;
}

} // namespace detail

/// m-modality: preserver iff K is TP_{2m+1} or -K is TN_{2m+1};
/// reverser iff -K is TP_{2m+1} or K is TN_{2m+1}.
inline TransformVerdict modality_verdict(const SRReport& rep, std::size_t m)
{
    if (m < 1) throw input_error("modality order must be at least 1");
    return detail::tp_tn_verdict(rep, m, 2 * m + 1, VerdictKind::modality_preserver,
                                 VerdictKind::modality_reverser);
}

/// m-convexity: the same clauses at order m + 1.
inline TransformVerdict convexity_verdict(const SRReport& rep, std::size_t m)
{
    if (m < 1) throw input_error("convexity order must be at least 1");
    return detail::tp_tn_verdict(rep, m, m + 1, VerdictKind::convexity_preserver,
                                 VerdictKind::convexity_reverser);
}

} // namespace tpshape

#endif
