#ifndef TPSHAPE_ORACLE_HPP
#define TPSHAPE_ORACLE_HPP

// Brute-force counterparts of the production routines. Each one takes a
// different route (cofactors instead of elimination, interval enumeration
// instead of plateau walking, a dense shift sweep instead of midpoints), so
// agreement between the two is evidence rather than a tautology.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"
#include "tpshape/tpcheck.hpp"

namespace tpshape::oracle {

/// Laplace expansion along the first row.
inline Rational naive_det(const Kernel& K)
{
    if (!K.is_square()) throw input_error("naive_det needs a square matrix");
    const std::size_t n = K.rows();
    if (n == 1) return K(0, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (K(0, c) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != c) cols.push_back(j);
        Rational term = K(0, c) * naive_det(K.sub(rows, cols));
        total += c % 2 ? Rational(-term) : term;
    }
    return total;
}

/// Minor signs through order r, subsets drawn from bitmasks and
/// determinants from naive_det.
inline std::vector<OrderSign> naive_signature(const Kernel& K, std::size_t r)
{
    const std::size_t R = K.rows(), C = K.cols();
    if (R > 20 || C > 20) throw input_error("naive_signature is limited to 20 rows and columns");
    std::vector<bool> pos(r + 1), neg(r + 1);
    auto members = [](std::uint32_t mask, std::size_t n) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) out.push_back(i);
        return out;
    };
    for (std::uint32_t rm = 1; rm < (1u << R); ++rm) {
        const auto ri = members(rm, R);
        if (ri.size() > r) continue;
        for (std::uint32_t cm = 1; cm < (1u << C); ++cm) {
            const auto ci = members(cm, C);
            if (ci.size() != ri.size()) continue;
            const int s = sgn(naive_det(K.sub(ri, ci)));
            if (s > 0) pos[ri.size()] = true;
            if (s < 0) neg[ri.size()] = true;
        }
    }
    std::vector<OrderSign> eps;
    for (std::size_t k = 1; k <= r; ++k)
        eps.push_back(pos[k] && neg[k] ? OrderSign::mixed
                      : pos[k]         ? OrderSign::positive
                      : neg[k]         ? OrderSign::negative
                                       : OrderSign::zero_only);
    return eps;
}

namespace detail {

/// Does the interval system (a[k], b[k], 1-based, k = 1..m, b[m] unused)
/// satisfy (D1) and (D2) for u, with u_0 = u_{N+1} = min u?
inline bool satisfies_d1_d2(const std::vector<Rational>& u, const std::vector<std::pair<std::size_t, std::size_t>>& a,
                            const std::vector<std::pair<std::size_t, std::size_t>>& b)
{
    const std::size_t N = u.size(), m = a.size();
    const Rational lo = *std::min_element(u.begin(), u.end());
    auto at = [&](std::size_t i) -> const Rational& { return (i == 0 || i == N + 1) ? lo : u[i - 1]; };
    auto bminus = [&](std::size_t k) -> std::size_t { return k == 0 ? 0 : k == m ? N + 1 : b[k - 1].first; };
    auto bplus = [&](std::size_t k) -> std::size_t { return k == 0 ? 0 : b[k - 1].second; };

    for (std::size_t k = 1; k <= m; ++k) {
        const auto [am, ap] = a[k - 1];
        for (std::size_t j = std::max<std::size_t>(1, bplus(k - 1)); j < am; ++j)
            if (!(at(j) <= at(j + 1))) return false;
        for (std::size_t j = am; j < ap; ++j)
            if (at(j) != at(j + 1)) return false;
        if (k >= 2)
            for (std::size_t j = bminus(k - 1); j < bplus(k - 1); ++j)
                if (at(j) != at(j + 1)) return false;
        for (std::size_t j = ap; j < bminus(k) && j + 1 <= N; ++j)
            if (!(at(j) >= at(j + 1))) return false;
        if (!(at(bminus(k - 1)) < at(am) && at(am) > at(bminus(k)))) return false;
    }
    return true;
}

/// Places intervals a_1 < b_1 < a_2 < ... < a_m left to right from `next`.
inline bool search(const std::vector<Rational>& u, std::size_t m, std::size_t next,
                   std::vector<std::pair<std::size_t, std::size_t>>& a,
                   std::vector<std::pair<std::size_t, std::size_t>>& b)
{
    const std::size_t N = u.size();
    if (a.size() == m) return satisfies_d1_d2(u, a, b);
    const bool place_a = a.size() == b.size();
    for (std::size_t lo = next; lo <= N; ++lo)
        for (std::size_t hi = lo; hi <= N; ++hi) {
            auto& target = place_a ? a : b;
            target.emplace_back(lo, hi);
            const bool ok = search(u, m, hi + 1, a, b);
            target.pop_back();
            if (ok) return true;
        }
    return false;
}

} // namespace detail

/// Every m for which some interval system satisfies (D1)-(D2).
inline std::vector<std::size_t> admissible_orders(const Seq& u)
{
    if (u.size() > 12) throw input_error("brute-force modality is limited to 12 terms");
    std::vector<std::size_t> out;
    for (std::size_t m = 1; 2 * m - 1 <= u.size(); ++m) {
        std::vector<std::pair<std::size_t, std::size_t>> a, b;
        if (detail::search(u.terms(), m, 1, a, b)) out.push_back(m);
    }
    return out;
}

/// Modality by exhaustive interval search; constants are unimodal.
inline std::size_t brute_modality(const Seq& u)
{
    if (u.is_constant()) return 1;
    const auto orders = admissible_orders(u);
    if (orders.size() != 1)
        throw falsified("interval search found " + std::to_string(orders.size())
                        + " admissible orders for (" + to_string(u) + ")");
    return orders.front();
}

/// max S(u - l) over l at every term value, those values +- a third of the
/// smallest gap, every midpoint, and one level beyond each end.
inline std::size_t brute_s_plus(const Seq& u)
{
    if (u.size() > 20) throw input_error("brute-force S+ is limited to 20 terms");
    std::set<Rational> values(u.begin(), u.end());
    Rational gap = 1;
    for (auto it = values.begin(); std::next(it) != values.end(); ++it)
        gap = std::min(gap, Rational(*std::next(it) - *it));
    const Rational delta = gap / 3;

    std::vector<Rational> levels{*values.begin() - 1, *values.rbegin() + 1};
    for (auto it = values.begin(); it != values.end(); ++it) {
        levels.push_back(*it);
        levels.push_back(*it - delta);
        levels.push_back(*it + delta);
        if (std::next(it) != values.end()) levels.push_back((*it + *std::next(it)) / 2);
    }
    std::size_t best = 0;
    for (const auto& l : levels) {
        std::size_t count = 0;
        int last = 0;
        for (const auto& x : u) {
            const int s = sgn(Rational(x - l));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        best = std::max(best, count);
    }
    return best;
}

/// Reproducible randomized-trial settings; trial t draws from an engine
/// seeded by (seed, t) alone.
struct TrialConfig {
    std::uint64_t seed = 20240917;
    std::size_t n_trials = 100;
    int value_range = 5;
    std::size_t min_dim = 3;
    std::size_t max_dim = 6;

    std::mt19937_64 rng_for(std::size_t trial) const
    {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(trial)};
        return std::mt19937_64(ss);
    }
};

inline int uniform_int(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Seq random_seq(std::mt19937_64& rng, std::size_t n, int lo, int hi)
{
    std::vector<Rational> t(n);
    for (auto& x : t) x = uniform_int(rng, lo, hi);
    return Seq(std::move(t));
}

/// Unimodal: a nondecreasing climb to a random peak position, then a
/// nonincreasing descent, steps drawn from 0..max_step.
inline Seq random_unimodal(std::mt19937_64& rng, std::size_t n, int max_step)
{
    const auto peak = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    std::vector<Rational> t(n);
    t[peak] = uniform_int(rng, 0, max_step * static_cast<int>(n));
    for (std::size_t i = peak; i-- > 0;) t[i] = t[i + 1] - uniform_int(rng, 0, max_step);
    for (std::size_t i = peak + 1; i < n; ++i) t[i] = t[i - 1] - uniform_int(rng, 0, max_step);
    return Seq(std::move(t));
}

/// Lower (upper) bidiagonal with diagonal in 1..hi and off-diagonal in 0..hi.
inline Kernel random_bidiagonal(std::mt19937_64& rng, std::size_t n, int hi, bool lower)
{
    Kernel k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        k(i, i) = uniform_int(rng, 1, hi);
        if (i + 1 < n) {
            if (lower)
                k(i + 1, i) = uniform_int(rng, 0, hi);
            else
                k(i, i + 1) = uniform_int(rng, 0, hi);
        }
    }
    return k;
}

/// Product of nonnegative bidiagonal factors: totally positive of every order.
inline Kernel random_tp_kernel(std::mt19937_64& rng, std::size_t n, int hi = 3, std::size_t factors = 4)
{
    Kernel k = Kernel::identity(n);
    for (std::size_t f = 0; f < factors; ++f) k = k * random_bidiagonal(rng, n, hi, f % 2 == 0);
    return k;
}

/// Rejection-samples an m-modal sequence of length n with entries in lo..hi.
template <typename ModalityFn>
inline Seq random_mmodal(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo, int hi, ModalityFn modality_of)
{
    if (2 * m > n + 1) throw input_error("an m-modal sequence needs at least 2m - 1 terms");
    for (;;) {
        Seq u = random_seq(rng, n, lo, hi);
        if (!u.is_constant() && modality_of(u) == m) return u;
    }
}

} // namespace tpshape::oracle

#endif
