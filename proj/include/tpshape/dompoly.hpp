#ifndef TPSHAPE_DOMPOLY_HPP
#define TPSHAPE_DOMPOLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/kernel.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"
#include "tpshape/seqshape.hpp"
#include "tpshape/transform.hpp"

namespace tpshape {

/// Coefficients a_{n,0}, a_{n,1}, ... of the n-th polynomial (n is 1-based).
/// Trailing zeros are trimmed; the zero polynomial keeps a single 0.
struct PolySeq {
    std::vector<Rational> coeffs{Rational(0)};
    std::size_t n = 1;

    PolySeq() = default;
    PolySeq(std::vector<Rational> c, std::size_t gen) : coeffs(std::move(c)), n(gen) { trim(); }

    void trim()
    {
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(0);
    }

    std::size_t degree() const { return coeffs.size() - 1; }
    Seq as_seq() const { return Seq(coeffs); }

    friend bool operator==(const PolySeq& a, const PolySeq& b) { return a.coeffs == b.coeffs && a.n == b.n; }
};

/// f_n = sum_{i=n-m}^{n-1} x^k f_i, i.e. a_{n,j} = sum_{t=1..m} a_{n-t, j-k}.
inline PolySeq recurrence_step(const std::vector<PolySeq>& history, std::size_t m, std::size_t k)
{
    if (m < 1) throw input_error("m must be at least 1");
    if (history.size() < m)
        throw input_error("recurrence needs " + std::to_string(m) + " previous polynomials, got "
                          + std::to_string(history.size()));
    std::size_t width = 0;
    for (std::size_t t = 1; t <= m; ++t)
        width = std::max(width, history[history.size() - t].coeffs.size());
    std::vector<Rational> out(width + k);
    for (std::size_t t = 1; t <= m; ++t) {
        const auto& prev = history[history.size() - t].coeffs;
        for (std::size_t j = 0; j < prev.size(); ++j) out[j + k] += prev[j];
    }
    return PolySeq(std::move(out), history.back().n + 1);
}

/// Generations 1..n_max: the seeds followed by recurrence steps.
inline std::vector<PolySeq> unroll(const std::vector<PolySeq>& seeds, std::size_t m, std::size_t k,
                                   std::size_t n_max)
{
    if (seeds.size() < m)
        throw input_error("need " + std::to_string(m) + " seed polynomials, got "
                          + std::to_string(seeds.size()));
    std::vector<PolySeq> gens;
    for (std::size_t i = 0; i < m; ++i) gens.emplace_back(seeds[i].coeffs, i + 1);
    while (gens.size() < n_max) gens.push_back(recurrence_step(gens, m, k));
    return gens;
}

/*
 * Kernel of the recurrence across generations: K(n, i) = 1 iff n > m and
 * n - m <= i <= n - 1 (1-based), so the first m rows vanish. For m = 2 and
 * size 6 this is the banded 0/1 matrix with ones at (3,1),(3,2),(4,2),...
 */
inline Kernel build_band_kernel(std::size_t m, std::size_t size)
{
    if (m < 1 || size <= m) throw input_error("band kernel needs 1 <= m < size");
    Kernel K(size, size);
    for (std::size_t n = m + 1; n <= size; ++n)
        for (std::size_t i = n - m; i <= n - 1; ++i) K(n - 1, i - 1) = 1;
    return K;
}

/// Generations 1..size computed as a_{n,j} = sum_i K(n, i) a_{i, j-k}, the
/// kernel form of the recurrence.
inline std::vector<PolySeq> unroll_by_kernel(const std::vector<PolySeq>& seeds, std::size_t m,
                                             std::size_t k, std::size_t size)
{
    const auto K = build_band_kernel(m, size);
    std::vector<PolySeq> gens;
    for (std::size_t i = 0; i < m; ++i) gens.emplace_back(seeds.at(i).coeffs, i + 1);
    for (std::size_t n = m + 1; n <= size; ++n) {
        std::size_t width = 0;
        for (const auto& g : gens) width = std::max(width, g.coeffs.size());
        std::vector<Rational> out(width + k);
        for (std::size_t i = 1; i < n; ++i) {
            const Rational& w = K(n - 1, i - 1);
            if (w == 0) continue;
            const auto& a = gens[i - 1].coeffs;
            for (std::size_t j = 0; j < a.size(); ++j) out[j + k] += w * a[j];
        }
        gens.emplace_back(std::move(out), n);
    }
    return gens;
}

enum class PolyShape { unimodal, convex, concave };

inline const char* to_string(PolyShape s)
{
    switch (s) {
    case PolyShape::unimodal: return "unimodal";
    case PolyShape::convex: return "convex";
    case PolyShape::concave: return "concave";
    }
    return "?";
}

struct GenerationShape {
    PolySeq poly;
    std::size_t modality = 0;
    ConvexityClass convexity = ConvexityClass::both; ///< order 2; coefficient lists of length <= 2 count as both
};

inline GenerationShape describe(const PolySeq& p)
{
    GenerationShape g;
    g.poly = p;
    g.modality = modality(p.as_seq()).m;
    if (p.coeffs.size() > 2) g.convexity = convexity_order(p.as_seq(), 2);
    return g;
}

inline bool has_shape(const GenerationShape& g, PolyShape s)
{
    switch (s) {
    case PolyShape::unimodal: return g.modality == 1;
    case PolyShape::convex: return is_convex_like(g.convexity);
    case PolyShape::concave: return is_concave_like(g.convexity);
    }
    return false;
}

struct PropagationReport {
    std::size_t m = 1, k = 0, n_max = 0;
    PolyShape shape = PolyShape::unimodal;
    std::vector<GenerationShape> generations; ///< f_1 .. f_{n_max}
};

/*
 * If f_{m+1} has the requested shape, every f_n with m < n <= n_max is
 * claimed to have it too. The first generation breaking the claim throws
 * falsified; an f_{m+1} without the shape throws hypothesis_unmet.
 */
inline PropagationReport shape_propagation(const std::vector<PolySeq>& seeds, std::size_t m, std::size_t k,
                                           std::size_t n_max, PolyShape shape = PolyShape::unimodal)
{
    if (n_max <= m) throw input_error("n_max must exceed m");
    PropagationReport rep{m, k, n_max, shape, {}};
    for (const auto& p : unroll(seeds, m, k, n_max)) rep.generations.push_back(describe(p));

    if (!has_shape(rep.generations[m], shape))
        throw hypothesis_unmet("f_" + std::to_string(m + 1) + " is not " + to_string(shape));
    for (std::size_t n = m + 2; n <= n_max; ++n)
        if (!has_shape(rep.generations[n - 1], shape))
            throw falsified("f_" + std::to_string(m + 1) + " is " + to_string(shape) + " but f_"
                            + std::to_string(n) + " = (" + to_string(rep.generations[n - 1].poly.as_seq())
                            + ") is not");
    return rep;
}

} // namespace tpshape

#endif
