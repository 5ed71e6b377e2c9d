#ifndef TPSHAPE_SEQ_HPP
#define TPSHAPE_SEQ_HPP

#include <algorithm>
#include <functional>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/rational.hpp"

namespace tpshape {

/// Inclusive interval of 1-based sequence indices.
struct IndexInterval {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t length() const { return last - first + 1; }
    bool contains(std::size_t i) const { return first <= i && i <= last; }
    friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

/*
 * A finite sequence of exact rationals, N >= 1.
 *
 * Storage is 0-based like any vector, but every index that leaves this
 * library in a report (mode intervals, regularity index, cut points) is
 * 1-based so that it reads the same as the usual u_1, ..., u_N notation.
 */
class Seq {
public:
    Seq(std::vector<Rational> terms, std::optional<std::string> label = std::nullopt)
        : terms_(std::move(terms)), label_(std::move(label))
    {
        if (terms_.empty()) throw input_error("a sequence needs at least one term");
        for (auto& t : terms_) t.canonicalize();
    }

    Seq(std::initializer_list<Rational> terms) : Seq(std::vector<Rational>(terms)) {}

    std::size_t size() const { return terms_.size(); }
    const Rational& operator[](std::size_t i) const { return terms_[i]; }
    /// 1-based access.
    const Rational& at1(std::size_t i) const { return terms_.at(i - 1); }

    const std::vector<Rational>& terms() const { return terms_; }
    const std::optional<std::string>& label() const { return label_; }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    const Rational& min() const { return *std::min_element(terms_.begin(), terms_.end()); }
    const Rational& max() const { return *std::max_element(terms_.begin(), terms_.end()); }

    bool is_constant() const
    {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Rational& t) { return t == terms_.front(); });
    }

    bool is_nondecreasing() const
    {
        return std::is_sorted(terms_.begin(), terms_.end());
    }

    bool is_nonincreasing() const
    {
        return std::is_sorted(terms_.begin(), terms_.end(), std::greater<>{});
    }

    /// Terms first..last (1-based, inclusive).
    Seq slice(std::size_t first, std::size_t last) const
    {
        if (first < 1 || last > size() || first > last)
            throw input_error("slice out of range");
        return Seq(std::vector<Rational>(terms_.begin() + (first - 1), terms_.begin() + last));
    }

    Seq operator-() const
    {
        std::vector<Rational> out;
        out.reserve(size());
        for (const auto& t : terms_) out.emplace_back(-t);
        return Seq(std::move(out));
    }

    friend Seq operator-(const Seq& u, const Rational& lambda)
    {
        std::vector<Rational> out;
        out.reserve(u.size());
        for (const auto& t : u.terms_) out.emplace_back(t - lambda);
        return Seq(std::move(out));
    }

    friend Seq operator*(const Rational& c, const Seq& u)
    {
        std::vector<Rational> out;
        out.reserve(u.size());
        for (const auto& t : u.terms_) out.emplace_back(c * t);
        return Seq(std::move(out));
    }

    friend Seq operator+(const Seq& u, const Seq& v) { return zip(u, v, [](auto& a, auto& b) { return Rational(a + b); }); }
    friend Seq operator-(const Seq& u, const Seq& v) { return zip(u, v, [](auto& a, auto& b) { return Rational(a - b); }); }

    /// Termwise product.
    friend Seq hadamard(const Seq& u, const Seq& v)
    {
        return zip(u, v, [](auto& a, auto& b) { return Rational(a * b); });
    }

    /// Termwise quotient; throws input_error naming the first zero divisor.
    friend Seq quotient(const Seq& u, const Seq& v)
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == 0)
                throw input_error("division by zero at index " + std::to_string(i + 1));
        return zip(u, v, [](auto& a, auto& b) { return Rational(a / b); });
    }

    friend bool operator==(const Seq& a, const Seq& b) { return a.terms_ == b.terms_; }

private:
    template <typename Op>
    static Seq zip(const Seq& u, const Seq& v, Op op)
    {
        if (u.size() != v.size())
            throw input_error("length mismatch: " + std::to_string(u.size()) + " vs "
                              + std::to_string(v.size()));
        std::vector<Rational> out;
        out.reserve(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) out.push_back(op(u.terms_[i], v.terms_[i]));
        return Seq(std::move(out));
    }

    std::vector<Rational> terms_;
    std::optional<std::string> label_;
};

/// "1, 5, 3/2" style exact rendering.
inline std::string to_string(const Seq& u, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += sep;
        out += to_string(u[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Seq& u) { return os << '(' << to_string(u) << ')'; }

/// Concatenation; with drop_shared the second sequence's first term is
/// skipped (it must equal the first sequence's last term).
inline Seq concat(const Seq& u, const Seq& v, bool drop_shared = false)
{
    std::vector<Rational> out(u.begin(), u.end());
    auto from = v.begin();
    if (drop_shared) {
        if (u[u.size() - 1] != v[0]) throw input_error("boundary terms differ");
        ++from;
    }
    out.insert(out.end(), from, v.end());
    return Seq(std::move(out));
}

} // namespace tpshape

#endif
