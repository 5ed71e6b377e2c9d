#ifndef TPSHAPE_KERNEL_HPP
#define TPSHAPE_KERNEL_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "tpshape/errors.hpp"
#include "tpshape/rational.hpp"
#include "tpshape/seq.hpp"

namespace tpshape {

/// Dense R x C matrix of exact rationals, row-major, 0-based access.
class Kernel {
public:
    Kernel(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols)
    {
        if (rows == 0 || cols == 0) throw input_error("a kernel needs at least one row and column");
    }

    /// From a list of rows; throws on ragged input.
    explicit Kernel(const std::vector<std::vector<Rational>>& rows)
        : Kernel(rows.size(), rows.empty() ? 0 : rows.front().size())
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_)
                throw input_error("ragged matrix: row " + std::to_string(i + 1) + " has "
                                  + std::to_string(rows[i].size()) + " entries, expected "
                                  + std::to_string(cols_));
            for (std::size_t j = 0; j < cols_; ++j) {
                (*this)(i, j) = rows[i][j];
                (*this)(i, j).canonicalize();
            }
        }
    }

    static Kernel identity(std::size_t n)
    {
        Kernel k(n, n);
        for (std::size_t i = 0; i < n; ++i) k(i, i) = 1;
        return k;
    }

    static Kernel zero(std::size_t rows, std::size_t cols) { return Kernel(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<std::vector<Rational>> to_rows() const
    {
        std::vector<std::vector<Rational>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
        return out;
    }

    Kernel transpose() const
    {
        Kernel t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Submatrix on the given 0-based row and column index lists.
    Kernel sub(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const
    {
        Kernel s(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
        return s;
    }

    Kernel operator-() const
    {
        Kernel n = *this;
        for (auto& x : n.a_) x = -x;
        return n;
    }

    friend Kernel operator*(const Rational& c, const Kernel& k)
    {
        Kernel n = k;
        for (auto& x : n.a_) x *= c;
        return n;
    }

    friend Kernel operator+(const Kernel& x, const Kernel& y)
    {
        x.require_same_shape(y);
        Kernel s = x;
        for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += y.a_[i];
        return s;
    }

    friend Kernel operator-(const Kernel& x, const Kernel& y) { return x + (-y); }

    friend Kernel operator*(const Kernel& x, const Kernel& y)
    {
        if (x.cols_ != y.rows_)
            throw input_error("cannot multiply " + x.shape() + " by " + y.shape());
        Kernel p(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t t = 0; t < x.cols_; ++t) {
                const Rational& xi = x(i, t);
                if (xi == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xi * y(t, j);
            }
        return p;
    }

    /// K^n for square K; K^0 = I.
    Kernel power(unsigned n) const
    {
        if (!is_square()) throw input_error("power of a non-square kernel");
        Kernel result = identity(rows_), base = *this;
        while (n) {
            if (n & 1u) result = result * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    /// (Ku)_n = sum_j K(n, j) u_j.
    Seq apply(const Seq& u) const
    {
        if (u.size() != cols_)
            throw input_error("kernel has " + std::to_string(cols_) + " columns, sequence has "
                              + std::to_string(u.size()) + " terms");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * u[j];
        return Seq(std::move(out));
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend bool operator==(const Kernel& x, const Kernel& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    void require_same_shape(const Kernel& y) const
    {
        if (rows_ != y.rows_ || cols_ != y.cols_)
            throw input_error("shape mismatch: " + shape() + " vs " + y.shape());
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline std::ostream& operator<<(std::ostream& os, const Kernel& k)
{
    os << '[';
    for (std::size_t i = 0; i < k.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < k.cols(); ++j) os << (j ? ", " : "") << to_string(k(i, j));
    }
    return os << ']';
}

} // namespace tpshape

#endif
