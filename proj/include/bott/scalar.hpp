#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace bott {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename S>
inline constexpr bool is_rational_v = std::is_same_v<S, Rational>;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool is_even(const Integer& z) { return mpz_even_p(z.get_mpz_t()) != 0; }

inline Rational half(const Integer& z)
{
    Rational q(z, 2);
    q.canonicalize();
    return q;
}

template <typename To, typename From>
To scalar_cast(const From& v)
{
    if constexpr (std::is_same_v<To, From>) {
        return v;
    } else if constexpr (std::is_same_v<To, Rational>) {
        return Rational(v);
    } else {
        static_assert(std::is_same_v<To, Integer> && std::is_same_v<From, Rational>);
        if (!is_integral(v))
            throw std::domain_error("non-integral rational " + v.get_str() + " cast to integer");
        return v.get_num();
    }
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Dense square matrix over an exact scalar, 0-based storage.
template <typename S>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    std::vector<S> column(std::size_t c) const
    {
        std::vector<S> out(n_);
        for (std::size_t r = 0; r < n_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, const std::vector<S>& v)
    {
        for (std::size_t r = 0; r < n_; ++r)
            (*this)(r, c) = v[r];
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_)
            throw std::invalid_argument("matrix size mismatch");
        Matrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    std::vector<S> apply(const std::vector<S>& v) const
    {
        std::vector<S> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    const std::vector<S>& raw() const { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<S> data_;
};

template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& m)
{
    Matrix<To> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out(i, j) = scalar_cast<To>(m(i, j));
    return out;
}

// Exact determinant by Gaussian elimination over the rationals.
template <typename S>
S determinant(const Matrix<S>& m)
{
    const std::size_t n = m.size();
    Matrix<Rational> w = matrix_cast<Rational>(m);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return S(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(w(pivot, c), w(col, c));
            det = -det;
        }
        det *= w(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (w(r, col) == 0)
                continue;
            Rational f = w(r, col) / w(col, col);
            for (std::size_t c = col; c < n; ++c)
                w(r, c) -= f * w(col, c);
        }
    }
    return scalar_cast<S>(det);
}

// Exact inverse over the rationals; throws if singular.
template <typename S>
Matrix<Rational> inverse(const Matrix<S>& m)
{
    const std::size_t n = m.size();
    Matrix<Rational> w = matrix_cast<Rational>(m);
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("singular matrix");
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(w(pivot, c), w(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Rational p = w(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            w(col, c) /= p;
            inv(col, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || w(r, col) == 0)
                continue;
            Rational f = w(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                w(r, c) -= f * w(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace bott
