#pragma once

#include "bott/scalar.hpp"

#include <stdexcept>
#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

namespace bott {

// Strictly upper-triangular integer matrix encoding an n-stage Bott tower.
// entry(i, j) = A^i_j with 1-based indices; alpha_j = sum_{i<j} A^i_j x_i.
class BottMatrix {
public:
    explicit BottMatrix(std::size_t n) : m_(n)
    {
        if (n == 0)
            throw std::invalid_argument("Bott matrix stage must be at least 1");
    }

    // Row-major full matrix; rejects anything on or below the diagonal.
    explicit BottMatrix(const Matrix<Integer>& m) : m_(m)
    {
        if (m.size() == 0)
            throw std::invalid_argument("Bott matrix stage must be at least 1");
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c <= r; ++c)
                if (m(r, c) != 0)
                    throw std::invalid_argument("Bott matrix entry (" + std::to_string(r + 1) + "," +
                                                std::to_string(c + 1) + ") must be zero");
    }

    static BottMatrix from_rows(const std::vector<std::vector<Integer>>& rows)
    {
        Matrix<Integer> m(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size())
                throw std::invalid_argument("Bott matrix must be square");
            for (std::size_t c = 0; c < rows.size(); ++c)
                m(r, c) = rows[r][c];
        }
        return BottMatrix(m);
    }

    std::size_t n() const { return m_.size(); }

    const Integer& entry(std::size_t i, std::size_t j) const
    {
        check_index(i);
        check_index(j);
        return m_(i - 1, j - 1);
    }

    BottMatrix with_entry(std::size_t i, std::size_t j, const Integer& v) const
    {
        check_index(i);
        check_index(j);
        if (i >= j && v != 0)
            throw std::invalid_argument("Bott matrix entries must lie strictly above the diagonal");
        BottMatrix out = *this;
        out.m_(i - 1, j - 1) = v;
        return out;
    }

    const Matrix<Integer>& matrix() const { return m_; }

    bool is_zero() const
    {
        for (const auto& v : m_.raw())
            if (v != 0)
                return false;
        return true;
    }

    void check_index(std::size_t i) const
    {
        if (i < 1 || i > n())
            throw std::out_of_range("index " + std::to_string(i) + " outside [1," + std::to_string(n()) + "]");
    }

    friend bool operator==(const BottMatrix& a, const BottMatrix& b) { return a.m_ == b.m_; }

    friend bool operator<(const BottMatrix& a, const BottMatrix& b)
    {
        if (a.n() != b.n())
            return a.n() < b.n();
        return a.m_.raw() < b.m_.raw();
    }

private:
    Matrix<Integer> m_;
};

// Convenience for tests and fixtures: stage n with the listed (i, j, value) entries.
inline BottMatrix make_bott(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries = {})
{
    BottMatrix a(n);
    for (const auto& [i, j, v] : entries)
        a = a.with_entry(i, j, v);
    return a;
}

inline std::string to_string(const BottMatrix& a)
{
    std::string s = "[";
    for (std::size_t i = 1; i <= a.n(); ++i) {
        s += i == 1 ? "[" : ",[";
        for (std::size_t j = 1; j <= a.n(); ++j) {
            if (j > 1)
                s += ",";
            s += a.entry(i, j).get_str();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace bott
