#pragma once

#include "bott/cohom_class.hpp"
#include "bott/scalar.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace bott {

// u = sum_i coeffs[i-1] * g_i for a basis g of H^2 (the x-basis unless stated otherwise).
template <typename S>
struct DegreeTwo {
    std::vector<S> coeffs;

    DegreeTwo() = default;
    explicit DegreeTwo(std::vector<S> c) : coeffs(std::move(c)) {}
    explicit DegreeTwo(std::size_t n) : coeffs(n) {}

    std::size_t n() const { return coeffs.size(); }

    // 1-based access.
    const S& operator[](std::size_t i) const { return coeffs.at(i - 1); }
    S& operator[](std::size_t i) { return coeffs.at(i - 1); }

    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (c != 0)
                return false;
        return true;
    }

    CohomClass<S> to_class() const { return CohomClass<S>::linear(coeffs); }

    DegreeTwo& operator+=(const DegreeTwo& o)
    {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] += o.coeffs.at(i);
        return *this;
    }
    DegreeTwo& operator-=(const DegreeTwo& o)
    {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] -= o.coeffs.at(i);
        return *this;
    }
    DegreeTwo& operator*=(const S& s)
    {
        for (auto& c : coeffs)
            c *= s;
        return *this;
    }

    friend DegreeTwo operator+(DegreeTwo a, const DegreeTwo& b) { return a += b; }
    friend DegreeTwo operator-(DegreeTwo a, const DegreeTwo& b) { return a -= b; }
    friend DegreeTwo operator-(DegreeTwo a) { return a *= S(-1); }
    friend DegreeTwo operator*(const S& s, DegreeTwo a) { return a *= s; }
    friend bool operator==(const DegreeTwo& a, const DegreeTwo& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const DegreeTwo& a, const DegreeTwo& b) { return a.coeffs < b.coeffs; }
};

// Largest index with a nonzero coefficient; 0 for the zero element.
template <typename S>
std::size_t height(const DegreeTwo<S>& u)
{
    for (std::size_t i = u.n(); i >= 1; --i)
        if (u[i] != 0)
            return i;
    return 0;
}

inline Integer content(const DegreeTwo<Integer>& u)
{
    Integer g = 0;
    for (const auto& c : u.coeffs)
        g = gcd(g, c);
    return g;
}

inline bool is_primitive(const DegreeTwo<Integer>& u) { return content(u) == 1; }

inline bool is_even(const DegreeTwo<Integer>& u)
{
    for (const auto& c : u.coeffs)
        if (!is_even(c))
            return false;
    return true;
}

template <typename To, typename From>
DegreeTwo<To> degree_two_cast(const DegreeTwo<From>& u)
{
    DegreeTwo<To> out(u.n());
    for (std::size_t i = 0; i < u.n(); ++i)
        out.coeffs[i] = scalar_cast<To>(u.coeffs[i]);
    return out;
}

template <typename S>
std::string to_string(const DegreeTwo<S>& u, const std::string& var = "x")
{
    return to_string(u.to_class(), var);
}

} // namespace bott
