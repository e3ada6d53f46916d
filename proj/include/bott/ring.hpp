#pragma once

// Arithmetic in H^*(M(A); Z) = Z[x_1..x_n] / (x_j^2 - alpha_j x_j), and its rationalization.

#include "bott/bott_matrix.hpp"
#include "bott/cohom_class.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace bott {

// Coefficients of alpha_j in the x-basis (length n, zero from index j on).
inline std::vector<Integer> alpha_coeffs(const BottMatrix& a, std::size_t j)
{
    a.check_index(j);
    std::vector<Integer> out(a.n());
    for (std::size_t i = 1; i < j; ++i)
        out[i - 1] = a.entry(i, j);
    return out;
}

template <typename S = Integer>
CohomClass<S> alpha(const BottMatrix& a, std::size_t j)
{
    return CohomClass<S>::linear(alpha_coeffs(a, j));
}

// Picks the largest index with exponent >= 2, or 0 when the monomial is squarefree.
struct LargestRepeated {
    std::size_t operator()(const std::vector<unsigned>& exps) const
    {
        for (std::size_t j = exps.size(); j >= 1; --j)
            if (exps[j - 1] >= 2)
                return j;
        return 0;
    }
};

// Normal form of coeff * prod_{i in raw} x_i. Each step rewrites x_j^2 -> alpha_j x_j at the
// index chosen by `pick`; every index introduced is < j, so the process terminates.
template <typename S = Integer, typename Pick = LargestRepeated>
CohomClass<S> reduce(const BottMatrix& a, const std::vector<std::size_t>& raw, const S& coeff, Pick pick = {})
{
    const std::size_t n = a.n();
    std::vector<unsigned> exps(n, 0);
    for (std::size_t i : raw) {
        a.check_index(i);
        ++exps[i - 1];
    }

    CohomClass<S> out;
    std::vector<std::pair<std::vector<unsigned>, S>> work;
    work.emplace_back(std::move(exps), coeff);
    while (!work.empty()) {
        auto [e, c] = std::move(work.back());
        work.pop_back();
        if (c == 0)
            continue;
        std::size_t j = pick(e);
        if (j == 0) {
            std::uint64_t bits = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (e[i] != 0)
                    bits |= std::uint64_t{1} << i;
            out.add(Monomial::from_bits(bits), c);
            continue;
        }
        --e[j - 1];
        for (std::size_t i = 1; i < j; ++i) {
            const Integer& aij = a.entry(i, j);
            if (aij == 0)
                continue;
            auto next = e;
            ++next[i - 1];
            work.emplace_back(std::move(next), c * S(aij));
        }
    }
    return out;
}

inline void check_stage(const BottMatrix& a, std::size_t max_index)
{
    if (max_index > a.n())
        throw std::invalid_argument("class involves x" + std::to_string(max_index) + " but the stage is " +
                                    std::to_string(a.n()));
}

template <typename S>
CohomClass<S> multiply_monomials(const BottMatrix& a, Monomial m1, Monomial m2, const S& coeff)
{
    if ((m1.bits() & m2.bits()) == 0)
        return CohomClass<S>::term(Monomial::from_bits(m1.bits() | m2.bits()), coeff);
    std::vector<std::size_t> raw = m1.indices();
    for (std::size_t i : m2.indices())
        raw.push_back(i);
    return reduce<S>(a, raw, coeff);
}

template <typename S>
CohomClass<S> multiply(const BottMatrix& a, const CohomClass<S>& u, const CohomClass<S>& v)
{
    check_stage(a, u.max_index());
    check_stage(a, v.max_index());
    CohomClass<S> out;
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms())
            out += multiply_monomials<S>(a, mu, mv, cu * cv);
    return out;
}

template <typename S>
CohomClass<S> power(const BottMatrix& a, const CohomClass<S>& u, unsigned e)
{
    CohomClass<S> out = CohomClass<S>::constant(S(1));
    for (unsigned k = 0; k < e; ++k)
        out = multiply(a, out, u);
    return out;
}

// Total Pontrjagin class prod_j (1 + alpha_j^2).
inline CohomClass<Integer> pontrjagin(const BottMatrix& a)
{
    CohomClass<Integer> p = CohomClass<Integer>::constant(1);
    for (std::size_t j = 2; j <= a.n(); ++j) {
        auto al = alpha(a, j);
        auto factor = CohomClass<Integer>::constant(1) + multiply(a, al, al);
        p = multiply(a, p, factor);
    }
    return p;
}

// All k-element squarefree monomials in x_1..x_n, lexicographic.
inline std::vector<Monomial> graded_basis(std::size_t n, std::size_t k)
{
    if (k > n)
        throw std::out_of_range("degree " + std::to_string(k) + " exceeds stage " + std::to_string(n));
    std::vector<Monomial> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i + 1;
    while (true) {
        out.emplace_back(idx);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos)
            --pos;
        if (pos == 0)
            break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return out;
}

inline std::vector<Monomial> graded_basis(const BottMatrix& a, std::size_t k) { return graded_basis(a.n(), k); }

} // namespace bott
