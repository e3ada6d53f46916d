#pragma once

// Brute-force validators over coefficient boxes. These use only the ring multiplication and
// exact determinants, never the y-basis machinery they are meant to check.

#include "bott/degree_two.hpp"
#include "bott/iso_engine.hpp"
#include "bott/ring.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace bott::oracle {

// All degree-two elements with every coefficient in [-bound, bound], lexicographic.
inline std::vector<DegreeTwo<Integer>> box(std::size_t n, long bound)
{
    std::vector<DegreeTwo<Integer>> out;
    std::vector<long> c(n, -bound);
    while (true) {
        DegreeTwo<Integer> u(n);
        for (std::size_t i = 0; i < n; ++i)
            u.coeffs[i] = c[i];
        out.push_back(std::move(u));
        std::size_t k = n;
        while (k > 0 && c[k - 1] == bound) {
            c[k - 1] = -bound;
            --k;
        }
        if (k == 0)
            return out;
        ++c[k - 1];
    }
}

inline std::vector<DegreeTwo<Integer>> primitive_box(std::size_t n, long bound)
{
    auto all = box(n, bound);
    std::erase_if(all, [](const auto& u) { return !is_primitive(u); });
    return all;
}

// Products of degree-two elements as bilinear forms: table[s][t] = x_s x_t in the H^4 basis.
class QuadraticTable {
public:
    explicit QuadraticTable(const BottMatrix& a) : n_(a.n()), basis_(a.n() >= 2 ? graded_basis(a, 2) : std::vector<Monomial>{})
    {
        table_.assign(n_ * n_, std::vector<Integer>(basis_.size()));
        for (std::size_t s = 1; s <= n_; ++s)
            for (std::size_t t = 1; t <= n_; ++t) {
                auto p = multiply(a, CohomClass<Integer>::term(Monomial::generator(s), 1),
                                  CohomClass<Integer>::term(Monomial::generator(t), 1));
                for (std::size_t b = 0; b < basis_.size(); ++b)
                    table_[(s - 1) * n_ + (t - 1)][b] = p.coefficient(basis_[b]);
            }
    }

    // Matrix L with (u v)_b = sum_t L[b][t] v_t.
    std::vector<std::vector<Integer>> left(const DegreeTwo<Integer>& u) const
    {
        std::vector<std::vector<Integer>> l(basis_.size(), std::vector<Integer>(n_));
        for (std::size_t s = 0; s < n_; ++s) {
            if (u.coeffs[s] == 0)
                continue;
            for (std::size_t t = 0; t < n_; ++t)
                for (std::size_t b = 0; b < basis_.size(); ++b)
                    l[b][t] += u.coeffs[s] * table_[s * n_ + t][b];
        }
        return l;
    }

    static bool kills(const std::vector<std::vector<Integer>>& l, const DegreeTwo<Integer>& v)
    {
        Integer acc;
        for (const auto& row : l) {
            acc = 0;
            for (std::size_t t = 0; t < row.size(); ++t)
                acc += row[t] * v.coeffs[t];
            if (acc != 0)
                return false;
        }
        return true;
    }

    bool product_is_zero(const DegreeTwo<Integer>& u, const DegreeTwo<Integer>& v) const
    {
        return kills(left(u), v);
    }

private:
    std::size_t n_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<Integer>> table_;
};

inline std::vector<DegreeTwo<Integer>> square_zero(const BottMatrix& a, long bound)
{
    std::vector<DegreeTwo<Integer>> out;
    for (auto& u : primitive_box(a.n(), bound)) {
        auto uc = u.to_class();
        if (multiply(a, uc, uc).is_zero())
            out.push_back(std::move(u));
    }
    return out;
}

// Ordered primitive pairs (u, v) in the box with u v = 0.
inline std::vector<std::pair<DegreeTwo<Integer>, DegreeTwo<Integer>>> vanishing_pairs(const BottMatrix& a, long bound)
{
    QuadraticTable table(a);
    auto prims = primitive_box(a.n(), bound);
    std::vector<std::pair<DegreeTwo<Integer>, DegreeTwo<Integer>>> out;
    for (const auto& u : prims) {
        auto l = table.left(u);
        for (const auto& v : prims)
            if (QuadraticTable::kills(l, v))
                out.emplace_back(u, v);
    }
    return out;
}

// Every unimodular map with entries in [-bound, bound] that kills the relations of A in B,
// built column by column (column j only depends on columns < j through alpha_j).
inline std::vector<DegreeTwoMap> isomorphisms(const BottMatrix& a, const BottMatrix& b, long bound)
{
    const std::size_t n = a.n();
    QuadraticTable table(b);
    const auto cols = box(n, bound);
    std::vector<DegreeTwoMap> out;
    std::vector<DegreeTwo<Integer>> chosen;

    std::function<void(std::size_t)> extend = [&](std::size_t j) {
        if (j > n) {
            auto f = DegreeTwoMap::from_columns(chosen);
            Integer det = determinant(f.m);
            if (det == 1 || det == -1)
                out.push_back(std::move(f));
            return;
        }
        DegreeTwo<Integer> img_alpha(n);
        for (std::size_t i = 1; i < j; ++i)
            if (a.entry(i, j) != 0)
                img_alpha += a.entry(i, j) * chosen[i - 1];
        for (const auto& c : cols) {
            if (c.is_zero())
                continue;
            if (!table.product_is_zero(c, c - img_alpha))
                continue;
            chosen.push_back(c);
            extend(j + 1);
            chosen.pop_back();
        }
    };
    extend(1);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.m.raw() < y.m.raw(); });
    return out;
}

} // namespace bott::oracle
