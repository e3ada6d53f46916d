#pragma once

#include "bott/bott.hpp"

#include <random>
#include <vector>

namespace bott::testing {

inline BottMatrix hirzebruch() { return make_bott(2, {{1, 2, 1}}); }

inline BottMatrix random_bott(std::mt19937& rng, std::size_t n, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    BottMatrix a(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            a = a.with_entry(i, j, d(rng));
    return a;
}

inline CohomClass<Integer> random_class(std::mt19937& rng, std::size_t n, long bound, std::size_t terms)
{
    std::uniform_int_distribution<long> c(-bound, bound);
    std::uniform_int_distribution<std::uint64_t> m(0, (std::uint64_t{1} << n) - 1);
    CohomClass<Integer> u;
    for (std::size_t t = 0; t < terms; ++t)
        u.add(Monomial::from_bits(m(rng)), c(rng));
    return u;
}

inline DegreeTwo<Integer> x_vec(std::initializer_list<long> c)
{
    DegreeTwo<Integer> u;
    for (long v : c)
        u.coeffs.emplace_back(v);
    return u;
}

inline DegreeTwoMap map_of(std::initializer_list<std::initializer_list<long>> rows)
{
    Matrix<Integer> m(rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row)
            m(r, c++) = v;
        ++r;
    }
    return DegreeTwoMap(m);
}

inline CohomClass<Integer> x(std::size_t i) { return CohomClass<Integer>::term(Monomial::generator(i), 1); }
inline CohomClass<Integer> one() { return CohomClass<Integer>::constant(1); }

} // namespace bott::testing
