#pragma once

// The rational basis y_j = x_j - alpha_j / 2 and the structure it exposes: heights,
// exceptional types, triviality predicates, square-zero elements and vanishing pairs.

#include "bott/degree_two.hpp"
#include "bott/ring.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace bott {

inline DegreeTwo<Integer> alpha_form(const BottMatrix& a, std::size_t j)
{
    return DegreeTwo<Integer>(alpha_coeffs(a, j));
}

// shift = E - A/2 (column j holds y_j in the x-basis), inv = shift^{-1} with entries a^i_j,
// so x_j = sum_{i<=j} a^i_j y_i.
struct YBasisData {
    Matrix<Rational> shift;
    Matrix<Rational> inv;

    std::size_t n() const { return inv.size(); }

    // x-coordinates -> y-coordinates.
    DegreeTwo<Rational> to_y(const DegreeTwo<Rational>& x_coords) const
    {
        return DegreeTwo<Rational>(inv.apply(x_coords.coeffs));
    }

    DegreeTwo<Rational> to_x(const DegreeTwo<Rational>& y_coords) const
    {
        return DegreeTwo<Rational>(shift.apply(y_coords.coeffs));
    }

    DegreeTwo<Rational> y_in_x(std::size_t j) const { return DegreeTwo<Rational>(shift.column(j - 1)); }
};

inline YBasisData y_basis(const BottMatrix& a)
{
    const std::size_t n = a.n();
    YBasisData d{Matrix<Rational>::identity(n), Matrix<Rational>::identity(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.shift(i, j) = -half(a.matrix()(i, j));
    // Back substitution on the unipotent system shift * inv = E, column by column.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Rational s = 0;
            for (std::size_t k = i + 1; k <= j; ++k)
                s += half(a.matrix()(i, k)) * d.inv(k, j);
            d.inv(i, j) = s;
        }
    return d;
}

// y_j^2 in the y-basis of H^4(M(A); Q), via y_j^2 = (sum_{i<j} a^i_j y_i)^2 applied recursively.
inline CohomClass<Rational> y_square_expansion(const BottMatrix& a, const YBasisData& yb, std::size_t j)
{
    a.check_index(j);
    const std::size_t n = a.n();
    std::vector<unsigned> start(n, 0);
    start[j - 1] = 2;

    CohomClass<Rational> out;
    std::vector<std::pair<std::vector<unsigned>, Rational>> work;
    work.emplace_back(std::move(start), Rational(1));
    while (!work.empty()) {
        auto [e, c] = std::move(work.back());
        work.pop_back();
        std::size_t top = 0;
        for (std::size_t k = n; k >= 1; --k)
            if (e[k - 1] >= 2) {
                top = k;
                break;
            }
        if (top == 0) {
            std::uint64_t bits = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (e[k] != 0)
                    bits |= std::uint64_t{1} << k;
            out.add(Monomial::from_bits(bits), c);
            continue;
        }
        e[top - 1] -= 2;
        for (std::size_t i = 1; i < top; ++i) {
            const Rational& ai = yb.inv(i - 1, top - 1);
            if (ai == 0)
                continue;
            for (std::size_t k = 1; k < top; ++k) {
                const Rational& ak = yb.inv(k - 1, top - 1);
                if (ak == 0)
                    continue;
                auto next = e;
                ++next[i - 1];
                ++next[k - 1];
                work.emplace_back(std::move(next), c * ai * ak);
            }
        }
    }
    return out;
}

inline CohomClass<Rational> y_square_expansion(const BottMatrix& a, std::size_t j)
{
    return y_square_expansion(a, y_basis(a), j);
}

inline bool is_z2_trivial(const BottMatrix& a)
{
    for (const auto& v : a.matrix().raw())
        if (!is_even(v))
            return false;
    return true;
}

inline bool is_q_trivial(const BottMatrix& a)
{
    for (std::size_t j = 2; j <= a.n(); ++j) {
        auto al = alpha(a, j);
        if (!multiply(a, al, al).is_zero())
            return false;
    }
    return true;
}

struct ExceptionalReport {
    enum class Kind { none, exceptional, even_exceptional };

    std::size_t j = 0;
    Kind kind = Kind::none;
    Integer c = 0;     // alpha_j = c * y_i when exceptional
    std::size_t i = 0;

    bool is_exceptional() const { return kind != Kind::none; }
    bool is_even_exceptional() const { return kind == Kind::even_exceptional; }
};

inline const char* to_string(ExceptionalReport::Kind k)
{
    switch (k) {
    case ExceptionalReport::Kind::none: return "none";
    case ExceptionalReport::Kind::exceptional: return "exceptional";
    case ExceptionalReport::Kind::even_exceptional: return "even_exceptional";
    }
    return "?";
}

// alpha_j in y-coordinates is 2 * sum_{i<j} a^i_j y_i.
inline ExceptionalReport exceptional_type(const BottMatrix& a, const YBasisData& yb, std::size_t j)
{
    a.check_index(j);
    ExceptionalReport r;
    r.j = j;
    std::size_t found = 0;
    Rational coeff;
    for (std::size_t i = 1; i < j; ++i) {
        Rational c = 2 * yb.inv(i - 1, j - 1);
        if (c == 0)
            continue;
        if (found != 0)
            return r;
        found = i;
        coeff = c;
    }
    if (found == 0 || !is_integral(coeff))
        return r;
    r.i = found;
    r.c = coeff.get_num();
    r.kind = is_even(r.c) ? ExceptionalReport::Kind::even_exceptional : ExceptionalReport::Kind::exceptional;
    return r;
}

inline ExceptionalReport exceptional_type(const BottMatrix& a, std::size_t j)
{
    return exceptional_type(a, y_basis(a), j);
}

inline bool has_even_exceptional(const BottMatrix& a)
{
    auto yb = y_basis(a);
    for (std::size_t j = 1; j <= a.n(); ++j)
        if (exceptional_type(a, yb, j).is_even_exceptional())
            return true;
    return false;
}

// Square-zero primitive classes: +-(x_j - alpha_j/2) for even alpha_j, +-(2x_j - alpha_j)
// otherwise, over the j with alpha_j^2 = 0. Ordered by j, positive sign first.
inline std::vector<DegreeTwo<Integer>> primitive_square_zero(const BottMatrix& a)
{
    std::vector<DegreeTwo<Integer>> out;
    for (std::size_t j = 1; j <= a.n(); ++j) {
        auto al = alpha_form(a, j);
        auto alc = al.to_class();
        if (!multiply(a, alc, alc).is_zero())
            continue;
        DegreeTwo<Integer> u(a.n());
        u[j] = 1;
        if (is_even(al)) {
            for (std::size_t i = 1; i < j; ++i)
                u[i] -= al[i] / 2;
        } else {
            u *= Integer(2);
            u -= al;
        }
        out.push_back(u);
        out.push_back(-u);
    }
    return out;
}

// (u, v) = (a x_j + w, a(x_j - alpha_j) - w)       for same_sign,
//          (a x_j + w, -a(x_j - alpha_j) + w)      for opposite_sign,
// with height(w) < j and w (w + a alpha_j) = 0.
struct PairDecomposition {
    enum class Branch { same_sign, opposite_sign };

    Integer a;
    std::size_t j = 0;
    DegreeTwo<Integer> w;
    Branch branch = Branch::same_sign;
};

struct NotAPair {
    std::string reason;
};

using PairResult = std::variant<PairDecomposition, NotAPair>;

inline std::pair<DegreeTwo<Integer>, DegreeTwo<Integer>> reconstruct(const BottMatrix& a, const PairDecomposition& d)
{
    DegreeTwo<Integer> xj(a.n());
    xj[d.j] = 1;
    DegreeTwo<Integer> u = d.a * xj + d.w;
    DegreeTwo<Integer> rel = d.a * (xj - alpha_form(a, d.j));
    DegreeTwo<Integer> v = d.branch == PairDecomposition::Branch::same_sign ? rel - d.w : d.w - rel;
    return {u, v};
}

// Since height(w) < j, the index j and the scalar a are read off the leading term of u;
// only the branch is chosen, by the leading sign of v.
inline PairResult vanishing_pair_decompose(const BottMatrix& a, const DegreeTwo<Integer>& u,
                                           const DegreeTwo<Integer>& v)
{
    if (u.n() != a.n() || v.n() != a.n())
        throw std::invalid_argument("degree-two element has wrong length for the stage");
    if (!is_primitive(u) || !is_primitive(v))
        throw std::invalid_argument("vanishing pair decomposition needs primitive elements");

    if (!multiply(a, u.to_class(), v.to_class()).is_zero())
        return NotAPair{"product is nonzero"};

    PairDecomposition d;
    d.j = height(u);
    d.a = u[d.j];
    d.w = u;
    d.w[d.j] = 0;

    auto wc = d.w.to_class();
    auto shifted = (d.w + d.a * alpha_form(a, d.j)).to_class();
    if (!multiply(a, wc, shifted).is_zero())
        return NotAPair{"w(w + a alpha_j) is nonzero"};

    for (auto br : {PairDecomposition::Branch::same_sign, PairDecomposition::Branch::opposite_sign}) {
        d.branch = br;
        if (reconstruct(a, d).second == v)
            return d;
    }
    return NotAPair{"second element does not match either branch"};
}

} // namespace bott
