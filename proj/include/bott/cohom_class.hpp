#pragma once

#include "bott/monomial.hpp"
#include "bott/scalar.hpp"

#include <algorithm>
#include <map>
#include <vector>
#include <string>

namespace bott {

// Element of the cohomology ring as a combination of squarefree monomials.
// Never stores a zero coefficient; classes may be of mixed degree.
template <typename S>
class CohomClass {
public:
    using Terms = std::map<Monomial, S>;

    CohomClass() = default;

    static CohomClass constant(const S& c)
    {
        CohomClass out;
        out.add(Monomial{}, c);
        return out;
    }

    static CohomClass term(Monomial m, const S& c)
    {
        CohomClass out;
        out.add(m, c);
        return out;
    }

    // Degree-two class sum_i coeffs[i-1] x_i.
    template <typename T>
    static CohomClass linear(const std::vector<T>& coeffs)
    {
        CohomClass out;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out.add(Monomial::generator(i + 1), S(coeffs[i]));
        return out;
    }

    void add(Monomial m, const S& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coefficient(Monomial m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    // Component in H^{2k}.
    CohomClass part(std::size_t k) const
    {
        CohomClass out;
        for (const auto& [m, c] : terms_)
            if (m.size() == k)
                out.terms_.emplace(m, c);
        return out;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        std::size_t k = terms_.begin()->first.size();
        for (const auto& [m, c] : terms_)
            if (m.size() != k)
                return false;
        return true;
    }

    std::size_t max_index() const
    {
        std::size_t top = 0;
        for (const auto& [m, c] : terms_)
            top = std::max(top, m.top());
        return top;
    }

    CohomClass& operator+=(const CohomClass& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }

    CohomClass& operator-=(const CohomClass& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, -c);
        return *this;
    }

    CohomClass& operator*=(const S& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
    friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
    friend CohomClass operator*(const S& s, CohomClass a) { return a *= s; }
    friend CohomClass operator-(CohomClass a) { return a *= S(-1); }
    friend bool operator==(const CohomClass& a, const CohomClass& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

template <typename To, typename From>
CohomClass<To> class_cast(const CohomClass<From>& u)
{
    CohomClass<To> out;
    for (const auto& [m, c] : u.terms())
        out.add(m, scalar_cast<To>(c));
    return out;
}

// "2*x1*x2 - x3", "1/2*y1*y2", "0".
template <typename S>
std::string to_string(const CohomClass<S>& u, const std::string& var = "x")
{
    if (u.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        S mag = c < 0 ? S(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (m.empty())
            s += to_string(mag);
        else if (mag == 1)
            s += to_string(m, var);
        else
            s += to_string(mag) + "*" + to_string(m, var);
    }
    return s;
}

} // namespace bott
