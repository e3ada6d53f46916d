#pragma once

// Polynomial expressions over x1..xn evaluated directly in the ring:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := integer | 'x' index | '(' expr ')'

#include "bott/ring.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bott {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(const BottMatrix& a, std::string_view text) : a_(a), s_(text) {}

    CohomClass<Integer> parse()
    {
        auto v = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a number", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    CohomClass<Integer> expr()
    {
        auto v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    CohomClass<Integer> term()
    {
        auto v = factor();
        while (accept('*'))
            v = multiply(a_, v, factor());
        return v;
    }

    CohomClass<Integer> factor()
    {
        if (accept('-'))
            return -factor();
        auto base = atom();
        if (accept('^')) {
            std::size_t at = pos_;
            auto e = digits();
            if (e.size() > 4)
                throw ParseError("exponent too large", at);
            return power(a_, base, static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    CohomClass<Integer> atom()
    {
        skip();
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of expression", pos_);
        if (accept('(')) {
            auto v = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (accept('x')) {
            std::size_t at = pos_;
            auto idx = digits();
            std::size_t i = idx.size() > 3 ? 0 : std::stoul(idx);
            if (i < 1 || i > a_.n())
                throw ParseError("variable x" + idx + " outside x1..x" + std::to_string(a_.n()), at);
            return CohomClass<Integer>::term(Monomial::generator(i), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return CohomClass<Integer>::constant(Integer(digits()));
        throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    }

    const BottMatrix& a_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline CohomClass<Integer> evaluate(const BottMatrix& a, std::string_view text)
{
    return detail::ExpressionParser(a, text).parse();
}

} // namespace bott
