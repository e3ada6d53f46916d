#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bott {

inline constexpr std::size_t max_stage = 64;

// Squarefree monomial x_{i1} ... x_{ik}, stored as a bit set over 1-based indices.
class Monomial {
public:
    Monomial() = default;

    // Indices must be strictly increasing and within [1, max_stage].
    explicit Monomial(const std::vector<std::size_t>& support)
    {
        std::size_t prev = 0;
        for (std::size_t i : support) {
            if (i <= prev || i > max_stage)
                throw std::invalid_argument("monomial support must be strictly increasing within [1,64]");
            bits_ |= bit(i);
            prev = i;
        }
    }

    static Monomial generator(std::size_t i)
    {
        Monomial m;
        m.bits_ = bit(i);
        return m;
    }

    static Monomial from_bits(std::uint64_t bits)
    {
        Monomial m;
        m.bits_ = bits;
        return m;
    }

    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    std::size_t degree() const { return 2 * size(); }
    bool empty() const { return bits_ == 0; }
    bool contains(std::size_t i) const { return i >= 1 && i <= max_stage && (bits_ & bit(i)) != 0; }

    // Largest index in the support; 0 for the unit monomial.
    std::size_t top() const { return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)) + 1);
        return out;
    }

    Monomial with(std::size_t i) const { return from_bits(bits_ | bit(i)); }
    Monomial without(std::size_t i) const { return from_bits(bits_ & ~bit(i)); }

    friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

    // Lexicographic order on the increasing index sequences; a proper prefix sorts first.
    friend bool operator<(Monomial a, Monomial b)
    {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            int lx = std::countr_zero(x), ly = std::countr_zero(y);
            if (lx != ly)
                return lx < ly;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i - 1); }

    std::uint64_t bits_ = 0;
};

inline std::string to_string(Monomial m, const std::string& var = "x")
{
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t i : m.indices()) {
        if (!s.empty())
            s += "*";
        s += var + std::to_string(i);
    }
    return s;
}

} // namespace bott
