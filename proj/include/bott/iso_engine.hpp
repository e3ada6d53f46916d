#pragma once

// Enumeration and verification of graded ring isomorphisms H^*(M(A); Z) -> H^*(M(B); Z).
//
// Every integral isomorphism psi is diagonal in the y-bases up to a permutation:
// psi(y^A_j) = q_j y^B_{sigma(j)} with q_j in {+-1/2, +-1, +-2}, and |q_j| is fixed by the
// parities of alpha^A_j and alpha^B_{sigma(j)}. The search walks these (sigma, q), rebuilds
// psi on x_1..x_n from x_j = y_j + alpha_j / 2, and keeps the integral maps that verify.
//
// Bijectivity: both rings have rank C(n,k) in degree 2k and are generated in degree 2, so a
// homomorphism that is an isomorphism on H^2 (det = +-1) is onto in every degree and hence
// bijective by rank. Well-definedness on the quotient is the relation check in verify_iso.

#include "bott/base_change.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bott {

// Raised when a verified isomorphism lacks the y-diagonal structure; never expected.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Per-matrix data reused across many isomorphism checks.
struct RingData {
    BottMatrix matrix;
    YBasisData y;
    std::vector<DegreeTwo<Integer>> alphas;  // alphas[j-1] = alpha_j
    std::vector<bool> alpha_even;
    CohomClass<Integer> pontrjagin_class;

    explicit RingData(const BottMatrix& a) : matrix(a), y(y_basis(a)), pontrjagin_class(pontrjagin(a))
    {
        for (std::size_t j = 1; j <= a.n(); ++j) {
            alphas.push_back(alpha_form(a, j));
            alpha_even.push_back(is_even(alphas.back()));
        }
    }

    std::size_t n() const { return matrix.n(); }
};

// Column j holds the x-coordinates of psi(x_j).
struct DegreeTwoMap {
    Matrix<Integer> m;

    DegreeTwoMap() = default;
    explicit DegreeTwoMap(Matrix<Integer> mat) : m(std::move(mat)) {}

    static DegreeTwoMap identity(std::size_t n) { return DegreeTwoMap(Matrix<Integer>::identity(n)); }

    static DegreeTwoMap from_columns(const std::vector<DegreeTwo<Integer>>& cols)
    {
        Matrix<Integer> m(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.set_column(j, cols[j].coeffs);
        return DegreeTwoMap(std::move(m));
    }

    std::size_t n() const { return m.size(); }
    DegreeTwo<Integer> image(std::size_t j) const { return DegreeTwo<Integer>(m.column(j - 1)); }

    template <typename S>
    DegreeTwo<S> apply(const DegreeTwo<S>& u) const
    {
        DegreeTwo<S> out(n());
        for (std::size_t r = 0; r < n(); ++r)
            for (std::size_t c = 0; c < n(); ++c)
                out.coeffs[r] += S(m(r, c)) * u.coeffs[c];
        return out;
    }

    friend bool operator==(const DegreeTwoMap& a, const DegreeTwoMap& b) { return a.m == b.m; }
};

// `second` after `first`.
inline DegreeTwoMap compose(const DegreeTwoMap& first, const DegreeTwoMap& second)
{
    return DegreeTwoMap(second.m * first.m);
}

inline DegreeTwoMap inverse(const DegreeTwoMap& f)
{
    return DegreeTwoMap(matrix_cast<Integer>(inverse(f.m)));
}

struct IsoDescriptor {
    DegreeTwoMap map;
    std::vector<std::size_t> sigma;  // sigma[j-1] = sigma(j), 1-based values
    std::vector<Rational> q;
};

inline bool canonical_less(const IsoDescriptor& a, const IsoDescriptor& b)
{
    if (a.sigma != b.sigma)
        return a.sigma < b.sigma;
    if (a.q != b.q)
        return a.q < b.q;
    return a.map.m.raw() < b.map.m.raw();
}

struct Rejection {
    enum class Reason { non_unimodular, relation_not_killed };
    Reason reason;
    std::size_t j = 0;  // offending generator for relation_not_killed

    std::string message() const
    {
        if (reason == Reason::non_unimodular)
            return "determinant is not +-1";
        return "relation x" + std::to_string(j) + "(x" + std::to_string(j) + " - alpha" + std::to_string(j) +
               ") is not killed";
    }
};

using VerifyResult = std::variant<IsoDescriptor, Rejection>;

inline bool is_allowed_scale(const Rational& q)
{
    static const Rational allowed[] = {Rational(-2), Rational(-1), Rational(-1, 2),
                                       Rational(1, 2), Rational(1), Rational(2)};
    return std::find(std::begin(allowed), std::end(allowed), q) != std::end(allowed);
}

// Image of a class under the ring map determined by f on H^2, computed in the target ring.
inline CohomClass<Integer> apply_map(const BottMatrix& target, const DegreeTwoMap& f, const CohomClass<Integer>& u)
{
    check_stage(target, u.max_index());
    std::vector<CohomClass<Integer>> images;
    for (std::size_t j = 1; j <= f.n(); ++j)
        images.push_back(f.image(j).to_class());
    CohomClass<Integer> out;
    for (const auto& [mono, c] : u.terms()) {
        CohomClass<Integer> t = CohomClass<Integer>::constant(c);
        for (std::size_t i : mono.indices())
            t = multiply(target, t, images[i - 1]);
        out += t;
    }
    return out;
}

inline VerifyResult verify_iso(const RingData& a, const RingData& b, const DegreeTwoMap& f)
{
    const std::size_t n = a.n();
    if (b.n() != n || f.n() != n)
        throw std::invalid_argument("isomorphism check needs equal stages");

    Integer det = determinant(f.m);
    if (det != 1 && det != -1)
        return Rejection{Rejection::Reason::non_unimodular};

    std::vector<DegreeTwo<Integer>> img;
    for (std::size_t j = 1; j <= n; ++j)
        img.push_back(f.image(j));

    std::vector<DegreeTwo<Integer>> img_alpha;
    for (std::size_t j = 1; j <= n; ++j) {
        DegreeTwo<Integer> pa(n);
        for (std::size_t i = 1; i < j; ++i)
            if (a.alphas[j - 1][i] != 0)
                pa += a.alphas[j - 1][i] * img[i - 1];
        auto rel = multiply(b.matrix, img[j - 1].to_class(), (img[j - 1] - pa).to_class());
        if (!rel.is_zero())
            return Rejection{Rejection::Reason::relation_not_killed, j};
        img_alpha.push_back(std::move(pa));
    }

    IsoDescriptor d{f, std::vector<std::size_t>(n), std::vector<Rational>(n)};
    std::vector<bool> used(n, false);
    for (std::size_t j = 1; j <= n; ++j) {
        // psi(y_j) = psi(x_j) - psi(alpha_j)/2, expressed in the y-basis of B.
        DegreeTwo<Rational> yx = degree_two_cast<Rational>(img[j - 1]);
        yx -= Rational(1, 2) * degree_two_cast<Rational>(img_alpha[j - 1]);
        DegreeTwo<Rational> yy = b.y.to_y(yx);
        std::size_t k = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (yy[i] == 0)
                continue;
            if (k != 0)
                throw ConsistencyError("image of y" + std::to_string(j) + " is not a multiple of a single y");
            k = i;
        }
        if (k == 0 || used[k - 1])
            throw ConsistencyError("y-images do not define a permutation");
        if (!is_allowed_scale(yy[k]))
            throw ConsistencyError("scale " + yy[k].get_str() + " outside {+-1/2, +-1, +-2}");
        used[k - 1] = true;
        d.sigma[j - 1] = k;
        d.q[j - 1] = yy[k];
    }
    return d;
}

inline VerifyResult verify_iso(const BottMatrix& a, const BottMatrix& b, const DegreeTwoMap& f)
{
    if (a.n() != b.n())
        throw std::invalid_argument("isomorphism check needs equal stages");
    return verify_iso(RingData(a), RingData(b), f);
}

struct Candidate {
    std::vector<std::size_t> sigma;
    std::vector<Rational> q;
};

// |q_j| from the parities: 1/2 for odd -> even, 2 for even -> odd, 1 otherwise.
inline Rational scale_magnitude(bool source_even, bool target_even)
{
    if (!source_even && target_even)
        return Rational(1, 2);
    if (source_even && !target_even)
        return Rational(2);
    return Rational(1);
}

template <typename Visit>
void for_each_candidate(const RingData& a, const RingData& b, Visit&& visit)
{
    const std::size_t n = a.n();
    if (b.n() != n)
        throw std::invalid_argument("candidate search needs equal stages");
    Candidate cand{std::vector<std::size_t>(n), std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i)
        cand.sigma[i] = i + 1;
    std::vector<Rational> mag(n);
    do {
        for (std::size_t j = 0; j < n; ++j)
            mag[j] = scale_magnitude(a.alpha_even[j], b.alpha_even[cand.sigma[j] - 1]);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            for (std::size_t j = 0; j < n; ++j)
                cand.q[j] = ((s >> (n - 1 - j)) & 1) ? mag[j] : Rational(-mag[j]);
            if (!visit(std::as_const(cand)))
                return;
        }
    } while (std::next_permutation(cand.sigma.begin(), cand.sigma.end()));
}

// All parity-admissible (sigma, q) in canonical order.
inline std::vector<Candidate> candidate_set(const RingData& a, const RingData& b)
{
    std::vector<Candidate> out;
    for_each_candidate(a, b, [&](const Candidate& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

inline std::vector<Candidate> candidate_set(const BottMatrix& a, const BottMatrix& b)
{
    return candidate_set(RingData(a), RingData(b));
}

// psi(x_j) = q_j y^B_{sigma(j)} + (1/2) sum_{i<j} A^i_j psi(x_i); nullopt as soon as a
// column is non-integral.
inline std::optional<DegreeTwoMap> build_map(const RingData& a, const RingData& b, const std::vector<std::size_t>& sigma,
                                             const std::vector<Rational>& q)
{
    const std::size_t n = a.n();
    if (b.n() != n || sigma.size() != n || q.size() != n)
        throw std::invalid_argument("build_map needs equal stages");
    std::vector<DegreeTwo<Rational>> cols;
    std::vector<DegreeTwo<Integer>> int_cols;
    for (std::size_t j = 1; j <= n; ++j) {
        DegreeTwo<Rational> col = q[j - 1] * b.y.y_in_x(sigma[j - 1]);
        for (std::size_t i = 1; i < j; ++i) {
            const Integer& aij = a.matrix.entry(i, j);
            if (aij != 0)
                col += half(aij) * cols[i - 1];
        }
        DegreeTwo<Integer> ic(n);
        for (std::size_t r = 1; r <= n; ++r) {
            if (!is_integral(col[r]))
                return std::nullopt;
            ic[r] = col[r].get_num();
        }
        cols.push_back(std::move(col));
        int_cols.push_back(std::move(ic));
    }
    return DegreeTwoMap::from_columns(int_cols);
}

inline std::optional<DegreeTwoMap> build_map(const BottMatrix& a, const BottMatrix& b,
                                             const std::vector<std::size_t>& sigma, const std::vector<Rational>& q)
{
    return build_map(RingData(a), RingData(b), sigma, q);
}

enum class SearchMode { all, first };

struct SearchStats {
    std::size_t candidates = 0;
    std::size_t integral = 0;
    std::size_t verified = 0;
};

inline std::vector<IsoDescriptor> find_isos(const RingData& a, const RingData& b, SearchMode mode = SearchMode::all,
                                            SearchStats* stats = nullptr)
{
    std::vector<IsoDescriptor> out;
    SearchStats local;
    for_each_candidate(a, b, [&](const Candidate& c) {
        ++local.candidates;
        auto f = build_map(a, b, c.sigma, c.q);
        if (!f)
            return true;
        ++local.integral;
        auto r = verify_iso(a, b, *f);
        if (auto* d = std::get_if<IsoDescriptor>(&r)) {
            if (d->sigma != c.sigma || d->q != c.q)
                throw ConsistencyError("verified map disagrees with the candidate it was built from");
            ++local.verified;
            out.push_back(std::move(*d));
            return mode == SearchMode::all;
        }
        return true;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    if (stats)
        *stats = local;
    return out;
}

inline std::vector<IsoDescriptor> find_isos(const BottMatrix& a, const BottMatrix& b, SearchMode mode = SearchMode::all)
{
    return find_isos(RingData(a), RingData(b), mode);
}

// Re-verifies `iso` between a and b, throwing std::invalid_argument if it does not verify.
inline IsoDescriptor require_verified(const RingData& a, const RingData& b, const IsoDescriptor& iso)
{
    auto r = verify_iso(a, b, iso.map);
    if (auto* rej = std::get_if<Rejection>(&r))
        throw std::invalid_argument("not an isomorphism: " + rej->message());
    return std::get<IsoDescriptor>(r);
}

struct PontrjaginCheck {
    bool preserved = false;
    CohomClass<Integer> image;   // psi(p(M(A)))
    CohomClass<Integer> target;  // p(M(B))
};

inline PontrjaginCheck pontrjagin_preserved(const RingData& a, const RingData& b, const IsoDescriptor& iso)
{
    require_verified(a, b, iso);
    PontrjaginCheck out;
    out.image = apply_map(b.matrix, iso.map, a.pontrjagin_class);
    out.target = b.pontrjagin_class;
    out.preserved = out.image == out.target;
    return out;
}

inline PontrjaginCheck pontrjagin_preserved(const BottMatrix& a, const BottMatrix& b, const IsoDescriptor& iso)
{
    return pontrjagin_preserved(RingData(a), RingData(b), iso);
}

struct SignedPermImage {
    std::vector<int> signs;
    std::vector<std::size_t> sigma;

    friend bool operator==(const SignedPermImage&, const SignedPermImage&) = default;
    friend auto operator<=>(const SignedPermImage&, const SignedPermImage&) = default;
};

inline SignedPermImage signed_perm_image(const IsoDescriptor& iso)
{
    SignedPermImage out{{}, iso.sigma};
    for (const auto& q : iso.q)
        out.signs.push_back(sgn(q));
    return out;
}

// For every j with q_j = +-1/2 in an isomorphism between rings without even exceptional
// types: alpha^A_j = c y^A_i (i < j, c odd), q_i = +-2, and alpha^B_{sigma(i)} = d y^B_{sigma(j)}
// with d odd.
struct HalfScaleAudit {
    struct Entry {
        std::size_t j = 0;
        std::size_t i = 0;
        Integer c;
        Integer d;
        bool ok = false;
        std::string problem;
    };

    std::vector<Entry> entries;
    bool passed = true;
};

inline HalfScaleAudit audit_half_scales(const RingData& a, const RingData& b, const IsoDescriptor& iso)
{
    for (const RingData* r : {&a, &b})
        for (std::size_t j = 1; j <= r->n(); ++j)
            if (exceptional_type(r->matrix, r->y, j).is_even_exceptional())
                throw std::invalid_argument("half-scale audit requires rings without even exceptional types");

    HalfScaleAudit out;
    for (std::size_t j = 1; j <= a.n(); ++j) {
        const Rational& qj = iso.q[j - 1];
        if (abs(qj) != Rational(1, 2))
            continue;
        HalfScaleAudit::Entry e;
        e.j = j;
        auto ex = exceptional_type(a.matrix, a.y, j);
        if (!ex.is_exceptional()) {
            e.problem = "alpha^A_j is not exceptional";
        } else {
            e.i = ex.i;
            e.c = ex.c;
            auto exb = exceptional_type(b.matrix, b.y, iso.sigma[ex.i - 1]);
            e.d = exb.c;
            if (is_even(ex.c))
                e.problem = "c is even";
            else if (abs(iso.q[ex.i - 1]) != 2)
                e.problem = "q_i is not +-2";
            else if (!exb.is_exceptional() || exb.i != iso.sigma[j - 1])
                e.problem = "alpha^B_sigma(i) is not a multiple of y^B_sigma(j)";
            else if (is_even(exb.c))
                e.problem = "d is even";
            else
                e.ok = true;
        }
        out.passed = out.passed && e.ok;
        out.entries.push_back(std::move(e));
    }
    return out;
}

// |q_j| = 1/2 iff alpha^A_j odd and alpha^B_{sigma(j)} even; |q_j| = 2 iff the reverse.
inline bool satisfies_parity_rules(const RingData& a, const RingData& b, const IsoDescriptor& iso)
{
    for (std::size_t j = 1; j <= a.n(); ++j) {
        const Rational mag = abs(iso.q[j - 1]);
        const bool src_even = a.alpha_even[j - 1];
        const bool dst_even = b.alpha_even[iso.sigma[j - 1] - 1];
        if ((mag == Rational(1, 2)) != (!src_even && dst_even))
            return false;
        if ((mag == 2) != (src_even && !dst_even))
            return false;
        if (!is_allowed_scale(iso.q[j - 1]))
            return false;
    }
    return true;
}

// Descriptor of the inverse isomorphism b -> a.
inline IsoDescriptor inverse_iso(const RingData& a, const RingData& b, const IsoDescriptor& iso)
{
    return require_verified(b, a, IsoDescriptor{inverse(iso.map), {}, {}});
}

} // namespace bott
