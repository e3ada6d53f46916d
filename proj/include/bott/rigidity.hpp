#pragma once

// Diffeomorphism certificates. An isomorphism is certified when it factors as
//   normalization steps  (unipotent, x_j -> x_j + (c/2) x_i, realized by diffeomorphisms)
//   a permutation        (x_j -> x_{sigma(j)} onto P A P^{-1}, a coordinate permutation)
//   an upper-triangular map in the x-bases (realized by a diffeomorphism by Ishida's criterion).
// The realizations are taken as axioms; only the algebraic conditions are checked here.

#include "bott/iso_engine.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bott {

struct NormalizationStep {
    std::size_t j = 0;
    std::size_t i = 0;
    Integer c;  // even, alpha_j(before) = c * y_i(before)
    BottMatrix before;
    BottMatrix after;
    DegreeTwoMap step_iso;  // before -> after
};

struct NormalizationResult {
    BottMatrix result;
    std::vector<NormalizationStep> steps;
    DegreeTwoMap composite;  // original -> result
};

// One rewrite removing the even exceptional alpha_j = c y_i:
//   B^l_k = A^l_k                 (k != j, l != i)
//   B^i_k = A^i_k + (c/2) A^j_k   (k != j)
//   B^l_j = -(c/2) A^l_i
// together with the isomorphism x_l -> x_l (l != j), x_j -> x_j + (c/2) x_i.
inline NormalizationStep normalization_step(const BottMatrix& a, std::size_t j, std::size_t i, const Integer& c)
{
    if (!(i < j) || !is_even(c) || c == 0)
        throw std::invalid_argument("normalization step needs i < j and a nonzero even c");
    const std::size_t n = a.n();
    const Integer h = c / 2;
    Matrix<Integer> m(n);
    for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t k = 1; k <= n; ++k) {
            Integer v;
            if (k == j)
                v = -h * a.entry(l, i);
            else if (l == i)
                v = a.entry(i, k) + h * a.entry(j, k);
            else
                v = a.entry(l, k);
            m(l - 1, k - 1) = v;
        }
    NormalizationStep s{j, i, c, a, BottMatrix(m), DegreeTwoMap::identity(n)};
    s.step_iso.m(i - 1, j - 1) = h;
    return s;
}

// Repeatedly rewrites the smallest j whose alpha_j is of even exceptional type until none is.
inline NormalizationResult normalize(const BottMatrix& a)
{
    NormalizationResult out{a, {}, DegreeTwoMap::identity(a.n())};
    // Each step lowers the height of one alpha_j; this bound is never reached.
    const std::size_t max_steps = 64 * a.n() * a.n();
    while (true) {
        auto yb = y_basis(out.result);
        std::optional<ExceptionalReport> hit;
        for (std::size_t j = 1; j <= a.n() && !hit; ++j) {
            auto r = exceptional_type(out.result, yb, j);
            if (r.is_even_exceptional())
                hit = r;
        }
        if (!hit)
            return out;
        if (out.steps.size() >= max_steps)
            throw ConsistencyError("normalization does not terminate");
        auto step = normalization_step(out.result, hit->j, hit->i, hit->c);
        out.composite = compose(out.composite, step.step_iso);
        out.result = step.after;
        out.steps.push_back(std::move(step));
    }
}

struct PermutationConjugate {
    BottMatrix result;     // P A P^{-1}
    DegreeTwoMap iso;      // x_j -> x_{sigma(j)}, matrix P
};

// (P A P^{-1})^{sigma(i)}_{sigma(j)} = A^i_j; nullopt when that is not strictly upper triangular.
inline std::optional<PermutationConjugate> permutation_conjugate(const BottMatrix& a,
                                                                 const std::vector<std::size_t>& sigma)
{
    const std::size_t n = a.n();
    if (sigma.size() != n)
        throw std::invalid_argument("permutation has wrong length");
    Matrix<Integer> c(n), p(n);
    for (std::size_t j = 1; j <= n; ++j) {
        p(sigma[j - 1] - 1, j - 1) = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            const Integer& v = a.entry(i, j);
            if (v == 0)
                continue;
            if (sigma[i - 1] >= sigma[j - 1])
                return std::nullopt;
            c(sigma[i - 1] - 1, sigma[j - 1] - 1) = v;
        }
    }
    return PermutationConjugate{BottMatrix(c), DegreeTwoMap(p)};
}

inline bool ishida_check(const DegreeTwoMap& f)
{
    for (std::size_t r = 0; r < f.n(); ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (f.m(r, c) != 0)
                return false;
    return true;
}

struct CertificateFactor {
    enum class Kind { normalization, permutation, upper_triangular };

    Kind kind;
    BottMatrix source;
    BottMatrix target;
    DegreeTwoMap map;
    // normalization: the (j, i, c) of the step; permutation: sigma.
    std::size_t j = 0;
    std::size_t i = 0;
    Integer c = 0;
    std::vector<std::size_t> sigma = {};
};

inline const char* to_string(CertificateFactor::Kind k)
{
    switch (k) {
    case CertificateFactor::Kind::normalization: return "normalization";
    case CertificateFactor::Kind::permutation: return "permutation";
    case CertificateFactor::Kind::upper_triangular: return "upper_triangular";
    }
    return "?";
}

struct DiffeoCertificate {
    std::vector<CertificateFactor> chain;  // applied first to last
    DegreeTwoMap composite;
};

struct NotCovered {
    std::string reason;
    std::vector<Rational> q;  // scales after normalization
};

using CertifyResult = std::variant<DiffeoCertificate, NotCovered>;

inline bool is_identity(const std::vector<std::size_t>& sigma)
{
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] != j + 1)
            return false;
    return true;
}

inline DegreeTwoMap compose_chain(std::size_t n, const std::vector<CertificateFactor>& chain)
{
    DegreeTwoMap out = DegreeTwoMap::identity(n);
    for (const auto& f : chain)
        out = compose(out, f.map);
    return out;
}

inline CertifyResult certify_diffeo(const BottMatrix& a, const BottMatrix& b, const IsoDescriptor& iso)
{
    const RingData rb(b);
    require_verified(RingData(a), rb, iso);
    const std::size_t n = a.n();

    auto norm = normalize(a);
    DegreeTwoMap moved = compose(inverse(norm.composite), iso.map);
    const RingData rn(norm.result);
    auto moved_check = verify_iso(rn, rb, moved);
    auto* md = std::get_if<IsoDescriptor>(&moved_check);
    if (!md)
        throw ConsistencyError("isomorphism does not survive normalization");
    for (const auto& q : md->q)
        if (abs(q) != 1)
            return NotCovered{"q outside +-1", md->q};

    auto conj = permutation_conjugate(norm.result, md->sigma);
    if (!conj)
        throw ConsistencyError("P A P^{-1} is not strictly upper triangular after normalization");

    DegreeTwoMap rest = compose(inverse(conj->iso), moved);
    if (!ishida_check(rest))
        throw ConsistencyError("remaining factor is not upper triangular");
    if (!std::holds_alternative<IsoDescriptor>(verify_iso(RingData(conj->result), rb, rest)))
        throw ConsistencyError("remaining factor does not verify");

    DiffeoCertificate cert;
    for (const auto& s : norm.steps) {
        CertificateFactor f{CertificateFactor::Kind::normalization, s.before, s.after, s.step_iso};
        f.j = s.j;
        f.i = s.i;
        f.c = s.c;
        cert.chain.push_back(std::move(f));
    }
    if (!is_identity(md->sigma)) {
        CertificateFactor f{CertificateFactor::Kind::permutation, norm.result, conj->result, conj->iso};
        f.sigma = md->sigma;
        cert.chain.push_back(std::move(f));
    }
    cert.chain.push_back(CertificateFactor{CertificateFactor::Kind::upper_triangular, conj->result, b, rest});
    cert.composite = compose_chain(n, cert.chain);
    if (!(cert.composite == iso.map))
        throw ConsistencyError("certificate does not compose to the isomorphism");
    return cert;
}

// Offline re-check of a certificate: every factor verifies between its recorded endpoints,
// has the shape its tag claims, the endpoints chain up, and the product is `target_map`.
inline bool check_certificate(const BottMatrix& a, const BottMatrix& b, const DiffeoCertificate& cert,
                              const DegreeTwoMap& target_map, std::string* why = nullptr)
{
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    if (cert.chain.empty())
        return fail("empty chain");
    BottMatrix cur = a;
    for (std::size_t k = 0; k < cert.chain.size(); ++k) {
        const auto& f = cert.chain[k];
        if (!(f.source == cur))
            return fail("factor " + std::to_string(k) + " does not start where the previous one ended");
        auto r = verify_iso(f.source, f.target, f.map);
        auto* d = std::get_if<IsoDescriptor>(&r);
        if (!d)
            return fail("factor " + std::to_string(k) + " is not an isomorphism");
        switch (f.kind) {
        case CertificateFactor::Kind::normalization: {
            auto s = normalization_step(f.source, f.j, f.i, f.c);
            if (!(s.after == f.target) || !(s.step_iso == f.map))
                return fail("factor " + std::to_string(k) + " is not the recorded normalization step");
            if (exceptional_type(f.source, f.j).c != f.c || exceptional_type(f.source, f.j).i != f.i)
                return fail("factor " + std::to_string(k) + " rewrites a non-exceptional alpha");
            break;
        }
        case CertificateFactor::Kind::permutation: {
            auto p = permutation_conjugate(f.source, f.sigma);
            if (!p || !(p->result == f.target) || !(p->iso == f.map))
                return fail("factor " + std::to_string(k) + " is not the recorded permutation");
            break;
        }
        case CertificateFactor::Kind::upper_triangular:
            if (!ishida_check(f.map))
                return fail("factor " + std::to_string(k) + " is not upper triangular");
            break;
        }
        cur = f.target;
    }
    if (!(cur == b))
        return fail("chain does not end at the target");
    if (!(compose_chain(a.n(), cert.chain) == target_map))
        return fail("chain does not compose to the isomorphism");
    return true;
}

} // namespace bott
