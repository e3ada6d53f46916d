#pragma once

// Exhaustive scans over all Bott matrices of a given stage and entry bound.

#include "bott/io.hpp"
#include "bott/oracle.hpp"
#include "bott/rigidity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bott::scan {

enum class Parity { all, even_only };

struct ScanConfig {
    std::size_t n = 2;
    long bound = 1;
    Parity parity = Parity::all;
    bool check_pontrjagin = true;
    bool check_certify = false;
    bool check_aut = false;
    bool check_oracles = false;
    unsigned jobs = 1;
    double budget = 1e7;  // max candidate isomorphisms examined
    long oracle_box = 6;
    long pair_box = 4;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<long> entry_values(long bound, Parity parity)
{
    std::vector<long> vals;
    for (long v = -bound; v <= bound; ++v)
        if (parity == Parity::all || v % 2 == 0)
            vals.push_back(v);
    return vals;
}

inline double factorial(std::size_t n)
{
    double f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= static_cast<double>(k);
    return f;
}

inline double matrix_count(const ScanConfig& cfg)
{
    return std::pow(static_cast<double>(entry_values(cfg.bound, cfg.parity).size()),
                    static_cast<double>(cfg.n * (cfg.n - 1) / 2));
}

// Upper bound on build/verify calls: ordered pairs times parity-admissible (sigma, q).
inline double estimated_cost(const ScanConfig& cfg)
{
    double m = matrix_count(cfg);
    return m * m * factorial(cfg.n) * std::pow(2.0, static_cast<double>(cfg.n));
}

// All stage-n matrices with entries drawn from the configured values, in lexicographic order of
// the above-diagonal entries read row by row.
inline std::vector<BottMatrix> enumerate_matrices(std::size_t n, long bound, Parity parity)
{
    if (n == 0 || n > max_stage)
        throw std::invalid_argument("stage must lie in [1,64]");
    if (bound < 0)
        throw std::invalid_argument("bound must be non-negative");
    const auto vals = entry_values(bound, parity);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            slots.emplace_back(i, j);
    std::vector<BottMatrix> out;
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        Matrix<Integer> m(n);
        for (std::size_t s = 0; s < slots.size(); ++s)
            m(slots[s].first - 1, slots[s].second - 1) = vals[pick[s]];
        out.emplace_back(m);
        std::size_t k = slots.size();
        while (k > 0 && pick[k - 1] + 1 == vals.size()) {
            pick[k - 1] = 0;
            --k;
        }
        if (k == 0)
            return out;
        ++pick[k - 1];
    }
}

// Runs fn(0..count-1) on `jobs` threads; results must be written to per-index slots.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k)
            fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < count;)
                fn(k);
        });
    for (auto& th : pool)
        th.join();
}

struct ScanReport {
    std::size_t matrices = 0;
    std::size_t pairs = 0;
    std::size_t isomorphic_pairs = 0;
    std::size_t isos = 0;
    std::size_t automorphisms = 0;
    std::size_t certified = 0;
    std::size_t not_covered = 0;
    std::vector<io::json> violations;
    std::vector<io::json> errors;
    std::vector<std::vector<std::size_t>> classes;  // indices into the enumeration
    std::vector<BottMatrix> matrix_list;
    double seconds = 0;

    bool clean() const { return violations.empty() && errors.empty(); }
};

namespace detail {

struct PairOutcome {
    std::size_t isos = 0;
    std::size_t certified = 0;
    std::size_t not_covered = 0;
    std::vector<io::json> violations;
    std::vector<io::json> errors;
};

inline io::json pair_witness(const BottMatrix& a, const BottMatrix& b)
{
    return io::json{{"A", io::to_json(a)}, {"B", io::to_json(b)}};
}

inline PairOutcome run_pair(const RingData& a, const RingData& b, const ScanConfig& cfg)
{
    PairOutcome out;
    try {
        auto isos = find_isos(a, b, SearchMode::all);
        out.isos = isos.size();
        const bool z2 = is_z2_trivial(a.matrix) && is_z2_trivial(b.matrix);
        for (const auto& iso : isos) {
            if (!satisfies_parity_rules(a, b, iso)) {
                auto w = pair_witness(a.matrix, b.matrix);
                w["check"] = "parity";
                w["iso"] = io::to_json(iso);
                out.violations.push_back(std::move(w));
            }
            if (cfg.check_pontrjagin) {
                auto p = pontrjagin_preserved(a, b, iso);
                if (!p.preserved) {
                    auto w = pair_witness(a.matrix, b.matrix);
                    w["check"] = "pontrjagin";
                    w["iso"] = io::to_json(iso);
                    w["classes"] = io::to_json(p);
                    out.violations.push_back(std::move(w));
                }
            }
            if (cfg.check_certify) {
                auto c = certify_diffeo(a.matrix, b.matrix, iso);
                if (std::holds_alternative<DiffeoCertificate>(c)) {
                    ++out.certified;
                } else {
                    ++out.not_covered;
                    if (z2) {
                        auto w = pair_witness(a.matrix, b.matrix);
                        w["check"] = "certify";
                        w["iso"] = io::to_json(iso);
                        out.violations.push_back(std::move(w));
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        auto w = pair_witness(a.matrix, b.matrix);
        w["error"] = e.what();
        out.errors.push_back(std::move(w));
    }
    return out;
}

// Identity, closure under composition and inverse, and injectivity of the signed-permutation image.
inline std::vector<io::json> check_automorphisms(const RingData& a, const std::vector<IsoDescriptor>& auts)
{
    std::vector<io::json> bad;
    auto note = [&](const std::string& what) {
        bad.push_back(io::json{{"A", io::to_json(a.matrix)}, {"check", "aut"}, {"problem", what}});
    };
    std::set<std::vector<Integer>> elems;
    std::set<SignedPermImage> images;
    for (const auto& f : auts) {
        elems.insert(f.map.m.raw());
        images.insert(signed_perm_image(f));
    }
    if (!elems.count(DegreeTwoMap::identity(a.n()).m.raw()))
        note("identity missing");
    if (images.size() != auts.size())
        note("signed permutation image is not injective");
    for (const auto& f : auts) {
        if (!elems.count(inverse(f.map).m.raw()))
            note("not closed under inverse");
        for (const auto& g : auts)
            if (!elems.count(compose(f.map, g.map).m.raw())) {
                note("not closed under composition");
                return bad;
            }
    }
    return bad;
}

inline std::vector<io::json> check_oracles(const RingData& a, const ScanConfig& cfg)
{
    std::vector<io::json> bad;
    auto note = [&](const std::string& what) {
        bad.push_back(io::json{{"A", io::to_json(a.matrix)}, {"check", "oracle"}, {"problem", what}});
    };
    auto formula = primitive_square_zero(a.matrix);
    auto brute = oracle::square_zero(a.matrix, cfg.oracle_box);
    std::sort(formula.begin(), formula.end());
    if (formula != brute)
        note("square-zero elements disagree with brute force");
    for (const auto& [u, v] : oracle::vanishing_pairs(a.matrix, cfg.pair_box)) {
        auto r = vanishing_pair_decompose(a.matrix, u, v);
        auto* d = std::get_if<PairDecomposition>(&r);
        if (!d || reconstruct(a.matrix, *d) != std::make_pair(u, v)) {
            note("vanishing pair " + to_string(u) + ", " + to_string(v) + " has no decomposition");
            break;
        }
    }
    return bad;
}

} // namespace detail

inline ScanReport run(const ScanConfig& cfg)
{
    if (cfg.n == 0 || cfg.bound < 0)
        throw std::invalid_argument("scan needs n >= 1 and bound >= 0");
    if (estimated_cost(cfg) > cfg.budget)
        throw BudgetExceeded("scan would examine about " + std::to_string(static_cast<long long>(estimated_cost(cfg))) +
                             " candidate maps, over the budget of " + std::to_string(static_cast<long long>(cfg.budget)));

    ScanReport rep;
    rep.matrix_list = enumerate_matrices(cfg.n, cfg.bound, cfg.parity);
    const std::size_t m = rep.matrix_list.size();
    rep.matrices = m;
    rep.pairs = m * m;

    std::vector<std::unique_ptr<RingData>> rings(m);
    parallel_for(m, cfg.jobs, [&](std::size_t k) { rings[k] = std::make_unique<RingData>(rep.matrix_list[k]); });

    std::vector<detail::PairOutcome> outcomes(m * m);
    parallel_for(m * m, cfg.jobs, [&](std::size_t k) {
        outcomes[k] = detail::run_pair(*rings[k / m], *rings[k % m], cfg);
    });

    std::vector<std::vector<io::json>> per_matrix(m);
    if (cfg.check_aut || cfg.check_oracles)
        parallel_for(m, cfg.jobs, [&](std::size_t k) {
            try {
                if (cfg.check_aut) {
                    auto auts = find_isos(*rings[k], *rings[k], SearchMode::all);
                    for (auto& v : detail::check_automorphisms(*rings[k], auts))
                        per_matrix[k].push_back(std::move(v));
                }
                if (cfg.check_oracles)
                    for (auto& v : detail::check_oracles(*rings[k], cfg))
                        per_matrix[k].push_back(std::move(v));
            } catch (const std::exception& e) {
                per_matrix[k].push_back(io::json{{"A", io::to_json(rings[k]->matrix)}, {"error", e.what()}});
            }
        });

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t k = 0; k < m * m; ++k) {
        auto& o = outcomes[k];
        rep.isos += o.isos;
        rep.certified += o.certified;
        rep.not_covered += o.not_covered;
        if (k / m == k % m)
            rep.automorphisms += o.isos;
        if (o.isos > 0) {
            ++rep.isomorphic_pairs;
            std::size_t ra = find(k / m), rb = find(k % m);
            if (ra != rb)
                parent[std::max(ra, rb)] = std::min(ra, rb);
        }
        for (auto& v : o.violations)
            rep.violations.push_back(std::move(v));
        for (auto& e : o.errors)
            rep.errors.push_back(std::move(e));
    }
    for (auto& vs : per_matrix)
        for (auto& v : vs)
            (v.contains("error") ? rep.errors : rep.violations).push_back(std::move(v));

    std::vector<std::vector<std::size_t>> by_root(m);
    for (std::size_t k = 0; k < m; ++k)
        by_root[find(k)].push_back(k);
    for (auto& c : by_root)
        if (!c.empty())
            rep.classes.push_back(std::move(c));
    return rep;
}

inline const char* to_string(Parity p) { return p == Parity::all ? "all" : "even_only"; }

// Deterministic: contains no timing.
inline io::json to_json(const ScanConfig& cfg, const ScanReport& rep)
{
    io::json checks = io::json::array();
    if (cfg.check_pontrjagin)
        checks.push_back("pontrjagin");
    if (cfg.check_certify)
        checks.push_back("certify");
    if (cfg.check_aut)
        checks.push_back("aut");
    if (cfg.check_oracles)
        checks.push_back("oracles");
    io::json classes = io::json::array();
    for (const auto& c : rep.classes) {
        io::json members = io::json::array();
        for (std::size_t k : c)
            members.push_back(to_string(rep.matrix_list[k]));
        classes.push_back(std::move(members));
    }
    io::json out{{"config", {{"n", cfg.n}, {"bound", cfg.bound}, {"parity", to_string(cfg.parity)}, {"checks", checks}}},
                 {"matrices", rep.matrices},
                 {"pairs", rep.pairs},
                 {"isomorphic_pairs", rep.isomorphic_pairs},
                 {"isos", rep.isos},
                 {"automorphisms", rep.automorphisms},
                 {"iso_classes", rep.classes.size()},
                 {"violations", rep.violations},
                 {"errors", rep.errors},
                 {"classes", std::move(classes)}};
    if (cfg.check_certify) {
        out["certified"] = rep.certified;
        out["not_covered"] = rep.not_covered;
    }
    return out;
}

} // namespace bott::scan
