// Command-line front end for the bott library.
//
// Exit codes: 0 success or isomorphic, 1 clean negative, 2 input error, 3 violation or internal inconsistency.

#include "bott/bott.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace bott;
using io::json;

namespace {

enum Exit { ok = 0, negative = 1, input_error = 2, violation = 3 };

struct Options {
    bool json = false;
    std::string a, b, expr, map, cert;
    bool first = false;
    bool certify = false;
    long box = 6;
    std::string what = "square-zero";
    scan::ScanConfig scan;
    std::vector<std::string> checks{"pontrjagin"};
    std::string parity = "all";
};

BottMatrix load_matrix(const std::string& arg) { return io::bott_matrix_from_json(io::load(arg)); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string scales(const std::vector<Rational>& q)
{
    std::string s = "(";
    for (std::size_t k = 0; k < q.size(); ++k)
        s += (k ? ", " : "") + q[k].get_str();
    return s + ")";
}

std::string describe(const DegreeTwoMap& f)
{
    std::string s;
    for (std::size_t j = 1; j <= f.m.size(); ++j)
        s += (j > 1 ? ", " : "") + ("x" + std::to_string(j) + " -> " + to_string(f.image(j)));
    return s;
}

std::string describe(const IsoDescriptor& d)
{
    std::string sigma;
    for (auto s : d.sigma)
        sigma += (sigma.empty() ? "" : " ") + std::to_string(s);
    return describe(d.map) + "  [sigma " + sigma + ", q " + scales(d.q) + "]";
}

std::string describe(const CertifyResult& c)
{
    if (auto* cert = std::get_if<DiffeoCertificate>(&c)) {
        std::string s = "certified:";
        for (const auto& f : cert->chain)
            s += std::string(" ") + to_string(f.kind);
        return s;
    }
    const auto& nc = std::get<NotCovered>(c);
    return "not_covered: " + nc.reason + " " + scales(nc.q);
}

json certify_json(const CertifyResult& c)
{
    if (auto* cert = std::get_if<DiffeoCertificate>(&c))
        return json{{"certificate", io::to_json(*cert)}};
    return io::to_json(std::get<NotCovered>(c));
}

// Shared by iso and aut. Returns the exit code.
int report_isos(const BottMatrix& a, const BottMatrix& b, const Options& o)
{
    RingData ra(a), rb(b);
    auto isos = find_isos(ra, rb, o.first ? SearchMode::first : SearchMode::all);
    std::size_t certified = 0, not_covered = 0;
    json list = json::array();
    for (const auto& d : isos) {
        json entry = io::to_json(d);
        std::string line = describe(d);
        if (o.certify) {
            auto c = certify_diffeo(a, b, d);
            if (std::holds_alternative<DiffeoCertificate>(c)) {
                std::string why;
                if (!check_certificate(a, b, std::get<DiffeoCertificate>(c), d.map, &why))
                    throw ConsistencyError("certificate failed its own check: " + why);
                ++certified;
            } else {
                ++not_covered;
            }
            entry["certify"] = certify_json(c);
            line += "\n    " + describe(c);
        }
        list.push_back(std::move(entry));
        if (!o.json)
            std::cout << line << '\n';
    }
    if (o.json) {
        json out{{"count", isos.size()}, {"isos", std::move(list)}};
        if (o.certify) {
            out["certified"] = certified;
            out["not_covered"] = not_covered;
        }
        emit(out);
    } else {
        std::cout << isos.size() << (isos.size() == 1 ? " isomorphism" : " isomorphisms");
        if (o.certify)
            std::cout << ", " << certified << " certified, " << not_covered << " not_covered";
        std::cout << '\n';
    }
    return isos.empty() ? negative : ok;
}

int cmd_ring(const Options& o)
{
    auto a = load_matrix(o.a);
    auto u = evaluate(a, o.expr);
    if (o.json)
        emit(io::to_json(u));
    else
        std::cout << to_string(u) << '\n';
    return ok;
}

int cmd_pontrjagin(const Options& o)
{
    auto a = load_matrix(o.a);
    auto p = pontrjagin(a);
    if (o.json)
        emit(io::to_json(p));
    else
        std::cout << to_string(p) << '\n';
    return ok;
}

int cmd_iso(const Options& o)
{
    auto a = load_matrix(o.a);
    auto b = load_matrix(o.b);
    if (a.n() != b.n())
        throw std::invalid_argument("stage mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    return report_isos(a, b, o);
}

int cmd_aut(const Options& o)
{
    auto a = load_matrix(o.a);
    return report_isos(a, a, o);
}

int cmd_normalize(const Options& o)
{
    auto a = load_matrix(o.a);
    auto r = normalize(a);
    if (o.json) {
        emit(io::to_json(r));
        return ok;
    }
    for (const auto& s : r.steps)
        std::cout << "alpha" << s.j << " = " << s.c.get_str() << "*y" << s.i << ": " << to_string(s.before) << " -> "
                  << to_string(s.after) << '\n';
    std::cout << "result " << to_string(r.result) << '\n';
    std::cout << "composite " << describe(r.composite) << '\n';
    return ok;
}

// With --map, certifies that map; with --cert, checks a stored certificate against it; otherwise
// certifies every isomorphism.
int cmd_certify(const Options& o)
{
    auto a = load_matrix(o.a);
    auto b = load_matrix(o.b);
    if (o.map.empty()) {
        if (!o.cert.empty())
            throw std::invalid_argument("--cert requires --map");
        Options all = o;
        all.certify = true;
        return report_isos(a, b, all);
    }
    auto f = io::map_from_json(io::load(o.map));
    auto v = verify_iso(RingData(a), RingData(b), f);
    if (auto* r = std::get_if<Rejection>(&v)) {
        if (o.json)
            emit(json{{"rejected", r->message()}});
        else
            std::cout << "not an isomorphism: " << r->message() << '\n';
        return negative;
    }
    const auto& d = std::get<IsoDescriptor>(v);
    if (!o.cert.empty()) {
        auto cert = io::certificate_from_json(io::load(o.cert));
        std::string why;
        bool good = check_certificate(a, b, cert, f, &why);
        if (o.json)
            emit(good ? json{{"valid", true}} : json{{"valid", false}, {"reason", why}});
        else
            std::cout << (good ? "valid" : "invalid: " + why) << '\n';
        return good ? ok : negative;
    }
    auto c = certify_diffeo(a, b, d);
    if (o.json)
        emit(certify_json(c));
    else
        std::cout << describe(c) << '\n';
    return std::holds_alternative<DiffeoCertificate>(c) ? ok : negative;
}

int cmd_scan(Options o)
{
    auto& cfg = o.scan;
    cfg.parity = o.parity == "even_only" ? scan::Parity::even_only : scan::Parity::all;
    cfg.check_pontrjagin = cfg.check_certify = cfg.check_aut = cfg.check_oracles = false;
    for (const auto& c : o.checks) {
        if (c == "pontrjagin")
            cfg.check_pontrjagin = true;
        else if (c == "certify")
            cfg.check_certify = true;
        else if (c == "aut")
            cfg.check_aut = true;
        else if (c == "oracles")
            cfg.check_oracles = true;
    }
    auto rep = scan::run(cfg);
    std::fprintf(stderr, "scan finished in %.2fs\n", rep.seconds);
    auto j = scan::to_json(cfg, rep);
    if (o.json) {
        emit(j);
    } else {
        std::cout << "matrices " << rep.matrices << "\npairs " << rep.pairs << "\nisomorphic pairs "
                  << rep.isomorphic_pairs << "\nisomorphisms " << rep.isos << "\nautomorphisms " << rep.automorphisms
                  << "\nclasses " << rep.classes.size() << '\n';
        if (cfg.check_certify)
            std::cout << "certified " << rep.certified << "\nnot_covered " << rep.not_covered << '\n';
        std::cout << "violations " << rep.violations.size() << "\nerrors " << rep.errors.size() << '\n';
        for (const auto& v : rep.violations)
            std::cout << "  " << v.dump() << '\n';
        for (const auto& e : rep.errors)
            std::cout << "  " << e.dump() << '\n';
    }
    return rep.clean() ? ok : violation;
}

int cmd_oracle(const Options& o)
{
    auto a = load_matrix(o.a);
    if (o.what == "square-zero") {
        auto found = oracle::square_zero(a, o.box);
        if (o.json) {
            json list = json::array();
            for (const auto& u : found)
                list.push_back(io::to_json(u));
            emit(json{{"box", o.box}, {"square_zero", std::move(list)}});
        } else {
            for (const auto& u : found)
                std::cout << to_string(u) << '\n';
            std::cout << found.size() << " primitive square-zero elements in the box\n";
        }
        return ok;
    }
    if (o.what == "pairs") {
        auto found = oracle::vanishing_pairs(a, o.box);
        std::size_t failures = 0;
        json list = json::array();
        for (const auto& [u, v] : found) {
            auto r = vanishing_pair_decompose(a, u, v);
            bool good = std::holds_alternative<PairDecomposition>(r) &&
                        reconstruct(a, std::get<PairDecomposition>(r)) == std::make_pair(u, v);
            failures += !good;
            if (o.json)
                list.push_back(json{{"u", io::to_json(u)}, {"v", io::to_json(v)}, {"decomposes", good}});
            else
                std::cout << "(" << to_string(u) << ", " << to_string(v) << ")" << (good ? "" : "  FAILED") << '\n';
        }
        if (o.json)
            emit(json{{"box", o.box}, {"pairs", std::move(list)}, {"failures", failures}});
        else
            std::cout << found.size() << " primitive vanishing pairs, " << failures << " decomposition failures\n";
        return failures == 0 ? ok : violation;
    }
    // iso: brute force over the box, compared with the structured search.
    if (o.b.empty())
        throw std::invalid_argument("oracle iso needs a second matrix");
    auto b = load_matrix(o.b);
    if (a.n() != b.n())
        throw std::invalid_argument("stage mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
    auto brute = oracle::isomorphisms(a, b, o.box);
    auto search = find_isos(a, b);
    std::vector<DegreeTwoMap> in_box;
    for (const auto& d : search) {
        bool inside = true;
        for (const auto& v : d.map.m.raw())
            inside = inside && abs(v) <= o.box;
        if (inside)
            in_box.push_back(d.map);
    }
    std::sort(in_box.begin(), in_box.end(), [](const auto& x, const auto& y) { return x.m.raw() < y.m.raw(); });
    bool agree = brute == in_box;
    if (o.json) {
        emit(json{{"box", o.box}, {"brute_force", brute.size()}, {"search", search.size()}, {"agree", agree}});
    } else {
        std::cout << brute.size() << " isomorphisms by brute force, " << search.size() << " by search, "
                  << (agree ? "agree" : "DISAGREE") << '\n';
    }
    return agree ? (brute.empty() ? negative : ok) : violation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology rings of Bott manifolds: normal forms, isomorphisms and certificates"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    const char* matrix_help = "Bott matrix: JSON file or inline JSON";

    auto* ring = app.add_subcommand("ring", "Normal form of a polynomial expression in x1..xn");
    ring->add_option("matrix", o.a, matrix_help)->required();
    ring->add_option("expression", o.expr, "e.g. \"(x1+x2)^2 - 3*x3\"")->required();

    auto* pont = app.add_subcommand("pontrjagin", "Total Pontrjagin class");
    pont->add_option("matrix", o.a, matrix_help)->required();

    auto* iso = app.add_subcommand("iso", "Graded ring isomorphisms H*(M(A)) -> H*(M(B))");
    iso->add_option("A", o.a, matrix_help)->required();
    iso->add_option("B", o.b, matrix_help)->required();
    auto* all = iso->add_flag("--all", "List every isomorphism (default)");
    iso->add_flag("--first", o.first, "Stop at the first isomorphism")->excludes(all);
    iso->add_flag("--certify", o.certify, "Attach a diffeomorphism certificate or not_covered to each isomorphism");

    auto* aut = app.add_subcommand("aut", "Automorphism group of H*(M(A))");
    aut->add_option("matrix", o.a, matrix_help)->required();
    aut->add_flag("--certify", o.certify, "Attach a diffeomorphism certificate or not_covered to each automorphism");

    auto* norm = app.add_subcommand("normalize", "Remove even exceptional alphas by elementary steps");
    norm->add_option("matrix", o.a, matrix_help)->required();

    auto* cert = app.add_subcommand("certify", "Diffeomorphism certificates for isomorphisms A -> B");
    cert->add_option("A", o.a, matrix_help)->required();
    cert->add_option("B", o.b, matrix_help)->required();
    cert->add_option("--map", o.map, "Certify only this map (JSON matrix, column j = image of x_j)");
    cert->add_option("--cert", o.cert, "Check a stored certificate for --map instead of building one");

    auto* sc = app.add_subcommand("scan", "Exhaustive check over all Bott matrices of a given stage and bound");
    sc->add_option("--n", o.scan.n, "Stage")->check(CLI::Range(1, 63))->capture_default_str();
    sc->add_option("--bound", o.scan.bound, "Max |entry|")->check(CLI::NonNegativeNumber)->capture_default_str();
    sc->add_option("--parity", o.parity, "all | even_only")
        ->check(CLI::IsMember({"all", "even_only"}))
        ->capture_default_str();
    sc->add_option("--checks", o.checks, "Any of pontrjagin, certify, aut, oracles")
        ->delimiter(',')
        ->check(CLI::IsMember({"pontrjagin", "certify", "aut", "oracles"}))
        ->capture_default_str();
    sc->add_option("--jobs", o.scan.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sc->add_option("--budget", o.scan.budget, "Refuse scans above this many candidate maps")->capture_default_str();
    sc->add_option("--oracle-box", o.scan.oracle_box, "Coefficient box for the square-zero oracle")
        ->capture_default_str();
    sc->add_option("--pair-box", o.scan.pair_box, "Coefficient box for the vanishing-pair oracle")
        ->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "Brute-force validators over a coefficient box");
    orc->add_option("what", o.what, "square-zero | pairs | iso")
        ->required()
        ->check(CLI::IsMember({"square-zero", "pairs", "iso"}));
    orc->add_option("A", o.a, matrix_help)->required();
    orc->add_option("B", o.b, "Second matrix (iso only)");
    orc->add_option("--box", o.box, "Max |coefficient|")->check(CLI::NonNegativeNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*ring)
            return cmd_ring(o);
        if (*pont)
            return cmd_pontrjagin(o);
        if (*iso)
            return cmd_iso(o);
        if (*aut)
            return cmd_aut(o);
        if (*norm)
            return cmd_normalize(o);
        if (*cert)
            return cmd_certify(o);
        if (*sc)
            return cmd_scan(o);
        return cmd_oracle(o);
    } catch (const ConsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return violation;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return input_error;
    } catch (const io::FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const scan::BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return violation;
    }
}
