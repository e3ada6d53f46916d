#pragma once

// JSON encodings:
//   BottMatrix      {"n": 3, "entries": [[0,a,b],[0,0,c],[0,0,0]]}
//   CohomClass      {"terms": [{"mono": [1,2], "num": p, "den": q}]}   (den omitted when 1)
//   DegreeTwo       {"x_coeffs": [c1, ..., cn]}
//   IsoDescriptor   {"matrix": [[...]], "sigma": [...], "q": [{"num": .., "den": ..}]}
// Integers outside the int64 range are written as decimal strings and accepted either way.

#include "bott/rigidity.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bott::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json to_json(const Integer& z)
{
    if (z.fits_slong_p())
        return json(z.get_si());
    return json(z.get_str());
}

inline Integer integer_from_json(const json& j)
{
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw FormatError("malformed integer string '" + j.get<std::string>() + "'");
        return z;
    }
    throw FormatError("expected an integer, got " + j.dump());
}

inline json to_json(const Rational& q)
{
    json out{{"num", to_json(Integer(q.get_num()))}};
    if (q.get_den() != 1)
        out["den"] = to_json(Integer(q.get_den()));
    return out;
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer() || j.is_string())
        return Rational(integer_from_json(j));
    if (!j.is_object() || !j.contains("num"))
        throw FormatError("expected {\"num\": .., \"den\": ..}, got " + j.dump());
    Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
    if (den == 0)
        throw FormatError("zero denominator");
    Rational q(integer_from_json(j.at("num")), den);
    q.canonicalize();
    return q;
}

template <typename S>
json matrix_to_json(const Matrix<S>& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix<Integer> integer_matrix_from_json(const json& rows)
{
    if (!rows.is_array() || rows.empty())
        throw FormatError("expected a non-empty array of rows");
    Matrix<Integer> m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != rows.size())
            throw FormatError("matrix must be square");
        for (std::size_t c = 0; c < rows.size(); ++c)
            m(r, c) = integer_from_json(rows[r][c]);
    }
    return m;
}

inline json to_json(const BottMatrix& a)
{
    return json{{"n", a.n()}, {"entries", matrix_to_json(a.matrix())}};
}

inline BottMatrix bott_matrix_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw FormatError("Bott matrix needs \"n\" and \"entries\"");
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 1)
        throw FormatError("\"n\" must be a positive integer");
    auto m = integer_matrix_from_json(j.at("entries"));
    if (m.size() != j.at("n").get<std::size_t>())
        throw FormatError("\"entries\" size does not match \"n\"");
    if (m.size() > max_stage)
        throw FormatError("stage exceeds 64");
    try {
        return BottMatrix(m);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

template <typename S>
json to_json(const CohomClass<S>& u)
{
    json terms = json::array();
    for (const auto& [m, c] : u.terms()) {
        json t{{"mono", m.indices()}};
        if constexpr (std::is_same_v<S, Integer>) {
            t["num"] = to_json(c);
        } else {
            auto r = to_json(c);
            t["num"] = r["num"];
            if (r.contains("den"))
                t["den"] = r["den"];
        }
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

inline CohomClass<Rational> rational_class_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw FormatError("class needs a \"terms\" array");
    CohomClass<Rational> out;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("mono") || !t.contains("num"))
            throw FormatError("term needs \"mono\" and \"num\"");
        Monomial m;
        try {
            m = Monomial(t.at("mono").get<std::vector<std::size_t>>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
        out.add(m, rational_from_json(t));
    }
    return out;
}

inline CohomClass<Integer> integer_class_from_json(const json& j)
{
    auto q = rational_class_from_json(j);
    try {
        return class_cast<Integer>(q);
    } catch (const std::domain_error& e) {
        throw FormatError(e.what());
    }
}

template <typename S>
json to_json(const DegreeTwo<S>& u)
{
    json c = json::array();
    for (const auto& v : u.coeffs)
        c.push_back(to_json(v));
    return json{{"x_coeffs", std::move(c)}};
}

inline DegreeTwo<Integer> degree_two_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("x_coeffs") || !j.at("x_coeffs").is_array())
        throw FormatError("degree-two element needs \"x_coeffs\"");
    DegreeTwo<Integer> u;
    for (const auto& c : j.at("x_coeffs"))
        u.coeffs.push_back(integer_from_json(c));
    return u;
}

inline json to_json(const ExceptionalReport& r)
{
    json out{{"j", r.j}, {"kind", to_string(r.kind)}};
    if (r.is_exceptional())
        out["payload"] = json{{"c", to_json(r.c)}, {"i", r.i}};
    return out;
}

inline json to_json(const IsoDescriptor& d)
{
    json q = json::array();
    for (const auto& v : d.q)
        q.push_back(to_json(v));
    return json{{"matrix", matrix_to_json(d.map.m)}, {"sigma", d.sigma}, {"q", std::move(q)}};
}

// Only the matrix is authoritative; sigma and q are recomputed by verification.
inline DegreeTwoMap map_from_json(const json& j)
{
    if (j.is_object() && j.contains("matrix"))
        return DegreeTwoMap(integer_matrix_from_json(j.at("matrix")));
    return DegreeTwoMap(integer_matrix_from_json(j));
}

inline json to_json(const SignedPermImage& s)
{
    return json{{"signs", s.signs}, {"sigma", s.sigma}};
}

inline json to_json(const PontrjaginCheck& p)
{
    return json{{"preserved", p.preserved}, {"image", to_json(p.image)}, {"target", to_json(p.target)}};
}

inline json to_json(const HalfScaleAudit& a)
{
    json entries = json::array();
    for (const auto& e : a.entries) {
        json x{{"j", e.j}, {"i", e.i}, {"c", to_json(e.c)}, {"d", to_json(e.d)}, {"ok", e.ok}};
        if (!e.problem.empty())
            x["problem"] = e.problem;
        entries.push_back(std::move(x));
    }
    return json{{"passed", a.passed}, {"entries", std::move(entries)}};
}

inline json to_json(const NormalizationStep& s)
{
    return json{{"j", s.j},
                {"i", s.i},
                {"c", to_json(s.c)},
                {"before", to_json(s.before)},
                {"after", to_json(s.after)},
                {"step_iso", matrix_to_json(s.step_iso.m)}};
}

inline json to_json(const NormalizationResult& r)
{
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(to_json(s));
    return json{{"result", to_json(r.result)}, {"steps", std::move(steps)}, {"composite", matrix_to_json(r.composite.m)}};
}

inline json to_json(const DiffeoCertificate& c)
{
    json chain = json::array();
    for (const auto& f : c.chain) {
        json x{{"kind", to_string(f.kind)},
               {"source", to_json(f.source)},
               {"target", to_json(f.target)},
               {"matrix", matrix_to_json(f.map.m)}};
        if (f.kind == CertificateFactor::Kind::normalization)
            x["step"] = json{{"j", f.j}, {"i", f.i}, {"c", to_json(f.c)}};
        if (f.kind == CertificateFactor::Kind::permutation)
            x["sigma"] = f.sigma;
        chain.push_back(std::move(x));
    }
    return json{{"chain", std::move(chain)}, {"composite", matrix_to_json(c.composite.m)}};
}

inline CertificateFactor::Kind factor_kind_from_string(const std::string& s)
{
    if (s == "normalization")
        return CertificateFactor::Kind::normalization;
    if (s == "permutation")
        return CertificateFactor::Kind::permutation;
    if (s == "upper_triangular")
        return CertificateFactor::Kind::upper_triangular;
    throw FormatError("unknown factor kind '" + s + "'");
}

inline DiffeoCertificate certificate_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("chain") || !j.at("chain").is_array())
        throw FormatError("certificate needs a \"chain\" array");
    DiffeoCertificate c;
    for (const auto& x : j.at("chain")) {
        CertificateFactor f{factor_kind_from_string(x.at("kind").get<std::string>()),
                            bott_matrix_from_json(x.at("source")), bott_matrix_from_json(x.at("target")),
                            DegreeTwoMap(integer_matrix_from_json(x.at("matrix")))};
        if (x.contains("step")) {
            f.j = x.at("step").at("j").get<std::size_t>();
            f.i = x.at("step").at("i").get<std::size_t>();
            f.c = integer_from_json(x.at("step").at("c"));
        }
        if (x.contains("sigma"))
            f.sigma = x.at("sigma").get<std::vector<std::size_t>>();
        c.chain.push_back(std::move(f));
    }
    if (c.chain.empty())
        throw FormatError("certificate chain is empty");
    c.composite = j.contains("composite") ? DegreeTwoMap(integer_matrix_from_json(j.at("composite")))
                                          : compose_chain(c.chain.front().source.n(), c.chain);
    return c;
}

inline json to_json(const NotCovered& nc)
{
    json q = json::array();
    for (const auto& v : nc.q)
        q.push_back(to_json(v));
    return json{{"not_covered", nc.reason}, {"q", std::move(q)}};
}

// Reads JSON from a file, or parses the argument itself when it starts with '{' or '['.
inline json load(const std::string& path_or_inline)
{
    try {
        auto first = path_or_inline.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (path_or_inline[first] == '{' || path_or_inline[first] == '['))
            return json::parse(path_or_inline);
        std::ifstream in(path_or_inline);
        if (!in)
            throw FormatError("cannot open '" + path_or_inline + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace bott::io
