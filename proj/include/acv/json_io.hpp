#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/multipoly.hpp"
#include "acv/scheme.hpp"
#include "acv/symplectic.hpp"
#include "acv/triangularize.hpp"
#include "acv/weyl.hpp"

namespace acv::io {

using json = nlohmann::json;

// Shared fixture format: rationals as "p/q" strings, matrices as
// {rows, cols, entries: [...]} in row-major order.

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j)
{
    if (!j.is_string()) throw Error(ErrorCode::SchemaError, "rational must be a string \"p/q\"");
    return parse_rational(j.get<std::string>());
}

inline json to_json(const ExactVector& v)
{
    json out = json::array();
    for (const auto& e : v) out.push_back(to_string(e));
    return out;
}

inline ExactVector vector_from_json(const json& j)
{
    if (!j.is_array()) throw Error(ErrorCode::SchemaError, "vector must be an array");
    ExactVector v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

inline json to_json(const ExactMatrix& m)
{
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", to_json(m.entries())}};
}

inline const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw Error(ErrorCode::SchemaError, std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

inline std::size_t count_field(const json& j, const char* name)
{
    const json& f = field(j, name);
    if (!f.is_number_unsigned()) throw Error(ErrorCode::SchemaError, std::string("'") + name + "' must be a count");
    return f.get<std::size_t>();
}

inline ExactMatrix matrix_from_json(const json& j)
{
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    ExactVector entries = vector_from_json(field(j, "entries"));
    if (entries.size() != rows * cols) throw Error(ErrorCode::SchemaError, "entries length != rows * cols");
    return ExactMatrix(rows, cols, std::move(entries));
}

inline json to_json(const SpElement& x) { return to_json(x.mat()); }

inline SpElement sp_from_json(const json& j, const SymplecticSpace& space)
{
    ExactMatrix m = matrix_from_json(j);
    if (m.rows() != space.dim() || m.cols() != space.dim()) {
        throw Error(ErrorCode::SchemaError, "sp element has the wrong size");
    }
    return SpElement(space, std::move(m));
}

inline json to_json(const PhaseVector& i) { return json{{"p", to_json(i.p())}, {"q", to_json(i.q())}}; }

inline PhaseVector phase_from_json(const json& j, const SymplecticSpace& space)
{
    ExactVector p = vector_from_json(field(j, "p"));
    ExactVector q = vector_from_json(field(j, "q"));
    if (p.size() != space.n() || q.size() != space.n()) throw Error(ErrorCode::SchemaError, "phase vector length != n");
    return PhaseVector(space, std::move(p), std::move(q));
}

inline json to_json(const ACVPoint& pt)
{
    return json{{"n", pt.n()}, {"x", to_json(pt.x)}, {"y", to_json(pt.y)}, {"i", to_json(pt.i)}};
}

inline ACVPoint point_from_json(const json& j)
{
    const SymplecticSpace space(count_field(j, "n"));
    return ACVPoint(sp_from_json(field(j, "x"), space), sp_from_json(field(j, "y"), space),
                    phase_from_json(field(j, "i"), space));
}

inline json to_json(const CartanPoint& h) { return to_json(h.t); }

inline json to_json(const SignVector& s) { return to_string(s); }

// 1-based indices on the wire.
inline json to_json(const SignedPermutation& w)
{
    json perm = json::array();
    for (auto p : w.perm) perm.push_back(p + 1);
    return json{{"perm", perm}, {"signs", w.signs}};
}

inline SignedPermutation signed_permutation_from_json(const json& j)
{
    SignedPermutation w;
    for (const auto& p : field(j, "perm")) {
        if (!p.is_number_unsigned() || p.get<std::size_t>() == 0) throw Error(ErrorCode::SchemaError, "perm entries are 1-based");
        w.perm.push_back(p.get<std::size_t>() - 1);
    }
    for (const auto& s : field(j, "signs")) w.signs.push_back(s.get<int>());
    if (!w.is_valid()) throw Error(ErrorCode::SchemaError, "not a signed permutation");
    return w;
}

inline json to_json(const MultiPolynomial& f)
{
    json out = json::object();
    for (const auto& [e, c] : f.terms()) out[exponent_key(e)] = to_string(c);
    return out;
}

inline MultiPolynomial multipoly_from_json(const json& j, std::size_t n)
{
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "polynomial must be an object");
    MultiPolynomial f(n);
    for (const auto& [key, value] : j.items()) {
        const Exponent e = parse_exponent_key(key);
        if (e.size() != 2 * n) throw Error(ErrorCode::SchemaError, "exponent key length != 2n");
        f.add_term(e, rational_from_json(value));
    }
    return f;
}

// 64-bit FNV-1a over the compact JSON encoding, as 16 hex digits.
inline std::string digest(const json& j)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json to_json(const DimensionCertificate& c)
{
    return json{{"point_digest", digest(to_json(c.point))},
                {"jacobian_rank", c.jacobian_rank},
                {"ambient_dim", c.ambient_dim},
                {"variety_dim", c.local_dim()},
                {"stabilizer_dim", c.stabilizer_dim},
                {"verdict", c.is_smooth() ? "smooth" : "not-certified"}};
}

inline json flag_to_json(const std::vector<ExactVector>& flag)
{
    json out = json::array();
    for (const auto& v : flag) out.push_back(to_json(v));
    return out;
}

inline json to_json(const BorelCertificate& c)
{
    return json{{"n", c.x_conj.n()},
                {"g", to_json(c.g)},
                {"x_conj", to_json(c.x_conj)},
                {"y_conj", to_json(c.y_conj)},
                {"flag", flag_to_json(c.flag)}};
}

} // namespace acv::io
