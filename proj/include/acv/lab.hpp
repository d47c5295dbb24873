#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "acv/components.hpp"
#include "acv/error.hpp"
#include "acv/gg_scheme.hpp"
#include "acv/json_io.hpp"
#include "acv/levi.hpp"
#include "acv/quotient.hpp"
#include "acv/sampling.hpp"
#include "acv/scheme.hpp"
#include "acv/triangularize.hpp"

namespace acv::lab {

using json = nlohmann::json;

struct SuiteConfig {
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    unsigned degree_bound = 6;
    std::string output_path = "-";

    void validate() const
    {
        if (n < 1) throw Error(ErrorCode::InvalidConfig, "n must be at least 1");
        if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be at least 1");
    }
};

// Statement each check is tied to.
namespace anchor {
inline constexpr const char* moment_equation = "defining equation [x,y]+i^2=0";
inline constexpr const char* dimension = "X_n is a complete intersection of dimension 2n^2+3n";
inline constexpr const char* free_orbit = "mu is a submersion at points with free G-orbit (p=1, q=0 witness)";
inline constexpr const char* yn_components = "Y_n = {p_i q_i = 0} has 2^n irreducible components";
inline constexpr const char* yn_transitive = "{+-1}^n acts simply transitively on the components of Y_n";
inline constexpr const char* borel = "x, y lie in a common Borel subalgebra when [x,y]+i^2=0";
inline constexpr const char* closed_orbits = "closed orbits: [x,y]=0, i=0, x and y semisimple, and conversely";
inline constexpr const char* quotient = "X_n//G = C_2(g)//G = (h+h)/W with W acting diagonally";
inline constexpr const char* restriction = "C[g]^G restricts isomorphically onto C[h]^W";
inline constexpr const char* levi = "slice dimension count dim G/L + 2k + sum dim M_{n_i} + dim X_{n_0}";
inline constexpr const char* wallach = "C[h+h]^W is Poisson-generated by the two copies of C[h]^W";
inline constexpr const char* gg = "M_n = {[x,y]+ij=0}: n+1 components of dimension n^2+2n-2";
} // namespace anchor

struct Record {
    std::string name;
    std::string anchor;
    bool pass = false;
    json witness;
};

struct SuiteReport {
    std::string suite;
    json config;
    std::vector<Record> records;
    double wall_time_ms = 0;

    bool pass() const
    {
        for (const auto& r : records)
            if (!r.pass) return false;
        return !records.empty();
    }

    std::size_t passed() const
    {
        std::size_t c = 0;
        for (const auto& r : records) c += r.pass ? 1 : 0;
        return c;
    }

    void add(std::string name, const char* anchor, bool pass, json witness = json::object())
    {
        records.push_back(Record{std::move(name), anchor, pass, std::move(witness)});
    }
};

inline json to_json(const SuiteReport& rep)
{
    json records = json::array();
    for (const auto& r : rep.records) {
        records.push_back(json{{"name", r.name}, {"anchor", r.anchor}, {"verdict", r.pass ? "pass" : "fail"},
                               {"witness", r.witness}});
    }
    return json{{"suite", rep.suite},
                {"config", rep.config},
                {"records", records},
                {"passed", rep.passed()},
                {"total", rep.records.size()},
                {"pass", rep.pass()},
                {"wall_time_ms", rep.wall_time_ms}};
}

inline json config_json(const SuiteConfig& cfg)
{
    const auto& r = default_ranges;
    return json{{"n", cfg.n},
                {"seed", cfg.seed},
                {"trials", cfg.trials},
                {"degree_bound", cfg.degree_bound},
                {"sampling_ranges",
                 {{"cartan", r.cartan}, {"free_coord", r.free_coord}, {"fiber", r.fiber}, {"conjugator", r.conjugator}}}};
}

namespace suites {

inline void smoothness(const SuiteConfig& cfg, SuiteReport& rep)
{
    const std::size_t n = cfg.n;
    const std::size_t algebra_dim = 2 * n * n + n;
    const std::size_t variety_dim = 2 * n * n + 3 * n;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        const ACVPoint pt = sample_point(n, random_sample_params(rng, n));
        const DimensionCertificate cert = dimension_certificate(pt);
        const bool ok = cert.stabilizer_dim == 0 && cert.jacobian_rank == algebra_dim && cert.local_dim() == variety_dim;
        json w = io::to_json(cert);
        w["point"] = io::to_json(pt);
        rep.add("sample " + std::to_string(trial) + ": rank " + std::to_string(cert.jacobian_rank) + ", dim " +
                    std::to_string(cert.local_dim()),
                anchor::dimension, ok, std::move(w));
    }

    CartanPoint t{ExactVector(n)};
    for (std::size_t k = 0; k < n; ++k) t.t[k] = static_cast<long>(k + 1);
    const ACVPoint witness = witness_point(n, t);
    const DimensionCertificate wc = dimension_certificate(witness);
    json ww = io::to_json(wc);
    ww["point"] = io::to_json(witness);
    rep.add("free-orbit witness t=(1..n): stabilizer 0, full rank", anchor::free_orbit,
            wc.stabilizer_dim == 0 && wc.is_smooth(), std::move(ww));

    const DimensionCertificate oc = dimension_certificate(ACVPoint::origin(SymplecticSpace(n)));
    rep.add("origin: rank 0, full stabilizer, no smoothness claim", anchor::dimension,
            oc.jacobian_rank == 0 && oc.stabilizer_dim == algebra_dim && !oc.is_smooth(), io::to_json(oc));
}

inline void yn(const SuiteConfig& cfg, SuiteReport& rep)
{
    const std::size_t n = cfg.n;
    const auto comps = yn_components(n);
    const std::set<SignVector> unique(comps.begin(), comps.end());
    json list = json::array();
    for (const auto& c : comps) list.push_back(io::to_json(c));
    rep.add("component count 2^" + std::to_string(n) + " = " + std::to_string(comps.size()), anchor::yn_components,
            comps.size() == (std::size_t{1} << n) && unique.size() == comps.size(), json{{"components", list}});

    const TransitivityReport tr = weyl_transitivity_check(n);
    rep.add("sign flips act simply transitively", anchor::yn_transitive, tr.pass(),
            json{{"components", tr.component_count}, {"group_order", tr.group_order}, {"free", tr.free},
                 {"simply_transitive", tr.simply_transitive}});

    auto reduced = comps;
    reduced.pop_back();
    const TransitivityReport neg = check_simple_transitivity(n, reduced);
    rep.add("negative control: one component removed is detected", anchor::yn_transitive, !neg.pass(),
            json{{"detail", neg.detail}});

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        const SampleParams p = random_sample_params(rng, n);
        const ACVPoint pt = sample_point(n, p);
        const auto located = yn_membership(pt.i);
        rep.add("sample " + std::to_string(trial) + " located on component " + to_string(p.sign), anchor::yn_components,
                located && *located == p.sign, json{{"i", io::to_json(pt.i)}});
    }
}

inline void triangularize(const SuiteConfig& cfg, SuiteReport& rep)
{
    const std::size_t n = cfg.n;
    const SymplecticSpace space(n);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        const ACVPoint base = sample_point(n, random_sample_params(rng, n));
        const ExactMatrix h = random_symplectic(rng, n);
        const ExactMatrix h_inv = symplectic_inverse(h, space);
        const SpElement x = conjugate(h, base.x, h_inv);
        const SpElement y = conjugate(h, base.y, h_inv);

        const BorelCertificate cert = symplectic_triangularize(x, y);
        const CertificateCheck check = verify_borel_certificate(cert, x, y);
        const ExactMatrix g_inv = symplectic_inverse(cert.g, space);
        const bool round_trip = g_inv * cert.x_conj.mat() * cert.g == x.mat() && g_inv * cert.y_conj.mat() * cert.g == y.mat();
        const bool spectra = char_poly(cert.x_conj.mat()) == char_poly(x.mat()) &&
                             char_poly(cert.y_conj.mat()) == char_poly(y.mat());
        json w = io::to_json(cert);
        w["x"] = io::to_json(x);
        w["y"] = io::to_json(y);
        w["violations"] = check.violations;
        rep.add("pair " + std::to_string(trial) + " conjugated into the standard Borel", anchor::borel,
                check.ok && round_trip && spectra, std::move(w));
    }

    // Negative control: a rank-2 commutator must be rejected.
    if (n >= 1) {
        const auto basis = sp_basis(space);
        CartanPoint t{ExactVector(n)};
        for (std::size_t k = 0; k < n; ++k) t.t[k] = static_cast<long>(k + 1);
        const SpElement x = cartan_embed(t);
        // B-unit and C-unit at (0,0): [x, e + f] has rank 2.
        const SpElement y = basis[n * n] + basis[n * n + n * (n + 1) / 2];
        bool rejected = false;
        try {
            symplectic_triangularize(x, y);
        } catch (const Error& e) {
            rejected = e.code() == ErrorCode::RankTooHigh;
        }
        rep.add("negative control: rank[x,y] = 2 rejected", anchor::borel, rejected,
                json{{"commutator_rank", commutator_rank(x.mat(), y.mat())}});
    }
}

struct OrbitCase {
    std::string name;
    ACVPoint point;
    bool closed;
    std::vector<OrbitReason> reasons;
};

// Fixed battery: six closed orbits, six non-closed ones with their failing conditions.
inline std::vector<OrbitCase> closed_orbit_battery(std::size_t n, std::uint64_t seed)
{
    const SymplecticSpace space(n);
    auto rng = trial_rng(seed, 0);
    CartanPoint t{ExactVector(n)}, s{ExactVector(n)};
    for (std::size_t k = 0; k < n; ++k) {
        t.t[k] = static_cast<long>(k + 1);
        s.t[k] = static_cast<long>(2 * k + 3);
    }
    const SpElement ht = cartan_embed(t);
    const SpElement hs = cartan_embed(s);
    const SpElement zero = SpElement::zero(space);
    const PhaseVector i0 = PhaseVector::zero(space);
    const ExactMatrix g = random_symplectic(rng, n);
    const ExactMatrix g_inv = symplectic_inverse(g, space);
    const SpElement e = sp_basis(space)[n * n]; // B-unit at (0, 0): nilpotent, square zero

    using R = OrbitReason;
    std::vector<OrbitCase> cases;
    cases.push_back({"origin", ACVPoint(zero, zero, i0), true, {}});
    cases.push_back({"commuting Cartan pair", ACVPoint(ht, hs, i0), true, {}});
    cases.push_back({"Cartan and zero", ACVPoint(ht, zero, i0), true, {}});
    cases.push_back({"zero and Cartan", ACVPoint(zero, hs, i0), true, {}});
    cases.push_back({"equal Cartan elements", ACVPoint(ht, ht, i0), true, {}});
    cases.push_back({"conjugated Cartan pair", ACVPoint(conjugate(g, ht, g_inv), conjugate(g, hs, g_inv), i0), true, {}});
    cases.push_back({"nilpotent x", ACVPoint(e, zero, i0), false, {R::XNotSemisimple}});
    cases.push_back({"nilpotent y", ACVPoint(zero, e, i0), false, {R::YNotSemisimple}});
    cases.push_back({"nilpotent pair", ACVPoint(e, Rational(2) * e, i0), false, {R::XNotSemisimple, R::YNotSemisimple}});
    cases.push_back({"conjugated nilpotent x", ACVPoint(conjugate(g, e, g_inv), zero, i0), false, {R::XNotSemisimple}});
    cases.push_back({"free-orbit witness", witness_point(n, t), false, {R::IsNonzero, R::NotCommuting, R::YNotSemisimple}});

    // Regular fiber makes y semisimple while i != 0 forces [x, y] != 0.
    const std::vector<Rational> ones(n, Rational(1));
    cases.push_back({"sampled point with regular fiber",
                     sample_regular_point(n, t, SignVector::all_p(n), ones, s), false,
                     {R::IsNonzero, R::NotCommuting}});
    return cases;
}

inline void closed_orbits(const SuiteConfig& cfg, SuiteReport& rep)
{
    for (const auto& c : closed_orbit_battery(cfg.n, cfg.seed)) {
        const OrbitClassification got = classify_closed_orbit(c.point);
        json reasons = json::array();
        for (auto r : got.reasons) reasons.push_back(to_string(r));
        rep.add(c.name + (c.closed ? ": Closed" : ": NotClosed"), anchor::closed_orbits,
                got.closed == c.closed && got.reasons == c.reasons,
                json{{"point", io::to_json(c.point)}, {"classified_closed", got.closed}, {"reasons", reasons}});
    }
}

// Random commuting pair (h_t, h_s) with arbitrary (not necessarily regular) t, s.
inline std::pair<CartanPoint, CartanPoint> random_cartan_pair(std::mt19937_64& rng, std::size_t n)
{
    return {random_cartan(rng, n, default_ranges.cartan), random_cartan(rng, n, default_ranges.cartan)};
}

inline void quotient(const SuiteConfig& cfg, SuiteReport& rep)
{
    const std::size_t n = cfg.n;
    const SymplecticSpace space(n);
    const auto group = weyl_group(n);
    auto spectrum_json = [](const SpectralPairs& s) { return json{io::to_json(s.first), io::to_json(s.second)}; };

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        const auto [t, s] = random_cartan_pair(rng, n);
        const std::pair<SpElement, SpElement> p1{cartan_embed(t), cartan_embed(s)};

        const ExactMatrix g = random_symplectic(rng, n);
        const ExactMatrix g_inv = symplectic_inverse(g, space);
        const std::pair<SpElement, SpElement> conj{conjugate(g, p1.first, g_inv), conjugate(g, p1.second, g_inv)};
        const auto rc = quotient_consistency_check(p1, conj, cfg.degree_bound);
        rep.add("pair " + std::to_string(trial) + " vs symplectic conjugate", anchor::quotient,
                rc.spectra_equal && rc.invariants_equal,
                json{{"spectrum", spectrum_json(rc.spectrum1)}, {"words_checked", rc.words_checked}});

        const SignedPermutation& w = group[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(group.size()) - 1))];
        const CartanPair moved = weyl_act(w, CartanPair{t, s});
        const std::pair<SpElement, SpElement> p3{cartan_embed(moved.first), cartan_embed(moved.second)};
        const auto rw = quotient_consistency_check(p1, p3, cfg.degree_bound);
        rep.add("pair " + std::to_string(trial) + " vs W-translate", anchor::quotient, rw.spectra_equal && rw.invariants_equal,
                json{{"w", io::to_json(w)}, {"spectrum", spectrum_json(rw.spectrum2)}});

        // A pair in a different W-orbit.
        CartanPair other;
        do {
            other = random_cartan_pair(rng, n);
        } while (weyl_canonical_form(other) == weyl_canonical_form(CartanPair{t, s}));
        const std::pair<SpElement, SpElement> p4{cartan_embed(other.first), cartan_embed(other.second)};
        const auto rn = quotient_consistency_check(p1, p4, cfg.degree_bound);
        rep.add("pair " + std::to_string(trial) + " vs non-equivalent pair", anchor::quotient,
                !rn.spectra_equal && !rn.invariants_equal,
                json{{"spectrum", spectrum_json(rn.spectrum2)},
                     {"separating_word", rn.separating_word ? rn.separating_word->letters() : ""}});

        const RestrictionReport rr = restriction_check(conj.first);
        rep.add("pair " + std::to_string(trial) + " char poly of conjugated x is prod(l^2 - t_k^2)", anchor::restriction,
                rr.pass, json{{"char_poly", to_string(rr.char_poly)}});
    }
}

inline void levi(const SuiteConfig& cfg, SuiteReport& rep)
{
    for (std::size_t m = 1; m <= cfg.n; ++m) {
        for (const auto& lt : levi_types(m)) {
            const auto b = levi_bookkeeping(lt);
            json parts = lt.parts;
            std::ostringstream name;
            name << "n=" << m << " n0=" << lt.n0 << " parts=" << parts.dump();
            rep.add(name.str(), anchor::levi, levi_dimension_identity(lt) && levi_nilpotent_bound_holds(lt),
                    json{{"dim_G_mod_L", b.group_dim - b.levi_dim},
                         {"center", b.center_dim},
                         {"gg_dims", b.gg_dims},
                         {"x_n0_dim", b.x_n0_dim},
                         {"total", b.total},
                         {"target", b.target},
                         {"nilpotent_bound", b.nilpotent_bound}});
        }
    }
}

inline void wallach(const SuiteConfig& cfg, SuiteReport& rep)
{
    const WallachReport wr = wallach_generation_check(cfg.n, cfg.degree_bound);
    rep.add("Poisson closure reaches the invariant space (bounded-degree evidence, not a proof)", anchor::wallach,
            wr.pass(),
            json{{"config", {{"n", wr.n}, {"degree", wr.max_degree}}},
                 {"reached_dim", wr.reached_dim},
                 {"full_dim", wr.full_dim},
                 {"reached_by_degree", wr.reached_by_degree},
                 {"full_by_degree", wr.full_by_degree},
                 {"passes", wr.passes},
                 {"pass", wr.pass()}});
    if (cfg.n == 1) {
        // Invariants of {+-1} on C[h, k]: monomials of even total degree.
        std::vector<std::size_t> expected;
        for (unsigned d = 0; d <= cfg.degree_bound; ++d) expected.push_back(d % 2 == 0 ? d + 1 : 0);
        rep.add("n=1 per-degree dimensions equal the even-monomial count", anchor::wallach,
                wr.full_by_degree == expected, json{{"expected", expected}, {"computed", wr.full_by_degree}});
    }
}

inline void mn(const SuiteConfig& cfg, SuiteReport& rep)
{
    const std::size_t n = cfg.n;
    const long nl = static_cast<long>(n);
    rep.add("component dimension n^2+2n-2 = " + std::to_string(gg_component_dim(nl)), anchor::gg,
            gg_component_dim(nl) == nl * nl + 2 * nl - 2 && gg_component_count(nl) == nl + 1,
            json{{"component_dim", gg_component_dim(nl)}, {"component_count", gg_component_count(nl)}});

    {
        ExactVector j(n);
        for (std::size_t a = 0; a < n; ++a) j[a] = static_cast<long>(a + 1);
        const GGPoint pt(ExactMatrix(n, n), ExactMatrix(n, n), ExactVector(n), j);
        rep.add("x = y = 0, i = 0, j arbitrary is a member", anchor::gg, gg_is_member(pt));
    }
    {
        ExactVector dx(n), dy(n);
        for (std::size_t a = 0; a + 1 < n; ++a) {
            dx[a] = static_cast<long>(a + 1);
            dy[a] = static_cast<long>(2 * a + 1);
        }
        if (n >= 1) {
            Rational sx = 0, sy = 0;
            for (std::size_t a = 0; a + 1 < n; ++a) sx += dx[a], sy += dy[a];
            dx[n - 1] = -sx;
            dy[n - 1] = -sy;
        }
        const GGPoint pt(ExactMatrix::diagonal(dx), ExactMatrix::diagonal(dy), ExactVector(n), ExactVector(n));
        rep.add("commuting traceless diagonal pair with i = j = 0 is a member", anchor::gg, gg_is_member(pt));
    }

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        // x diagonal with distinct entries; i_a j_a = 0 makes [x, y] = -ij solvable off the diagonal.
        ExactVector d(n), i(n), j(n);
        while (true) {
            Rational sum = 0;
            for (std::size_t a = 0; a + 1 < n; ++a) {
                d[a] = uniform(rng, -6, 6);
                sum += d[a];
            }
            d[n - 1] = -sum;
            std::set<Rational> distinct(d.begin(), d.end());
            if (distinct.size() == n) break;
        }
        for (std::size_t a = 0; a < n; ++a) {
            if (uniform(rng, 0, 1) == 0) {
                i[a] = uniform(rng, -4, 4);
            } else {
                j[a] = uniform(rng, -4, 4);
            }
        }
        ExactMatrix y(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b) y(a, b) = -i[a] * j[b] / (d[a] - d[b]);
        const GGPoint member(ExactMatrix::diagonal(d), y, i, j);
        const bool ok_member = gg_is_member(member);

        GGPoint perturbed = member;
        // Diagonal entry (0,0) of the residual becomes i_0 j_0 != 0.
        if (perturbed.i[0] == 0) perturbed.i[0] = 1;
        if (perturbed.j[0] == 0) perturbed.j[0] = 1;
        const bool ok_nonmember = !gg_is_member(perturbed);
        rep.add("trial " + std::to_string(trial) + ": constructed member passes, perturbation fails", anchor::gg,
                ok_member && ok_nonmember,
                json{{"x", io::to_json(member.x)}, {"y", io::to_json(member.y)}, {"i", io::to_json(member.i)},
                     {"j", io::to_json(member.j)}});
    }

    if (n >= 2) {
        ExactMatrix e(n, n), f(n, n);
        e(0, 1) = 1;
        f(1, 0) = 1;
        rep.add("rank-2 commutator [e, f] cannot be cancelled by any ij", anchor::gg, gg_commutator_uncancellable(e, f),
                json{{"commutator_rank", rank(e * f - f * e)}});
    }
}

} // namespace suites

inline const std::map<std::string, std::function<void(const SuiteConfig&, SuiteReport&)>>& suite_table()
{
    static const std::map<std::string, std::function<void(const SuiteConfig&, SuiteReport&)>> table{
        {"smoothness", suites::smoothness}, {"yn", suites::yn},         {"triangularize", suites::triangularize},
        {"closed-orbits", suites::closed_orbits}, {"quotient", suites::quotient}, {"levi", suites::levi},
        {"wallach", suites::wallach},       {"mn", suites::mn},
    };
    return table;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg)
{
    const auto& table = suite_table();
    const auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    cfg.validate();

    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = name;
    rep.config = config_json(cfg);
    it->second(cfg, rep);
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Fixture verification

namespace detail {

inline void verify_point(const json& j, SuiteReport& rep)
{
    const SymplecticSpace space(io::count_field(j, "n"));
    const ExactMatrix x = io::matrix_from_json(io::field(j, "x"));
    const ExactMatrix y = io::matrix_from_json(io::field(j, "y"));
    const PhaseVector i = io::phase_from_json(io::field(j, "i"), space);
    const bool x_ok = satisfies_sp_relation(x, space);
    const bool y_ok = satisfies_sp_relation(y, space);
    rep.add("x lies in sp_2n", anchor::moment_equation, x_ok);
    rep.add("y lies in sp_2n", anchor::moment_equation, y_ok);
    if (!x_ok || !y_ok) return;

    const ACVPoint pt(SpElement(space, x), SpElement(space, y), i);
    const SpElement residual = moment_residual(pt);
    rep.add("moment map residual [x,y]+i^2 vanishes", anchor::moment_equation, residual.is_zero(),
            json{{"residual", io::to_json(residual)}});
}

inline void verify_dimension_certificate(const json& j, SuiteReport& rep)
{
    const ACVPoint pt = io::point_from_json(io::field(j, "point"));
    if (!is_member(pt)) {
        rep.add("stored point satisfies [x,y]+i^2=0", anchor::moment_equation, false);
        return;
    }
    const json fresh = io::to_json(dimension_certificate(pt));
    for (const char* key : {"point_digest", "jacobian_rank", "ambient_dim", "variety_dim", "stabilizer_dim", "verdict"}) {
        const bool match = j.contains(key) && j.at(key) == fresh.at(key);
        rep.add(std::string("recomputed ") + key + " matches", anchor::dimension, match,
                json{{"stored", j.value(key, json())}, {"recomputed", fresh.at(key)}});
    }
}

inline void verify_certificate(const json& j, SuiteReport& rep)
{
    const SymplecticSpace space(io::count_field(j, "n"));
    const ExactMatrix g = io::matrix_from_json(io::field(j, "g"));
    const ExactMatrix xc = io::matrix_from_json(io::field(j, "x_conj"));
    const ExactMatrix yc = io::matrix_from_json(io::field(j, "y_conj"));
    std::vector<ExactVector> flag;
    for (const auto& v : io::field(j, "flag")) flag.push_back(io::vector_from_json(v));
    const auto dim = space.dim();
    for (const auto* m : {&g, &xc, &yc}) {
        if (m->rows() != dim || m->cols() != dim) throw Error(ErrorCode::SchemaError, "certificate matrices must be 2n x 2n");
    }

    std::optional<ExactMatrix> x, y;
    if (j.contains("x")) x = io::matrix_from_json(j.at("x"));
    if (j.contains("y")) y = io::matrix_from_json(j.at("y"));
    const CertificateCheck check =
        verify_borel_certificate(space, g, xc, yc, flag, x ? &*x : nullptr, y ? &*y : nullptr);
    rep.add("Borel certificate re-verified from scratch", anchor::borel, check.ok,
            json{{"violations", check.violations}});
}

} // namespace detail

inline SuiteReport verify_json(const json& j)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = "verify";
    if (!j.is_object()) throw Error(ErrorCode::SchemaError, "fixture must be a JSON object");
    if (j.contains("g")) {
        rep.config = json{{"kind", "borel_certificate"}};
        detail::verify_certificate(j, rep);
    } else if (j.contains("point") && j.contains("jacobian_rank")) {
        rep.config = json{{"kind", "dimension_certificate"}};
        detail::verify_dimension_certificate(j, rep);
    } else if (j.contains("x") && j.contains("y") && j.contains("i")) {
        rep.config = json{{"kind", "acv_point"}};
        detail::verify_point(j, rep);
    } else {
        throw Error(ErrorCode::SchemaError, "unrecognized fixture (expected a point or a certificate)");
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline SuiteReport verify_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        return verify_json(j);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, e.what());
    }
}

// A seeded sample point together with its dimension certificate.
inline json sample_fixture(std::size_t n, std::uint64_t seed)
{
    if (n < 1) throw Error(ErrorCode::InvalidConfig, "n must be at least 1");
    auto rng = trial_rng(seed, 0);
    const ACVPoint pt = sample_point(n, random_sample_params(rng, n));
    return io::to_json(pt);
}

} // namespace acv::lab
