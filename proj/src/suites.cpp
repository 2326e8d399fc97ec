#include "w22/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <thread>
#include <utility>

#include "w22/detid.hpp"
#include "w22/linalg.hpp"
#include "w22/tensor.hpp"
#include "w22/uea.hpp"

namespace w22 {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw std::domain_error("Rng::range: empty interval");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// ------------------------------------------------------------ config (JSON)

namespace {

std::string idx2(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02zu", i);
    return buf;
}

Scalar scalar_from_json(const Json& v, const std::string& where) {
    if (v.is_string()) {
        auto s = Scalar::parse(v.get<std::string>());
        if (!s)
            throw ConfigError(where + ": malformed scalar \"" + v.get<std::string>() +
                              "\" (want \"p\" or \"p/q\")");
        return *s;
    }
    if (v.is_number_integer())
        return Scalar(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_float())
        throw ConfigError(where + ": floats are not accepted; write an exact fraction string");
    throw ConfigError(where + ": expected a scalar string");
}

UniPoly poly_from_json(const Json& v, const std::string& where) {
    if (!v.is_array())
        throw ConfigError(where + ": expected an array of coefficients, constant term first");
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < v.size(); ++i)
        coeffs.push_back(scalar_from_json(v[i], where + "[" + std::to_string(i) + "]"));
    return UniPoly::from_coeffs(coeffs);
}

OmegaParams omega_from_json(const Json& v, const std::string& where, bool require_alpha) {
    if (!v.is_object())
        throw ConfigError(where + ": expected an object {lambda, alpha, h}");
    for (const auto& [key, val] : v.items())
        if (key != "lambda" && key != "alpha" && key != "h")
            throw ConfigError(where + ": unknown key \"" + key + "\"");
    if (!v.contains("lambda") || !v.contains("alpha") || !v.contains("h"))
        throw ConfigError(where + ": need lambda, alpha and h");
    Scalar lambda = scalar_from_json(v["lambda"], where + ".lambda");
    Scalar alpha = scalar_from_json(v["alpha"], where + ".alpha");
    UniPoly h = poly_from_json(v["h"], where + ".h");
    if (lambda.is_zero())
        throw ConfigError(where + ".lambda: must be nonzero");
    if (require_alpha && alpha.is_zero())
        throw ConfigError(where + ".alpha: must be nonzero here");
    return OmegaParams(lambda, alpha, h);
}

HighestWeight hw_from_json(const Json& v, const std::string& where) {
    if (!v.is_object())
        throw ConfigError(where + ": expected an object {c, h_l, h_w}");
    for (const auto& [key, val] : v.items())
        if (key != "c" && key != "h_l" && key != "h_w")
            throw ConfigError(where + ": unknown key \"" + key + "\"");
    if (!v.contains("c") || !v.contains("h_l") || !v.contains("h_w"))
        throw ConfigError(where + ": need c, h_l and h_w");
    return HighestWeight{scalar_from_json(v["c"], where + ".c"),
                         scalar_from_json(v["h_l"], where + ".h_l"),
                         scalar_from_json(v["h_w"], where + ".h_w")};
}

TensorSpec tensor_from_json(const Json& v, const std::string& where, std::size_t index) {
    if (!v.is_object())
        throw ConfigError(where + ": expected an object {name?, factors, v}");
    for (const auto& [key, val] : v.items())
        if (key != "name" && key != "factors" && key != "v")
            throw ConfigError(where + ": unknown key \"" + key + "\"");
    TensorSpec spec;
    spec.name = v.contains("name") ? v["name"].get<std::string>() : "tensor-" + idx2(index);
    if (!v.contains("factors") || !v["factors"].is_array() || v["factors"].empty())
        throw ConfigError(where + ".factors: need a nonempty array");
    for (std::size_t i = 0; i < v["factors"].size(); ++i)
        spec.factors.push_back(omega_from_json(
            v["factors"][i], where + ".factors[" + std::to_string(i) + "]", true));
    if (!v.contains("v"))
        throw ConfigError(where + ".v: need \"trivial\" or a highest-weight object");
    if (v["v"].is_string()) {
        if (v["v"].get<std::string>() != "trivial")
            throw ConfigError(where + ".v: the only string form is \"trivial\"");
    } else {
        spec.verma = hw_from_json(v["v"], where + ".v");
    }
    return spec;
}

std::int64_t int_from_json(const Json& v, const std::string& where, std::int64_t lo) {
    if (!v.is_number_integer())
        throw ConfigError(where + ": expected an integer");
    std::int64_t x = v.get<std::int64_t>();
    if (x < lo)
        throw ConfigError(where + ": must be >= " + std::to_string(lo));
    return x;
}

Json omega_to_json(const OmegaParams& p) {
    return Json{{"lambda", p.lambda.str()}, {"alpha", p.alpha.str()}, {"h", p.h.str()}};
}

Json hw_to_json(const HighestWeight& hw) {
    return Json{{"c", hw.c.str()}, {"h_l", hw.h_l.str()}, {"h_w", hw.h_w.str()}};
}

} // namespace

RestrictedModulePtr TensorSpec::make_v() const {
    return verma ? RestrictedModule::verma(*verma) : RestrictedModule::trivial();
}

Json TensorSpec::to_json() const {
    Json factors_json = Json::array();
    for (const auto& f : factors)
        factors_json.push_back(omega_to_json(f));
    return Json{{"name", name},
                {"factors", std::move(factors_json)},
                {"v", verma ? hw_to_json(*verma) : Json("trivial")}};
}

RunConfig RunConfig::defaults() {
    RunConfig cfg;
    auto poly = [](std::initializer_list<long> coeffs) {
        std::vector<Scalar> cs;
        for (long c : coeffs)
            cs.emplace_back(c);
        return UniPoly::from_coeffs(cs);
    };
    Scalar half = Scalar::fraction(1, 2);

    cfg.omega_params = {
        OmegaParams(Scalar(2), Scalar(1), poly({0, 0, 1})),              // h = t^2
        OmegaParams(half, -half, poly({0, -2, 0, 1})),                   // h = t^3 - 2t
        OmegaParams(Scalar(-3), Scalar::fraction(2, 3), poly({1, 1})),   // h = 1 + t
    };
    cfg.omega_alpha_zero = {
        OmegaParams(Scalar(2), Scalar(0), poly({0, 0, 1})),
        OmegaParams(Scalar(3), Scalar(0), poly({1, 0, 1})),
    };

    TensorSpec m1t{"m1-trivial", {cfg.omega_params[0]}, std::nullopt};
    TensorSpec m1v{"m1-verma",
                   {cfg.omega_params[1]},
                   HighestWeight{half, Scalar(2), Scalar::fraction(-1, 3)}};
    TensorSpec m2t{"m2-trivial",
                   {cfg.omega_params[0],
                    OmegaParams(-half, Scalar::fraction(3, 4), poly({1, 1}))},
                   std::nullopt};
    TensorSpec m2v{"m2-verma",
                   {OmegaParams(Scalar(3), Scalar(-1), poly({0, 1, 1})),
                    OmegaParams(Scalar::fraction(1, 3), Scalar(2), poly({0, 1}))},
                   HighestWeight{Scalar(-2), Scalar::fraction(1, 4), Scalar(5)}};
    TensorSpec m3t{"m3-trivial",
                   {cfg.omega_params[0],
                    OmegaParams(Scalar(3), half, poly({0, 1})),
                    OmegaParams(Scalar(-1), Scalar(-2), poly({1, 0, 1}))},
                   std::nullopt};
    cfg.tensor_modules = {m1t, m1v, m2t, m2v, m3t};

    const OmegaParams& a = cfg.omega_params[0]; // (2, 1, t^2)
    OmegaParams a_alpha(Scalar(2), half, poly({0, 0, 1}));
    OmegaParams a_h1(Scalar(2), Scalar(1), poly({1, 0, 1}));       // t^2 + 1
    OmegaParams a_hcube(Scalar(2), Scalar(1), poly({0, 0, 0, 1})); // t^3
    OmegaParams a_l3(Scalar(3), Scalar(1), poly({0, 0, 1}));
    OmegaParams z_t2 = cfg.omega_alpha_zero[0];                      // (2, 0, t^2)
    OmegaParams z_t2p1(Scalar(2), Scalar(0), poly({1, 0, 1}));       // t^2 + 1
    OmegaParams z_t2p2(Scalar(2), Scalar(0), poly({2, 0, 1}));       // t^2 + 2
    OmegaParams z_tpt2(Scalar(2), Scalar(0), poly({0, 1, 1}));       // t^2 + t
    OmegaParams z_l3(Scalar(3), Scalar(0), poly({1, 0, 1}));
    cfg.hom_cases = {
        {a, a},                                                    // equal, alpha != 0 -> 1
        {cfg.omega_params[1], cfg.omega_params[1]},                // equal, alpha != 0 -> 1
        {a, a_l3},                                                 // lambda differs -> 0
        {a, a_alpha},                                              // alpha differs -> 0
        {a, a_h1},                                                 // h differs by 1 -> 0
        {a, a_hcube},                                              // h differs, nonconstant -> 0
        {z_t2, z_t2},                                              // alpha = 0, diff 0 -> 1
        {z_t2, z_t2p1},                                            // alpha = 0, diff 1 -> 1
        {z_t2, z_t2p2},                                            // alpha = 0, diff 2 -> 1
        {z_t2p1, z_t2},                                            // alpha = 0, diff -1 -> 0
        {z_t2, z_tpt2},                                            // alpha = 0, diff t -> 0
        {z_t2, a},                                                 // alpha 0 vs 1 -> 0
        {z_t2, z_l3},                                              // lambda differs -> 0
        {cfg.omega_alpha_zero[1], z_t2},                           // alpha = 0, diff -1 -> 0
    };

    cfg.degenerate_pair = {a, OmegaParams(Scalar(2), -half, poly({1, 1}))};
    return cfg;
}

RunConfig RunConfig::from_json(const Json& doc) {
    if (!doc.is_object())
        throw ConfigError("config: top level must be an object");
    RunConfig cfg = defaults();
    for (const auto& [key, value] : doc.items()) {
        if (key == "seed") {
            if (!value.is_number_unsigned() && !value.is_number_integer())
                throw ConfigError("config.seed: expected an unsigned integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "index_window") {
            cfg.index_window = int_from_json(value, "config.index_window", 1);
        } else if (key == "pair_window") {
            cfg.pair_window = int_from_json(value, "config.pair_window", 1);
        } else if (key == "deg_bound") {
            cfg.deg_bound = int_from_json(value, "config.deg_bound", 1);
        } else if (key == "exponent_bound") {
            cfg.exponent_bound = int_from_json(value, "config.exponent_bound", 1);
        } else if (key == "r_bound") {
            cfg.r_bound = int_from_json(value, "config.r_bound", 1);
        } else if (key == "n_window") {
            cfg.n_window = int_from_json(value, "config.n_window", 1);
        } else if (key == "omega_params") {
            if (!value.is_array() || value.empty())
                throw ConfigError("config.omega_params: need a nonempty array");
            cfg.omega_params.clear();
            for (std::size_t i = 0; i < value.size(); ++i)
                cfg.omega_params.push_back(omega_from_json(
                    value[i], "config.omega_params[" + std::to_string(i) + "]", false));
        } else if (key == "omega_alpha_zero") {
            if (!value.is_array())
                throw ConfigError("config.omega_alpha_zero: need an array");
            cfg.omega_alpha_zero.clear();
            for (std::size_t i = 0; i < value.size(); ++i) {
                std::string where = "config.omega_alpha_zero[" + std::to_string(i) + "]";
                OmegaParams p = omega_from_json(value[i], where, false);
                if (!p.alpha.is_zero())
                    throw ConfigError(where + ".alpha: this list is for alpha = 0");
                cfg.omega_alpha_zero.push_back(std::move(p));
            }
        } else if (key == "tensor_modules") {
            if (!value.is_array() || value.empty())
                throw ConfigError("config.tensor_modules: need a nonempty array");
            cfg.tensor_modules.clear();
            for (std::size_t i = 0; i < value.size(); ++i)
                cfg.tensor_modules.push_back(tensor_from_json(
                    value[i], "config.tensor_modules[" + std::to_string(i) + "]", i));
            std::set<std::string> names;
            for (const auto& s : cfg.tensor_modules)
                if (!names.insert(s.name).second)
                    throw ConfigError("config.tensor_modules: duplicate name \"" + s.name + "\"");
        } else if (key == "hom_cases") {
            if (!value.is_array() || value.empty())
                throw ConfigError("config.hom_cases: need a nonempty array");
            cfg.hom_cases.clear();
            for (std::size_t i = 0; i < value.size(); ++i) {
                std::string where = "config.hom_cases[" + std::to_string(i) + "]";
                if (!value[i].is_object() || !value[i].contains("source") ||
                    !value[i].contains("target"))
                    throw ConfigError(where + ": expected {source, target}");
                cfg.hom_cases.push_back(
                    HomCase{omega_from_json(value[i]["source"], where + ".source", false),
                            omega_from_json(value[i]["target"], where + ".target", false)});
            }
        } else if (key == "degenerate_pair") {
            if (!value.is_array() || value.size() != 2)
                throw ConfigError("config.degenerate_pair: need exactly two factor objects");
            cfg.degenerate_pair.clear();
            for (std::size_t i = 0; i < value.size(); ++i)
                cfg.degenerate_pair.push_back(omega_from_json(
                    value[i], "config.degenerate_pair[" + std::to_string(i) + "]", true));
            if (!(cfg.degenerate_pair[0].lambda == cfg.degenerate_pair[1].lambda))
                throw ConfigError("config.degenerate_pair: the two lambdas must be equal");
        } else {
            throw ConfigError("config: unknown key \"" + key + "\"");
        }
    }
    return cfg;
}

// --------------------------------------------------------------- random data

namespace {

Scalar rnd_scalar(Rng& rng, bool nonzero) {
    while (true) {
        std::int64_t num = rng.range(-6, 6);
        if (nonzero && num == 0)
            continue;
        return Scalar::fraction(num, rng.range(1, 4));
    }
}

UniPoly rnd_poly(Rng& rng, std::int64_t max_deg) {
    std::int64_t d = rng.range(0, max_deg);
    UniPoly p = UniPoly::monomial(rnd_scalar(rng, true), d);
    for (std::int64_t e = 0; e < d; ++e)
        if (rng.range(0, 1) == 1)
            p = p + UniPoly::monomial(rnd_scalar(rng, true), e);
    return p;
}

OmegaParams rnd_omega(Rng& rng) {
    return OmegaParams(rnd_scalar(rng, true), rnd_scalar(rng, true), rnd_poly(rng, 3));
}

HighestWeight rnd_hw(Rng& rng) {
    return HighestWeight{rnd_scalar(rng, false), rnd_scalar(rng, false), rnd_scalar(rng, false)};
}

std::vector<OmegaParams> rnd_distinct_factors(Rng& rng, std::size_t m) {
    std::vector<OmegaParams> out;
    while (out.size() < m) {
        OmegaParams p = rnd_omega(rng);
        bool dup = false;
        for (const auto& q : out)
            if (q.lambda == p.lambda)
                dup = true;
        if (!dup)
            out.push_back(std::move(p));
    }
    return out;
}

/// All canonical PBW labels of depth <= 2.
const std::vector<PBWMonomial>& depth2_labels() {
    static const std::vector<PBWMonomial> labels = {
        {},
        {Generator::W(-1)},
        {Generator::L(-1)},
        {Generator::W(-2)},
        {Generator::L(-2)},
        {Generator::W(-1), Generator::W(-1)},
        {Generator::W(-1), Generator::L(-1)},
        {Generator::L(-1), Generator::L(-1)},
    };
    return labels;
}

RestrictedVector rnd_restricted(Rng& rng, const RestrictedModulePtr& v, std::int64_t max_depth) {
    if (v->kind() == RestrictedModule::Kind::Trivial)
        return v->generator() * rnd_scalar(rng, true);
    std::vector<PBWMonomial> pool;
    for (const auto& label : depth2_labels())
        if (pbw_depth(label) <= max_depth)
            pool.push_back(label);
    return v->basis_vector(pool[static_cast<std::size_t>(
               rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))]) *
           rnd_scalar(rng, true);
}

enum class SProfile { Any, None, Require };

TensorVector rnd_tensor_element(Rng& rng, const TensorModule& mod, std::int64_t expo,
                                std::int64_t depth, SProfile s_profile) {
    std::size_t m = mod.slots();
    while (true) {
        TensorVector out = mod.zero();
        std::int64_t nterms = rng.range(1, 3);
        for (std::int64_t term = 0; term < nterms; ++term) {
            Exponents e(2 * m, 0);
            for (std::size_t k = 0; k < m; ++k) {
                e[k] = s_profile == SProfile::None ? 0 : rng.range(0, expo);
                e[m + k] = rng.range(0, expo);
            }
            if (s_profile == SProfile::Require && term == 0 && e[0] == 0)
                e[0] = rng.range(1, expo);
            out = out + mod.monomial(e, rnd_restricted(rng, mod.v_module(), depth));
        }
        if (!out.is_zero())
            return out;
    }
}

std::vector<Generator> graded_generators(std::int64_t window, bool include_central) {
    std::vector<Generator> gens;
    if (include_central)
        gens.push_back(Generator::C());
    for (std::int64_t n = -window; n <= window; ++n) {
        gens.push_back(Generator::W(n));
        gens.push_back(Generator::L(n));
    }
    return gens;
}

// ------------------------------------------------------------- check bodies

template <class M>
CheckOutcome check_module_compat(const M& mod, const std::vector<typename M::Vector>& vectors,
                                 std::int64_t window) {
    auto gens = graded_generators(window, true);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            UeaElement lhs = UeaElement::from_word({x, y}) - UeaElement::from_word({y, x});
            UeaElement rhs = UeaElement::from_lie(bracket(x, y));
            for (const auto& v : vectors)
                if (apply(lhs, v, mod) != apply(rhs, v, mod))
                    return CheckOutcome::fail(
                        Json{{"x", x.str()}, {"y", y.str()}, {"vector", v.str()}});
        }
    return CheckOutcome::pass();
}

/// Spanning probe over the rank-one module: 1 lies in
/// span{L_n s^p : n = 1..p+2} exactly when alpha != 0.
bool rank_one_generates(const Omega2Module& mod, std::int64_t p, std::int64_t extra) {
    LinearSpan<Exponents> span;
    MultiPoly sp = mod.monomial(p);
    for (std::int64_t n = 1; n <= p + 2 + extra; ++n)
        span.insert(mod.act(Generator::L(n), sp).terms());
    return span.contains(mod.one().terms());
}

CheckOutcome check_lie_antisymmetry(std::int64_t window) {
    auto gens = graded_generators(window, true);
    for (const auto& x : gens)
        for (const auto& y : gens)
            if (!(bracket(x, y) + bracket(y, x)).is_zero())
                return CheckOutcome::fail(Json{{"x", x.str()}, {"y", y.str()}});
    return CheckOutcome::pass();
}

CheckOutcome check_lie_jacobi(std::int64_t window) {
    auto gens = graded_generators(window, true);
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens) {
                LieElement jac = bracket(LieElement(x), bracket(y, z)) +
                                 bracket(LieElement(y), bracket(z, x)) +
                                 bracket(LieElement(z), bracket(x, y));
                if (!jac.is_zero())
                    return CheckOutcome::fail(
                        Json{{"x", x.str()}, {"y", y.str()}, {"z", z.str()}});
            }
    return CheckOutcome::pass();
}

CheckOutcome check_lie_grading(std::int64_t window) {
    auto gens = graded_generators(window, true);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            LieElement b = bracket(x, y);
            for (const auto& [g, c] : b.terms()) {
                bool ok = g.is_central() ? (x.grade() + y.grade() == 0)
                                         : (g.grade() == x.grade() + y.grade());
                if (!ok)
                    return CheckOutcome::fail(
                        Json{{"x", x.str()}, {"y", y.str()}, {"term", g.str()}});
            }
        }
    return CheckOutcome::pass();
}

CheckOutcome check_lie_central(std::int64_t window) {
    auto gens = graded_generators(window, true);
    for (const auto& x : gens) {
        if (!bracket(Generator::C(), x).is_zero() || !bracket(x, Generator::C()).is_zero())
            return CheckOutcome::fail(Json{{"x", x.str()}});
        for (const auto& y : gens)
            if (x.tag == Generator::Tag::W && y.tag == Generator::Tag::W &&
                !bracket(x, y).is_zero())
                return CheckOutcome::fail(Json{{"x", x.str()}, {"y", y.str()}});
    }
    return CheckOutcome::pass();
}

// ------------------------------------------------------------ suite builders

void add_axioms(std::vector<CheckJob>& jobs, const RunConfig& cfg, Rng& build) {
    const char* lie_ref = "lie-bracket-axioms";
    std::int64_t w = cfg.index_window;
    jobs.push_back({"axioms/lie/antisymmetry", lie_ref, Json{{"index_window", w}},
                    [w](Rng&) { return check_lie_antisymmetry(w); }});
    jobs.push_back({"axioms/lie/jacobi", lie_ref, Json{{"index_window", w}},
                    [w](Rng&) { return check_lie_jacobi(w); }});
    jobs.push_back({"axioms/lie/grading", lie_ref, Json{{"index_window", w}},
                    [w](Rng&) { return check_lie_grading(w); }});
    jobs.push_back({"axioms/lie/central", lie_ref, Json{{"index_window", w}},
                    [w](Rng&) { return check_lie_central(w); }});

    const char* mod_ref = "module-action-compatibility";
    std::int64_t pw = cfg.pair_window;
    std::int64_t expo = cfg.exponent_bound;

    for (std::size_t i = 0; i < 3; ++i) {
        Scalar lambda = rnd_scalar(build, true), alpha = rnd_scalar(build, false);
        jobs.push_back(
            {"axioms/module/omega2/" + idx2(i), mod_ref,
             Json{{"lambda", lambda.str()}, {"alpha", alpha.str()}, {"pair_window", pw}},
             [lambda, alpha, pw, expo](Rng&) {
                 Omega2Module mod(lambda, alpha);
                 std::vector<MultiPoly> vectors;
                 for (std::int64_t p = 0; p <= expo; ++p)
                     vectors.push_back(mod.monomial(p));
                 return check_module_compat(mod, vectors, pw);
             }});
    }

    for (std::size_t i = 0; i < 3; ++i) {
        OmegaParams p = rnd_omega(build);
        jobs.push_back({"axioms/module/omega3/" + idx2(i), mod_ref,
                        Json{{"lambda", p.lambda.str()},
                             {"alpha", p.alpha.str()},
                             {"h", p.h.str()},
                             {"pair_window", pw}},
                        [p, pw, expo](Rng&) {
                            Omega3Module mod(p);
                            std::vector<MultiPoly> vectors;
                            for (std::int64_t a = 0; a <= expo; ++a)
                                for (std::int64_t b = 0; b <= expo; ++b)
                                    vectors.push_back(mod.monomial(a, b));
                            return check_module_compat(mod, vectors, pw);
                        }});
    }

    for (std::size_t i = 0; i < 3; ++i) {
        HighestWeight hw = rnd_hw(build);
        jobs.push_back({"axioms/module/verma/" + idx2(i), mod_ref,
                        Json{{"c", hw.c.str()},
                             {"h_l", hw.h_l.str()},
                             {"h_w", hw.h_w.str()},
                             {"pair_window", pw},
                             {"basis_depth", 2}},
                        [hw, pw](Rng&) {
                            RestrictedModulePtr mod = RestrictedModule::verma(hw);
                            std::vector<RestrictedVector> vectors;
                            for (const auto& label : depth2_labels())
                                vectors.push_back(mod->basis_vector(label));
                            return check_module_compat(*mod, vectors, pw);
                        }});
    }

    jobs.push_back({"axioms/module/trivial", mod_ref, Json{{"pair_window", pw}},
                    [pw](Rng&) {
                        RestrictedModulePtr mod = RestrictedModule::trivial();
                        return check_module_compat(
                            *mod, std::vector<RestrictedVector>{mod->generator()}, pw);
                    }});

    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t m = i == 0 ? 1 : 2;
        TensorSpec spec;
        spec.name = "random";
        spec.factors = rnd_distinct_factors(build, m);
        if (i == 1)
            spec.verma = rnd_hw(build);
        jobs.push_back({"axioms/module/tensor/" + idx2(i), mod_ref,
                        Json{{"spec", spec.to_json()}, {"pair_window", pw}},
                        [spec, pw, expo](Rng& rng) {
                            TensorModule mod(spec.factors, spec.make_v());
                            std::vector<TensorVector> vectors;
                            for (int j = 0; j < 3; ++j)
                                vectors.push_back(
                                    rnd_tensor_element(rng, mod, expo, 1, SProfile::Any));
                            return check_module_compat(mod, vectors, pw);
                        }});
    }

    const char* pbw_ref = "pbw-straightening";
    jobs.push_back(
        {"axioms/uea/straighten-normal-form", pbw_ref, Json{{"words", 25}},
         [](Rng& rng) {
             for (int i = 0; i < 25; ++i) {
                 Word word;
                 std::int64_t len = rng.range(1, 3);
                 for (std::int64_t j = 0; j < len; ++j) {
                     std::int64_t kind = rng.range(0, 4);
                     if (kind == 0)
                         word.push_back(Generator::C());
                     else if (kind <= 2)
                         word.push_back(Generator::W(rng.range(-3, 3)));
                     else
                         word.push_back(Generator::L(rng.range(-3, 3)));
                 }
                 UeaElement su = straighten(UeaElement::from_word(word));
                 for (const auto& [sw, c] : su.terms())
                     if (!is_pbw_ordered(sw))
                         return CheckOutcome::fail(Json{{"word_index", i}});
             }
             return CheckOutcome::pass();
         }});
    jobs.push_back(
        {"axioms/uea/straighten-action", pbw_ref, Json{{"words", 20}},
         [](Rng& rng) {
             OmegaParams p(Scalar(2), Scalar(1), UniPoly::monomial(Scalar(1), 2));
             Omega3Module poly_mod(p);
             MultiPoly poly_vec = poly_mod.monomial(1, 1);
             RestrictedModulePtr verma =
                 RestrictedModule::verma({Scalar::fraction(1, 2), Scalar(2), Scalar(-1)});
             RestrictedVector verma_vec = verma->basis_vector({Generator::L(-1)});
             for (int i = 0; i < 20; ++i) {
                 Word word;
                 std::int64_t len = rng.range(2, 3);
                 for (std::int64_t j = 0; j < len; ++j)
                     word.push_back(rng.range(0, 1) == 0 ? Generator::W(rng.range(-2, 2))
                                                         : Generator::L(rng.range(-2, 2)));
                 UeaElement u = UeaElement::from_word(word);
                 UeaElement su = straighten(u);
                 if (apply(su, poly_vec, poly_mod) != apply(u, poly_vec, poly_mod) ||
                     apply(su, verma_vec, *verma) != apply(u, verma_vec, *verma))
                     return CheckOutcome::fail(Json{{"word_index", i}});
             }
             return CheckOutcome::pass();
         }});
}

void add_omega(std::vector<CheckJob>& jobs, const RunConfig& cfg, Rng& build) {
    const char* construct_ref = "polynomial-module-construction";
    const char* simple_ref = "polynomial-module-simplicity";

    std::vector<OmegaParams> division = cfg.omega_params;
    division.insert(division.end(), cfg.omega_alpha_zero.begin(), cfg.omega_alpha_zero.end());
    for (int i = 0; i < 3; ++i)
        division.push_back(rnd_omega(build));
    for (std::size_t i = 0; i < division.size(); ++i) {
        OmegaParams p = division[i];
        jobs.push_back({"omega/division-identity/" + idx2(i), construct_ref, omega_to_json(p),
                        [p](Rng&) {
                            UniPoly back = (UniPoly::variable() - UniPoly(p.alpha)) * p.g +
                                           UniPoly(p.h_alpha);
                            if (back != p.h)
                                return CheckOutcome::fail(Json{{"recomposed", back.str()}});
                            return CheckOutcome::pass();
                        }});
    }

    std::size_t idx = 0;
    for (const auto& p : cfg.omega_params) {
        if (p.alpha.is_zero())
            continue;
        OmegaParams cap = p;
        jobs.push_back({"omega/rank-one-generates/" + idx2(idx), simple_ref, omega_to_json(cap),
                        [cap](Rng&) {
                            Omega2Module mod(cap.lambda, cap.alpha);
                            for (std::int64_t deg = 1; deg <= 3; ++deg)
                                if (!rank_one_generates(mod, deg, 0))
                                    return CheckOutcome::fail(Json{{"start_power", deg}});
                            return CheckOutcome::pass();
                        }});
        jobs.push_back(
            {"omega/rank-two-generates/" + idx2(idx), simple_ref, omega_to_json(cap),
             [cap](Rng&) {
                 TensorModule mod({cap}, RestrictedModule::trivial());
                 RestrictedVector v0 = mod.v_module()->generator();
                 TensorVector vac = mod.vacuum(v0);
                 for (const Exponents& target : {Exponents{1, 0}, Exponents{0, 1},
                                                 Exponents{0, 2}, Exponents{1, 1}}) {
                     ReachReport up = submodule_reach(vac, mod.monomial(target, v0), 4);
                     if (!up.reached)
                         return CheckOutcome::fail(Json{{"direction", "up"},
                                                        {"target", Json{target[0], target[1]}},
                                                        {"rounds", up.rounds_used},
                                                        {"dimension", up.dimension}});
                 }
                 ReachReport down = submodule_reach(mod.monomial({0, 2}, v0), vac, 5);
                 if (!down.reached)
                     return CheckOutcome::fail(Json{{"direction", "down"},
                                                    {"rounds", down.rounds_used},
                                                    {"dimension", down.dimension},
                                                    {"saturated", down.saturated}});
                 return CheckOutcome::pass();
             }});
        ++idx;
    }

    idx = 0;
    for (const auto& p : cfg.omega_alpha_zero) {
        OmegaParams cap = p;
        std::int64_t w = cfg.index_window, expo = cfg.exponent_bound;
        jobs.push_back({"omega/rank-one-alpha-zero-proper/" + idx2(idx), simple_ref,
                        omega_to_json(cap), [cap](Rng&) {
                            Omega2Module mod(cap.lambda, Scalar(0));
                            for (std::int64_t deg = 1; deg <= 3; ++deg)
                                if (rank_one_generates(mod, deg, 2))
                                    return CheckOutcome::fail(Json{{"start_power", deg}});
                            return CheckOutcome::pass();
                        }});
        jobs.push_back(
            {"omega/rank-two-alpha-zero-proper/" + idx2(idx), simple_ref, omega_to_json(cap),
             [cap, w, expo](Rng&) {
                 // t C[s,t] must be action-closed when alpha = 0 (so the
                 // module is not simple); every image term needs t >= 1.
                 Omega3Module mod(cap);
                 for (std::int64_t a = 0; a <= expo + 1; ++a)
                     for (std::int64_t b = 1; b <= expo + 1; ++b)
                         for (std::int64_t n = -w; n <= w; ++n)
                             for (const Generator& x : {Generator::L(n), Generator::W(n)}) {
                                 MultiPoly img = mod.act(x, mod.monomial(a, b));
                                 for (const auto& [e, c] : img.terms())
                                     if (e[1] == 0)
                                         return CheckOutcome::fail(Json{{"op", x.str()},
                                                                        {"s_power", a},
                                                                        {"t_power", b}});
                             }
                 return CheckOutcome::pass();
             }});
        ++idx;
    }
}

void add_hom(std::vector<CheckJob>& jobs, const RunConfig& cfg) {
    for (std::size_t i = 0; i < cfg.hom_cases.size(); ++i) {
        const HomCase& hc = cfg.hom_cases[i];
        std::int64_t deg = cfg.deg_bound, window = cfg.deg_bound + 2;
        jobs.push_back(
            {"hom/case/" + idx2(i), "intertwiner-classification",
             Json{{"source", omega_to_json(hc.source)},
                  {"target", omega_to_json(hc.target)},
                  {"deg_bound", deg}},
             [hc, deg, window](Rng&) {
                 std::size_t expected = hom_dimension_classified(hc.source, hc.target);
                 std::vector<MultiPoly> basis = hom_space(hc.source, hc.target, deg, window);
                 if (basis.size() != expected)
                     return CheckOutcome::fail(
                         Json{{"expected_dim", expected}, {"found_dim", basis.size()}});
                 if (expected == 1) {
                     std::int64_t tpow = 0;
                     if (hc.source.alpha.is_zero()) {
                         Scalar diff = (hc.target.h - hc.source.h).coeff(0);
                         tpow = static_cast<std::int64_t>(diff.re().get_num().get_si());
                     }
                     const MultiPoly& gen = basis[0];
                     if (gen.terms().size() != 1 ||
                         gen.terms().begin()->first != Exponents{0, tpow})
                         return CheckOutcome::fail(Json{{"expected_multiplier_power", tpow},
                                                        {"found", gen.str()}});
                 }
                 return CheckOutcome::pass();
             }});
    }
}

void add_tensor_simplicity(std::vector<CheckJob>& jobs, const RunConfig& cfg) {
    const char* extract_ref = "action-coefficient-extraction";
    const char* reduce_ref = "reduction-span-membership";
    const char* reach_ref = "vacuum-generation";
    std::int64_t expo = cfg.exponent_bound;

    for (const auto& spec : cfg.tensor_modules) {
        bool distinct = true;
        for (std::size_t i = 0; i < spec.factors.size(); ++i)
            for (std::size_t j = i + 1; j < spec.factors.size(); ++j)
                if (spec.factors[i].lambda == spec.factors[j].lambda)
                    distinct = false;

        jobs.push_back(
            {"tensor-simplicity/vacuum-display/" + spec.name, extract_ref,
             Json{{"spec", spec.to_json()}},
             [spec](Rng&) {
                 TensorModule mod(spec.factors, spec.make_v());
                 RestrictedVector v0 = mod.v_module()->generator();
                 TensorVector vac = mod.vacuum(v0);
                 std::int64_t lo = v_restriction_bound(vac);
                 std::size_t m = mod.slots();
                 for (std::int64_t n = lo; n <= lo + 2; ++n) {
                     TensorVector want = mod.zero();
                     for (std::size_t k = 0; k < m; ++k) {
                         Scalar ln = pow(spec.factors[k].lambda, n);
                         Exponents tk(2 * m, 0);
                         tk[m + k] = 1;
                         want = want + mod.monomial(tk, v0 * ln);
                         want = want + mod.vacuum(v0 * (-(Scalar(n) * spec.factors[k].alpha *
                                                          ln)));
                     }
                     if (mod.act(Generator::W(n), vac) != want)
                         return CheckOutcome::fail(Json{{"n", n}});
                 }
                 return CheckOutcome::pass();
             }});

        for (const char* which : {"w", "l"}) {
            bool is_w = which[0] == 'w';
            jobs.push_back(
                {std::string("tensor-simplicity/extraction-") + which + "/" + spec.name,
                 extract_ref, Json{{"spec", spec.to_json()}, {"instances", 2}},
                 [spec, expo, is_w](Rng& rng) {
                     TensorModule mod(spec.factors, spec.make_v());
                     for (int inst = 0; inst < 2; ++inst) {
                         TensorVector g = rnd_tensor_element(rng, mod, expo, 1, SProfile::Any);
                         auto coeffs =
                             is_w ? w_coefficient_elements(g) : l_coefficient_elements(g);
                         std::int64_t lo = v_restriction_bound(g);
                         for (std::int64_t n : {lo, lo + 1, lo + 4}) {
                             TensorVector want = mod.zero();
                             for (std::size_t k = 0; k < mod.slots(); ++k) {
                                 Scalar ln = pow(spec.factors[k].lambda, n);
                                 for (std::size_t j = 0; j < coeffs[k].size(); ++j) {
                                     Scalar c = ln * pow(Scalar(n), static_cast<std::int64_t>(j));
                                     if (j % 2 == 1)
                                         c = -c;
                                     want = want + coeffs[k][j] * c;
                                 }
                             }
                             TensorVector got = mod.act(
                                 is_w ? Generator::W(n) : Generator::L(n), g);
                             if (got != want)
                                 return CheckOutcome::fail(
                                     Json{{"instance", inst}, {"n", n}, {"g", g.str()}});
                         }
                     }
                     return CheckOutcome::pass();
                 }});
        }

        if (spec.factors.size() <= 2) {
            for (std::size_t inst = 0; inst < 3; ++inst) {
                jobs.push_back(
                    {"tensor-simplicity/reductions/" + spec.name + "/" + idx2(inst), reduce_ref,
                     Json{{"spec", spec.to_json()}},
                     [spec, expo, distinct](Rng& rng) {
                         if (!distinct)
                             return CheckOutcome::skip();
                         TensorModule mod(spec.factors, spec.make_v());
                         TensorVector g = rnd_tensor_element(rng, mod, expo, 1, SProfile::Any);
                         ReductionReport rep = verify_reductions(g);
                         if (!rep.all_passed() || !rep.window_sufficient) {
                             Json slots = Json::array();
                             for (const auto& s : rep.slots)
                                 slots.push_back(Json{{"strip", s.strip_in_span},
                                                      {"t_bump", s.t_bump_in_span},
                                                      {"s_bump", s.s_bump_in_span}});
                             return CheckOutcome::fail(Json{{"g", g.str()},
                                                            {"n_lo", rep.n_lo},
                                                            {"n_hi", rep.n_hi},
                                                            {"slots", slots}});
                         }
                         return CheckOutcome::pass();
                     }});
            }

            jobs.push_back(
                {"tensor-simplicity/reach/" + spec.name, reach_ref,
                 Json{{"spec", spec.to_json()}, {"max_rounds", 5}},
                 [spec](Rng&) {
                     TensorModule mod(spec.factors, spec.make_v());
                     RestrictedVector v0 = mod.v_module()->generator();
                     std::size_t m = mod.slots();
                     std::vector<TensorVector> targets;
                     Exponents e(2 * m, 0);
                     e[0] = 1; // s_1
                     targets.push_back(mod.monomial(e, v0));
                     e[0] = 0;
                     e[m] = 2; // t_1^2
                     targets.push_back(mod.monomial(e, v0));
                     if (m == 2) {
                         e[m] = 1;
                         e[m + 1] = 1; // t_1 t_2
                         targets.push_back(mod.monomial(e, v0));
                     }
                     std::int64_t lookback = 0;
                     if (mod.v_module()->kind() == RestrictedModule::Kind::Verma) {
                         lookback = 2;
                         targets.push_back(
                             mod.vacuum(mod.v_module()->basis_vector({Generator::L(-1)})));
                     }
                     for (std::size_t ti = 0; ti < targets.size(); ++ti) {
                         ReachReport rep = generator_reach(mod, v0, targets[ti], 5, lookback);
                         if (!rep.reached)
                             return CheckOutcome::fail(Json{{"target_index", ti},
                                                            {"rounds", rep.rounds_used},
                                                            {"dimension", rep.dimension},
                                                            {"saturated", rep.saturated}});
                     }
                     return CheckOutcome::pass();
                 }});
        }
    }
}

void add_degenerate(std::vector<CheckJob>& jobs, const RunConfig& cfg) {
    if (cfg.degenerate_pair.size() != 2)
        throw ConfigError("degenerate: config degenerate_pair must hold exactly two factors");
    OmegaParams p1 = cfg.degenerate_pair[0], p2 = cfg.degenerate_pair[1];
    std::int64_t r_bound = cfg.r_bound, n_window = cfg.n_window;
    Json params{{"factor_1", omega_to_json(p1)},
                {"factor_2", omega_to_json(p2)},
                {"r_bound", r_bound},
                {"n_window", n_window}};
    const char* ref = "coincident-parameter-submodule";

    jobs.push_back({"degenerate/submodule-closure", ref, params,
                    [p1, p2, r_bound, n_window](Rng&) {
                        DegenerateReport rep =
                            degenerate_submodule_check(p1, p2, r_bound, n_window);
                        if (!rep.closure_ok || !rep.contains_vacuum)
                            return CheckOutcome::fail(
                                Json{{"closure_ok", rep.closure_ok},
                                     {"contains_vacuum", rep.contains_vacuum},
                                     {"images_checked", rep.images_checked}});
                        return CheckOutcome::pass();
                    }});
    jobs.push_back({"degenerate/properness", ref, params,
                    [p1, p2, r_bound, n_window](Rng&) {
                        DegenerateReport rep =
                            degenerate_submodule_check(p1, p2, r_bound, n_window);
                        if (!rep.proper)
                            return CheckOutcome::fail(Json{{"proper", false}});
                        return CheckOutcome::pass();
                    }});
    jobs.push_back(
        {"degenerate/action-display", ref, params,
         [p1, p2](Rng&) {
             // W_n((s_1 + s_2) (x) v) = lambda^n (s_1 + s_2 - n)
             //                          (t_1 + t_2 - n (alpha_1 + alpha_2)) (x) v
             TensorModule mod({p1, p2}, RestrictedModule::trivial());
             RestrictedVector v0 = mod.v_module()->generator();
             for (std::int64_t n : {-2, -1, 1, 2, 3}) {
                 TensorVector g =
                     mod.monomial({1, 0, 0, 0}, v0) + mod.monomial({0, 1, 0, 0}, v0);
                 Scalar ln = pow(p1.lambda, n);
                 Scalar c = Scalar(n) * (p1.alpha + p2.alpha);
                 TensorVector want = mod.zero();
                 for (const Exponents& st : {Exponents{1, 0, 1, 0}, Exponents{1, 0, 0, 1},
                                             Exponents{0, 1, 1, 0}, Exponents{0, 1, 0, 1}})
                     want = want + mod.monomial(st, v0 * ln);
                 want = want + mod.monomial({1, 0, 0, 0}, v0 * (-(ln * c)));
                 want = want + mod.monomial({0, 1, 0, 0}, v0 * (-(ln * c)));
                 want = want + mod.monomial({0, 0, 1, 0}, v0 * (-(ln * Scalar(n))));
                 want = want + mod.monomial({0, 0, 0, 1}, v0 * (-(ln * Scalar(n))));
                 want = want + mod.vacuum(v0 * (ln * Scalar(n) * c));
                 if (mod.act(Generator::W(n), g) != want)
                     return CheckOutcome::fail(Json{{"n", n}});
             }
             return CheckOutcome::pass();
         }});
}

void add_rg(std::vector<CheckJob>& jobs, const RunConfig& cfg) {
    const char* ref = "rank-invariant";
    for (const auto& spec : cfg.tensor_modules) {
        bool distinct = true;
        for (std::size_t i = 0; i < spec.factors.size(); ++i)
            for (std::size_t j = i + 1; j < spec.factors.size(); ++j)
                if (spec.factors[i].lambda == spec.factors[j].lambda)
                    distinct = false;
        std::size_t m = spec.factors.size();

        jobs.push_back({"rg/vacuum/" + spec.name, ref, Json{{"spec", spec.to_json()}},
                        [spec, m, distinct](Rng&) {
                            if (!distinct)
                                return CheckOutcome::skip();
                            TensorModule mod(spec.factors, spec.make_v());
                            std::size_t r =
                                rank_rg(mod.vacuum(mod.v_module()->generator()));
                            if (r != m + 1)
                                return CheckOutcome::fail(
                                    Json{{"expected", m + 1}, {"rank", r}});
                            return CheckOutcome::pass();
                        }});

        for (std::size_t inst = 0; inst < 4; ++inst) {
            jobs.push_back({"rg/no-s/" + spec.name + "/" + idx2(inst), ref,
                            Json{{"spec", spec.to_json()}},
                            [spec, m, distinct](Rng& rng) {
                                if (!distinct)
                                    return CheckOutcome::skip();
                                TensorModule mod(spec.factors, spec.make_v());
                                TensorVector g =
                                    rnd_tensor_element(rng, mod, 3, 1, SProfile::None);
                                std::size_t r = rank_rg(g);
                                if (r != m + 1)
                                    return CheckOutcome::fail(Json{{"expected", m + 1},
                                                                   {"rank", r},
                                                                   {"g", g.str()}});
                                return CheckOutcome::pass();
                            }});
            jobs.push_back({"rg/with-s/" + spec.name + "/" + idx2(inst), ref,
                            Json{{"spec", spec.to_json()}},
                            [spec, m, distinct](Rng& rng) {
                                if (!distinct)
                                    return CheckOutcome::skip();
                                TensorModule mod(spec.factors, spec.make_v());
                                TensorVector g =
                                    rnd_tensor_element(rng, mod, 2, 1, SProfile::Require);
                                std::size_t r = rank_rg(g);
                                if (r < m + 2)
                                    return CheckOutcome::fail(Json{{"minimum", m + 2},
                                                                   {"rank", r},
                                                                   {"g", g.str()}});
                                return CheckOutcome::pass();
                            }});
        }

        jobs.push_back(
            {"rg/window-stabilization/" + spec.name, ref, Json{{"spec", spec.to_json()}},
             [spec, distinct](Rng& rng) {
                 if (!distinct)
                     return CheckOutcome::skip();
                 TensorModule mod(spec.factors, spec.make_v());
                 TensorVector g = rnd_tensor_element(rng, mod, 2, 1, SProfile::Any);
                 std::size_t expected = rank_rg(g);
                 std::int64_t lo = v_restriction_bound(g);
                 std::int64_t width = 0;
                 for (std::int64_t P : slot_s_degrees(g))
                     width += P + 2;
                 LinearSpan<TensorVector::FlatKey> span;
                 span.insert(g.flatten());
                 for (std::int64_t n = lo; n < lo + width; ++n)
                     span.insert(mod.act(Generator::W(n), g).flatten());
                 std::size_t at_width = span.dimension();
                 for (std::int64_t n = lo + width; n < lo + width + 3; ++n)
                     span.insert(mod.act(Generator::W(n), g).flatten());
                 if (at_width != expected || span.dimension() != expected)
                     return CheckOutcome::fail(Json{{"rank", expected},
                                                    {"window_dim", at_width},
                                                    {"extended_dim", span.dimension()},
                                                    {"g", g.str()}});
                 return CheckOutcome::pass();
             }});
    }
}

void add_determinant(std::vector<CheckJob>& jobs, const RunConfig&) {
    const char* ref = "block-determinant-closed-form";

    std::vector<std::vector<std::int64_t>> shapes;
    for (std::int64_t total = 1; total <= 5; ++total) {
        std::vector<std::int64_t> cur;
        auto rec = [&](auto&& self, std::int64_t left) -> void {
            if (left == 0) {
                shapes.push_back(cur);
                return;
            }
            for (std::int64_t part = 1; part <= left; ++part) {
                cur.push_back(part);
                self(self, left - part);
                cur.pop_back();
            }
        };
        rec(rec, total);
    }

    for (const auto& shape : shapes) {
        std::string tag;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            if (i)
                tag += "+";
            tag += std::to_string(shape[i]);
            total += shape[i];
        }
        jobs.push_back(
            {"determinant/equality/s" + std::to_string(total) + "-" + tag, ref,
             Json{{"sizes", shape}, {"r_values", Json{0, 1, 2, 3}}, {"draws_per_r", 5}},
             [shape](Rng& rng) {
                 for (std::int64_t r = 0; r <= 3; ++r)
                     for (int draw = 0; draw < 5; ++draw) {
                         std::vector<Scalar> lambdas;
                         while (lambdas.size() < shape.size()) {
                             Scalar l = rnd_scalar(rng, true);
                             bool dup = false;
                             for (const auto& o : lambdas)
                                 if (o == l)
                                     dup = true;
                             if (!dup)
                                 lambdas.push_back(l);
                         }
                         BlockSpec spec{shape, lambdas, r};
                         Scalar closed = det_formula(spec);
                         Scalar brute = det_bruteforce(spec);
                         Json lam = Json::array();
                         for (const auto& l : lambdas)
                             lam.push_back(l.str());
                         if (!(closed == brute))
                             return CheckOutcome::fail(Json{{"r", r},
                                                            {"lambdas", lam},
                                                            {"closed_form", closed.str()},
                                                            {"elimination", brute.str()}});
                         if (closed.is_zero())
                             return CheckOutcome::fail(
                                 Json{{"r", r},
                                      {"lambdas", lam},
                                      {"error", "vanished for distinct lambdas"}});
                     }
                 return CheckOutcome::pass();
             }});
    }

    jobs.push_back(
        {"determinant/coincident-zero", ref, Json{{"cases", 3}},
         [](Rng&) {
             std::vector<BlockSpec> specs = {
                 {{1, 1}, {Scalar(3), Scalar(3)}, 0},
                 {{2, 1}, {Scalar(-2), Scalar(-2)}, 1},
                 {{1, 2, 2}, {Scalar(5), Scalar::fraction(1, 2), Scalar(5)}, 2},
             };
             for (std::size_t i = 0; i < specs.size(); ++i)
                 if (!det_formula(specs[i]).is_zero() || !det_bruteforce(specs[i]).is_zero())
                     return CheckOutcome::fail(Json{{"case", i}});
             return CheckOutcome::pass();
         }});

    jobs.push_back(
        {"determinant/permutation-sign", ref, Json{{"cases", 3}},
         [](Rng&) {
             struct Case {
                 BlockSpec spec;
                 std::size_t i, j; // adjacent blocks to swap
             };
             std::vector<Case> cases = {
                 {{{1, 2}, {Scalar(2), Scalar(3)}, 1}, 0, 1},
                 {{{2, 3}, {Scalar::fraction(1, 2), Scalar(-3)}, 0}, 0, 1},
                 {{{1, 1, 2}, {Scalar(2), Scalar(3), Scalar(5)}, 2}, 1, 2},
             };
             for (std::size_t ci = 0; ci < cases.size(); ++ci) {
                 const Case& c = cases[ci];
                 BlockSpec swapped = c.spec;
                 std::swap(swapped.sizes[c.i], swapped.sizes[c.j]);
                 std::swap(swapped.lambdas[c.i], swapped.lambdas[c.j]);
                 Scalar sign = pow(Scalar(-1), c.spec.sizes[c.i] * c.spec.sizes[c.j]);
                 if (!(det_bruteforce(swapped) == det_bruteforce(c.spec) * sign) ||
                     !(det_formula(swapped) == det_formula(c.spec) * sign))
                     return CheckOutcome::fail(Json{{"case", ci}});
             }
             return CheckOutcome::pass();
         }});

    jobs.push_back({"determinant/superfactorial", ref, Json{{"values", 6}},
                    [](Rng&) {
                        const std::pair<std::int64_t, long> table[] = {
                            {0, 1}, {1, 1}, {2, 2}, {3, 12}, {4, 288}, {5, 34560}};
                        for (const auto& [n, want] : table)
                            if (superfactorial(n) != Scalar(want))
                                return CheckOutcome::fail(
                                    Json{{"n", n}, {"got", superfactorial(n).str()}});
                        return CheckOutcome::pass();
                    }});
}

void add_q_identity(std::vector<CheckJob>& jobs, const RunConfig& cfg, Rng& build) {
    for (std::size_t i = 0; i < cfg.omega_params.size(); ++i)
        if (cfg.omega_params[i].alpha.is_zero())
            throw ConfigError("q-identity: config omega_params[" + std::to_string(i) +
                              "].alpha must be nonzero for this suite");

    const char* norm_ref = "casimir-normalization";
    std::vector<OmegaParams> sets = cfg.omega_params;
    for (int i = 0; i < 3; ++i)
        sets.push_back(rnd_omega(build));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        OmegaParams p = sets[i];
        jobs.push_back({"q-identity/normalization/" + idx2(i), norm_ref, omega_to_json(p),
                        [p](Rng&) {
                            Omega3Module mod(p);
                            UeaElement q = q_element(p.alpha);
                            for (std::int64_t a = 0; a <= 4; ++a)
                                for (std::int64_t b = 0; b <= 4; ++b) {
                                    MultiPoly u = mod.monomial(a, b);
                                    if (apply(q, u, mod) != u)
                                        return CheckOutcome::fail(
                                            Json{{"s_power", a}, {"t_power", b}});
                                }
                            return CheckOutcome::pass();
                        }});
    }

    const char* coeff_ref = "tensor-casimir-coefficient";
    for (const auto& spec : cfg.tensor_modules) {
        if (spec.factors.size() != 2)
            continue;
        jobs.push_back(
            {"q-identity/tensor-coefficient/" + spec.name, coeff_ref,
             Json{{"spec", spec.to_json()}},
             [spec](Rng&) {
                 TensorModule mod(spec.factors, spec.make_v());
                 RestrictedVector v0 = mod.v_module()->generator();
                 Scalar alpha = spec.factors[0].alpha;
                 TensorVector out = apply(q_element(alpha), mod.vacuum(v0), mod);
                 Scalar l1 = spec.factors[0].lambda, l2 = spec.factors[1].lambda;
                 RestrictedVector want =
                     v0 * (pow(alpha, -2) * (Scalar(2) - l1 / l2 - l2 / l1));
                 auto it = out.terms().find(Exponents{0, 0, 1, 1});
                 RestrictedVector got =
                     it == out.terms().end() ? mod.v_module()->zero() : it->second;
                 if (got != want)
                     return CheckOutcome::fail(
                         Json{{"expected", want.str()}, {"found", got.str()}});
                 return CheckOutcome::pass();
             }});
    }

    const char* weight_ref = "non-weight-degree-growth";
    for (const auto& spec : cfg.tensor_modules)
        for (std::size_t inst = 0; inst < 4; ++inst)
            jobs.push_back(
                {"q-identity/non-weight/" + spec.name + "/" + idx2(inst), weight_ref,
                 Json{{"spec", spec.to_json()}},
                 [spec](Rng& rng) {
                     TensorModule mod(spec.factors, spec.make_v());
                     TensorVector g = rnd_tensor_element(rng, mod, 2, 1, SProfile::Any);
                     TensorVector shifted = mod.act(Generator::L(0), g);
                     if (shifted.is_zero() ||
                         lex_compare(shifted.degree(), g.degree()) <= 0)
                         return CheckOutcome::fail(Json{{"g", g.str()}});
                     return CheckOutcome::pass();
                 }});
}

void add_fingerprint(std::vector<CheckJob>& jobs, const RunConfig& cfg) {
    const char* ref = "isomorphism-invariants";

    for (const auto& spec : cfg.tensor_modules) {
        bool distinct = true;
        for (std::size_t i = 0; i < spec.factors.size(); ++i)
            for (std::size_t j = i + 1; j < spec.factors.size(); ++j)
                if (spec.factors[i].lambda == spec.factors[j].lambda)
                    distinct = false;
        jobs.push_back(
            {"fingerprint/recovery/" + spec.name, ref, Json{{"spec", spec.to_json()}},
             [spec, distinct](Rng&) {
                 if (!distinct)
                     return CheckOutcome::skip();
                 TensorModule mod(spec.factors, spec.make_v());
                 std::vector<RestrictedVector> samples = {mod.v_module()->generator()};
                 if (mod.v_module()->kind() == RestrictedModule::Kind::Verma)
                     samples.push_back(mod.v_module()->basis_vector({Generator::W(-1)}));
                 for (const auto& sample : samples) {
                     Fingerprint fp = fingerprint(mod, sample);
                     Fingerprint want;
                     want.m = spec.factors.size();
                     want.r_min = spec.factors.size() + 1;
                     for (const auto& f : spec.factors)
                         want.slots.push_back(SlotFingerprint{f.lambda, f.alpha, f.h});
                     std::sort(want.slots.begin(), want.slots.end(),
                               [](const SlotFingerprint& a, const SlotFingerprint& b) {
                                   int c = Scalar::order(a.lambda, b.lambda);
                                   if (c != 0)
                                       return c < 0;
                                   return Scalar::order(a.alpha, b.alpha) < 0;
                               });
                     if (!(fp == want))
                         return CheckOutcome::fail(
                             Json{{"expected", want.str()}, {"recovered", fp.str()}});
                 }
                 return CheckOutcome::pass();
             }});
    }

    auto poly = [](std::initializer_list<long> coeffs) {
        std::vector<Scalar> cs;
        for (long c : coeffs)
            cs.emplace_back(c);
        return UniPoly::from_coeffs(cs);
    };
    UniPoly t2 = poly({0, 0, 1});
    OmegaParams f21(Scalar(2), Scalar(1), t2);
    OmegaParams f31(Scalar(3), Scalar(1), t2);
    OmegaParams f32(Scalar(3), Scalar(2), t2);
    OmegaParams f22(Scalar(2), Scalar(2), t2);

    struct Pair {
        std::vector<OmegaParams> a, b;
        const char* differ;
    };
    std::vector<Pair> pairs = {
        {{f21}, {f21, f31}, "factor count"},
        {{f21}, {f31}, "lambda"},
        {{f21, f31}, {f21, OmegaParams(Scalar(5), Scalar(1), t2)}, "lambda multiset"},
        {{f21}, {f22}, "alpha"},
        {{f21}, {OmegaParams(Scalar(2), Scalar(-1), t2)}, "alpha sign"},
        {{f21}, {OmegaParams(Scalar(2), Scalar(1), poly({1, 0, 1}))}, "h constant term"},
        {{OmegaParams(Scalar(2), Scalar(1), poly({0, 1}))}, {f21}, "h degree"},
        {{f21, f32}, {f22, f31}, "lambda-alpha pairing"},
        {{OmegaParams(Scalar::fraction(1, 2), Scalar(1), t2)}, {f21}, "lambda value"},
        {{OmegaParams(Scalar(2), Scalar(1), poly({0, 0, 2}))}, {f21}, "h scale"},
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Pair pr = pairs[i];
        jobs.push_back(
            {"fingerprint/separation/" + idx2(i), ref, Json{{"differs_in", pr.differ}},
             [pr](Rng&) {
                 TensorModule ma(pr.a, RestrictedModule::trivial());
                 TensorModule mb(pr.b, RestrictedModule::trivial());
                 Fingerprint fa = fingerprint(ma, ma.v_module()->generator());
                 Fingerprint fb = fingerprint(mb, mb.v_module()->generator());
                 if (fa == fb)
                     return CheckOutcome::fail(
                         Json{{"fingerprint", fa.str()}, {"differs_in", pr.differ}});
                 return CheckOutcome::pass();
             }});
    }

    for (std::size_t i = 0; i < 2; ++i) {
        bool verma = i == 1;
        jobs.push_back(
            {"fingerprint/permutation/" + idx2(i), ref,
             Json{{"restricted_factor", verma ? "verma" : "trivial"}},
             [verma, f21, f32](Rng&) {
                 RestrictedModulePtr va =
                     verma ? RestrictedModule::verma({Scalar(1), Scalar(2), Scalar(3)})
                           : RestrictedModule::trivial();
                 RestrictedModulePtr vb =
                     verma ? RestrictedModule::verma({Scalar(1), Scalar(2), Scalar(3)})
                           : RestrictedModule::trivial();
                 TensorModule ma({f21, f32}, va);
                 TensorModule mb({f32, f21}, vb);
                 Fingerprint fa = fingerprint(ma, ma.v_module()->generator());
                 Fingerprint fb = fingerprint(mb, mb.v_module()->generator());
                 if (!(fa == fb))
                     return CheckOutcome::fail(
                         Json{{"first", fa.str()}, {"second", fb.str()}});
                 return CheckOutcome::pass();
             }});
    }
}

} // namespace

// ------------------------------------------------------------------- driver

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms",     "omega",       "hom",        "tensor-simplicity", "degenerate",
        "rg",         "determinant", "q-identity", "fingerprint"};
    return names;
}

std::vector<CheckJob> build_suite(const std::string& suite, const RunConfig& cfg) {
    std::vector<CheckJob> jobs;
    if (suite == "all") {
        for (const auto& name : suite_names()) {
            auto part = build_suite(name, cfg);
            jobs.insert(jobs.end(), std::make_move_iterator(part.begin()),
                        std::make_move_iterator(part.end()));
        }
        return jobs;
    }

    Rng build(cfg.seed ^ fnv1a("build:" + suite));
    if (suite == "axioms")
        add_axioms(jobs, cfg, build);
    else if (suite == "omega")
        add_omega(jobs, cfg, build);
    else if (suite == "hom")
        add_hom(jobs, cfg);
    else if (suite == "tensor-simplicity")
        add_tensor_simplicity(jobs, cfg);
    else if (suite == "degenerate")
        add_degenerate(jobs, cfg);
    else if (suite == "rg")
        add_rg(jobs, cfg);
    else if (suite == "determinant")
        add_determinant(jobs, cfg);
    else if (suite == "q-identity")
        add_q_identity(jobs, cfg, build);
    else if (suite == "fingerprint")
        add_fingerprint(jobs, cfg);
    else
        throw ConfigError("unknown suite \"" + suite + "\"");

    std::set<std::string> ids;
    for (const auto& job : jobs)
        if (!ids.insert(job.check_id).second)
            throw std::logic_error("build_suite: duplicate check id " + job.check_id);
    return jobs;
}

SuiteRun execute_jobs(const std::string& suite, std::vector<CheckJob> jobs, std::uint64_t seed,
                      std::size_t workers) {
    SuiteRun run;
    run.suite = suite;
    run.seed = seed;
    std::vector<CheckRecord> records(jobs.size());
    std::atomic<std::size_t> cursor{0};

    auto work = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= jobs.size())
                return;
            const CheckJob& job = jobs[i];
            Rng rng(seed ^ fnv1a(job.check_id));
            auto t0 = std::chrono::steady_clock::now();
            CheckOutcome out;
            try {
                out = job.run(rng);
            } catch (const std::exception& e) {
                out = CheckOutcome::fail(Json{{"exception", e.what()}});
            }
            auto dt = std::chrono::steady_clock::now() - t0;
            records[i] = CheckRecord{
                job.check_id, job.paper_ref, job.params, out.result, out.witness,
                std::chrono::duration_cast<std::chrono::milliseconds>(dt).count()};
        }
    };

    std::size_t n = std::max<std::size_t>(1, std::min(workers, jobs.size()));
    if (n == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < n; ++i)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::sort(records.begin(), records.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
    for (const auto& r : records) {
        if (r.result == "pass")
            ++run.passed;
        else if (r.result == "fail")
            ++run.failed;
        else
            ++run.skipped;
    }
    run.checks = std::move(records);
    return run;
}

Json report_json(const SuiteRun& run, bool with_timings) {
    Json checks = Json::array();
    for (const auto& r : run.checks) {
        Json entry{{"check_id", r.check_id},
                   {"paper_ref", r.paper_ref},
                   {"params", r.params},
                   {"result", r.result}};
        if (!r.witness.is_null())
            entry["witness"] = r.witness;
        if (with_timings)
            entry["millis"] = r.millis;
        checks.push_back(std::move(entry));
    }
    return Json{{"suite", run.suite},
                {"seed", run.seed},
                {"checks", std::move(checks)},
                {"summary", Json{{"total", run.checks.size()},
                                 {"passed", run.passed},
                                 {"failed", run.failed},
                                 {"skipped", run.skipped}}}};
}

} // namespace w22
