#include "mirrorgw/suites.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "mirrorgw/localization.hpp"
#include "mirrorgw/mirror_engine.hpp"
#include "mirrorgw/reconstruct.hpp"

namespace mgw {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"recursion", "mpc",    "transforms", "identities",
                                                   "reconstruction", "oracle", "psi"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& all = suite_names();
    return std::find(all.begin(), all.end(), name) != all.end();
}

FixedPointSeries inject_default_pole(const FixedPointSeries& z, const AlphaSpec& spec) {
    if (spec.n() < 2 || z.u_order() < 1) throw std::invalid_argument("pole injection needs n >= 2 and order >= 1");
    return inject_pole(z, 0, 1, Rational(1) + spec[1] - spec[0], Rational(1));
}

AlphaSpec alternate_spec(const AlphaSpec& spec) {
    static const long base[] = {4, -7, 19, 37, -53, 71, -89, 107, 131, -149, 173, -197};
    const int n = spec.n();
    if (n > static_cast<int>(std::size(base))) throw std::invalid_argument("no alternate weights for this n");
    for (long shift = 0; shift < 200; ++shift) {
        std::vector<Rational> alpha;
        for (int i = 0; i < n; ++i) alpha.emplace_back(base[i] + 3 * shift);
        if (alpha == spec.alpha() || find_resonance(alpha, spec.a(), spec.max_degree())) continue;
        return AlphaSpec(std::move(alpha), spec.a(), spec.max_degree());
    }
    throw ResonanceError("no generic alternate weights found");
}

std::vector<Transform> sample_transforms(int u_order) {
    QSeries f(Var::u, u_order);
    f[0] = Rational(1);
    if (u_order >= 1) f[1] = Rational(2);
    if (u_order >= 2) f[2] = Rational(-3);
    QSeries e(Var::u, u_order);
    if (u_order >= 1) e[1] = Rational(1);
    if (u_order >= 2) e[2] = Rational(-2);
    QSeries g(Var::u, u_order);
    if (u_order >= 1) g[1] = Rational(2);
    if (u_order >= 2) g[2] = Rational(-1);

    std::vector<Transform> out;
    out.push_back({TransformKind::derivative, QSeries(Var::u, 0), QPoly(), false});
    out.push_back({TransformKind::mul_u_poly, f, QPoly(), false});
    out.push_back({TransformKind::mul_u_poly, f, QPoly(), true});
    // h^2 + 1 has no rational root, so it cannot cancel an injected pole
    out.push_back({TransformKind::mul_h_poly, QSeries(Var::u, 0), QPoly(std::vector<Rational>{1, 0, 1}), false});
    out.push_back({TransformKind::exp_f_over_h, e, QPoly(), false});
    out.push_back({TransformKind::mirror, g, QPoly(), false});
    return out;
}

namespace {

// Both checker modes; a disagreement between them is itself a failure.
Report mpc_both_modes(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec, int max_degree) {
    Report out;
    try {
        out.absorb(check_mpc(y, z, spec, max_degree, MpcMode::interpolation), "interpolation");
        out.absorb(check_mpc(y, z, spec, max_degree, MpcMode::z_expansion), "z_expansion");
    } catch (const std::logic_error& e) {
        out.failures.push_back({-1, -1, e.what()});
    }
    return out;
}

void compare_series(Report& rep, const FixedPointSeries& got, const FixedPointSeries& want, int max_degree,
                    const std::string& what) {
    for (int i = 0; i < want.n(); ++i)
        for (int d = 0; d <= max_degree; ++d)
            if (!(got.coeff(i, d) == want.coeff(i, d)))
                rep.failures.push_back({i, d, what + " differs: " + got.coeff(i, d).str() + " vs " + want.coeff(i, d).str()});
}

class SuiteRunner {
public:
    SuiteRunner(const AlphaSpec& spec, const SuiteOptions& opt, const EquivariantModel* shared)
        : spec_(spec), opt_(opt), shared_(shared) {}

    Report run(const std::string& name) {
        Report rep;
        rep.suite = name;
        rep.params = {{"n", std::to_string(spec_.n())},
                      {"a", std::to_string(spec_.a())},
                      {"max_degree", std::to_string(opt_.max_degree)},
                      {"alpha", spec_.str()},
                      {"mutate", opt_.mutate ? "true" : "false"}};
        if (name == "recursion") recursion(rep);
        else if (name == "mpc") mpc(rep);
        else if (name == "transforms") transforms(rep);
        else if (name == "identities") identities(rep);
        else if (name == "reconstruction") reconstruction(rep);
        else if (name == "oracle") oracle(rep);
        else if (name == "psi") psi(rep);
        else throw std::invalid_argument("unknown suite: " + name);
        return rep;
    }

private:
    const EquivariantModel& model() {
        if (shared_) return *shared_;
        if (!model_) model_ = std::make_unique<EquivariantModel>(spec_, opt_.max_degree);
        return *model_;
    }
    int D() const { return opt_.max_degree; }

    void recursion(Report& rep) {
        const auto& m = model();
        FixedPointSeries mutant = inject_default_pole(m.y_minus_1(), spec_);
        rep.absorb(check_recursive(opt_.mutate ? mutant : m.y_minus_1(), spec_, D()), "Y_-1");
        for (int p = 0; p < spec_.n(); ++p)
            rep.absorb(check_recursive(m.ladder().Y(p), spec_, D()), "Y_" + std::to_string(p));
        for (int p = -1; p < spec_.n(); ++p)
            rep.absorb(check_recursive(m.z(p), spec_, D()), "Z_" + std::to_string(p));
        if (!opt_.mutate && check_recursive(mutant, spec_, D()).passed())
            rep.failures.push_back({0, 1, "injected pole not detected"});
    }

    void mpc(Report& rep) {
        const auto& m = model();
        FixedPointSeries mutant = inject_default_pole(m.y_minus_1(), spec_);
        rep.absorb(mpc_both_modes(m.y_unit(), opt_.mutate ? mutant : m.y_minus_1(), spec_, D()), "(Y, Y_-1)");
        if (!opt_.mutate && mpc_both_modes(m.y_unit(), mutant, spec_, D()).passed())
            rep.failures.push_back({0, 1, "injected pole not detected"});
    }

    // Z-side recursion plus MPC; Y-type series carry no recursion.
    Report both_checks(const FixedPointSeries& y, const FixedPointSeries& z) {
        Report r;
        r.absorb(check_recursive(z, spec_, D()), "recursion");
        r.absorb(mpc_both_modes(y, z, spec_, D()), "mpc");
        return r;
    }

    void transforms(Report& rep) {
        const auto& m = model();
        FixedPointSeries mutant = inject_default_pole(m.y_minus_1(), spec_);
        for (const auto& t : sample_transforms(D())) {
            const FixedPointSeries& z = opt_.mutate ? mutant : m.y_minus_1();
            auto [y2, z2] = apply_transform(t, m.y_unit(), z, spec_);
            rep.absorb(both_checks(y2, z2), t.name());
            if (opt_.mutate) continue;
            auto [ym, zm] = apply_transform(t, m.y_unit(), mutant, spec_);
            if (both_checks(ym, zm).passed())
                rep.failures.push_back({0, 1, t.name() + ": transformed mutant passes"});
        }
    }

    void identities(Report& rep) {
        const auto& m = model();
        for (auto k : {IdentityKind::symmetric_sum, IdentityKind::ztilde_swap, IdentityKind::mod_h_inverse,
                       IdentityKind::z0_relation, IdentityKind::e_symmetry})
            rep.absorb(check_identity(k, m, D()), identity_name(k));
        if (!opt_.mutate) return;
        // z0_relation against a Z_0 carrying an injected pole
        FixedPointSeries z0 = inject_default_pole(m.z(0), spec_);
        for (int i = 0; i < spec_.n(); ++i)
            for (int d = 0; d <= D(); ++d)
                if (!(z0.coeff(i, d) == m.z_onepoint().coeff(i, d) * RatFn(QPoly(spec_[i]))))
                    rep.failures.push_back({i, d, "z0_relation: Z_0 != x Z"});
    }

    void reconstruction(Report& rep) {
        const auto& m = model();
        const int n = spec_.n();
        const FixedPointSeries& y = m.z_onepoint();
        const NBound bound = default_n_bound(n);
        auto attempt = [&](const ReconstructionSeed& seed, const std::string& what) -> std::optional<FixedPointSeries> {
            try {
                return reconstruct(y, spec_, seed, bound, D());
            } catch (const ReconstructionError& e) {
                rep.failures.push_back({e.fixed_point(), e.degree(), what + ": " + e.what()});
                return std::nullopt;
            }
        };

        if (auto z = attempt(ReconstructionSeed::zero(n, D()), "zero seed"); z && !z->is_zero())
            rep.failures.push_back({-1, -1, "zero seed: nonzero reconstruction"});

        std::vector<std::optional<FixedPointSeries>> rebuilt;
        for (int p = -1; p < n; ++p) {
            FixedPointSeries want = p == 0 && opt_.mutate ? inject_default_pole(m.z(p), spec_) : m.z(p);
            auto z = attempt(ReconstructionSeed::from_series(m.z(p), D()), "Z_" + std::to_string(p));
            if (z) compare_series(rep, *z, want, D(), "Z_" + std::to_string(p));
            rebuilt.push_back(std::move(z));
        }

        ReconstructionSeed sum = ReconstructionSeed::from_series(m.z(-1), D());
        sum += ReconstructionSeed::from_series(m.z(n - 1), D());
        if (auto z = attempt(sum, "additivity"); z && rebuilt.front() && rebuilt.back())
            compare_series(rep, *z, *rebuilt.front() + *rebuilt.back(), D(), "additivity");

        // a seed change in degree d moves the output in degrees >= d only
        const int probe = std::min(1, D());
        ReconstructionSeed bumped = ReconstructionSeed::from_series(m.z(0), D());
        bumped.part[0][static_cast<size_t>(probe)] += QPoly(Rational(1));
        if (auto z = attempt(bumped, "perturbed seed"); z && rebuilt[1]) {
            bool moved = false;
            for (int i = 0; i < n; ++i)
                for (int d = 0; d <= D(); ++d) {
                    bool same = z->coeff(i, d) == rebuilt[1]->coeff(i, d);
                    if (d < probe && !same) rep.failures.push_back({i, d, "perturbed seed changed a lower degree"});
                    if (d == probe && !same) moved = true;
                }
            if (!moved) rep.failures.push_back({0, probe, "perturbed seed left its own degree unchanged"});
        }
    }

    void oracle(Report& rep) {
        const auto& m = model();
        const int n = spec_.n();
        const int a = spec_.a();
        const int top = std::min(opt_.oracle_degree, D());
        for (int p = -1; p < n; ++p) {
            FixedPointSeries got = oracle_zp_series(spec_, p, top);
            FixedPointSeries want = m.z(p).truncated(top);
            if (p == -1 && opt_.mutate && top >= 1) want = inject_default_pole(want, spec_);
            compare_series(rep, got, want, top, "oracle Z_" + std::to_string(p));
        }

        // alpha-free two-point numbers: two weight vectors against the non-equivariant engine
        AlphaSpec other = alternate_spec(spec_);
        MirrorEngine engine(n, a, std::max(top, 1));
        for (int d = 1; d <= top; ++d)
            for (int b1 = 0; b1 < n; ++b1)
                for (int b2 = 0; b2 < n; ++b2)
                    for (int a1 = 0; a1 <= n + a * d; ++a1)
                        for (int a2 = 0; a2 <= n + a * d; ++a2) {
                            InvariantKey key{d, a1, b1, a2, b2};
                            if (!dimension_ok(n, a, key)) continue;
                            Rational want = engine.invariant(key).value;
                            Rational x = oracle_two_point(spec_, d, a1, b1, a2, b2);
                            Rational y = oracle_two_point(other, d, a1, b1, a2, b2);
                            if (x != want || y != want)
                                rep.failures.push_back({-1, d, "two-point <tau_" + std::to_string(a1) + " H^" +
                                                                   std::to_string(b1) + ", tau_" + std::to_string(a2) +
                                                                   " H^" + std::to_string(b2) + ">: " + x.str() + ", " +
                                                                   y.str() + " vs " + want.str()});
                        }
    }

    void psi(Report& rep) {
        bool first = true;
        for (int k = 3; k <= 8; ++k) {
            std::vector<int> e(static_cast<size_t>(k), 0);
            // every vector with entry sum k-4, k-3 or k-2
            std::function<void(int, int)> walk = [&](int pos, int left) {
                if (pos == k - 1) {
                    e[static_cast<size_t>(pos)] = left;
                    Rational closed = psi_integral(e);
                    if (opt_.mutate && first) closed += Rational(1);
                    first = false;
                    Rational rec = psi_integral_by_string_equation(e);
                    if (closed != rec) {
                        std::string v;
                        for (int x : e) v += (v.empty() ? "" : ",") + std::to_string(x);
                        rep.failures.push_back({-1, -1, "psi(" + v + "): " + closed.str() + " vs " + rec.str()});
                    }
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    e[static_cast<size_t>(pos)] = x;
                    walk(pos + 1, left - x);
                }
            };
            for (int s = std::max(0, k - 4); s <= k - 2; ++s) walk(0, s);
        }
    }

    const AlphaSpec& spec_;
    SuiteOptions opt_;
    const EquivariantModel* shared_;
    std::unique_ptr<EquivariantModel> model_;
};

}  // namespace

std::vector<Report> run_suites(const std::vector<std::string>& names, const AlphaSpec& spec,
                               const SuiteOptions& options) {
    for (const auto& name : names)
        if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
    SuiteRunner runner(spec, options, nullptr);
    std::vector<Report> out;
    for (const auto& name : names) out.push_back(runner.run(name));
    return out;
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const EquivariantModel& model,
                               const SuiteOptions& options) {
    for (const auto& name : names)
        if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
    if (model.u_order() < options.max_degree) throw std::invalid_argument("model is truncated below max_degree");
    SuiteRunner runner(model.spec(), options, &model);
    std::vector<Report> out;
    for (const auto& name : names) out.push_back(runner.run(name));
    return out;
}

}  // namespace mgw
