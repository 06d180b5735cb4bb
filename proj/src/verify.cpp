#include "magsteklov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "magsteklov/error.hpp"
#include "magsteklov/galerkin.hpp"
#include "magsteklov/harmonic_extension.hpp"
#include "magsteklov/oracle.hpp"
#include "magsteklov/spectra.hpp"
#include "magsteklov/specfun.hpp"

namespace magsteklov {

namespace {

const std::vector<double> kB2T{0.1, 0.5, 1.0, 2.0, 5.0};
const std::vector<double> kB4T{0.25, 1.0, 2.0};
const std::vector<double> kResidualR{0.25, 0.5, 0.75, 1.0};

double rel(double v, double ref) { return ref == 0.0 ? std::abs(v) : std::abs(v - ref) / std::abs(ref); }

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Keeps the worst error and a line for every failure.
struct Tally {
    CheckResult& res;
    void add(double err, const std::string& what) {
        res.max_error = std::max(res.max_error, err);
        if (!(err <= res.tolerance)) res.details.push_back(what + fmt(": error %.3e", err));
    }
};

Family b2_family(int k, bool conjugate) {
    if (k == 0) return Family::B2KZero;
    return conjugate ? Family::B2Plus : Family::B2Minus;
}

void zero_modes(CheckResult& r) {
    Tally tl{r};
    for (int k = 1; k <= 10; ++k) {
        const double v = s3_coexact_eigenvalue(k, 0, Sign::Minus, MagneticParameter(k + 1.0));
        tl.add(std::abs(v), fmt("s3 coexact minus k=%d p=0 t=%d", k, k + 1));
        const auto s1 = s1_hodge_spectrum(MagneticParameter(k), k, 1);
        const bool exact_zero = std::any_of(s1.records.begin(), s1.records.end(),
                                            [](const EigenvalueRecord& e) { return e.value == 0.0; });
        if (!exact_zero) {
            r.max_error = std::numeric_limits<double>::infinity();
            r.details.push_back(fmt("s1 k=%d t=%d has no exact zero", k, k));
        }
    }
}

void b2_oracle(CheckResult& r) {
    Tally tl{r};
    for (int k = 0; k <= 10; ++k)
        for (bool conj : {false, true}) {
            if (k == 0 && conj) continue;
            for (double t : kB2T) {
                const double closed = b2_steklov_eigenvalue(k, b2_family(k, conj), MagneticParameter(t));
                const double orc = steklov_eigenvalue_oracle({RadialDomain::B2, k, 0, t, conj});
                tl.add(rel(closed, orc), fmt("b2 k=%d conjugate=%d t=%g", k, int(conj), t));
            }
        }
}

void b4_coexact_oracle(CheckResult& r) {
    Tally tl{r};
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p)
            for (Sign s : {Sign::Plus, Sign::Minus})
                for (double t : kB4T) {
                    const double closed = b4_steklov_coexact(k, p, s, MagneticParameter(t));
                    const double orc =
                        steklov_eigenvalue_oracle({RadialDomain::B4Coexact, k, p, t, s == Sign::Plus});
                    tl.add(rel(closed, orc),
                           fmt("b4 coexact %s k=%d p=%d t=%g", s == Sign::Plus ? "plus" : "minus", k, p, t));
                }
}

void b4_exact_reconcile(CheckResult& r) {
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p)
            for (double t : kB4T) {
                const auto rep = reconcile_b4_exact(k, p, t, r.tolerance);
                double best = std::numeric_limits<double>::infinity();
                if (rep.theorem) best = std::min(best, rel(*rep.theorem, rep.oracle));
                if (rep.proof) best = std::min(best, rel(*rep.proof, rep.oracle));
                r.max_error = std::max(r.max_error, best);
                auto show = [](const std::optional<double>& v) { return v ? fmt("%.15g", *v) : std::string("pole"); };
                std::string verdict = rep.theorem_matches && rep.proof_matches ? "both"
                                      : rep.theorem_matches                   ? "theorem_statement"
                                      : rep.proof_matches                     ? "proof_q_prime"
                                                                              : "neither";
                r.details.push_back(fmt("k=%d p=%d t=%g oracle=%.15g theorem_statement=%s proof_q_prime=%s match=%s",
                                        k, p, t, rep.oracle, show(rep.theorem).c_str(),
                                        show(rep.proof).c_str(), verdict.c_str()));
            }
}

std::vector<RadialSystemSpec> all_specs() {
    std::vector<RadialSystemSpec> out;
    for (int k = 0; k <= 10; ++k)
        for (bool conj : {false, true}) {
            if (k == 0 && conj) continue;
            for (double t : kB2T) out.push_back({RadialDomain::B2, k, 0, t, conj});
        }
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p)
            for (double t : kB4T) {
                out.push_back({RadialDomain::B4Exact, k, p, t, false});
                out.push_back({RadialDomain::B4Coexact, k, p, t, false});
                out.push_back({RadialDomain::B4Coexact, k, p, t, true});
            }
    return out;
}

std::string describe(const RadialSystemSpec& s) {
    return fmt("%s k=%d p=%d t=%g conjugate=%d", to_string(s.domain).c_str(), s.k, s.p, s.t, int(s.conjugate));
}

void series_residual(CheckResult& r) {
    Tally tl{r};
    for (const auto& spec : all_specs())
        tl.add(ode_residual(oracle_solution(spec), spec, kResidualR), describe(spec));
}

void closed_form_residual(CheckResult& r) {
    Tally tl{r};
    for (int k = 1; k <= 6; ++k)
        for (bool conj : {false, true})
            for (double t : kB2T) {
                const RadialSystemSpec spec{RadialDomain::B2, k, 0, t, conj};
                tl.add(ode_residual(b2_closed_form_profile(k, t, conj), spec, kResidualR), describe(spec));
            }
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p)
            for (double t : kB4T) {
                const RadialSystemSpec spec{RadialDomain::B4Coexact, k, p, t, false};
                tl.add(ode_residual(b4_coexact_closed_form_profile(k, p, t), spec, kResidualR), describe(spec));
            }
}

// The closed-form W-hat, -e^{x/2} R_k(-x) / r^{2k} with x = tau r^2, must be a
// fixed multiple of the series W-branch.
void w_branch_ratio(CheckResult& r) {
    Tally tl{r};
    const std::vector<double> rs{0.2, 0.4, 0.6, 0.8, 1.0};
    for (int k = 1; k <= 6; ++k)
        for (bool conj : {false, true})
            for (double t : kB2T) {
                const RadialSystemSpec spec{RadialDomain::B2, k, 0, t, conj};
                const auto w = series_solve(spec, 200).second;
                const double tau = conj ? -t : t;
                std::vector<double> ratios;
                for (double rv : rs) {
                    const double x = tau * rv * rv;
                    const double closed =
                        -std::exp(0.5 * x) * specfun::exp_taylor_remainder(k, -x) / std::pow(rv, 2 * k);
                    ratios.push_back(evaluate_scalar(w, rv) / closed);
                }
                double spread = 0.0;
                for (double q : ratios) spread = std::max(spread, rel(q, ratios.back()));
                tl.add(spread, describe(spec));
            }
}

void rk_check(CheckResult& r) {
    Tally tl{r};
    for (int k : {0, 1, 3, 6, 10})
        for (bool conj : {false, true}) {
            if (k == 0 && conj) continue;
            for (double t : {0.5, 2.0, 5.0}) {
                const RadialSystemSpec spec{RadialDomain::B2, k, 0, t, conj};
                tl.add(rk_crosscheck(spec), describe(spec));
            }
        }
    for (int k : {1, 3, 5})
        for (int p : {0, k})
            for (double t : {0.25, 2.0})
                for (auto spec : {RadialSystemSpec{RadialDomain::B4Exact, k, p, t, false},
                                  RadialSystemSpec{RadialDomain::B4Coexact, k, p, t, false},
                                  RadialSystemSpec{RadialDomain::B4Coexact, k, p, t, true}})
                    tl.add(rk_crosscheck(spec), describe(spec));
}

void galerkin(CheckResult& r) {
    Tally tl{r};
    struct Case {
        int k;
        double t;
    };
    for (const Case c : {Case{1, 0.0}, Case{1, 1.0}, Case{2, 0.5}, Case{0, 2.0}}) {
        const double exact = b2_steklov_eigenvalue(c.k, b2_family(c.k, true), MagneticParameter(c.t));
        double prev = std::numeric_limits<double>::infinity();
        double last = prev;
        for (int n = 4; n <= 40; n += 4) {
            GalerkinConfig cfg;
            cfg.k = c.k;
            cfg.t = c.t;
            cfg.basis_size = n;
            last = rayleigh_galerkin_b2(cfg);
            if (last > prev * (1.0 + kGalerkinRoundoff)) {
                r.max_error = std::numeric_limits<double>::infinity();
                r.details.push_back(fmt("k=%d t=%g: N=%d value %.17g exceeds N=%d value %.17g", c.k, c.t, n, last,
                                        n - 4, prev));
            }
            if (last < exact - 1e-9) {
                r.max_error = std::numeric_limits<double>::infinity();
                r.details.push_back(fmt("k=%d t=%g: N=%d value %.17g below the eigenvalue %.17g", c.k, c.t, n,
                                        last, exact));
            }
            prev = last;
        }
        tl.add(rel(last, exact), fmt("k=%d t=%g N=40", c.k, c.t));
    }
}

struct LaguerreTriple {
    double nu, alpha, x;
};

// 200 seeded triples: nu in {m +- 1/2}, alpha in {-12..3}, x in (0, 10].
std::vector<LaguerreTriple> laguerre_grid() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> m(0, 10), pm(0, 1), a(-12, 3);
    std::uniform_real_distribution<double> xs(1e-3, 10.0);
    std::vector<LaguerreTriple> out;
    while (out.size() < 200) {
        const double nu = m(rng) + (pm(rng) ? 0.5 : -0.5);
        const double alpha = a(rng);
        out.push_back({nu, alpha, xs(rng)});
    }
    return out;
}

void laguerre_recurrence(CheckResult& r) {
    Tally tl{r};
    for (const auto& [nu, alpha, x] : laguerre_grid()) {
        const double up = (nu + 1) * specfun::laguerre({nu + 1, alpha, x});
        const double mid = (2 * nu + alpha + 1 - x) * specfun::laguerre({nu, alpha, x});
        const double down = (nu + alpha) * specfun::laguerre({nu - 1, alpha, x});
        tl.add(rel(up, mid - down), fmt("nu=%g alpha=%g x=%.17g", nu, alpha, x));
    }
}

void laguerre_derivative(CheckResult& r) {
    Tally tl{r};
    const double h = 1e-5;
    for (const auto& [nu, alpha, x] : laguerre_grid()) {
        const double fd =
            (specfun::laguerre({nu, alpha, x + h}) - specfun::laguerre({nu, alpha, x - h})) / (2 * h);
        tl.add(rel(fd, specfun::laguerre_dx({nu, alpha, x})), fmt("nu=%g alpha=%g x=%.17g", nu, alpha, x));
    }
}

void harmonic(CheckResult& r, std::optional<int> only_n) {
    for (int n : {1, 2}) {
        if (only_n && *only_n != n) continue;
        const auto rep = verify_harmonic_extension_b2n(n, 1e-5, random_interior_points(n, 20, 20240 + n), r.tolerance);
        const double worst = std::max({rep.laplacian_residual, rep.lie_residual, rep.eta_phi_residual,
                                       rep.im_ratio_residual});
        r.max_error = std::max(r.max_error, worst);
        r.details.push_back(fmt("n=%d points=%d laplacian=%.3e lie=%.3e eta_phi=%.3e im_ratio=%.3e", n, rep.points,
                                rep.laplacian_residual, rep.lie_residual, rep.eta_phi_residual,
                                rep.im_ratio_residual));
    }
}

struct CheckDef {
    std::string name;
    double tolerance;
    std::function<void(CheckResult&, const VerifyOptions&)> run;
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs{
        {"zero-modes", 1e-12, [](CheckResult& r, const VerifyOptions&) { zero_modes(r); }},
        {"b2-oracle", 1e-8, [](CheckResult& r, const VerifyOptions&) { b2_oracle(r); }},
        {"b4-coexact-oracle", 1e-6, [](CheckResult& r, const VerifyOptions&) { b4_coexact_oracle(r); }},
        {"b4-exact-reconcile", 1e-6, [](CheckResult& r, const VerifyOptions&) { b4_exact_reconcile(r); }},
        {"series-residual", 1e-10, [](CheckResult& r, const VerifyOptions&) { series_residual(r); }},
        {"closed-form-residual", 1e-9, [](CheckResult& r, const VerifyOptions&) { closed_form_residual(r); }},
        {"w-branch-ratio", 1e-9, [](CheckResult& r, const VerifyOptions&) { w_branch_ratio(r); }},
        {"rk-crosscheck", 1e-8, [](CheckResult& r, const VerifyOptions&) { rk_check(r); }},
        {"galerkin", 1e-6, [](CheckResult& r, const VerifyOptions&) { galerkin(r); }},
        {"laguerre-recurrence", 1e-10, [](CheckResult& r, const VerifyOptions&) { laguerre_recurrence(r); }},
        {"laguerre-derivative", 1e-7, [](CheckResult& r, const VerifyOptions&) { laguerre_derivative(r); }},
        {"harmonic-extension", 1e-6, [](CheckResult& r, const VerifyOptions& o) { harmonic(r, o.n); }},
    };
    return defs;
}

}  // namespace

std::vector<std::string> verification_check_names() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.tolerance && !(*options.tolerance > 0.0 && std::isfinite(*options.tolerance)))
        throw ConfigurationError("--tolerance must be a positive number");
    if (options.n && *options.n != 1 && *options.n != 2) throw ConfigurationError("--n must be 1 or 2");
    if (options.only) {
        const auto names = verification_check_names();
        if (std::find(names.begin(), names.end(), *options.only) == names.end())
            throw ConfigurationError("unknown check '" + *options.only + "'");
    }
    std::vector<CheckResult> out;
    for (const auto& def : registry()) {
        if (options.only && *options.only != def.name) continue;
        CheckResult r;
        r.name = def.name;
        r.tolerance = options.tolerance.value_or(def.tolerance);
        try {
            def.run(r, options);
            r.pass = r.max_error <= r.tolerance;
        } catch (const Error& e) {
            r.pass = false;
            r.details.push_back(std::string("error: ") + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace magsteklov
