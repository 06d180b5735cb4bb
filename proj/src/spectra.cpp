#include "magsteklov/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magsteklov/error.hpp"
#include "magsteklov/specfun.hpp"

namespace magsteklov {

namespace {

constexpr double kPoleThreshold = 1e-12;

void require_k_max(int k_max, int minimum) {
    if (k_max < minimum) {
        std::ostringstream msg;
        msg << "k_max must be >= " << minimum << ", got " << k_max;
        throw InvalidArgument(msg.str());
    }
}

void require_kp(int k, int p, int k_min) {
    if (k < k_min || p < 0 || p > k) {
        std::ostringstream msg;
        msg << "mode index out of range: k=" << k << ", p=" << p;
        throw InvalidArgument(msg.str());
    }
}

// t^extra * L_{nu1}^{(a1)}(t) / L_{nu2}^{(a2)}(t). Both functions are taken in
// scaled form, so the powers of t they carry at the origin cancel exactly and
// the ratio stays finite down to t = 0.
double laguerre_ratio(double nu1, double a1, double nu2, double a2, double t, int extra) {
    const auto num = specfun::laguerre_scaled({nu1, a1, t});
    const auto den = specfun::laguerre_scaled({nu2, a2, t});
    if (!(std::abs(den.value) > kPoleThreshold * den.magnitude)) {
        std::ostringstream msg;
        msg << "Laguerre denominator L_" << nu2 << "^(" << a2 << ") vanishes at t=" << t;
        throw PoleError(msg.str(), t);
    }
    const int power = extra + num.x_power - den.x_power;
    if (power < 0 && t == 0.0) throw PoleError("Laguerre ratio singular at t=0", t);
    const double scale = power == 0 ? 1.0 : std::pow(t, power);
    return scale * num.value / den.value;
}

void sort_records(Spectrum& s) {
    std::stable_sort(s.records.begin(), s.records.end(),
                     [](const EigenvalueRecord& a, const EigenvalueRecord& b) { return a.value < b.value; });
}

}  // namespace

MagneticParameter::MagneticParameter(double t) : t_(t) {
    if (!std::isfinite(t) || t < 0.0) {
        std::ostringstream msg;
        msg << "magnetic parameter must be finite and >= 0, got " << t;
        throw InvalidArgument(msg.str());
    }
}

std::string to_string(Domain d) {
    switch (d) {
        case Domain::S1: return "s1";
        case Domain::S3: return "s3";
        case Domain::B2: return "b2";
        case Domain::B4: return "b4";
    }
    return "?";
}

std::string to_string(Family f) {
    switch (f) {
        case Family::S1Function: return "s1_function";
        case Family::S1VolumeForm: return "s1_volume_form";
        case Family::S3Function: return "s3_function";
        case Family::S3Exact: return "s3_exact";
        case Family::S3CoexactPlus: return "s3_coexact_plus";
        case Family::S3CoexactMinus: return "s3_coexact_minus";
        case Family::B2KZero: return "b2_k0";
        case Family::B2Plus: return "b2_plus";
        case Family::B2Minus: return "b2_minus";
        case Family::B4Exact: return "b4_exact";
        case Family::B4CoexactPlus: return "b4_coexact_plus";
        case Family::B4CoexactMinus: return "b4_coexact_minus";
    }
    return "?";
}

Domain parse_domain(const std::string& s) {
    for (auto d : {Domain::S1, Domain::S3, Domain::B2, Domain::B4})
        if (to_string(d) == s) return d;
    throw InvalidArgument("unknown domain '" + s + "'");
}

Family parse_family(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(Family::B4CoexactMinus); ++i) {
        const auto f = static_cast<Family>(i);
        if (to_string(f) == s) return f;
    }
    throw InvalidArgument("unknown family '" + s + "'");
}

// S^1 -----------------------------------------------------------------------

Spectrum s1_hodge_spectrum(MagneticParameter t, int k_max, int degree) {
    require_k_max(k_max, 0);
    if (degree != 0 && degree != 1) throw InvalidArgument("S^1 degree must be 0 or 1");
    const Family family = degree == 0 ? Family::S1Function : Family::S1VolumeForm;
    const double tv = t.value();
    Spectrum s;
    s.cutoff = k_max;
    for (int k = 0; k <= k_max; ++k) {
        const double plus = k + tv;
        const double minus = k - tv;
        if (k == 0) {
            s.records.push_back({tv * tv, {0, std::nullopt, family, 0}, 1, false});
            continue;
        }
        s.records.push_back({plus * plus, {k, std::nullopt, family, +1}, 1, false});
        s.records.push_back({minus * minus, {k, std::nullopt, family, -1}, 1, false});
    }
    sort_records(s);
    return s;
}

// S^3 -----------------------------------------------------------------------

double s3_function_eigenvalue(int k, int p, MagneticParameter t) {
    require_kp(k, p, 0);
    const double tv = t.value();
    return k * (k + 2.0) + 2.0 * (2 * p - k) * tv + tv * tv;
}

double s3_exact_eigenvalue(int k, int p, MagneticParameter t) {
    require_kp(k, p, 1);
    return s3_function_eigenvalue(k, p, t);
}

double s3_coexact_eigenvalue(int k, int p, Sign sign, MagneticParameter t) {
    require_kp(k, p, 1);
    const double tv = t.value();
    const int shift = sign == Sign::Plus ? 1 : -1;
    return (k + 1.0) * (k + 1.0) + 2.0 * tv * (2 * p - k + shift) + tv * tv;
}

Spectrum s3_function_spectrum(MagneticParameter t, int k_max) {
    require_k_max(k_max, 0);
    Spectrum s;
    s.cutoff = k_max;
    for (int k = 0; k <= k_max; ++k)
        for (int p = 0; p <= k; ++p)
            s.records.push_back({s3_function_eigenvalue(k, p, t), {k, p, Family::S3Function, 0}, k + 1, true});
    sort_records(s);
    return s;
}

Spectrum s3_oneform_spectrum(MagneticParameter t, int k_max) {
    require_k_max(k_max, 1);
    Spectrum s;
    s.cutoff = k_max;
    for (int k = 1; k <= k_max; ++k) {
        const int mult = k * (k + 2);
        for (int p = 0; p <= k; ++p) {
            s.records.push_back({s3_exact_eigenvalue(k, p, t), {k, p, Family::S3Exact, 0}, mult, false});
            s.records.push_back(
                {s3_coexact_eigenvalue(k, p, Sign::Plus, t), {k, p, Family::S3CoexactPlus, 0}, mult, false});
            s.records.push_back(
                {s3_coexact_eigenvalue(k, p, Sign::Minus, t), {k, p, Family::S3CoexactMinus, 0}, mult, false});
        }
    }
    sort_records(s);
    return s;
}

FirstEigenvalue s3_first_eigenvalue(MagneticParameter t, int k_max) {
    return first_eigenvalue(Domain::S3, t, k_max);
}

// B^2 -----------------------------------------------------------------------

double b2_steklov_eigenvalue(int k, Family family, MagneticParameter t) {
    const double tv = t.value();
    if (family == Family::B2KZero) {
        if (k != 0) throw InvalidArgument("B2KZero requires k = 0");
        return tv == 0.0 ? 2.0 : tv / std::tanh(0.5 * tv);
    }
    if (family != Family::B2Plus && family != Family::B2Minus)
        throw InvalidArgument("not a B^2 family: " + to_string(family));
    if (k < 1) throw InvalidArgument("B^2 plus/minus branches require k >= 1");
    // t^{k+1} / (k! R_k(t)) with R_k(t) = t^{k+1}/(k+1)! * S_k(t) reduces to (k+1)/S_k(t).
    const double arg = family == Family::B2Plus ? tv : -tv;
    return (k + 1.0) / specfun::exp_taylor_remainder_ratio(k, arg);
}

Spectrum b2_steklov_spectrum(MagneticParameter t, int k_max) {
    require_k_max(k_max, 0);
    Spectrum s;
    s.cutoff = k_max;
    s.records.push_back({b2_steklov_eigenvalue(0, Family::B2KZero, t), {0, std::nullopt, Family::B2KZero, 0},
                         std::nullopt, false});
    for (int k = 1; k <= k_max; ++k) {
        for (auto f : {Family::B2Plus, Family::B2Minus})
            s.records.push_back({b2_steklov_eigenvalue(k, f, t), {k, std::nullopt, f, 0}, std::nullopt, false});
    }
    sort_records(s);
    return s;
}

// B^4 -----------------------------------------------------------------------

double b4_steklov_exact(int k, int p, MagneticParameter t, B4ExactVariant variant) {
    require_kp(k, p, 1);
    const double tv = t.value();
    const double kk = k;
    const double pp = p;
    if (variant == B4ExactVariant::TheoremStatement) {
        const double r1 = laguerre_ratio(kk - 0.5 - pp, -(kk + 2), kk + 0.5 - pp, -(kk + 2), tv, 0);
        const double r2 = laguerre_ratio(kk - 1.5 - pp, -kk, kk - 0.5 - pp, -kk, tv, 0);
        return (kk * (pp + 1.5) * r1 + (kk + 2) * (pp + 0.5) * r2 + kk * kk - (2 * pp + tv) * (kk + 1) - 1) /
               (kk + 1);
    }
    const double r1 = laguerre_ratio(kk - 1.5 - pp, 1 - kk, kk - 0.5 - pp, -kk, tv, 1);
    const double r2 = laguerre_ratio(kk - 0.5 - pp, -(kk + 1), kk + 0.5 - pp, -(kk + 2), tv, 1);
    return -(kk + 2) * r1 / (kk + 1) - kk * r2 / (kk + 1) - (kk * kk + kk * tv + 2 * kk + tv) / (kk + 1);
}

double b4_steklov_exact(int k, int p, MagneticParameter t) {
    try {
        return b4_steklov_exact(k, p, t, B4ExactVariant::TheoremStatement);
    } catch (const PoleError&) {
        return b4_steklov_exact(k, p, t, B4ExactVariant::ProofQPrime);
    }
}

double b4_steklov_coexact(int k, int p, Sign sign, MagneticParameter t) {
    require_kp(k, p, 1);
    const double tv = t.value();
    const double h = sign == Sign::Plus ? 0.5 : -0.5;
    const double r = laguerre_ratio(k - 1 + h - p, -k, k + h - p, -(k + 1.0), tv, 1);
    return -2.0 * r - (k + tv + 1);
}

Spectrum b4_steklov_spectrum(MagneticParameter t, int k_max) {
    require_k_max(k_max, 1);
    Spectrum s;
    s.cutoff = k_max;
    auto add = [&](const ModeIndex& mode, auto&& eval) {
        try {
            const double v = eval();
            if (v < 0.0) {
                std::ostringstream msg;
                msg << to_string(mode.family) << " k=" << mode.k << " p=" << *mode.p
                    << " is negative (" << v << ") at t=" << t.value();
                s.warnings.push_back(msg.str());
            }
            s.records.push_back({v, mode, std::nullopt, false});
        } catch (const PoleError& e) {
            s.excluded.push_back({mode, t.value(), e.what()});
        }
    };
    for (int k = 1; k <= k_max; ++k) {
        for (int p = 0; p <= k; ++p) {
            add({k, p, Family::B4Exact, 0}, [&] { return b4_steklov_exact(k, p, t); });
            add({k, p, Family::B4CoexactPlus, 0}, [&] { return b4_steklov_coexact(k, p, Sign::Plus, t); });
            add({k, p, Family::B4CoexactMinus, 0}, [&] { return b4_steklov_coexact(k, p, Sign::Minus, t); });
        }
    }
    sort_records(s);
    return s;
}

double b4_printed_lowest(MagneticParameter t) {
    const double tv = t.value();
    const int k = 1;  // the free index in the first upper index
    return -3.0 * laguerre_ratio(-0.5, 1 - k, -0.5, -1, tv, 1) / 2.0 -
           laguerre_ratio(0.5, -2, 1.5, -3, tv, 1) / 2.0 - (2.0 * tv + 3.0) / 2.0;
}

B4Lowest b4_lowest_eigenvalue(MagneticParameter t, int k_max) {
    B4Lowest out;
    out.branch = b4_steklov_exact(1, 0, t);
    try {
        out.printed = b4_printed_lowest(t);
    } catch (const PoleError&) {
        out.printed.reset();
    }
    out.enumerated = first_eigenvalue(Domain::B4, t, k_max);
    return out;
}

// Generic front end ---------------------------------------------------------

Spectrum spectrum(Domain domain, MagneticParameter t, int k_max) {
    switch (domain) {
        case Domain::S1: return s1_hodge_spectrum(t, k_max, 1);
        case Domain::S3: return s3_oneform_spectrum(t, k_max);
        case Domain::B2: return b2_steklov_spectrum(t, k_max);
        case Domain::B4: return b4_steklov_spectrum(t, k_max);
    }
    throw InvalidArgument("unknown domain");
}

FirstEigenvalue first_eigenvalue(Domain domain, MagneticParameter t, int k_max) {
    const auto s = spectrum(domain, t, k_max);
    if (s.records.empty()) throw InvalidArgument("empty spectrum");
    const auto& best = s.records.front();
    if (best.mode.k == k_max && k_max > 0) {
        std::ostringstream msg;
        msg << "first eigenvalue of " << to_string(domain) << " at t=" << t.value()
            << " is attained at the cutoff k=" << k_max;
        throw CutoffInsufficient(msg.str(), k_max);
    }
    return {best.value, best.mode};
}

}  // namespace magsteklov
