#pragma once

// Closed-form magnetic spectra for the rotation/Hopf potentials: the Hodge
// Laplacian on S^1 and S^3, and the Steklov operator on 1-forms of B^2 and
// B^4. Values at t = 0 are the analytic limits of the t > 0 formulas.

#include <optional>
#include <string>
#include <vector>

namespace magsteklov {

/// Coupling strength t >= 0 multiplying the fixed Killing potential.
class MagneticParameter {
public:
    explicit MagneticParameter(double t);
    double value() const { return t_; }

private:
    double t_;
};

enum class Domain { S1, S3, B2, B4 };

enum class Family {
    S1Function,
    S1VolumeForm,
    S3Function,
    S3Exact,
    S3CoexactPlus,
    S3CoexactMinus,
    B2KZero,
    B2Plus,
    B2Minus,
    B4Exact,
    B4CoexactPlus,
    B4CoexactMinus,
};

enum class Sign { Plus, Minus };

std::string to_string(Domain d);
std::string to_string(Family f);
Domain parse_domain(const std::string& s);
Family parse_family(const std::string& s);

struct ModeIndex {
    int k = 0;
    std::optional<int> p;
    Family family = Family::S1Function;
    int sign = 0;  // +1/-1 for the two S^1 branches (k+t)^2, (k-t)^2; 0 elsewhere

    bool operator==(const ModeIndex&) const = default;
};

struct EigenvalueRecord {
    double value = 0.0;
    ModeIndex mode;
    std::optional<int> multiplicity;  // empty: not known
    bool multiplicity_flagged = false;  // per-(k,p) share of a total multiplicity
};

/// A branch point dropped from an enumeration because a Laguerre denominator
/// vanishes there.
struct ExcludedPoint {
    ModeIndex mode;
    double t = 0.0;
    std::string reason;
};

struct Spectrum {
    std::vector<EigenvalueRecord> records;  // ascending by value
    int cutoff = 0;
    std::vector<ExcludedPoint> excluded;
    std::vector<std::string> warnings;  // e.g. negative Steklov values from a printed formula
};

struct FirstEigenvalue {
    double value = 0.0;
    ModeIndex mode;
};

// S^1 -----------------------------------------------------------------------

/// (k+t)^2 and (k-t)^2 for 0 <= k <= k_max; degree 0 (functions) or 1 (the
/// Hodge star of the function spectrum). k = 0 gives the single value t^2.
Spectrum s1_hodge_spectrum(MagneticParameter t, int k_max, int degree);

// S^3 -----------------------------------------------------------------------

double s3_function_eigenvalue(int k, int p, MagneticParameter t);
double s3_exact_eigenvalue(int k, int p, MagneticParameter t);
double s3_coexact_eigenvalue(int k, int p, Sign sign, MagneticParameter t);

/// Functions: per-(k,p) multiplicity k+1, flagged (the (k+1)^2 total is split over p).
Spectrum s3_function_spectrum(MagneticParameter t, int k_max);

/// 1-forms: exact and both co-exact families, k >= 1, multiplicity k(k+2) each.
Spectrum s3_oneform_spectrum(MagneticParameter t, int k_max);

FirstEigenvalue s3_first_eigenvalue(MagneticParameter t, int k_max = 50);

// B^2 -----------------------------------------------------------------------

/// k = 0: t coth(t/2). Plus: t^{k+1}/(k!(e^t - sum_{j<=k} t^j/j!)).
/// Minus: the same with t -> -t. Limits 2 and k+1 at t = 0.
double b2_steklov_eigenvalue(int k, Family family, MagneticParameter t);

Spectrum b2_steklov_spectrum(MagneticParameter t, int k_max);

// B^4 -----------------------------------------------------------------------

enum class B4ExactVariant { TheoremStatement, ProofQPrime };

/// Exact-family eigenvalue in one of its two printed forms. Throws PoleError
/// when a Laguerre denominator vanishes.
double b4_steklov_exact(int k, int p, MagneticParameter t, B4ExactVariant variant);

/// Canonical exact-family value: TheoremStatement, falling back to
/// ProofQPrime only at a pole of the former.
double b4_steklov_exact(int k, int p, MagneticParameter t);

/// Co-exact family; Sign::Minus couples to dz (linear coefficient 2p-k+1),
/// Sign::Plus to dz-bar (2p-k-1).
double b4_steklov_coexact(int k, int p, Sign sign, MagneticParameter t);

/// All B^4 branches with k <= k_max; multiplicities unspecified, poles excluded.
Spectrum b4_steklov_spectrum(MagneticParameter t, int k_max);

/// The lowest-eigenvalue expression exactly as printed, with the free k in
/// the first Laguerre upper index set to 1.
double b4_printed_lowest(MagneticParameter t);

struct B4Lowest {
    double branch = 0.0;            // exact (k=1, p=0): continuation of sigma_{1,1} = 3/2
    std::optional<double> printed;  // printed expression, empty at its poles
    FirstEigenvalue enumerated;     // min over all branches k <= k_max
};

B4Lowest b4_lowest_eigenvalue(MagneticParameter t, int k_max = 50);

// Generic front end ---------------------------------------------------------

/// S1 enumerates 1-forms (degree 1), S3 enumerates 1-forms.
Spectrum spectrum(Domain domain, MagneticParameter t, int k_max);

/// Minimum over the enumerated spectrum. Throws CutoffInsufficient when the
/// minimizing branch has k == k_max.
FirstEigenvalue first_eigenvalue(Domain domain, MagneticParameter t, int k_max = 50);

}  // namespace magsteklov
