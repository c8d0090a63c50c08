#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ga/arith.hpp"

namespace ga {

// ---- zero table ----

// Ascending positive ordinates gamma of nontrivial zeta zeros.  Zeros are
// modeled on the critical line, rho = 1/2 + i*gamma; the code has no notion
// of an off-line zero.
struct ZeroTable {
    std::vector<double> gammas;
    std::string source_id;

    double height() const { return gammas.empty() ? 0.0 : gammas.back(); }
    std::size_t count_below(double Z) const;
};

// A truncated zero sum together with the estimated discarded tail.
struct SumWithBound {
    double value = 0.0;
    double tail_bound = 0.0;   // >= 0, estimate of the |gamma| > Z remainder
    double trunc_height = 0.0;
    std::size_t zeros_used = 0;
};

// Riemann-von Mangoldt zero-count estimate
//   N(T) ~ (T/2pi) log(T/2pi) - T/2pi + 7/8.
double rvm_estimate(double T);

// Parses a plain-text table: one positive decimal ordinate per line,
// ascending; '#' comments and blank lines ignored.  Validation: strict
// monotonicity, first ordinate in [14.13, 14.14], and the prefix-count gate
// |(j - 1/2) - rvm_estimate(gamma_j)| <= 2 for every j (catches truncated or
// corrupt files).  Throws std::runtime_error with the offending line number.
ZeroTable load_zeros(const std::string& path);

// Embedded fallback: the first 100 ordinates (12 decimal places), enough for
// unit tests that must not depend on a data file.
const ZeroTable& builtin_zeros();

// Density-weighted tail estimate for sums of x^{k-1/2} / gamma^k type:
//   (x^{k-1/2} / pi) * (log(Z/2pi) + 1) / Z,
// the integral of the RvM density against the term envelope.  Monotone
// decreasing in Z.  Requires Z >= 2*pi*e so the log factor is safely positive.
double tail_estimate(double x, int k, double Z);

// sum over 0 < gamma <= Z of 2 Re[ x^{rho+k-1} / (rho (rho+1) ... (rho+k-1)) ]
// with rho = 1/2 + i*gamma (conjugate pairs folded into the factor 2).
// Ascending gamma, compensated accumulation in fixed-size chunks so the
// result is independent of threading.
SumWithBound zero_sum_k(double x, int k, double Z, const ZeroTable& zt);

// sum over zeros of 2 Re[ ((N+H)^{rho+1} - N^{rho+1}) / (rho (rho+1)) ],
// the short-interval analogue; the difference is taken per zero (compensated)
// rather than between two large sums.
SumWithBound zero_sum_interval(double N, double H, double Z, const ZeroTable& zt);

// Truncated explicit formula for the jump-averaged Chebyshev function:
//   psi0(t) ~ t - sum_{|gamma|<=Z} t^rho/rho - log(2pi) - (1/2) log(1-t^-2).
// tail_bound = c * [ (t/Z) log^2(tZ) + log t * min(1, t/(Z <t>)) ] where <t>
// is the distance from t to the nearest integer (taken as 1 when t is an
// integer, where the min saturates).  c defaults to 1 and is a config knob;
// the estimate is reported, not guaranteed.
SumWithBound psi0_explicit(double t, double Z, const ZeroTable& zt, double tail_coeff = 1.0);

// Recovers the explicit-formula constant by comparing the zero sum against
// the sieve at half-integers t in {10.5, 100.5, 1000.5}: returns the mean of
// t - sum - (1/2)log(1-t^-2) - psi_sieve(t), which should sit near log(2pi)
// up to the truncation noise of the table.
double fit_zeta_constant(const ZeroTable& zt, const LambdaTable& table);

// ---- sieve-vs-zeros cross check ----

struct SumIntegralCheck {
    double lhs = 0.0;             // sum_{n<=M} (psi(n) - n), by sieve
    double rhs = 0.0;             // -zero_sum_k(M, 2, Z)
    double normalized_gap = 0.0;  // |lhs-rhs| / M
    double tail_bound = 0.0;
};

SumIntegralCheck check_sum_integral(std::uint64_t M, double Z,
                                    const LambdaTable& table, const ZeroTable& zt);

}  // namespace ga
