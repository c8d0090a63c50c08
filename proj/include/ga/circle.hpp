#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "ga/arith.hpp"

namespace ga {

// ---- the weighted circle parameter ----

// z = 1/N - 2 pi i alpha with alpha in [-1/2, 1/2].  Re z = 1/N > 0 always,
// and |z| <= sqrt(1 + pi^2) < 4, the band in which 1/(e^z - 1) = 1/z + O(1).
struct ZPoint {
    std::uint64_t N = 0;
    double alpha = 0.0;
    std::complex<double> z;
};

ZPoint make_zpoint(std::uint64_t N, double alpha);

// V = 1/(e^z - 1), evaluated through expm1 so the alpha -> 0 peak keeps full
// relative precision.
std::complex<double> V(const ZPoint& p);

// Geometric sum T(y; alpha) = sum_{a=1}^{y} e(a alpha), with the
// alpha-integer limit handled exactly (returns y).  |T| <= min(y, 1/(2|a|))
// where |a| is the distance to the nearest integer (from |sin(pi t)| >= 2|t|).
std::complex<double> T(std::uint64_t y, double alpha);

// Fejer kernel |T(N; alpha)|^2.
double fejer_L(std::uint64_t N, double alpha);

// ---- weighted exponential sum ----

// Truncation policy for S~(alpha) = sum_n Lambda(n) e^{-n/N} e(n alpha).
// tail_tol documents the absolute bound on the discarded coefficient mass.
struct ExpSumConfig {
    std::uint64_t trunc_len = 0;
    double tail_tol = 0.0;
};

// Upper bound on sum_{m > M} Lambda(m) e^{-m/N}:  N e^{-M/N} (log(M+2) + 1).
double exp_sum_tail_bound(std::uint64_t trunc_len, std::uint64_t N);

// The conservative default, trunc_len = 40 N (tail < 1e-12 N).
ExpSumConfig exp_config_default(std::uint64_t N);

// Smallest truncation whose tail bound is <= tol_abs.
ExpSumConfig exp_config_for_tol(std::uint64_t N, double tol_abs);

// Probe configuration for the L2 lemma checks: trunc_len = 9 N.  The tail's
// quadratic mass is ~ (N/2) log(9N) e^{-18}, which perturbs the mean-square
// integrals far below their acceptance bands while keeping evaluation an
// order of magnitude cheaper than the 40 N default.
ExpSumConfig exp_config_probe(std::uint64_t N);

// S~ evaluator over the prime-power support.  Terms are stored sparsely
// (m, Lambda(m) e^{-m/N}); evaluation walks them with a gap-rotation table
// and re-anchors the phase from remainder(m*alpha, 1) every block, so the
// phase error stays ~1e-10 regardless of trunc_len.  Per-block partials are
// merged with compensated accumulation in a fixed order: results do not
// depend on the thread count.
class WeightedExpSum {
public:
    WeightedExpSum(std::uint64_t N, const LambdaTable& table, const ExpSumConfig& cfg);

    std::complex<double> eval(double alpha) const;
    void eval_batch(const double* alpha, std::size_t n, std::complex<double>* out) const;

    std::uint64_t N() const { return N_; }
    std::uint64_t trunc_len() const { return trunc_len_; }
    double tail_bound() const { return tail_bound_; }

private:
    std::uint64_t N_ = 0;
    std::uint64_t trunc_len_ = 0;
    double tail_bound_ = 0.0;
    std::vector<std::uint32_t> m_;  // prime powers, ascending
    std::vector<double> coeff_;     // Lambda(m) e^{-m/N}
};

// One-shot S~(alpha); builds the evaluator internally (O(trunc_len)), so use
// WeightedExpSum directly inside quadrature loops.
std::complex<double> S_tilde(const ZPoint& p, const LambdaTable& table,
                             const ExpSumConfig& cfg);

// ---- quadrature ----

// A panel plan is just an ascending edge list; panel i is [edges[i], edges[i+1]].
struct PanelPlan {
    std::vector<double> edges;
    std::size_t panels() const { return edges.empty() ? 0 : edges.size() - 1; }
};

// Uniform subdivision of [a, b].
PanelPlan uniform_plan(double a, double b, std::size_t n_panels);

// Plan for [a, b] away from the origin: panel width capped at
// periods_per_panel / f_max (16-point Gauss-Legendre resolves ~5 periods per
// panel; 3.5 leaves margin, and the refinement grade halves it again).
PanelPlan capped_plan(double a, double b, double f_max,
                      double periods_per_panel = 3.5, std::size_t min_panels = 4);

// Log-graded plan for [0, b]: octave edges 2^j/(8N) toward the 1/z peak
// (whose height scales like N^2 over a width ~1/N), each octave split
// uniformly (octave_split), then the bandwidth cap applied on top.
PanelPlan graded_plan(double b, std::uint64_t N, double f_max,
                      double periods_per_panel = 3.5, std::size_t octave_split = 4);

struct QuadOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    int max_refine = 3;  // grade g splits every panel into 2^g
};

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;  // |last grade - previous grade|
    bool converged = false;
    std::size_t n_eval = 0;
};

// Batch integrand: write component j at node i into out[j*n + i].  Batching
// lets expensive evaluators (S~) amortize and parallelize over nodes.
using BatchIntegrand = std::function<void(const double* alpha, std::size_t n, double* out)>;

// Composite 16-point Gauss-Legendre over the plan, refined whole grades at a
// time until successive grades agree within tolerance.  Non-convergence is
// reported in the flag, never silently dropped.  Panel partials are merged
// in panel order (deterministic under any parallel execution).
std::vector<QuadResult> quad_multi(const BatchIntegrand& f, std::size_t n_components,
                                   const PanelPlan& plan, const QuadOptions& opt = {});
QuadResult quad(const BatchIntegrand& f, const PanelPlan& plan, const QuadOptions& opt = {});

// ---- lemma-level checks ----

// int e(-n alpha)/z^2 over [-1/2,1/2] against the residue value n e^{-n/N}.
// The gap is dominated by the |alpha| > 1/2 tail of the residue integral,
// ~1/pi^2, far inside the O(1) acceptance band.
struct ResidueCheck {
    double quad_value = 0.0;
    double target = 0.0;
    double gap = 0.0;
    bool converged = false;
};
ResidueCheck residue_check(std::uint64_t n, std::uint64_t N);

// int |S~ - 1/z|^2 over [-1/2,1/2] against (N/2) log N, plus the Parseval
// cross-check int |S~|^2 == sum Lambda(m)^2 e^{-2m/N} (both sides under the
// same truncation, so it isolates pure quadrature error).
struct MeanSquareCheck {
    double quad_value = 0.0;
    double target = 0.0;
    double gap = 0.0;
    double parseval_quad = 0.0;
    double parseval_sum = 0.0;
    bool converged = false;
};
MeanSquareCheck mean_square_check(std::uint64_t N, const LambdaTable& table,
                                  const ExpSumConfig& cfg = {});

// Windowed L2 profile: int_{-xi}^{xi} |S~ - 1/z|^2 and its ratio to
// N xi log^2 N for each window.
struct LpPoint {
    double xi = 0.0;
    double integral = 0.0;
    double ratio = 0.0;
    bool converged = false;
};
std::vector<LpPoint> lp_l2_profile(std::uint64_t N, const std::vector<double>& xi_list,
                                   const LambdaTable& table, const ExpSumConfig& cfg = {});

// Discrete cancellation identity: both sides of
//   sum_{n<=y} e^{-n/N} sum_{m1+m2=n} (Lambda(m1) - 1)
//     == sum_{n<=y} e^{-n/N} (psi(n-1) - (n-1)),
// the left as a literal double sum, the right through the sieve prefix.
struct I2Check {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
};
I2Check i2_identity_check(std::uint64_t y, std::uint64_t N, const LambdaTable& table);

// int |T(y;-alpha)| |S~ - 1/z|^2 split exactly as the dyadic argument does:
// central window |alpha| <= 1/y, then shells [2^k/y, 2^{k+1}/y] tiling
// (1/y, 1/2] with shared endpoints.
struct I3Shell {
    double a = 0.0, b = 0.0;
    double contribution = 0.0;
};
struct I3Decomposition {
    double central = 0.0;
    std::vector<I3Shell> shells;
    double total = 0.0;
    double envelope = 0.0;  // N log^2 N log y
    double ratio = 0.0;
    bool converged = false;
};
I3Decomposition i3_decomposition(std::uint64_t y, std::uint64_t N,
                                 const LambdaTable& table, const ExpSumConfig& cfg = {});

// max over the grid of |S~ - 1/z| / [sqrt(N) (1 + sqrt(N |alpha|)) log N].
struct PointwiseCheck {
    double max_ratio = 0.0;
    double argmax_alpha = 0.0;
};
PointwiseCheck pointwise_bound_check(std::uint64_t N, const std::vector<double>& alpha_grid,
                                     const LambdaTable& table, const ExpSumConfig& cfg = {});
// 64 points: 0 plus a geometric ladder from 1/(8N) to 1/2.
std::vector<double> default_pointwise_grid(std::uint64_t N);

// Step-function counterexample: f_N = (1/2) sqrt(N) log N on |alpha| <= 1/log N.
//   int_{1/y}^{1/2} |f_N|^2 / alpha  =  (N log^2 N / 4) log(y / log N),
// evaluated in closed form, plus arithmetic verification that f_N satisfies
// the two lemma-shaped bounds (windowed L2 and total mass N log N / 2).
struct RemarkResult {
    double integral_value = 0.0;
    double ratio_to_Nlog3N = 0.0;
    double l2_mass = 0.0;          // exactly N log N / 2
    bool window_bound_ok = false;  // int_{-xi}^{xi} |f|^2 <= N xi log^2 N, all xi
};
RemarkResult remark_counterexample(std::uint64_t N, double y);

// ---- cross checks shared by tests and the CLI ----

// int T(y;-alpha)/z^2 against sum_{n<=y} n e^{-n/N} (residue_check summed).
struct I1Check {
    double quad_value = 0.0;
    double target = 0.0;
    double gap = 0.0;
    bool converged = false;
};
I1Check i1_eval_check(std::uint64_t y, std::uint64_t N);

// The full circle identity at modest scale:
//   int S~(alpha)^2 T(y;-alpha) == sum_{n<=y} e^{-n/N} R(n).
struct CircleIdentityCheck {
    double quad_value = 0.0;
    double sieve_value = 0.0;
    double rel_gap = 0.0;
    bool converged = false;
};
CircleIdentityCheck circle_identity_check(std::uint64_t y, std::uint64_t N,
                                          const LambdaTable& table);

}  // namespace ga
