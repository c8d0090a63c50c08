#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ga/circle.hpp"
#include "ga/goldbach.hpp"
#include "ga/summation.hpp"

namespace ga {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

inline std::complex<double> unit_phase(double turns) {
    const double r = kTwoPi * std::remainder(turns, 1.0);
    return std::complex<double>(std::cos(r), std::sin(r));
}

inline std::complex<double> inv_z(double invN, double alpha) {
    return 1.0 / std::complex<double>(invN, -kTwoPi * alpha);
}

// every integrand below is even in alpha (coefficients are real, so the
// negative half-line contributes the conjugate); integrate [0, 1/2] and double
constexpr double kEven = 2.0;

}  // namespace

// ---- residue and i1 ----

ResidueCheck residue_check(std::uint64_t n, std::uint64_t N) {
    if (n == 0 || N < 2) throw std::invalid_argument("residue_check: n >= 1, N >= 2 required");
    const double invN = 1.0 / static_cast<double>(N);
    const double nd = static_cast<double>(n);

    const BatchIntegrand f = [invN, nd](const double* a, std::size_t cnt, double* out) {
        for (std::size_t i = 0; i < cnt; ++i) {
            const std::complex<double> iz = inv_z(invN, a[i]);
            out[i] = (unit_phase(-nd * a[i]) * iz * iz).real();
        }
    };
    // quarter-oscillation panels: the phase e(-n alpha) is the fastest factor
    const QuadResult r = quad(f, graded_plan(0.5, N, nd, 0.25));

    ResidueCheck out;
    out.quad_value = kEven * r.value;
    out.target = nd * std::exp(-nd * invN);
    out.gap = std::abs(out.quad_value - out.target);
    out.converged = r.converged;
    return out;
}

I1Check i1_eval_check(std::uint64_t y, std::uint64_t N) {
    if (y == 0 || N < 2) throw std::invalid_argument("i1_eval_check: y >= 1, N >= 2 required");
    const double invN = 1.0 / static_cast<double>(N);

    const BatchIntegrand f = [invN, y](const double* a, std::size_t cnt, double* out) {
        for (std::size_t i = 0; i < cnt; ++i) {
            const std::complex<double> iz = inv_z(invN, a[i]);
            out[i] = (T(y, -a[i]) * iz * iz).real();
        }
    };
    const QuadResult r = quad(f, graded_plan(0.5, N, static_cast<double>(y), 0.25));

    I1Check out;
    out.quad_value = kEven * r.value;
    Neumaier target;
    for (std::uint64_t n = 1; n <= y; ++n)
        target.add(static_cast<double>(n) * std::exp(-static_cast<double>(n) * invN));
    out.target = target.value();
    out.gap = std::abs(out.quad_value - out.target);
    out.converged = r.converged;
    return out;
}

// ---- mean square and windowed L2 ----

MeanSquareCheck mean_square_check(std::uint64_t N, const LambdaTable& table,
                                  const ExpSumConfig& cfg) {
    const ExpSumConfig c = cfg.trunc_len ? cfg : exp_config_probe(N);
    const WeightedExpSum S(N, table, c);
    const double invN = 1.0 / static_cast<double>(N);

    const BatchIntegrand f = [&S, invN](const double* a, std::size_t cnt, double* out) {
        std::vector<std::complex<double>> sv(cnt);
        S.eval_batch(a, cnt, sv.data());
        for (std::size_t i = 0; i < cnt; ++i) {
            out[i] = std::norm(sv[i] - inv_z(invN, a[i]));
            out[cnt + i] = std::norm(sv[i]);
        }
    };
    const PanelPlan plan = graded_plan(0.5, N, static_cast<double>(c.trunc_len));
    const std::vector<QuadResult> rs = quad_multi(f, 2, plan);

    MeanSquareCheck out;
    out.quad_value = kEven * rs[0].value;
    out.target = 0.5 * static_cast<double>(N) * std::log(static_cast<double>(N));
    out.gap = std::abs(out.quad_value - out.target);
    out.parseval_quad = kEven * rs[1].value;
    Neumaier ps;
    for (std::uint64_t m = 2; m <= c.trunc_len; ++m) {
        const double lm = table.lambda[m];
        if (lm > 0.0) ps.add(lm * lm * std::exp(-2.0 * static_cast<double>(m) * invN));
    }
    out.parseval_sum = ps.value();
    out.converged = rs[0].converged && rs[1].converged;
    return out;
}

std::vector<LpPoint> lp_l2_profile(std::uint64_t N, const std::vector<double>& xi_list,
                                   const LambdaTable& table, const ExpSumConfig& cfg) {
    const ExpSumConfig c = cfg.trunc_len ? cfg : exp_config_probe(N);
    const WeightedExpSum S(N, table, c);
    const double invN = 1.0 / static_cast<double>(N);
    const double Nd = static_cast<double>(N);
    const double log2N = std::log(Nd) * std::log(Nd);

    const BatchIntegrand f = [&S, invN](const double* a, std::size_t cnt, double* out) {
        std::vector<std::complex<double>> sv(cnt);
        S.eval_batch(a, cnt, sv.data());
        for (std::size_t i = 0; i < cnt; ++i) out[i] = std::norm(sv[i] - inv_z(invN, a[i]));
    };

    std::vector<LpPoint> profile;
    profile.reserve(xi_list.size());
    for (double xi : xi_list) {
        if (!(xi > 0.0 && xi <= 0.5))
            throw std::invalid_argument("lp_l2_profile: xi outside (0, 1/2]");
        const QuadResult r = quad(f, graded_plan(xi, N, static_cast<double>(c.trunc_len)));
        LpPoint p;
        p.xi = xi;
        p.integral = kEven * r.value;
        p.ratio = p.integral / (Nd * xi * log2N);
        p.converged = r.converged;
        profile.push_back(p);
    }
    return profile;
}

// ---- discrete cancellation identity ----

I2Check i2_identity_check(std::uint64_t y, std::uint64_t N, const LambdaTable& table) {
    if (y < 2 || y > table.n_max) throw std::out_of_range("i2_identity_check: y outside table");
    if (N < 2) throw std::invalid_argument("i2_identity_check: N >= 2 required");
    const double invN = 1.0 / static_cast<double>(N);

    I2Check out;
    Neumaier lhs, rhs;
    for (std::uint64_t n = 1; n <= y; ++n) {
        const double w = std::exp(-static_cast<double>(n) * invN);
        Neumaier inner;
        for (std::uint64_t m = 1; m < n; ++m) inner.add(table.lambda[m] - 1.0);
        lhs.add(w * inner.value());
        rhs.add(w * (table.psi_prefix[n - 1] - static_cast<double>(n - 1)));
    }
    out.lhs = lhs.value();
    out.rhs = rhs.value();
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

// ---- dyadic decomposition ----

I3Decomposition i3_decomposition(std::uint64_t y, std::uint64_t N,
                                 const LambdaTable& table, const ExpSumConfig& cfg) {
    if (y < 3) throw std::invalid_argument("i3_decomposition: y >= 3 required");
    const ExpSumConfig c = cfg.trunc_len ? cfg : exp_config_probe(N);
    const WeightedExpSum S(N, table, c);
    const double invN = 1.0 / static_cast<double>(N);
    const double f_max = static_cast<double>(c.trunc_len) + static_cast<double>(y);

    const BatchIntegrand f = [&S, invN, y](const double* a, std::size_t cnt, double* out) {
        std::vector<std::complex<double>> sv(cnt);
        S.eval_batch(a, cnt, sv.data());
        for (std::size_t i = 0; i < cnt; ++i)
            out[i] = std::abs(T(y, -a[i])) * std::norm(sv[i] - inv_z(invN, a[i]));
    };

    // |T| has kinks at its zeros, which caps how closely successive grades
    // can agree; the band on the final ratio is orders of magnitude wider
    QuadOptions opt;
    opt.rel_tol = 1e-4;

    I3Decomposition out;
    const double edge = 1.0 / static_cast<double>(y);
    const QuadResult rc = quad(f, graded_plan(edge, N, f_max), opt);
    out.central = kEven * rc.value;
    out.converged = rc.converged;

    Neumaier total;
    total.add(out.central);
    double a = edge;
    while (a < 0.5) {
        const double b = std::min(2.0 * a, 0.5);
        const QuadResult r = quad(f, capped_plan(a, b, f_max), opt);
        I3Shell shell;
        shell.a = a;
        shell.b = b;
        shell.contribution = kEven * r.value;
        out.shells.push_back(shell);
        total.add(shell.contribution);
        out.converged = out.converged && r.converged;
        a = b;
    }
    out.total = total.value();
    const double Nd = static_cast<double>(N);
    const double lN = std::log(Nd);
    out.envelope = Nd * lN * lN * std::log(static_cast<double>(y));
    out.ratio = out.total / out.envelope;
    return out;
}

// ---- pointwise bound ----

PointwiseCheck pointwise_bound_check(std::uint64_t N, const std::vector<double>& alpha_grid,
                                     const LambdaTable& table, const ExpSumConfig& cfg) {
    if (alpha_grid.empty()) throw std::invalid_argument("pointwise_bound_check: empty grid");
    const ExpSumConfig c = cfg.trunc_len ? cfg : exp_config_default(N);
    const WeightedExpSum S(N, table, c);
    const double Nd = static_cast<double>(N);
    const double invN = 1.0 / Nd;
    const double sqN = std::sqrt(Nd), lN = std::log(Nd);

    std::vector<std::complex<double>> sv(alpha_grid.size());
    S.eval_batch(alpha_grid.data(), alpha_grid.size(), sv.data());

    PointwiseCheck out;
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        const double alpha = alpha_grid[i];
        const double dev = std::abs(sv[i] - inv_z(invN, alpha));
        const double bound = sqN * (1.0 + std::sqrt(Nd * std::abs(alpha))) * lN;
        const double ratio = dev / bound;
        if (ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.argmax_alpha = alpha;
        }
    }
    return out;
}

std::vector<double> default_pointwise_grid(std::uint64_t N) {
    std::vector<double> grid;
    grid.reserve(64);
    grid.push_back(0.0);
    const double lo = 1.0 / (8.0 * static_cast<double>(N));
    const double step = std::pow(0.5 / lo, 1.0 / 62.0);
    double x = lo;
    for (int i = 0; i < 63; ++i, x *= step) grid.push_back(std::min(x, 0.5));
    return grid;
}

// ---- step-function counterexample ----

RemarkResult remark_counterexample(std::uint64_t N, double y) {
    if (N < 3) throw std::invalid_argument("remark_counterexample: N >= 3 required");
    const double Nd = static_cast<double>(N);
    const double lN = std::log(Nd);
    if (!(y > lN)) throw std::invalid_argument("remark_counterexample: needs y > log N");

    const double f2 = 0.25 * Nd * lN * lN;  // |f_N|^2 on its support

    RemarkResult out;
    out.integral_value = f2 * std::log(y / lN);
    out.ratio_to_Nlog3N = out.integral_value / (Nd * lN * lN * lN);
    out.l2_mass = 0.5 * Nd * lN;

    // windowed mass 2 min(xi, 1/log N) |f|^2 against N xi log^2 N across scales
    bool ok = true;
    const double lo = 1.0 / (8.0 * Nd);
    const double step = std::pow(0.5 / lo, 1.0 / 63.0);
    double xi = lo;
    for (int i = 0; i < 64; ++i, xi *= step) {
        const double mass = 2.0 * std::min(xi, 1.0 / lN) * f2;
        if (mass > Nd * xi * lN * lN * (1.0 + 1e-12)) ok = false;
    }
    out.window_bound_ok = ok;
    return out;
}

// ---- the full identity at modest scale ----

CircleIdentityCheck circle_identity_check(std::uint64_t y, std::uint64_t N,
                                          const LambdaTable& table) {
    if (y < 4) throw std::invalid_argument("circle_identity_check: y >= 4 required");
    const ExpSumConfig c = exp_config_for_tol(N, 1e-7);
    if (c.trunc_len > table.n_max || y > table.n_max)
        throw std::out_of_range("circle_identity_check: lambda table too short");
    const WeightedExpSum S(N, table, c);
    const double invN = 1.0 / static_cast<double>(N);

    const BatchIntegrand f = [&S, invN, y](const double* a, std::size_t cnt, double* out) {
        std::vector<std::complex<double>> sv(cnt);
        S.eval_batch(a, cnt, sv.data());
        for (std::size_t i = 0; i < cnt; ++i) out[i] = (sv[i] * sv[i] * T(y, -a[i])).real();
    };
    // S~^2 doubles the top frequency; T adds y on top
    const double f_max = 2.0 * static_cast<double>(c.trunc_len) + static_cast<double>(y);
    const QuadResult r = quad(f, graded_plan(0.5, N, f_max));

    CircleIdentityCheck out;
    out.quad_value = kEven * r.value;
    const RTable rt = r_table(y, 2, table, RMethod::direct);
    Neumaier sv;
    for (std::uint64_t n = 4; n <= y; ++n)
        sv.add(std::exp(-static_cast<double>(n) * invN) * rt.values[n]);
    out.sieve_value = sv.value();
    out.rel_gap = std::abs(out.quad_value - out.sieve_value) / std::abs(out.sieve_value);
    out.converged = r.converged;
    return out;
}

}  // namespace ga
