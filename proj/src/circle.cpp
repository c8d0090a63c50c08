#include "ga/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ga/summation.hpp"

namespace ga {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

// ---- the circle parameter and kernels ----

ZPoint make_zpoint(std::uint64_t N, double alpha) {
    if (N < 2) throw std::invalid_argument("make_zpoint: N >= 2 required");
    if (!(alpha >= -0.5 && alpha <= 0.5))
        throw std::invalid_argument("make_zpoint: alpha outside [-1/2, 1/2]");
    ZPoint p;
    p.N = N;
    p.alpha = alpha;
    p.z = std::complex<double>(1.0 / static_cast<double>(N), -kTwoPi * alpha);
    return p;
}

std::complex<double> V(const ZPoint& p) {
    // e^z - 1 with x = Re z near 0: the real part is expm1(x) cos y - 2 sin^2(y/2),
    // which keeps relative precision at the alpha -> 0 peak where e^z - 1 ~ z
    const double x = p.z.real(), y = p.z.imag();
    const double s = std::sin(0.5 * y);
    const std::complex<double> den(std::expm1(x) * std::cos(y) - 2.0 * s * s,
                                   std::exp(x) * std::sin(y));
    return 1.0 / den;
}

std::complex<double> T(std::uint64_t y, double alpha) {
    const double a = std::remainder(alpha, 1.0);
    if (a == 0.0) return static_cast<double>(y);
    const double yd = static_cast<double>(y);
    // e(a(y+1)/2) sin(pi y a) / sin(pi a); both trig arguments are range
    // reduced through remainder(., 2), which is exact in binary arithmetic
    const double rn = std::remainder(yd * a, 2.0);
    const double rp = std::remainder((yd + 1.0) * a, 2.0);
    const double ratio = std::sin(M_PI * rn) / std::sin(M_PI * a);
    return std::complex<double>(std::cos(M_PI * rp), std::sin(M_PI * rp)) * ratio;
}

double fejer_L(std::uint64_t N, double alpha) {
    const double a = std::remainder(alpha, 1.0);
    const double Nd = static_cast<double>(N);
    if (a == 0.0) return Nd * Nd;
    const double rn = std::remainder(Nd * a, 2.0);
    const double ratio = std::sin(M_PI * rn) / std::sin(M_PI * a);
    return ratio * ratio;
}

// ---- truncation policy ----

double exp_sum_tail_bound(std::uint64_t trunc_len, std::uint64_t N) {
    const double Nd = static_cast<double>(N);
    const double M = static_cast<double>(trunc_len);
    return Nd * std::exp(-M / Nd) * (std::log(M + 2.0) + 1.0);
}

ExpSumConfig exp_config_default(std::uint64_t N) {
    ExpSumConfig c;
    c.trunc_len = 40 * N;
    c.tail_tol = exp_sum_tail_bound(c.trunc_len, N);
    return c;
}

ExpSumConfig exp_config_for_tol(std::uint64_t N, double tol_abs) {
    if (!(tol_abs > 0.0)) throw std::invalid_argument("exp_config_for_tol: tol must be positive");
    std::uint64_t lo = 1, hi = 2000 * N;
    if (exp_sum_tail_bound(hi, N) > tol_abs)
        throw std::invalid_argument("exp_config_for_tol: tolerance unreachably small");
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (exp_sum_tail_bound(mid, N) <= tol_abs)
            hi = mid;
        else
            lo = mid + 1;
    }
    ExpSumConfig c;
    c.trunc_len = lo;
    c.tail_tol = exp_sum_tail_bound(lo, N);
    return c;
}

ExpSumConfig exp_config_probe(std::uint64_t N) {
    ExpSumConfig c;
    c.trunc_len = 9 * N;
    c.tail_tol = exp_sum_tail_bound(c.trunc_len, N);
    return c;
}

// ---- weighted exponential sum ----

WeightedExpSum::WeightedExpSum(std::uint64_t N, const LambdaTable& table,
                               const ExpSumConfig& cfg) {
    if (N < 2) throw std::invalid_argument("WeightedExpSum: N >= 2 required");
    if (cfg.trunc_len < 2 || cfg.trunc_len > table.n_max)
        throw std::out_of_range("WeightedExpSum: trunc_len outside table range");
    if (cfg.trunc_len > 0xFFFFFFFFull)
        throw std::out_of_range("WeightedExpSum: trunc_len too large");
    N_ = N;
    trunc_len_ = cfg.trunc_len;
    tail_bound_ = exp_sum_tail_bound(trunc_len_, N_);

    const double invN = 1.0 / static_cast<double>(N);
    for (std::uint64_t m = 2; m <= trunc_len_; ++m) {
        const double lm = table.lambda[m];
        if (lm > 0.0) {
            m_.push_back(static_cast<std::uint32_t>(m));
            coeff_.push_back(lm * std::exp(-static_cast<double>(m) * invN));
        }
    }
}

namespace {

inline std::complex<double> unit_phase(double turns) {
    const double r = kTwoPi * std::remainder(turns, 1.0);
    return std::complex<double>(std::cos(r), std::sin(r));
}

constexpr std::size_t kGapTable = 512;
constexpr std::size_t kBlock = 2048;  // re-anchor period; drift stays ~1e-13

}  // namespace

std::complex<double> WeightedExpSum::eval(double alpha) const {
    const std::size_t n = m_.size();
    if (n == 0) return {0.0, 0.0};

    // rotations for all gaps up to the table size; larger gaps (rare) fall
    // back to a direct anchor
    std::complex<double> rot[kGapTable];
    rot[0] = {1.0, 0.0};
    rot[1] = unit_phase(alpha);
    for (std::size_t g = 2; g < kGapTable; ++g) rot[g] = rot[g - 1] * rot[1];

    NeumaierC total;
    std::size_t i = 0;
    while (i < n) {
        const std::size_t hi = std::min(i + kBlock, n);
        std::complex<double> cur = unit_phase(static_cast<double>(m_[i]) * alpha);
        double re = coeff_[i] * cur.real();
        double im = coeff_[i] * cur.imag();
        std::uint32_t prev = m_[i];
        for (std::size_t j = i + 1; j < hi; ++j) {
            const std::uint32_t gap = m_[j] - prev;
            if (gap < kGapTable)
                cur *= rot[gap];
            else
                cur = unit_phase(static_cast<double>(m_[j]) * alpha);
            prev = m_[j];
            re += coeff_[j] * cur.real();
            im += coeff_[j] * cur.imag();
        }
        total.add(std::complex<double>(re, im));
        i = hi;
    }
    return total.value();
}

void WeightedExpSum::eval_batch(const double* alpha, std::size_t n,
                                std::complex<double>* out) const {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[i] = eval(alpha[i]);
}

std::complex<double> S_tilde(const ZPoint& p, const LambdaTable& table,
                             const ExpSumConfig& cfg) {
    return WeightedExpSum(p.N, table, cfg).eval(p.alpha);
}

}  // namespace ga
