#include "ga/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ga/summation.hpp"

namespace ga {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kLog2Pi = 1.837877066409345483560659;  // -zeta'/zeta(0) = log(2pi)
constexpr double kTailFloor = 17.0795;                  // 2*pi*e, validity floor of tail_estimate
}  // namespace

std::size_t ZeroTable::count_below(double Z) const {
    return static_cast<std::size_t>(
        std::upper_bound(gammas.begin(), gammas.end(), Z) - gammas.begin());
}

double rvm_estimate(double T) {
    if (T <= kTwoPi) return 0.0;
    const double u = T / kTwoPi;
    return u * std::log(u) - u + 0.875;
}

// ---- ingestion ----

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zeros file: " + path);

    ZeroTable t;
    t.source_id = path;
    std::string line;
    std::size_t lineno = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        const char* begin = line.c_str() + start;
        char* end = nullptr;
        const double g = std::strtod(begin, &end);
        if (end == begin)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number");
        while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
        if (*end != '\0')
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": trailing garbage after ordinate");
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ordinate must be a positive finite number");
        if (g <= prev)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": ordinates must be strictly increasing");
        prev = g;
        t.gammas.push_back(g);
    }
    if (t.gammas.empty()) throw std::runtime_error("zeros file is empty: " + path);

    if (t.gammas.front() < 14.13 || t.gammas.front() > 14.14)
        throw std::runtime_error(path + ": first ordinate is not the first zeta zero (" +
                                 std::to_string(t.gammas.front()) + ")");

    // count gate: at gamma_j the prefix count sits between j-1 (just below)
    // and j (at), so compare j - 1/2 against the Riemann-von Mangoldt
    // estimate; a corrupt or truncated table drifts linearly and trips this
    for (std::size_t j = 1; j <= t.gammas.size(); ++j) {
        const double dev = (static_cast<double>(j) - 0.5) - rvm_estimate(t.gammas[j - 1]);
        if (std::abs(dev) > 2.0)
            throw std::runtime_error(path + ": zero-count gate failed at index " +
                                     std::to_string(j) + " (deviation " + std::to_string(dev) +
                                     "); table looks corrupt");
    }
    return t;
}

// ---- tail estimator ----

double tail_estimate(double x, int k, double Z) {
    if (!(Z >= kTailFloor))
        throw std::invalid_argument("tail_estimate: requires Z >= 2*pi*e");
    if (!(x > 1.0)) throw std::invalid_argument("tail_estimate: requires x > 1");
    return std::pow(x, k - 0.5) / M_PI * (std::log(Z / kTwoPi) + 1.0) / Z;
}

namespace {

// tail bound used inside the zero sums; evaluated at the estimator's
// validity floor when Z sits below it (e.g. deliberate truncation to an
// empty sum), which under-reports the discarded mass but keeps the field
// finite and monotone
double tail_estimate_clamped(double x, int k, double Z) {
    return tail_estimate(x, k, std::max(Z, kTailFloor));
}

}  // namespace

// ---- zero sums ----

SumWithBound zero_sum_k(double x, int k, double Z, const ZeroTable& zt) {
    if (!(x >= 2.0)) throw std::invalid_argument("zero_sum_k: requires x >= 2");
    if (k < 2 || k > 8) throw std::invalid_argument("zero_sum_k: k out of supported band");
    if (Z > zt.height() + 1e-9)
        throw std::out_of_range("zero_sum_k: Z exceeds table height");

    const std::size_t count = zt.count_below(Z);
    const double lx = std::log(x);
    const double amp = std::pow(x, k - 0.5);

    // ascending gamma in fixed chunks; per-chunk compensated partials merged
    // in order, so the value is independent of any parallel split
    constexpr std::size_t kChunk = 4096;
    Neumaier total;
    for (std::size_t base = 0; base < count; base += kChunk) {
        const std::size_t hi = std::min(base + kChunk, count);
        Neumaier part;
        for (std::size_t i = base; i < hi; ++i) {
            const double g = zt.gammas[i];
            std::complex<double> den(0.5, g);
            for (int j = 1; j < k; ++j) den *= std::complex<double>(0.5 + j, g);
            const std::complex<double> num = std::polar(amp, g * lx);
            part.add(2.0 * (num / den).real());
        }
        total.add(part);
    }

    SumWithBound out;
    out.value = total.value();
    out.tail_bound = tail_estimate_clamped(x, k, Z);
    out.trunc_height = Z;
    out.zeros_used = count;
    return out;
}

SumWithBound zero_sum_interval(double N, double H, double Z, const ZeroTable& zt) {
    if (!(H >= 2.0 && H <= N)) throw std::invalid_argument("zero_sum_interval: requires 2 <= H <= N");
    if (Z > zt.height() + 1e-9)
        throw std::out_of_range("zero_sum_interval: Z exceeds table height");

    const std::size_t count = zt.count_below(Z);
    const double la = std::log(N + H), lb = std::log(N);
    const double aa = std::pow(N + H, 1.5), ab = std::pow(N, 1.5);

    constexpr std::size_t kChunk = 4096;
    Neumaier total;
    for (std::size_t base = 0; base < count; base += kChunk) {
        const std::size_t hi = std::min(base + kChunk, count);
        Neumaier part;
        for (std::size_t i = base; i < hi; ++i) {
            const double g = zt.gammas[i];
            const std::complex<double> den = std::complex<double>(0.5, g) *
                                             std::complex<double>(1.5, g);
            // difference taken per zero: the two powers share the phase
            // structure, so the subtraction happens before any large sums
            const std::complex<double> num = std::polar(aa, g * la) - std::polar(ab, g * lb);
            part.add(2.0 * (num / den).real());
        }
        total.add(part);
    }

    SumWithBound out;
    out.value = total.value();
    out.tail_bound =
        tail_estimate_clamped(N + H, 2, Z) + tail_estimate_clamped(N, 2, Z);
    out.trunc_height = Z;
    out.zeros_used = count;
    return out;
}

// ---- explicit formula ----

SumWithBound psi0_explicit(double t, double Z, const ZeroTable& zt, double tail_coeff) {
    if (!(t >= 2.0)) throw std::invalid_argument("psi0_explicit: requires t >= 2");
    if (Z > zt.height() + 1e-9)
        throw std::out_of_range("psi0_explicit: Z exceeds table height");

    const std::size_t count = zt.count_below(Z);
    const double lt = std::log(t);
    const double amp = std::sqrt(t);

    constexpr std::size_t kChunk = 4096;
    Neumaier zsum;
    for (std::size_t base = 0; base < count; base += kChunk) {
        const std::size_t hi = std::min(base + kChunk, count);
        Neumaier part;
        for (std::size_t i = base; i < hi; ++i) {
            const double g = zt.gammas[i];
            const std::complex<double> term = std::polar(amp, g * lt) / std::complex<double>(0.5, g);
            part.add(2.0 * term.real());
        }
        zsum.add(part);
    }

    const double dist = std::abs(t - std::round(t));
    const double Zc = std::max(Z, 2.0);
    // the proximity factor saturates at 1 when t sits on an integer
    const double near = (dist == 0.0) ? 1.0 : std::min(1.0, t / (Zc * dist));
    const double log_tz = std::log(t * Zc);
    const double tail = tail_coeff * ((t / Zc) * log_tz * log_tz + lt * near);

    SumWithBound out;
    out.value = t - zsum.value() - kLog2Pi - 0.5 * std::log1p(-1.0 / (t * t));
    out.tail_bound = tail;
    out.trunc_height = Z;
    out.zeros_used = count;
    return out;
}

double fit_zeta_constant(const ZeroTable& zt, const LambdaTable& table) {
    const double Z = zt.height();
    const double ts[3] = {10.5, 100.5, 1000.5};
    Neumaier acc;
    for (double t : ts) {
        // psi0_explicit already subtracts log(2pi); add it back so the
        // residual *is* the constant being fitted
        const SumWithBound s = psi0_explicit(t, Z, zt);
        acc.add(s.value + kLog2Pi - psi0(t, table));
    }
    return acc.value() / 3.0;
}

// ---- sieve vs zero-sum cross check ----

SumIntegralCheck check_sum_integral(std::uint64_t M, double Z,
                                    const LambdaTable& table, const ZeroTable& zt) {
    if (M < 2 || M > table.n_max)
        throw std::out_of_range("check_sum_integral: M outside table range");

    Neumaier lhs;
    for (std::uint64_t n = 1; n <= M; ++n)
        lhs.add(table.psi_prefix[n] - static_cast<double>(n));

    const SumWithBound zs = zero_sum_k(static_cast<double>(M), 2, Z, zt);

    SumIntegralCheck out;
    out.lhs = lhs.value();
    out.rhs = -zs.value;
    out.normalized_gap = std::abs(out.lhs - out.rhs) / static_cast<double>(M);
    out.tail_bound = zs.tail_bound;
    return out;
}

}  // namespace ga
