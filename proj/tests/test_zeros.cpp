#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "ga/summation.hpp"
#include "ga/zeros.hpp"

using namespace ga;

namespace {

// scratch zeros file with the given lines
std::string write_lines(const char* leaf, const std::vector<std::string>& lines) {
    const std::string path = fixtures::tmp_path(leaf);
    std::ofstream f(path);
    for (const auto& l : lines) f << l << "\n";
    return path;
}

}  // namespace

TEST_SUITE("zeros") {

TEST_CASE("data file loads and validates") {
    const ZeroTable& zt = fixtures::zeros_100k();
    REQUIRE(zt.gammas.size() == 100'000);
    CHECK(zt.gammas.front() == doctest::Approx(14.134725142).epsilon(1e-9));
    CHECK(zt.height() == doctest::Approx(74920.827498994).epsilon(1e-9));
    for (std::size_t j = 1; j < 2000; ++j) CHECK(zt.gammas[j] > zt.gammas[j - 1]);
}

TEST_CASE("builtin table matches the file head") {
    const ZeroTable& b = builtin_zeros();
    const ZeroTable& zt = fixtures::zeros_100k();
    REQUIRE(b.gammas.size() == 100);
    // the file is rounded to 9 decimals, the builtin to 12: agreement is
    // limited by the file's half-ulp
    for (std::size_t j = 0; j < 100; ++j)
        CHECK(std::abs(b.gammas[j] - zt.gammas[j]) <= 6e-10);
    // count gate holds for the embedded head too
    for (std::size_t j = 1; j <= b.gammas.size(); ++j)
        CHECK(std::abs((static_cast<double>(j) - 0.5) - rvm_estimate(b.gammas[j - 1])) <= 2.0);
}

TEST_CASE("count_below is inclusive") {
    const ZeroTable& zt = fixtures::zeros_100k();
    CHECK(zt.count_below(zt.gammas[9]) == 10);
    CHECK(zt.count_below(zt.gammas[9] - 1e-9) == 9);
    CHECK(zt.count_below(1.0) == 0);
    CHECK(zt.count_below(1e9) == 100'000);
    CHECK(rvm_estimate(1.0) == 0.0);  // below 2 pi the estimate is pinned at 0
}

TEST_CASE("loader rejects malformed tables") {
    CHECK_THROWS_AS(load_zeros(fixtures::tmp_path("ga_no_zeros_here.txt")),
                    std::runtime_error);

    const std::string bad_num =
        write_lines("ga_zeros_badnum.txt", {"14.134725", "twenty-one"});
    CHECK_THROWS_WITH_AS(load_zeros(bad_num),
                         doctest::Contains(":2: not a number"), std::runtime_error);

    const std::string descending =
        write_lines("ga_zeros_desc.txt", {"14.134725", "21.022040", "20.0"});
    CHECK_THROWS_WITH_AS(load_zeros(descending),
                         doctest::Contains("strictly increasing"), std::runtime_error);

    const std::string wrong_start = write_lines("ga_zeros_start.txt", {"15.0", "21.0"});
    CHECK_THROWS_WITH_AS(load_zeros(wrong_start),
                         doctest::Contains("first zeta zero"), std::runtime_error);

    // right start, then a gap: the running count drifts off the
    // Riemann-von Mangoldt curve and the gate fires
    const std::string gap = write_lines("ga_zeros_gap.txt", {"14.134725", "70.0", "5000.0"});
    CHECK_THROWS_WITH_AS(load_zeros(gap), doctest::Contains("zero-count gate"),
                         std::runtime_error);

    const std::string empty = write_lines("ga_zeros_empty.txt", {"# nothing", ""});
    CHECK_THROWS_AS(load_zeros(empty), std::runtime_error);

    for (const auto& p : {bad_num, descending, wrong_start, gap, empty})
        std::remove(p.c_str());
}

TEST_CASE("tail estimate: pins, monotonicity, preconditions") {
    CHECK(tail_estimate(1e4, 2, 1e4) == doctest::Approx(266.5037841873).epsilon(1e-9));
    const ZeroTable& zt = fixtures::zeros_100k();
    CHECK(tail_estimate(1e6, 2, zt.height()) == doctest::Approx(44127.451703).epsilon(1e-8));
    // monotone decreasing in the truncation height
    double prev = tail_estimate(1e4, 2, 100.0);
    for (double Z : {300.0, 1000.0, 3000.0, 10000.0, 74920.0}) {
        const double cur = tail_estimate(1e4, 2, Z);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(tail_estimate(1e4, 2, 10.0), std::invalid_argument);  // below 2 pi e
    CHECK_THROWS_AS(tail_estimate(0.5, 2, 100.0), std::invalid_argument);
}

TEST_CASE("zero_sum_k pins") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const double Z = zt.height();
    CHECK(zero_sum_k(1e3, 2, Z, zt).value == doctest::Approx(305.493910).epsilon(1e-6));
    CHECK(zero_sum_k(1e5, 2, Z, zt).value == doctest::Approx(-216073.993902).epsilon(1e-8));

    // truncating to the first zero only: one conjugate pair, hand-checkable
    const SumWithBound one = zero_sum_k(100.0, 2, 15.0, zt);
    CHECK(one.zeros_used == 1);
    CHECK(one.value == doctest::Approx(7.349604).epsilon(1e-5));
    const std::complex<double> rho(0.5, zt.gammas[0]);
    CHECK(std::abs(one.value) <= 2.0 * std::pow(100.0, 1.5) / std::abs(rho * (rho + 1.0)));

    const SumWithBound full = zero_sum_k(1e3, 2, Z, zt);
    CHECK(full.zeros_used == 100'000);
    CHECK(full.trunc_height == Z);
    CHECK(full.tail_bound == doctest::Approx(tail_estimate(1e3, 2, Z)).epsilon(1e-14));

    CHECK_THROWS_AS(zero_sum_k(1.0, 2, Z, zt), std::invalid_argument);
    CHECK_THROWS_AS(zero_sum_k(1e3, 1, Z, zt), std::invalid_argument);
    CHECK_THROWS_AS(zero_sum_k(1e3, 2, Z + 1.0, zt), std::out_of_range);
}

TEST_CASE("folding matches explicit conjugate pairs") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const double Z = 0.5 * (zt.gammas[49] + zt.gammas[50]);  // exactly 50 zeros
    const double x = 500.0;
    const int k = 3;

    // oracle: enumerate rho = 1/2 +- i gamma separately and sum the complex
    // terms; the imaginary parts must cancel and the real part must equal the
    // folded sum
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < 50; ++j) {
        for (double sign : {1.0, -1.0}) {
            const std::complex<double> rho(0.5, sign * zt.gammas[j]);
            std::complex<double> den = rho;
            for (int i = 1; i < k; ++i) den *= rho + static_cast<double>(i);
            acc += std::pow(std::complex<double>(x, 0.0), rho + static_cast<double>(k - 1)) / den;
        }
    }
    CHECK(std::abs(acc.imag()) <= 1e-9 * std::abs(acc.real()));

    const SumWithBound folded = zero_sum_k(x, k, Z, zt);
    CHECK(folded.zeros_used == 50);
    CHECK(folded.value == doctest::Approx(acc.real()).epsilon(1e-10));
}

TEST_CASE("truncation error sits inside the tail bound") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const SumWithBound trunc = zero_sum_k(1e3, 2, 5000.0, zt);
    const SumWithBound full = zero_sum_k(1e3, 2, zt.height(), zt);
    // oscillation makes the realized tail far smaller than the envelope, but
    // it must never exceed the sum of the two reported bounds
    CHECK(std::abs(trunc.value - full.value) <= trunc.tail_bound + full.tail_bound);
    CHECK(std::abs(trunc.value - full.value) <= 0.1);  // realized: ~4.4e-2
}

TEST_CASE("zero sums vary continuously in x") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const double Z = zt.height();
    const double a = zero_sum_k(1e3, 2, Z, zt).value;
    const double b = zero_sum_k(1e3 + 1e-6, 2, Z, zt).value;
    CHECK(std::abs(a - b) <= 1e-3);  // realized: ~1.5e-6
}

TEST_CASE("interval sum equals the difference of cumulative sums") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const double Z = zt.height();
    const double N = 1e4, H = 1e3;
    const SumWithBound inter = zero_sum_interval(N, H, Z, zt);
    const double a = zero_sum_k(N + H, 2, Z, zt).value;
    const double b = zero_sum_k(N, 2, Z, zt).value;
    // same truncation on both routes: the identity is exact in exact
    // arithmetic, so only accumulation rounding separates them
    CHECK(inter.value == doctest::Approx(a - b).epsilon(1e-10));
    CHECK(inter.tail_bound ==
          doctest::Approx(tail_estimate(N + H, 2, Z) + tail_estimate(N, 2, Z)).epsilon(1e-14));
    CHECK_THROWS_AS(zero_sum_interval(100.0, 200.0, Z, zt), std::invalid_argument);
}

TEST_CASE("explicit formula reproduces psi0") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const LambdaTable& t = fixtures::table_100k();
    const double Z = zt.height();

    // off the integers the truncated formula lands within ~3e-3 at t = 100.5
    const SumWithBound mid = psi0_explicit(100.5, Z, zt);
    CHECK(std::abs(mid.value - psi0(100.5, t)) <= 0.01);
    CHECK(mid.tail_bound > 0.0);

    // at prime jumps the formula converges to the half-weight value
    for (double tt : {101.0, 103.0})
        CHECK(std::abs(psi0_explicit(tt, Z, zt).value - psi0(tt, t)) <= 0.05);

    // more zeros, smaller error
    const double err_low = std::abs(psi0_explicit(100.5, 100.0, zt).value - psi0(100.5, t));
    const double err_full = std::abs(mid.value - psi0(100.5, t));
    CHECK(err_full < err_low);

    CHECK_THROWS_AS(psi0_explicit(100.5, Z + 10.0, zt), std::out_of_range);
}

TEST_CASE("constant recovered from the explicit formula") {
    const double fit = fit_zeta_constant(fixtures::zeros_100k(), fixtures::table_100k());
    CHECK(fit == doctest::Approx(1.839138).epsilon(1e-4));
    CHECK(std::abs(fit - std::log(2.0 * M_PI)) <= 0.002);
}

TEST_CASE("sieve vs zero-sum cross check") {
    const ZeroTable& zt = fixtures::zeros_100k();
    const LambdaTable& t = fixtures::table_100k();
    const double Z = zt.height();

    const SumIntegralCheck c3 = check_sum_integral(1000, Z, t, zt);
    // lhs recomputed independently here
    Neumaier lhs;
    for (std::uint64_t n = 1; n <= 1000; ++n)
        lhs.add(t.psi_prefix[n] - static_cast<double>(n));
    CHECK(c3.lhs == doctest::Approx(lhs.value()).epsilon(1e-13));
    CHECK(c3.rhs == doctest::Approx(-zero_sum_k(1000.0, 2, Z, zt).value).epsilon(1e-13));
    CHECK(c3.normalized_gap == doctest::Approx(1.3392).epsilon(2e-3));

    const SumIntegralCheck c4 = check_sum_integral(10'000, Z, t, zt);
    CHECK(c4.lhs == doctest::Approx(-12307.9530).epsilon(1e-6));
    CHECK(c4.normalized_gap == doctest::Approx(1.3363).epsilon(2e-3));
    CHECK(c4.normalized_gap <= 2.0);

    CHECK_THROWS_AS(check_sum_integral(1, Z, t, zt), std::out_of_range);
}

}  // TEST_SUITE
