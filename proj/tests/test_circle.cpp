#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "ga/circle.hpp"
#include "ga/summation.hpp"

using namespace ga;

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

TEST_SUITE("circle") {

// ---- kernels ----

TEST_CASE("zpoint construction") {
    const ZPoint p = make_zpoint(100, 0.25);
    CHECK(p.z.real() == 0.01);
    CHECK(p.z.imag() == doctest::Approx(-kTwoPi * 0.25).epsilon(1e-15));
    CHECK_THROWS_AS(make_zpoint(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_zpoint(100, 0.7), std::invalid_argument);
}

TEST_CASE("V equals the exact geometric-series kernel") {
    // alpha = 0: V = 1/(e^{1/N} - 1)
    const std::complex<double> v0 = V(make_zpoint(100, 0.0));
    CHECK(v0.real() == doctest::Approx(99.500833331946).epsilon(1e-11));
    CHECK(v0.imag() == 0.0);

    // conjugate symmetry and closeness to the 1/z pole across the circle
    for (double a : {1e-6, 1e-3, 0.1, 0.3, 0.5}) {
        const ZPoint p = make_zpoint(50, a);
        const ZPoint q = make_zpoint(50, -a);
        CHECK(std::abs(V(q) - std::conj(V(p))) <= 1e-12 * std::abs(V(p)));
        CHECK(std::abs(V(p) - 1.0 / p.z) <= 0.7);  // analytic gap tends to -1/2
    }
}

TEST_CASE("T matches brute force and its standard bounds") {
    CHECK(T(7, 0.0) == std::complex<double>(7.0, 0.0));
    CHECK(T(7, 1.0) == std::complex<double>(7.0, 0.0));  // integer alpha limit
    for (double a : {0.1237, -0.37, 0.5, 1e-4}) {
        for (std::uint64_t y : {1ull, 2ull, 17ull, 50ull}) {
            std::complex<double> brute(0.0, 0.0);
            for (std::uint64_t k = 1; k <= y; ++k)
                brute += std::polar(1.0, kTwoPi * static_cast<double>(k) * a);
            const std::complex<double> got = T(y, a);
            CHECK(std::abs(got - brute) <= 1e-12 * (1.0 + std::abs(brute)));
            const double dist = std::abs(a - std::round(a));
            const double cap = std::min(static_cast<double>(y),
                                        dist > 0 ? 1.0 / (2.0 * dist) : 1e300);
            CHECK(std::abs(got) <= cap * (1.0 + 1e-12));
        }
    }
    // periodicity through the range reduction
    CHECK(std::abs(T(23, 0.3) - T(23, 7.3)) <= 1e-10);
    CHECK(fejer_L(50, 0.0) == doctest::Approx(2500.0).epsilon(1e-15));
    CHECK(fejer_L(50, 0.2) == doctest::Approx(std::norm(T(50, 0.2))).epsilon(1e-12));
}

// ---- truncation policy ----

TEST_CASE("exponential tail bound and configs") {
    const std::uint64_t N = 500;
    double prev = exp_sum_tail_bound(N, N);
    for (std::uint64_t M : {2 * N, 5 * N, 10 * N, 40 * N}) {
        const double cur = exp_sum_tail_bound(M, N);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(exp_config_default(N).trunc_len == 40 * N);
    CHECK(exp_config_probe(N).trunc_len == 9 * N);

    const ExpSumConfig c = exp_config_for_tol(N, 1e-7);
    CHECK(exp_sum_tail_bound(c.trunc_len, N) <= 1e-7);
    CHECK(exp_sum_tail_bound(c.trunc_len - 1, N) > 1e-7);
    CHECK(c.tail_tol <= 1e-7);
    // even 1e-300 is reachable: exp(-2000) underflows to zero, so only
    // nonpositive tolerances are rejected
    CHECK(exp_config_for_tol(N, 1e-300).trunc_len <= 2000 * N);
    CHECK_THROWS_AS(exp_config_for_tol(N, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(exp_config_for_tol(N, -1.0), std::invalid_argument);
}

// ---- weighted exponential sum ----

TEST_CASE("evaluator matches the naive term-by-term sum") {
    const LambdaTable& t = fixtures::table_100k();
    const std::uint64_t N = 100;
    const ExpSumConfig cfg = exp_config_default(N);  // trunc 4000
    const WeightedExpSum s(N, t, cfg);
    CHECK(s.trunc_len() == 4000);

    for (double a : {0.0, 0.1237, -0.3301, 0.25, 0.5, 1.0 / 800.0}) {
        std::complex<double> naive(0.0, 0.0);
        for (std::uint64_t m = 2; m <= 4000; ++m)
            if (t.lambda[m] > 0.0)
                naive += t.lambda[m] * std::exp(-static_cast<double>(m) / N) *
                         std::polar(1.0, kTwoPi * static_cast<double>(m) * a);
        CHECK(std::abs(s.eval(a) - naive) <= 1e-10 * (1.0 + std::abs(naive)));
    }
}

TEST_CASE("evaluator symmetry and batch determinism") {
    const LambdaTable& t = fixtures::table_100k();
    const WeightedExpSum s(1000, t, exp_config_probe(1000));
    for (double a : {0.017, 0.23, 0.499}) {
        const std::complex<double> plus = s.eval(a);
        const std::complex<double> minus = s.eval(-a);
        CHECK(std::abs(minus - std::conj(plus)) <= 1e-13 * std::abs(plus));
    }

    std::vector<double> grid;
    for (int i = 0; i < 257; ++i) grid.push_back(-0.5 + i / 512.0);
    std::vector<std::complex<double>> out1(grid.size()), out2(grid.size());
    s.eval_batch(grid.data(), grid.size(), out1.data());
    s.eval_batch(grid.data(), grid.size(), out2.data());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(out1[i] == out2[i]);                 // bitwise repeatable
        CHECK(out1[i] == s.eval(grid[i]));         // batch == scalar path
    }
}

TEST_CASE("S~ at the central point") {
    const LambdaTable& t = fixtures::table_100k();
    const std::complex<double> v =
        S_tilde(make_zpoint(10, 0.0), t, exp_config_default(10));
    CHECK(v.real() == doctest::Approx(8.3391920901066570).epsilon(1e-12));
    CHECK(std::abs(v.imag()) <= 1e-14);
}

// ---- quadrature plans ----

TEST_CASE("plan constructions") {
    const PanelPlan u = uniform_plan(0.0, 1.0, 4);
    REQUIRE(u.edges.size() == 5);
    CHECK(u.edges[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u.panels() == 4);

    const PanelPlan c = capped_plan(0.25, 0.5, 1000.0);
    CHECK(c.edges.front() == 0.25);
    CHECK(c.edges.back() == 0.5);
    for (std::size_t i = 0; i + 1 < c.edges.size(); ++i)
        CHECK(c.edges[i + 1] - c.edges[i] <= 3.5 / 1000.0 * (1 + 1e-12));

    const PanelPlan g = graded_plan(0.5, 100, 0.0);
    CHECK(g.edges.front() == 0.0);
    CHECK(g.edges.back() == doctest::Approx(0.5).epsilon(1e-15));
    for (std::size_t i = 0; i + 1 < g.edges.size(); ++i)
        CHECK(g.edges[i + 1] > g.edges[i]);
    // first octave boundary sits at 1/(8N), split four ways
    CHECK(g.edges[1] == doctest::Approx(1.0 / 3200.0).epsilon(1e-12));

    CHECK_THROWS_AS(uniform_plan(1.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(uniform_plan(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(capped_plan(0.0, 1.0, 1e12), std::invalid_argument);  // panel cap
    CHECK_THROWS_AS(graded_plan(0.0, 100, 1.0), std::invalid_argument);
}

TEST_CASE("quadrature exactness and identities") {
    // degree-3 polynomial: one 16-point panel is exact to roundoff
    const QuadResult cubic = quad(
        [](const double* a, std::size_t n, double* out) {
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * a[i] * a[i];
        },
        uniform_plan(0.0, 1.0, 1));
    CHECK(cubic.value == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(cubic.converged);

    // int_{-1/2}^{1/2} 1/|z|^2 = (N/pi) arctan(pi N); integrand is even, so
    // integrate [0, 1/2] through the graded plan and double
    for (std::uint64_t N : {100ull, 1000ull}) {
        const QuadResult r = quad(
            [N](const double* a, std::size_t n, double* out) {
                for (std::size_t i = 0; i < n; ++i)
                    out[i] = 2.0 / std::norm(make_zpoint(N, a[i]).z);
            },
            graded_plan(0.5, N, 0.0));
        const double target =
            static_cast<double>(N) / M_PI * std::atan(M_PI * static_cast<double>(N));
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("Fourier orthogonality through the quad layer") {
    const auto run = [](int m, int nn) {
        const int d = m - nn;
        return quad_multi(
            [d](const double* a, std::size_t n, double* out) {
                for (std::size_t i = 0; i < n; ++i) {
                    out[i] = std::cos(kTwoPi * d * a[i]);
                    out[n + i] = std::sin(kTwoPi * d * a[i]);
                }
            },
            2, capped_plan(-0.5, 0.5, std::abs(d) + 1.0));
    };
    const auto off = run(9, 4);
    CHECK(std::abs(off[0].value) <= 1e-10);
    CHECK(std::abs(off[1].value) <= 1e-10);
    const auto diag = run(6, 6);
    CHECK(diag[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(diag[1].value) <= 1e-12);
}

TEST_CASE("quad error handling and convergence reporting") {
    const BatchIntegrand f = [](const double* a, std::size_t n, double* out) {
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i];
    };
    PanelPlan empty;
    CHECK_THROWS_AS(quad(f, empty), std::invalid_argument);
    PanelPlan bad;
    bad.edges = {0.0, 0.5, 0.25};
    CHECK_THROWS_AS(quad(f, bad), std::invalid_argument);
    CHECK_THROWS_AS(quad_multi(f, 0, uniform_plan(0, 1, 1)), std::invalid_argument);

    // refinement disabled: the result is reported, but never claimed converged
    QuadOptions opt;
    opt.max_refine = 0;
    const QuadResult r = quad(f, uniform_plan(0.0, 1.0, 2), opt);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(!r.converged);
}

// ---- lemma-level checks ----

TEST_CASE("residue integral hits n e^{-n/N}") {
    for (std::uint64_t n : {1ull, 10ull, 100ull, 1000ull}) {
        const ResidueCheck c = residue_check(n, 1000);
        CHECK(c.converged);
        CHECK(c.target == doctest::Approx(static_cast<double>(n) *
                                          std::exp(-static_cast<double>(n) / 1000.0))
                              .epsilon(1e-13));
        CHECK(c.gap == doctest::Approx(std::abs(c.quad_value - c.target)).epsilon(1e-12));
        // the alpha-tail of the pole integral dominates: worst at n = 1
        CHECK(c.gap <= (n == 1 ? 0.05 : 1e-2));
    }
    CHECK_THROWS_AS(residue_check(0, 1000), std::invalid_argument);
}

TEST_CASE("summed residue integral") {
    const I1Check c = i1_eval_check(1000, 1000);
    CHECK(c.converged);
    CHECK(c.target == doctest::Approx(264424.974044).epsilon(1e-10));
    CHECK(c.gap <= 0.05);  // realized: ~0.009
}

TEST_CASE("mean square of S~ - 1/z") {
    const LambdaTable& t = fixtures::table_100k();
    const MeanSquareCheck c = mean_square_check(1000, t);
    CHECK(c.converged);
    CHECK(c.target == doctest::Approx(500.0 * std::log(1000.0)).epsilon(1e-14));
    CHECK(c.quad_value == doctest::Approx(2253.8354).epsilon(1e-5));
    // acceptance band: |quad - (N/2) log N| <= 2 N sqrt(log N)
    CHECK(c.gap <= 2.0 * 1000.0 * std::sqrt(std::log(1000.0)));
    // Parseval closes to quadrature precision under the shared truncation
    CHECK(std::abs(c.parseval_quad - c.parseval_sum) <= 1e-9 * c.parseval_sum);
}

TEST_CASE("Parseval pin at N = 500 with a long truncation") {
    const LambdaTable& t = fixtures::table_100k();
    ExpSumConfig cfg;
    cfg.trunc_len = 10'000;  // 20 N: quadratic tail mass ~ 1e-15
    cfg.tail_tol = exp_sum_tail_bound(cfg.trunc_len, 500);
    const MeanSquareCheck c = mean_square_check(500, t, cfg);
    CHECK(c.parseval_sum == doctest::Approx(1194.19483524).epsilon(1e-10));
    CHECK(std::abs(c.parseval_quad - c.parseval_sum) <= 1e-9 * c.parseval_sum);
}

TEST_CASE("windowed L2 profile") {
    const LambdaTable& t = fixtures::table_100k();
    const std::vector<double> xi = {1e-3, 1e-2, 1e-1, 0.5};
    const auto pts = lp_l2_profile(1000, xi, t);
    REQUIRE(pts.size() == 4);
    const double lN = std::log(1000.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].converged);
        CHECK(pts[i].ratio ==
              doctest::Approx(pts[i].integral / (1000.0 * pts[i].xi * lN * lN)).epsilon(1e-12));
        CHECK(pts[i].ratio <= 2.0);
        if (i > 0) CHECK(pts[i].integral > pts[i - 1].integral);  // nested windows
    }
    // full window: same integral the mean-square check measures
    CHECK(pts[3].integral == doctest::Approx(2253.835342).epsilon(1e-6));
    CHECK(pts[3].ratio == doctest::Approx(0.094467).epsilon(1e-3));
    CHECK_THROWS_AS(lp_l2_profile(1000, {0.7}, t), std::invalid_argument);
}

TEST_CASE("discrete cancellation identity") {
    const LambdaTable& t = fixtures::table_100k();
    const I2Check small = i2_identity_check(5, 10, t);
    CHECK(small.lhs == doctest::Approx(-3.5157295509079329).epsilon(1e-13));
    CHECK(small.gap <= 1e-8 * std::abs(small.rhs));

    const I2Check mid = i2_identity_check(500, 1000, t);
    CHECK(mid.gap <= 1e-8 * std::abs(mid.rhs));
    CHECK_THROWS_AS(i2_identity_check(1, 10, t), std::out_of_range);
}

TEST_CASE("dyadic decomposition of the |T|-weighted square") {
    const LambdaTable& t = fixtures::table_100k();
    const I3Decomposition d = i3_decomposition(1000, 1000, t);
    CHECK(d.converged);
    CHECK(d.central == doctest::Approx(4.8636).epsilon(2e-3));
    REQUIRE(d.shells.size() == 9);  // 2^9 / 1000 is the first power past 1/2
    CHECK(d.shells.front().a == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(d.shells.back().b == doctest::Approx(0.5).epsilon(1e-12));
    for (std::size_t i = 1; i < d.shells.size(); ++i)
        CHECK(d.shells[i].a == doctest::Approx(d.shells[i - 1].b).epsilon(1e-12));

    double total = d.central;
    for (const auto& s : d.shells) total += s.contribution;
    CHECK(d.total == doctest::Approx(total).epsilon(1e-12));
    CHECK(d.total == doctest::Approx(2989.55).epsilon(1e-4));

    const double lN = std::log(1000.0);
    CHECK(d.envelope == doctest::Approx(1000.0 * lN * lN * lN).epsilon(1e-14));
    CHECK(d.ratio == doctest::Approx(d.total / d.envelope).epsilon(1e-12));
    CHECK(d.ratio <= 0.05);
    CHECK_THROWS_AS(i3_decomposition(2, 1000, t), std::invalid_argument);
}

TEST_CASE("pointwise bound sweep") {
    const LambdaTable& t = fixtures::table_100k();
    const std::vector<double> grid = default_pointwise_grid(1000);
    REQUIRE(grid.size() == 64);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(0.5).epsilon(1e-15));
    for (std::size_t i = 2; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

    const PointwiseCheck c = pointwise_bound_check(1000, grid, t);
    CHECK(c.max_ratio <= 2.0);
    CHECK(c.max_ratio == doctest::Approx(0.1933).epsilon(5e-3));
    CHECK(c.argmax_alpha == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(pointwise_bound_check(1000, {}, t), std::invalid_argument);
}

TEST_CASE("step-function counterexample arithmetic") {
    const RemarkResult r = remark_counterexample(1'000'000, 1000.0);
    CHECK(r.integral_value == doctest::Approx(204322801.242715).epsilon(1e-9));
    CHECK(r.ratio_to_Nlog3N == doctest::Approx(0.07748471).epsilon(1e-6));
    const double lN = std::log(1e6);
    CHECK(r.l2_mass == doctest::Approx(0.5 * 1e6 * lN).epsilon(1e-12));
    CHECK(r.window_bound_ok);
    CHECK_THROWS_AS(remark_counterexample(100, 4.0), std::invalid_argument);
}

TEST_CASE("full identity at modest scale") {
    const LambdaTable& t = fixtures::table_100k();
    const CircleIdentityCheck c = circle_identity_check(300, 500, t);
    CHECK(c.converged);
    CHECK(c.sieve_value == doctest::Approx(29982.12479741).epsilon(1e-9));
    CHECK(c.rel_gap <= 1e-9);  // realized: ~6e-15
    CHECK_THROWS_AS(circle_identity_check(3, 500, t), std::invalid_argument);
}

}  // TEST_SUITE
