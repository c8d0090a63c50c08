// Command-line front end.  Subcommands compute the library's sums and checks,
// emit experiment reports as CSV (stdout or --out), and compare the measured
// numbers against the calibrated gates.
//
// Exit codes: 0 computation ran and every gate held, 2 a gate was exceeded,
// 1 usage or I/O error.  Progress goes to stderr, results to stdout.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "ga/arith.hpp"
#include "ga/calibration.hpp"
#include "ga/circle.hpp"
#include "ga/experiments.hpp"
#include "ga/goldbach.hpp"
#include "ga/zeros.hpp"

#ifndef GA_DATA_DIR
#define GA_DATA_DIR "data"
#endif

using namespace ga;

namespace {

struct GlobalOpts {
    std::string data_dir;
    std::string zeros_path;      // overrides data_dir/zeros_100k.txt
    std::string constants_path;  // overrides the builtin calibration
    std::string out;             // CSV destination; empty = stdout
    int threads = 0;
    bool stamp = false;  // write wall time into the report metadata
};

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string now_iso_utc() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

const Calibration& gates(const GlobalOpts& g) {
    static Calibration override_cal;
    static bool loaded = false;
    if (!g.constants_path.empty()) {
        if (!loaded) {
            override_cal = load_calibration(g.constants_path);
            loaded = true;
        }
        return override_cal;
    }
    return builtin_calibration();
}

std::string zeros_path(const GlobalOpts& g) {
    if (!g.zeros_path.empty()) return g.zeros_path;
    return g.data_dir + "/zeros_100k.txt";
}

// sieve with optional binary cache via GOLDBACH_CACHE (or --cache on the
// sieve subcommand); an existing cache at least as large is reused
LambdaTable acquire_table(std::uint64_t need, const std::string& cache_override) {
    std::string cache = cache_override;
    if (cache.empty())
        if (const char* e = std::getenv("GOLDBACH_CACHE"); e && *e) cache = e;

    if (!cache.empty()) {
        try {
            LambdaTable t = read_lambda_cache(cache);
            if (t.n_max >= need) {
                std::fprintf(stderr, "sieve: reusing cache %s (n_max %llu)\n", cache.c_str(),
                             static_cast<unsigned long long>(t.n_max));
                return t;
            }
            std::fprintf(stderr, "sieve: cache %s too small (n_max %llu < %llu), rebuilding\n",
                         cache.c_str(), static_cast<unsigned long long>(t.n_max),
                         static_cast<unsigned long long>(need));
        } catch (const std::exception& e) {
            std::fprintf(stderr, "sieve: cache unusable (%s), rebuilding\n", e.what());
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    LambdaTable t = sieve_lambda(need);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "sieve: built n_max %llu in %.2fs\n",
                 static_cast<unsigned long long>(need), secs);
    if (!cache.empty()) {
        write_lambda_cache(t, cache);
        std::fprintf(stderr, "sieve: cached to %s\n", cache.c_str());
    }
    return t;
}

ZeroTable acquire_zeros(const GlobalOpts& g) {
    const std::string path = zeros_path(g);
    const auto t0 = std::chrono::steady_clock::now();
    ZeroTable zt = load_zeros(path);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "zeros: %zu ordinates from %s (height %.3f) in %.2fs\n",
                 zt.gammas.size(), path.c_str(), zt.height(), secs);
    return zt;
}

// stamps, emits, applies the gate; returns the process exit code
int finish_report(ExperimentReport& rep, const GlobalOpts& g, double worst, double limit,
                  const std::string& gate_name) {
    rep.set_meta("gate_name", gate_name);
    rep.set_meta("gate_limit", fmt6(limit));
    if (!g.constants_path.empty()) {
        char buf[24];
        std::snprintf(buf, sizeof buf, "0x%016llx",
                      static_cast<unsigned long long>(gates(g).file_hash));
        rep.set_meta("constants_hash", buf);
    }
    if (g.stamp) rep.set_meta("timestamp", now_iso_utc());

    if (g.out.empty()) {
        const std::string csv = csv_string(rep);
        std::fwrite(csv.data(), 1, csv.size(), stdout);
    } else {
        emit_csv(rep, g.out);
        std::fprintf(stderr, "report: wrote %s\n", g.out.c_str());
    }

    const bool ok = worst <= limit;
    std::fprintf(stderr, "gate %s: worst %s vs limit %s -> %s\n", gate_name.c_str(),
                 fmt6(worst).c_str(), fmt6(limit).c_str(), ok ? "PASS" : "FAIL");
    return ok ? 0 : 2;
}

ReportRow make_row(std::vector<std::pair<std::string, double>> params, double lhs,
                   double main_term, double zero_sum, double normalized, double tail = 0.0,
                   bool flagged = false) {
    ReportRow r;
    r.params = std::move(params);
    r.lhs = lhs;
    r.main_term = main_term;
    r.zero_sum = zero_sum;
    r.delta = lhs - main_term - zero_sum;
    r.normalized = normalized;
    r.tail_bound = tail;
    r.flagged = flagged;
    return r;
}

void stamp_minimal(ExperimentReport& rep) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(builtin_calibration().file_hash));
    rep.set_meta("constants_hash", buf);
    rep.set_meta("timestamp", "unset");
}

// ---- plain subcommands ----

int cmd_sieve(const GlobalOpts&, std::uint64_t n_max, const std::string& cache) {
    const LambdaTable t = acquire_table(n_max, cache);
    std::size_t pp = 0;
    for (std::uint64_t n = 2; n <= t.n_max; ++n)
        if (t.lambda[n] > 0.0) ++pp;
    std::printf("n_max = %llu\nprime_powers = %zu\npsi(n_max) = %.12g\n",
                static_cast<unsigned long long>(t.n_max), pp, t.psi_prefix[t.n_max]);
    return 0;
}

int cmd_rsum(const GlobalOpts&, std::uint64_t N, int k) {
    const LambdaTable t = acquire_table(N, "");
    const double v = sum_Rk(N, k, t);
    std::printf("sum_R%d(%llu) = %.12g\n", k, static_cast<unsigned long long>(N), v);
    return 0;
}

int cmd_zerosum(const GlobalOpts& g, double x, int k, double height) {
    const ZeroTable zt = acquire_zeros(g);
    const double Z = height > 0.0 ? height : zt.height();
    const SumWithBound s = zero_sum_k(x, k, Z, zt);
    std::printf("value = %.12g\ntail_bound = %.12g\nzeros_used = %zu\ntrunc_height = %.12g\n",
                s.value, s.tail_bound, s.zeros_used, s.trunc_height);
    return 0;
}

// ---- verify ----

int cmd_verify_thm1(const GlobalOpts& g, const std::vector<std::uint64_t>& Ns, double height,
                    bool ablate) {
    std::uint64_t need = 2;
    for (auto N : Ns) need = std::max(need, N);
    const LambdaTable t = acquire_table(need, "");
    const ZeroTable zt = acquire_zeros(g);
    const double Z = height > 0.0 ? height : zt.height();

    ExperimentReport rep = verify_theorem1(Ns, t, zt, Z, ablate);
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.normalized);
    return finish_report(rep, g, worst, gates(g).get("thm1_normalized_max"),
                         "thm1_normalized_max");
}

int cmd_verify_thm2(const GlobalOpts& g, std::uint64_t N, std::vector<std::uint64_t> ys) {
    if (ys.empty()) ys = {N / 100, N / 10, N / 2, N};
    const LambdaTable t = acquire_table(N, "");
    const ZeroTable zt = acquire_zeros(g);
    ExperimentReport rep = verify_theorem2(N, ys, t, zt);
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.normalized);
    return finish_report(rep, g, worst, gates(g).get("thm2_normalized_max"),
                         "thm2_normalized_max");
}

int cmd_verify_thm3(const GlobalOpts& g, const std::vector<std::uint64_t>& Ns, int k,
                    double height, bool ablate) {
    std::uint64_t need = 2;
    for (auto N : Ns) need = std::max(need, N);
    const LambdaTable t = acquire_table(need, "");
    const ZeroTable zt = acquire_zeros(g);
    const double Z = height > 0.0 ? height : zt.height();

    ExperimentReport rep = verify_theorem3(Ns, k, t, zt, Z, ablate);
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.normalized);
    return finish_report(rep, g, worst, gates(g).get("thm3_normalized_max"),
                         "thm3_normalized_max");
}

int cmd_verify_thm4(const GlobalOpts& g, std::uint64_t N, const std::vector<std::uint64_t>& Hs,
                    double height) {
    std::uint64_t h_max = 0;
    for (auto H : Hs) h_max = std::max(h_max, H);
    const LambdaTable t = acquire_table(N + h_max, "");
    const ZeroTable zt = acquire_zeros(g);
    const double Z = height > 0.0 ? height : zt.height();

    ExperimentReport rep = verify_theorem4(N, Hs, t, zt, Z);
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, r.normalized);
    return finish_report(rep, g, worst, gates(g).get("thm4_normalized_max"),
                         "thm4_normalized_max");
}

// ---- lemma checks ----

int cmd_lemma_residue(const GlobalOpts& g, const std::vector<std::uint64_t>& ns,
                      std::uint64_t N) {
    ExperimentReport rep;
    rep.experiment = "lemma_residue";
    stamp_minimal(rep);
    double worst = 0.0;
    for (auto n : ns) {
        std::fprintf(stderr, "residue: n = %llu\n", static_cast<unsigned long long>(n));
        const ResidueCheck c = residue_check(n, N);
        worst = std::max(worst, c.gap);
        rep.rows.push_back(make_row({{"n", static_cast<double>(n)},
                                     {"N", static_cast<double>(N)},
                                     {"converged", c.converged ? 1.0 : 0.0}},
                                    c.quad_value, c.target, 0.0, c.gap));
        if (!c.converged) worst = 1e300;
    }
    return finish_report(rep, g, worst, gates(g).get("residue_gap_max"), "residue_gap_max");
}

int cmd_lemma_meansq(const GlobalOpts& g, const std::vector<std::uint64_t>& Ns) {
    std::uint64_t need = 2;
    for (auto N : Ns) need = std::max(need, 9 * N);
    const LambdaTable t = acquire_table(need, "");

    ExperimentReport rep;
    rep.experiment = "lemma_meansq";
    stamp_minimal(rep);
    const double band = gates(g).get("meansq_band_factor");
    const double prel_max = gates(g).get("parseval_rel_max");
    double worst = 0.0;
    for (auto N : Ns) {
        std::fprintf(stderr, "meansq: N = %llu\n", static_cast<unsigned long long>(N));
        const MeanSquareCheck c = mean_square_check(N, t);
        const double Nd = static_cast<double>(N);
        const double ratio = c.gap / (Nd * std::sqrt(std::log(Nd)));
        const double prel = std::abs(c.parseval_quad - c.parseval_sum) / c.parseval_sum;
        worst = std::max({worst, ratio / band, prel / prel_max});
        if (!c.converged) worst = 1e300;
        rep.rows.push_back(make_row({{"N", Nd},
                                     {"band_ratio", ratio},
                                     {"parseval_rel", prel},
                                     {"converged", c.converged ? 1.0 : 0.0}},
                                    c.quad_value, c.target, 0.0, ratio));
    }
    // worst is pre-normalized against both gates: limit is 1
    return finish_report(rep, g, worst, 1.0, "meansq_band_factor+parseval_rel_max");
}

int cmd_lemma_lp(const GlobalOpts& g, std::uint64_t N, const std::vector<double>& xis) {
    const LambdaTable t = acquire_table(9 * N, "");
    const auto pts = lp_l2_profile(N, xis, t);

    ExperimentReport rep;
    rep.experiment = "lemma_lp";
    stamp_minimal(rep);
    double worst = 0.0;
    for (const auto& p : pts) {
        worst = std::max(worst, p.ratio);
        if (!p.converged) worst = 1e300;
        rep.rows.push_back(make_row({{"N", static_cast<double>(N)},
                                     {"xi", p.xi},
                                     {"converged", p.converged ? 1.0 : 0.0}},
                                    p.integral, 0.0, 0.0, p.ratio));
    }
    return finish_report(rep, g, worst, gates(g).get("lp_ratio_max"), "lp_ratio_max");
}

int cmd_lemma_i2(const GlobalOpts& g, std::vector<std::uint64_t> ys,
                 std::vector<std::uint64_t> Ns) {
    if (ys.size() != Ns.size())
        throw CLI::ValidationError("lemma i2", "--y and --N need the same number of values");
    std::uint64_t need = 2;
    for (auto y : ys) need = std::max(need, y);
    const LambdaTable t = acquire_table(need, "");

    ExperimentReport rep;
    rep.experiment = "lemma_i2";
    stamp_minimal(rep);
    double worst = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const I2Check c = i2_identity_check(ys[i], Ns[i], t);
        const double rel = c.gap / std::abs(c.rhs);
        worst = std::max(worst, rel);
        rep.rows.push_back(make_row({{"y", static_cast<double>(ys[i])},
                                     {"N", static_cast<double>(Ns[i])}},
                                    c.lhs, c.rhs, 0.0, rel));
    }
    return finish_report(rep, g, worst, gates(g).get("i2_rel_gap_max"), "i2_rel_gap_max");
}

int cmd_lemma_i3(const GlobalOpts& g, std::uint64_t y, std::uint64_t N) {
    const LambdaTable t = acquire_table(9 * N, "");
    std::fprintf(stderr, "i3: y = %llu, N = %llu\n", static_cast<unsigned long long>(y),
                 static_cast<unsigned long long>(N));
    const I3Decomposition d = i3_decomposition(y, N, t);

    ExperimentReport rep;
    rep.experiment = "lemma_i3";
    stamp_minimal(rep);
    rep.set_meta("central", fmt6(d.central));
    rep.set_meta("shell_count", std::to_string(d.shells.size()));
    for (const auto& s : d.shells)
        rep.rows.push_back(make_row({{"y", static_cast<double>(y)},
                                     {"N", static_cast<double>(N)},
                                     {"a", s.a},
                                     {"b", s.b}},
                                    s.contribution, 0.0, 0.0, s.contribution / d.envelope));
    rep.rows.push_back(make_row({{"y", static_cast<double>(y)},
                                 {"N", static_cast<double>(N)},
                                 {"a", 0.0},
                                 {"b", 0.5}},
                                d.total, 0.0, 0.0, d.ratio));
    const double worst = d.converged ? d.ratio : 1e300;
    return finish_report(rep, g, worst, gates(g).get("i3_ratio_max"), "i3_ratio_max");
}

int cmd_lemma_pointwise(const GlobalOpts& g, std::uint64_t N) {
    const LambdaTable t = acquire_table(40 * N, "");
    const PointwiseCheck c = pointwise_bound_check(N, default_pointwise_grid(N), t);

    ExperimentReport rep;
    rep.experiment = "lemma_pointwise";
    stamp_minimal(rep);
    rep.rows.push_back(make_row({{"N", static_cast<double>(N)}, {"argmax", c.argmax_alpha}},
                                c.max_ratio, 0.0, 0.0, c.max_ratio));
    return finish_report(rep, g, c.max_ratio, gates(g).get("pointwise_ratio_max"),
                         "pointwise_ratio_max");
}

int cmd_lemma_sumint(const GlobalOpts& g, const std::vector<std::uint64_t>& Ms) {
    std::uint64_t need = 2;
    for (auto M : Ms) need = std::max(need, M);
    const LambdaTable t = acquire_table(need, "");
    const ZeroTable zt = acquire_zeros(g);
    const double Z = zt.height();

    ExperimentReport rep;
    rep.experiment = "lemma_sumint";
    rep.set_meta("zero_source", zt.source_id);
    rep.set_meta("trunc_height", fmt6(Z));
    stamp_minimal(rep);
    double worst = 0.0;
    for (auto M : Ms) {
        const SumIntegralCheck c = check_sum_integral(M, Z, t, zt);
        worst = std::max(worst, c.normalized_gap);
        rep.rows.push_back(make_row({{"M", static_cast<double>(M)}}, c.lhs, 0.0, c.rhs,
                                    c.normalized_gap, c.tail_bound));
    }
    return finish_report(rep, g, worst, gates(g).get("sumint_normalized_max"),
                         "sumint_normalized_max");
}

int cmd_remark(const GlobalOpts& g, std::uint64_t N, double y) {
    const RemarkResult r = remark_counterexample(N, y);
    ExperimentReport rep;
    rep.experiment = "remark_counterexample";
    stamp_minimal(rep);
    rep.rows.push_back(make_row({{"N", static_cast<double>(N)}, {"y", y}}, r.integral_value,
                                0.0, 0.0, r.ratio_to_Nlog3N, 0.0, !r.window_bound_ok));
    std::fprintf(stderr, "remark: l2 mass %.6g, window bound %s\n", r.l2_mass,
                 r.window_bound_ok ? "holds" : "VIOLATED");
    const double worst = r.window_bound_ok ? 0.0 : 1e300;
    return finish_report(rep, g, worst, 1.0, "window_bound");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks for averaged prime-pair sums"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.data_dir = GA_DATA_DIR;
    if (const char* e = std::getenv("GOLDBACH_DATA"); e && *e) g.data_dir = e;
    app.add_option("--data", g.data_dir, "data directory (zeros table lives here)");
    app.add_option("--zeros", g.zeros_path, "explicit zeros file");
    app.add_option("--constants", g.constants_path, "calibration file overriding the builtin");
    app.add_option("--out", g.out, "write the CSV report to this path instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for batched evaluation");
    app.add_flag("--timestamp", g.stamp, "stamp wall time into the report metadata");

    // callbacks only record the action; it runs after parse so --threads and
    // the global options are fully settled first
    std::function<int()> action;

    // sieve
    std::uint64_t sv_n = 1'000'000;
    std::string sv_cache;
    auto* sieve_cmd = app.add_subcommand("sieve", "build the prime-power table");
    sieve_cmd->add_option("--n-max", sv_n, "table size");
    sieve_cmd->add_option("--cache", sv_cache, "binary cache path (or GOLDBACH_CACHE)");
    sieve_cmd->callback([&] { action = [&] { return cmd_sieve(g, sv_n, sv_cache); }; });

    // rsum
    std::uint64_t rs_N = 1000;
    int rs_k = 2;
    auto* rsum_cmd = app.add_subcommand("rsum", "cumulative k-fold representation sum");
    rsum_cmd->add_option("--N", rs_N, "upper limit")->required();
    rsum_cmd->add_option("--k", rs_k, "fold count")->check(CLI::Range(2, 6));
    rsum_cmd->callback([&] { action = [&] { return cmd_rsum(g, rs_N, rs_k); }; });

    // zerosum
    double zs_x = 1000.0, zs_Z = 0.0;
    int zs_k = 2;
    auto* zs_cmd = app.add_subcommand("zerosum", "truncated zero sum with tail bound");
    zs_cmd->add_option("--x", zs_x, "evaluation point")->required();
    zs_cmd->add_option("--k", zs_k, "denominator order")->check(CLI::Range(2, 8));
    zs_cmd->add_option("--height", zs_Z, "truncation height (default: full table)");
    zs_cmd->callback([&] { action = [&] { return cmd_zerosum(g, zs_x, zs_k, zs_Z); }; });

    // verify
    auto* verify = app.add_subcommand("verify", "theorem-scale experiments");
    verify->require_subcommand(1);

    std::vector<std::uint64_t> v1_N = {1000, 10'000};
    double v1_Z = 0.0;
    bool v1_ablate = false;
    auto* thm1 = verify->add_subcommand("thm1", "cumulative pair sums vs zero-corrected main term");
    thm1->add_option("--N", v1_N, "evaluation points")->delimiter(',');
    thm1->add_option("--height", v1_Z, "zero-sum truncation height");
    thm1->add_flag("--ablate", v1_ablate, "drop the zero sum from delta");
    thm1->callback([&] { action = [&] { return cmd_verify_thm1(g, v1_N, v1_Z, v1_ablate); }; });

    std::uint64_t v2_N = 10'000;
    std::vector<std::uint64_t> v2_y;
    auto* thm2 = verify->add_subcommand("thm2", "weighted discrepancy across y");
    thm2->add_option("--N", v2_N, "weight scale");
    thm2->add_option("--y", v2_y, "sample points (default: N/100, N/10, N/2, N)")->delimiter(',');
    thm2->callback([&] { action = [&] { return cmd_verify_thm2(g, v2_N, v2_y); }; });

    std::vector<std::uint64_t> v3_N = {1000, 10'000};
    int v3_k = 3;
    double v3_Z = 0.0;
    bool v3_ablate = false;
    auto* thm3 = verify->add_subcommand("thm3", "k-fold cumulative sums");
    thm3->add_option("--N", v3_N, "evaluation points")->delimiter(',');
    thm3->add_option("--k", v3_k, "fold count")->check(CLI::Range(2, 6));
    thm3->add_option("--height", v3_Z, "zero-sum truncation height");
    thm3->add_flag("--ablate", v3_ablate, "drop the zero sum from delta");
    thm3->callback([&] { action = [&] { return cmd_verify_thm3(g, v3_N, v3_k, v3_Z, v3_ablate); }; });

    std::uint64_t v4_N = 100'000;
    std::vector<std::uint64_t> v4_H = {100, 1000, 10'000};
    double v4_Z = 0.0;
    auto* thm4 = verify->add_subcommand("thm4", "short-interval sums");
    thm4->add_option("--N", v4_N, "interval start");
    thm4->add_option("--H", v4_H, "interval lengths")->delimiter(',');
    thm4->add_option("--height", v4_Z, "zero-sum truncation height");
    thm4->callback([&] { action = [&] { return cmd_verify_thm4(g, v4_N, v4_H, v4_Z); }; });

    // lemma
    auto* lemma = app.add_subcommand("lemma", "support-level checks");
    lemma->require_subcommand(1);

    std::vector<std::uint64_t> lr_n = {1, 10, 100, 500, 1000};
    std::uint64_t lr_N = 1000;
    auto* residue = lemma->add_subcommand("residue", "pole integral vs n e^{-n/N}");
    residue->add_option("--n", lr_n, "frequencies")->delimiter(',');
    residue->add_option("--N", lr_N, "weight scale");
    residue->callback([&] { action = [&] { return cmd_lemma_residue(g, lr_n, lr_N); }; });

    std::vector<std::uint64_t> lm_N = {1000};
    auto* meansq = lemma->add_subcommand("meansq", "mean square of S~ - 1/z plus Parseval");
    meansq->add_option("--N", lm_N, "weight scales")->delimiter(',');
    meansq->callback([&] { action = [&] { return cmd_lemma_meansq(g, lm_N); }; });

    std::uint64_t lp_N = 1000;
    std::vector<double> lp_xi = {1e-3, 1e-2, 1e-1, 0.5};
    auto* lp = lemma->add_subcommand("lp", "windowed L2 profile");
    lp->add_option("--N", lp_N, "weight scale");
    lp->add_option("--xi", lp_xi, "window half-widths")->delimiter(',');
    lp->callback([&] { action = [&] { return cmd_lemma_lp(g, lp_N, lp_xi); }; });

    std::vector<std::uint64_t> i2_y = {5, 500, 2000};
    std::vector<std::uint64_t> i2_N = {10, 1000, 2000};
    auto* i2 = lemma->add_subcommand("i2", "discrete cancellation identity");
    i2->add_option("--y", i2_y, "cutoffs")->delimiter(',');
    i2->add_option("--N", i2_N, "weight scales (paired with --y)")->delimiter(',');
    i2->callback([&] { action = [&] { return cmd_lemma_i2(g, i2_y, i2_N); }; });

    std::uint64_t i3_y = 1000, i3_N = 1000;
    auto* i3 = lemma->add_subcommand("i3", "dyadic shell decomposition");
    i3->add_option("--y", i3_y, "kernel length");
    i3->add_option("--N", i3_N, "weight scale");
    i3->callback([&] { action = [&] { return cmd_lemma_i3(g, i3_y, i3_N); }; });

    std::uint64_t pw_N = 1000;
    auto* pw = lemma->add_subcommand("pointwise", "pointwise bound sweep");
    pw->add_option("--N", pw_N, "weight scale");
    pw->callback([&] { action = [&] { return cmd_lemma_pointwise(g, pw_N); }; });

    std::vector<std::uint64_t> si_M = {1000, 10'000, 100'000};
    auto* sumint = lemma->add_subcommand("sumint", "cumulative psi deficit vs zero sum");
    sumint->add_option("--M", si_M, "upper limits")->delimiter(',');
    sumint->callback([&] { action = [&] { return cmd_lemma_sumint(g, si_M); }; });

    // remark
    std::uint64_t rm_N = 1'000'000;
    double rm_y = 1000.0;
    auto* remark = app.add_subcommand("remark", "step-function counterexample arithmetic");
    remark->add_option("--N", rm_N, "scale");
    remark->add_option("--y", rm_y, "cutoff (> log N)");
    remark->callback([&] { action = [&] { return cmd_remark(g, rm_N, rm_y); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // usage errors -> 1 (0 for --help)
    }

#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    try {
        return action ? action() : 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
