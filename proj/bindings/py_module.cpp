// Python bindings for the main operations: sieve/table construction, zero
// sums, representation sums, the lemma-level checks and the experiment
// reports.  Containers cross the boundary as plain lists/dicts; the heavy
// state (LambdaTable, ZeroTable, evaluators) stays opaque.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ga/arith.hpp"
#include "ga/calibration.hpp"
#include "ga/circle.hpp"
#include "ga/experiments.hpp"
#include "ga/goldbach.hpp"
#include "ga/zeros.hpp"

namespace py = pybind11;
using namespace ga;

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical kernels for averaged prime-pair sums";

    // ---- arithmetic tables ----

    py::class_<LambdaTable>(m, "LambdaTable")
        .def_readonly("n_max", &LambdaTable::n_max)
        .def("lambda_at",
             [](const LambdaTable& t, std::uint64_t n) {
                 if (n > t.n_max) throw py::index_error("n beyond table");
                 return t.lambda[n];
             })
        .def("psi_at",
             [](const LambdaTable& t, std::uint64_t n) {
                 if (n > t.n_max) throw py::index_error("n beyond table");
                 return t.psi_prefix[n];
             })
        .def("__len__", [](const LambdaTable& t) { return t.n_max + 1; });

    m.def("sieve_lambda", &sieve_lambda, py::arg("n_max"));
    m.def("psi", [](double x, const LambdaTable& t) { return psi(x, t); }, py::arg("x"),
          py::arg("table"));
    m.def("psi0", [](double t_, const LambdaTable& t) { return psi0(t_, t); }, py::arg("t"),
          py::arg("table"));
    m.def("psi_iterated",
          [](int j, double t_, const LambdaTable& t) { return psi_iterated(j, t_, t); },
          py::arg("j"), py::arg("t"), py::arg("table"));
    m.def("singular_series", &singular_series, py::arg("k"),
          py::arg("prime_cutoff") = 10'000'000);
    m.def("write_lambda_cache", &write_lambda_cache, py::arg("table"), py::arg("path"));
    m.def("read_lambda_cache", &read_lambda_cache, py::arg("path"));

    // ---- representation tables ----

    py::enum_<RMethod>(m, "RMethod")
        .value("direct", RMethod::direct)
        .value("fft", RMethod::fft);

    py::class_<RTable>(m, "RTable")
        .def_readonly("n_max", &RTable::n_max)
        .def_readonly("k", &RTable::k)
        .def_readonly("values", &RTable::values)
        .def("value_at",
             [](const RTable& r, std::uint64_t n) {
                 if (n > r.n_max) throw py::index_error("n beyond table");
                 return r.values[n];
             });

    m.def("r2_direct", &r2_direct, py::arg("n"), py::arg("table"));
    m.def("r_table", &r_table, py::arg("n_max"), py::arg("k"), py::arg("table"),
          py::arg("method") = RMethod::direct);
    m.def("fft_error_estimate", &fft_error_estimate, py::arg("n_max"), py::arg("k"),
          py::arg("table"));
    m.def("sum_R", &sum_R, py::arg("N"), py::arg("table"));
    m.def("sum_Rk", &sum_Rk, py::arg("N"), py::arg("k"), py::arg("table"));
    m.def("weighted_discrepancy", &weighted_discrepancy, py::arg("y"), py::arg("N"),
          py::arg("r"), py::arg("table"));
    m.def("short_interval_sum", &short_interval_sum, py::arg("N"), py::arg("H"), py::arg("r"));

    // ---- zeros ----

    py::class_<ZeroTable>(m, "ZeroTable")
        .def_readonly("gammas", &ZeroTable::gammas)
        .def_readonly("source_id", &ZeroTable::source_id)
        .def("height", &ZeroTable::height)
        .def("count_below", &ZeroTable::count_below)
        .def("__len__", [](const ZeroTable& z) { return z.gammas.size(); });

    py::class_<SumWithBound>(m, "SumWithBound")
        .def_readonly("value", &SumWithBound::value)
        .def_readonly("tail_bound", &SumWithBound::tail_bound)
        .def_readonly("trunc_height", &SumWithBound::trunc_height)
        .def_readonly("zeros_used", &SumWithBound::zeros_used);

    m.def("load_zeros", &load_zeros, py::arg("path"));
    m.def("builtin_zeros", &builtin_zeros, py::return_value_policy::reference);
    m.def("rvm_estimate", &rvm_estimate, py::arg("T"));
    m.def("tail_estimate", &tail_estimate, py::arg("x"), py::arg("k"), py::arg("Z"));
    m.def("zero_sum_k", &zero_sum_k, py::arg("x"), py::arg("k"), py::arg("Z"), py::arg("zeros"));
    m.def("zero_sum_interval", &zero_sum_interval, py::arg("N"), py::arg("H"), py::arg("Z"),
          py::arg("zeros"));
    m.def("psi0_explicit", &psi0_explicit, py::arg("t"), py::arg("Z"), py::arg("zeros"),
          py::arg("tail_coeff") = 1.0);
    m.def("fit_zeta_constant", &fit_zeta_constant, py::arg("zeros"), py::arg("table"));

    py::class_<SumIntegralCheck>(m, "SumIntegralCheck")
        .def_readonly("lhs", &SumIntegralCheck::lhs)
        .def_readonly("rhs", &SumIntegralCheck::rhs)
        .def_readonly("normalized_gap", &SumIntegralCheck::normalized_gap)
        .def_readonly("tail_bound", &SumIntegralCheck::tail_bound);
    m.def("check_sum_integral", &check_sum_integral, py::arg("M"), py::arg("Z"),
          py::arg("table"), py::arg("zeros"));

    // ---- circle-side evaluators and checks ----

    py::class_<ExpSumConfig>(m, "ExpSumConfig")
        .def_readonly("trunc_len", &ExpSumConfig::trunc_len)
        .def_readonly("tail_tol", &ExpSumConfig::tail_tol);
    m.def("exp_config_default", &exp_config_default, py::arg("N"));
    m.def("exp_config_probe", &exp_config_probe, py::arg("N"));
    m.def("exp_config_for_tol", &exp_config_for_tol, py::arg("N"), py::arg("tol_abs"));

    py::class_<WeightedExpSum>(m, "WeightedExpSum")
        .def(py::init<std::uint64_t, const LambdaTable&, const ExpSumConfig&>(), py::arg("N"),
             py::arg("table"), py::arg("config"))
        .def("eval", &WeightedExpSum::eval, py::arg("alpha"))
        .def("eval_batch",
             [](const WeightedExpSum& s, const std::vector<double>& alpha) {
                 std::vector<std::complex<double>> out(alpha.size());
                 s.eval_batch(alpha.data(), alpha.size(), out.data());
                 return out;
             },
             py::arg("alpha"))
        .def_property_readonly("trunc_len", &WeightedExpSum::trunc_len)
        .def_property_readonly("tail_bound", &WeightedExpSum::tail_bound);

    py::class_<MeanSquareCheck>(m, "MeanSquareCheck")
        .def_readonly("quad_value", &MeanSquareCheck::quad_value)
        .def_readonly("target", &MeanSquareCheck::target)
        .def_readonly("gap", &MeanSquareCheck::gap)
        .def_readonly("parseval_quad", &MeanSquareCheck::parseval_quad)
        .def_readonly("parseval_sum", &MeanSquareCheck::parseval_sum)
        .def_readonly("converged", &MeanSquareCheck::converged);
    m.def("mean_square_check", &mean_square_check, py::arg("N"), py::arg("table"),
          py::arg("config") = ExpSumConfig{});

    py::class_<I2Check>(m, "I2Check")
        .def_readonly("lhs", &I2Check::lhs)
        .def_readonly("rhs", &I2Check::rhs)
        .def_readonly("gap", &I2Check::gap);
    m.def("i2_identity_check", &i2_identity_check, py::arg("y"), py::arg("N"), py::arg("table"));

    py::class_<ResidueCheck>(m, "ResidueCheck")
        .def_readonly("quad_value", &ResidueCheck::quad_value)
        .def_readonly("target", &ResidueCheck::target)
        .def_readonly("gap", &ResidueCheck::gap)
        .def_readonly("converged", &ResidueCheck::converged);
    m.def("residue_check", &residue_check, py::arg("n"), py::arg("N"));

    py::class_<CircleIdentityCheck>(m, "CircleIdentityCheck")
        .def_readonly("quad_value", &CircleIdentityCheck::quad_value)
        .def_readonly("sieve_value", &CircleIdentityCheck::sieve_value)
        .def_readonly("rel_gap", &CircleIdentityCheck::rel_gap)
        .def_readonly("converged", &CircleIdentityCheck::converged);
    m.def("circle_identity_check", &circle_identity_check, py::arg("y"), py::arg("N"),
          py::arg("table"));

    py::class_<RemarkResult>(m, "RemarkResult")
        .def_readonly("integral_value", &RemarkResult::integral_value)
        .def_readonly("ratio_to_Nlog3N", &RemarkResult::ratio_to_Nlog3N)
        .def_readonly("l2_mass", &RemarkResult::l2_mass)
        .def_readonly("window_bound_ok", &RemarkResult::window_bound_ok);
    m.def("remark_counterexample", &remark_counterexample, py::arg("N"), py::arg("y"));

    // ---- experiment reports ----

    py::class_<ReportRow>(m, "ReportRow")
        .def_readonly("params", &ReportRow::params)
        .def_readonly("lhs", &ReportRow::lhs)
        .def_readonly("main_term", &ReportRow::main_term)
        .def_readonly("zero_sum", &ReportRow::zero_sum)
        .def_readonly("delta", &ReportRow::delta)
        .def_readonly("normalized", &ReportRow::normalized)
        .def_readonly("tail_bound", &ReportRow::tail_bound)
        .def_readonly("flagged", &ReportRow::flagged);

    py::class_<ExperimentReport>(m, "ExperimentReport")
        .def_readonly("experiment", &ExperimentReport::experiment)
        .def_readonly("metadata", &ExperimentReport::metadata)
        .def_readonly("rows", &ExperimentReport::rows)
        .def("set_meta", &ExperimentReport::set_meta)
        .def("csv", [](const ExperimentReport& r) { return csv_string(r); });

    m.def("verify_theorem1", &verify_theorem1, py::arg("N_list"), py::arg("table"),
          py::arg("zeros"), py::arg("Z"), py::arg("ablate_zero_sum") = false);
    m.def("verify_theorem2", &verify_theorem2, py::arg("N"), py::arg("y_samples"),
          py::arg("table"), py::arg("zeros"));
    m.def("verify_theorem3", &verify_theorem3, py::arg("N_list"), py::arg("k"),
          py::arg("table"), py::arg("zeros"), py::arg("Z"),
          py::arg("ablate_zero_sum") = false);
    m.def("verify_theorem4", &verify_theorem4, py::arg("N"), py::arg("H_list"),
          py::arg("table"), py::arg("zeros"), py::arg("Z"));
    m.def("parse_csv", &parse_csv, py::arg("text"));

    // ---- calibration ----

    py::class_<Calibration>(m, "Calibration")
        .def_readonly("values", &Calibration::values)
        .def_readonly("file_hash", &Calibration::file_hash)
        .def("get", &Calibration::get)
        .def("get_or", &Calibration::get_or);
    m.def("load_calibration", &load_calibration, py::arg("path"));
    m.def("builtin_calibration", &builtin_calibration, py::return_value_policy::reference);
}
