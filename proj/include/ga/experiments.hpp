#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ga/arith.hpp"
#include "ga/goldbach.hpp"
#include "ga/zeros.hpp"

namespace ga {

// ---- experiment reports ----

// One measured row: named parameters plus the fixed numeric columns.
// normalized = |delta| / envelope, where the envelope is the error scale the
// statement under test carries (N log^3 N, N^{k-1} log^k N, N log^2 N log H).
struct ReportRow {
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double main_term = 0.0;
    double zero_sum = 0.0;  // the folded zero-sum value entering delta
    double delta = 0.0;
    double normalized = 0.0;
    double tail_bound = 0.0;
    bool flagged = false;  // truncation tail too large for the check to mean anything
};

// metadata is an ordered key/value list; it always carries the zero-table
// source, the truncation height, a timestamp slot and the constants-file
// hash.  The timestamp defaults to "unset" so identical inputs give
// byte-identical CSV; callers that want wall time stamp it explicitly.
struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<ReportRow> rows;

    void set_meta(const std::string& key, const std::string& value);
    const std::string* find_meta(const std::string& key) const;
};

// sum R(n) vs N^2/2 - 2 sum_rho N^{rho+1}/(rho(rho+1)), normalized by
// N log^3 N.  Rows are flagged when tail_estimate(N,2,Z) > 0.1 N log^3 N.
// ablate_zero_sum drops the zero-sum term from delta (the load-bearing test).
ExperimentReport verify_theorem1(const std::vector<std::uint64_t>& N_list,
                                 const LambdaTable& table, const ZeroTable& zt, double Z,
                                 bool ablate_zero_sum = false);

// Weighted-discrepancy rows over y samples at fixed N, normalized by
// N log^3 N; each row also reports the trivial-regime envelope y^2 loglog y
// and the ratio against it.
ExperimentReport verify_theorem2(std::uint64_t N, const std::vector<std::uint64_t>& y_samples,
                                 const LambdaTable& table, const ZeroTable& zt);

// k-fold version: sum R_k(n) vs N^k/k! - k sum_rho N^{rho+k-1}/(rho...(rho+k-1)),
// normalized by N^{k-1} log^k N.
ExperimentReport verify_theorem3(const std::vector<std::uint64_t>& N_list, int k,
                                 const LambdaTable& table, const ZeroTable& zt, double Z,
                                 bool ablate_zero_sum = false);

// Short-interval version at fixed N over H samples: sum_{n=N}^{N+H} R(n) vs
// HN + H^2/2 - 2 sum_rho ((N+H)^{rho+1}-N^{rho+1})/(rho(rho+1)), normalized
// by N log^2 N log H.
ExperimentReport verify_theorem4(std::uint64_t N, const std::vector<std::uint64_t>& H_list,
                                 const LambdaTable& table, const ZeroTable& zt, double Z);

// UTF-8 CSV: '#'-prefixed metadata lines, then a header row, then one line
// per row; floats with 12 significant digits.  Identical report -> identical
// bytes.
std::string csv_string(const ExperimentReport& report);
void emit_csv(const ExperimentReport& report, const std::string& path);

// Inverse of csv_string for round-trip tests (numeric fields only).
ExperimentReport parse_csv(const std::string& text);

}  // namespace ga
