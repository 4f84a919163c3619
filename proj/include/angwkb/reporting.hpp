#pragma once

#include <string>
#include <vector>

#include "angwkb/eigen_oracle.hpp"

namespace angwkb {

// Deterministic report tables juxtaposing the quantization methods.
// Every cell is a string: integers verbatim, reals with 15 significant
// digits, so the CSV and JSON encodings of a run carry identical values
// and both round-trip bit-exactly.

struct Range {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

std::string format_real(double v); // %.15g
std::string format_int(long long v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t, const std::string& command);
/// Inverse of to_json; throws DomainError on schema mismatch.
Table from_json(const std::string& text, std::string* command = nullptr);

/// Partial sums N' = 0..order plus the summed and torus rows per (m, nTheta).
/// Columns: m, n_theta, N, E_N, lambda2_N, lambda2_exact, residual;
/// the N column reads "summed" / "torus" on the closing rows.
Table quantize_table(Range mRange, Range nThetaRange, int order);

/// Cycle integrals versus closed forms, one row per (n, m, l); throws
/// GateFailure naming (n, m, l) when a value misses its gate.
/// Columns: n, m, l, E, U, numeric, closed_form, abs_error, samples_used.
Table contour_table(Range mRange, Range lRange, int order, int samples);

/// Columns: m, n_theta, e_minus, lambda2_swkb, lambda2_exact, cbc_numeric,
/// cbc_target, abs_error.
Table swkb_table(Range mRange, Range nThetaRange);

/// Columns: m, l, E, lambda2, lambda2_exact, abs_error, node_count.
Table oracle_table(Range mRange, Range lRange, const OracleConfig& cfg = {});

/// Cross-method comparison; a failing cell is reported as "nan" and does
/// not abort the table. Columns: m, l, lambda2_exact, lambda2_torus,
/// lambda2_wkb_N, lambda2_wkb_summed, lambda2_swkb, lambda2_oracle,
/// max_abs_error.
Table report_table(Range mRange, Range lRange, int order, const OracleConfig& cfg = {});

} // namespace angwkb
