#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chebdisc/exact.hpp"
#include "chebdisc/regime.hpp"
#include "chebdisc/scaled_real.hpp"

namespace chebdisc {

enum class OutputFormat { Csv, Json };

struct SweepSpec {
    std::vector<double> b_values;
    std::vector<double> a_values;
    std::vector<int> N_values;
    std::set<Regime> regimes;  // empty: all
    bool integer_x_only = true;
    std::optional<double> delta;
    int jobs = 1;
};

struct ErrorRow {
    double a = 0.0, b = 0.0;
    int N = 0;
    int n = 0;
    Rational x;
    Regime regime = Regime::Monotone;
    ScaledReal exact;
    ScaledReal asym;
    ScaledReal envelope;
    double env_err = 0.0;  // |exact - asym| / envelope; NaN if the row failed
    std::string note;      // non-empty when the row failed
};

struct SlopeFit {
    double a = 0.0, b = 0.0;
    double slope = 0.0;  // least-squares slope of ln env_err against ln N
    int points = 0;
};

struct SweepResult {
    std::vector<ErrorRow> rows;
    std::vector<SlopeFit> slopes;
    std::vector<std::string> notes;  // skipped (a, b, N) combinations
};

// Least-squares slope of ln y against ln x. Needs at least two distinct x.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

// One row per (b, a, N) with a N (and b N) integral, in input order. Per-row
// failures are recorded in the row, never thrown.
SweepResult run_sweep(const SweepSpec& spec);

// Computes a single row; throws on failure.
ErrorRow compute_row(int n, int N, const Rational& x, std::optional<double> delta);

// printf %.17g
std::string format_double(double v);

void write_csv(std::ostream& os, const SweepResult& result);
void write_json(std::ostream& os, const SweepResult& result);
void write_slopes(std::ostream& os, const SweepResult& result);

}  // namespace chebdisc
