#include "chebdisc/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "chebdisc/errors.hpp"
#include "chebdisc/expansion.hpp"
#include "chebdisc/saddle.hpp"

namespace chebdisc {

namespace {

bool near_integer(double v, long& out) {
    double r = std::round(v);
    if (std::fabs(v - r) > 1e-9 * std::max(1.0, std::fabs(v))) return false;
    out = static_cast<long>(r);
    return true;
}

struct Task {
    double a, b;
    int N, n;
    Rational x;
};

}  // namespace

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw ParameterError("slope fit needs >= 2 paired points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw ParameterError("slope fit needs positive data");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0) throw ParameterError("slope fit needs distinct x values");
    return sxy / sxx;
}

ErrorRow compute_row(int n, int N, const Rational& x, std::optional<double> delta) {
    ErrorRow row;
    row.N = N;
    row.n = n;
    row.x = x;
    row.a = Rational(x / N).get_d();
    row.b = static_cast<double>(n) / N;
    row.exact = eval_scaled({n, N + 1, x});
    const ExpansionResult er = asymptotic_value(n, N, x, delta);
    row.regime = er.regime;
    row.asym = er.value;
    row.envelope = er.envelope;
    row.env_err = ratio((row.exact - row.asym).abs(), er.envelope);
    return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.jobs < 1) throw ParameterError("jobs must be >= 1");
    SweepResult result;
    std::vector<Task> tasks;
    for (double b : spec.b_values) {
        for (double a : spec.a_values) {
            for (int N : spec.N_values) {
                const std::string key = "a=" + format_double(a) + " b=" + format_double(b) + " N=" + std::to_string(N);
                if (N < 2) throw ParameterError("N must be >= 2 (" + key + ")");
                long n = 0;
                if (!near_integer(b * N, n) || n < 1 || n >= N) {
                    result.notes.push_back("skipped " + key + ": b*N is not an integer degree in [1, N)");
                    continue;
                }
                Rational x;
                long xi = 0;
                if (near_integer(a * N, xi)) {
                    x = Rational(xi);
                } else if (spec.integer_x_only) {
                    result.notes.push_back("skipped " + key + ": a*N is not an integer");
                    continue;
                } else {
                    x = Rational(a) * N;
                }
                const double a_eff = Rational(x / N).get_d();
                const double band = spec.delta.value_or(default_delta(N));
                const Regime reg = classify_regime({a_eff, static_cast<double>(n) / N, N}, band);
                if (!spec.regimes.empty() && !spec.regimes.contains(reg)) {
                    result.notes.push_back("skipped " + key + ": regime " + std::string(to_string(reg)) +
                                           " filtered out");
                    continue;
                }
                tasks.push_back({a, b, N, static_cast<int>(n), x});
            }
        }
    }

    result.rows.resize(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            ErrorRow& row = result.rows[i];
            try {
                row = compute_row(t.n, t.N, t.x, spec.delta);
            } catch (const std::exception& e) {
                row = ErrorRow{};
                row.N = t.N;
                row.n = t.n;
                row.x = t.x;
                row.regime = classify_regime({Rational(t.x / t.N).get_d(), static_cast<double>(t.n) / t.N, t.N},
                                             spec.delta.value_or(default_delta(t.N)));
                row.env_err = std::numeric_limits<double>::quiet_NaN();
                row.note = e.what();
            }
            // Report the requested grid values, not the recomputed ratios.
            row.a = t.a;
            row.b = t.b;
        }
    };
    {
        const int nthreads = std::min<int>(spec.jobs, static_cast<int>(std::max<size_t>(tasks.size(), 1)));
        std::vector<std::jthread> pool;
        for (int k = 1; k < nthreads; ++k) pool.emplace_back(worker);
        worker();
    }

    std::map<std::pair<double, double>, std::pair<std::vector<double>, std::vector<double>>> groups;
    std::vector<std::pair<double, double>> order;
    for (const auto& row : result.rows) {
        if (!std::isfinite(row.env_err) || row.env_err <= 0) continue;
        auto key = std::make_pair(row.a, row.b);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.first.push_back(row.N);
        it->second.second.push_back(row.env_err);
    }
    for (const auto& key : order) {
        const auto& [ns, errs] = groups[key];
        std::set<double> distinct(ns.begin(), ns.end());
        if (distinct.size() < 3) continue;
        result.slopes.push_back({key.first, key.second, fit_loglog_slope(ns, errs), static_cast<int>(ns.size())});
    }
    return result;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const SweepResult& result) {
    os << "a,b,N,x,regime,exact_sign,exact_mantissa,exact_exp10,asym_sign,asym_mantissa,asym_exp10,env_err\n";
    for (const auto& r : result.rows) {
        os << format_double(r.a) << ',' << format_double(r.b) << ',' << r.N << ',' << r.x.get_str() << ','
           << to_string(r.regime) << ',' << r.exact.sign() << ',' << format_double(r.exact.mantissa()) << ','
           << r.exact.exp10() << ',' << r.asym.sign() << ',' << format_double(r.asym.mantissa()) << ','
           << r.asym.exp10() << ',' << format_double(r.env_err) << '\n';
    }
}

void write_json(std::ostream& os, const SweepResult& result) {
    using nlohmann::json;
    auto scaled = [](const ScaledReal& v) {
        return json{{"sign", v.sign()}, {"mantissa", v.mantissa()}, {"exp10", v.exp10()}};
    };
    json rows = json::array();
    for (const auto& r : result.rows) {
        json row{{"a", r.a},
                 {"b", r.b},
                 {"N", r.N},
                 {"n", r.n},
                 {"x", r.x.get_str()},
                 {"regime", std::string(to_string(r.regime))},
                 {"exact", scaled(r.exact)},
                 {"asym", scaled(r.asym)},
                 {"envelope", scaled(r.envelope)}};
        if (std::isfinite(r.env_err)) row["env_err"] = r.env_err; else row["env_err"] = nullptr;
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
    }
    json slopes = json::array();
    for (const auto& s : result.slopes) {
        slopes.push_back({{"a", s.a}, {"b", s.b}, {"slope", s.slope}, {"points", s.points}});
    }
    json doc{{"rows", rows}, {"slopes", slopes}, {"notes", result.notes}};
    os << doc.dump(2) << '\n';
}

void write_slopes(std::ostream& os, const SweepResult& result) {
    for (const auto& s : result.slopes) {
        os << "slope a=" << format_double(s.a) << " b=" << format_double(s.b) << " points=" << s.points
           << " value=" << format_double(s.slope) << '\n';
    }
}

}  // namespace chebdisc
