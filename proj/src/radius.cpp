/**************************************************************************
 * radius.cpp
 *
 * Copyright 2026 The gfqldpc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "gfqldpc/radius.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfqldpc {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

void require_degree(std::uint32_t var_degree) {
    if (var_degree < 2)
        throw std::invalid_argument("variable degree must be at least 2");
    if (var_degree > 1000000)
        throw std::invalid_argument("variable degree above 10^6 is not supported");
}

// Thresholds of the schedule extended by the variable degree: the factor at
// stage i reads the stage's own threshold and the next stage's, and the
// virtual stage after the last one sits at ell.
std::vector<std::uint32_t> extended_thetas(const ThresholdSchedule& schedule,
                                           std::uint32_t var_degree) {
    schedule.validate_for(var_degree);
    std::vector<std::uint32_t> t = schedule.thetas();
    t.push_back(var_degree);
    return t;
}

} // namespace

double threshold_bound(std::uint32_t theta, double error_weight, std::uint32_t var_degree) {
    require_degree(var_degree);
    if (theta >= var_degree)
        throw std::invalid_argument("threshold must be below the variable degree");
    if (!(error_weight >= 0))
        throw std::invalid_argument("error weight must be nonnegative");
    return error_weight * (double(var_degree) + double(theta)) / 2.0;
}

double alpha_single(std::uint32_t var_degree) {
    require_degree(var_degree);
    // both terms are exact small integers in double, so this expression and
    // the one-stage w_sequence factor produce bit-identical quotients
    return (double(var_degree) + 2.0) / (2.0 * (double(var_degree) + 1.0));
}

double alpha_multi(std::uint32_t var_degree) {
    require_degree(var_degree);
    const double ell = double(var_degree);
    // Compensated product: carry the running product p together with a
    // first-order error term. Each factor num/den is corrected by its
    // division residual (num - f*den)/den, and each multiplication by its
    // fma rounding error, keeping the total relative error near machine
    // epsilon instead of ell * epsilon.
    double p = 1.0;
    double comp = 0.0;
    for (std::uint32_t i = 0; i < var_degree; ++i) {
        const double num = ell + 3.0 * double(i) + 2.0; // exact: <= 4e6 + 2
        const double den = num + 1.0;
        const double f = num / den;
        const double fres = std::fma(-f, den, num) / den;
        const double h = p * f;
        const double herr = std::fma(p, f, -h);
        comp = comp * f + (herr + p * fres);
        p = h;
    }
    return p + comp;
}

double alpha_multi_exact(std::uint32_t var_degree) {
    require_degree(var_degree);
    BigRational prod = 1;
    for (std::uint32_t i = 0; i < var_degree; ++i) {
        const std::uint64_t num = std::uint64_t(var_degree) + 3ull * i + 2;
        prod *= BigRational(num, num + 1);
    }
    return prod.convert_to<double>();
}

std::vector<double> w_sequence(double w_star, const ThresholdSchedule& schedule,
                               std::uint32_t var_degree) {
    require_degree(var_degree);
    if (!(w_star > 0))
        throw std::invalid_argument("certified weight must be positive");
    const auto thetas = extended_thetas(schedule, var_degree);
    std::vector<double> w;
    w.reserve(thetas.size());
    w.push_back(w_star);
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
        const double num = double(var_degree + 3 * thetas[i] + 2);
        const double den = double(var_degree + 2 * thetas[i] + thetas[i + 1] + 2);
        w.push_back(w.back() * (num / den));
    }
    return w;
}

std::vector<double> w_sequence_exact(double w_star, const ThresholdSchedule& schedule,
                                     std::uint32_t var_degree) {
    require_degree(var_degree);
    if (!(w_star > 0))
        throw std::invalid_argument("certified weight must be positive");
    const auto thetas = extended_thetas(schedule, var_degree);
    BigRational w = BigRational(w_star); // double-to-rational is exact
    std::vector<double> out;
    out.reserve(thetas.size());
    out.push_back(w.convert_to<double>());
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
        const std::uint64_t num = std::uint64_t(var_degree) + 3ull * thetas[i] + 2;
        const std::uint64_t den = std::uint64_t(var_degree) + 2ull * thetas[i] + thetas[i + 1] + 2;
        w *= BigRational(num, den);
        out.push_back(w.convert_to<double>());
    }
    return out;
}

std::uint64_t guaranteed_weight_floor(std::uint64_t w_star, const ThresholdSchedule& schedule,
                                      std::uint32_t var_degree) {
    require_degree(var_degree);
    const auto thetas = extended_thetas(schedule, var_degree);
    BigRational w = w_star;
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
        const std::uint64_t num = std::uint64_t(var_degree) + 3ull * thetas[i] + 2;
        const std::uint64_t den = std::uint64_t(var_degree) + 2ull * thetas[i] + thetas[i + 1] + 2;
        w *= BigRational(num, den);
    }
    using boost::multiprecision::cpp_int;
    const cpp_int fl = numerator(w) / denominator(w); // both nonnegative
    return fl.convert_to<std::uint64_t>();
}

double round_to_4(double x) {
    return double(std::llround(x * 1e4)) / 1e4;
}

std::vector<RadiusEntry> radius_table(const std::vector<RadiusRow>& rows) {
    std::vector<RadiusEntry> entries;
    entries.reserve(rows.size());
    for (const RadiusRow& r : rows) {
        if (!(r.omega_star > 0.0) || !(r.omega_star < 1.0))
            throw std::invalid_argument("omega_star must lie in (0, 1)");
        if (!(r.rate > 0.0) || !(r.rate < 1.0))
            throw std::invalid_argument("rate must lie in (0, 1)");
        RadiusEntry e;
        e.row = r;
        e.rho_single = alpha_single(r.var_degree) * r.omega_star;
        e.rho_multi = alpha_multi(r.var_degree) * r.omega_star;
        e.rho_single_rounded = round_to_4(e.rho_single);
        e.rho_multi_rounded = round_to_4(e.rho_multi);
        entries.push_back(e);
    }
    return entries;
}

const std::vector<RadiusRow>& builtin_radius_rows_q16() {
    static const std::vector<RadiusRow> rows = {
        {0.125, 45, 0.0103}, {0.25, 43, 0.0095}, {0.375, 40, 0.0085}, {0.5, 31, 0.0072},
        {0.625, 24, 0.0053}, {0.75, 24, 0.0033}, {0.875, 26, 0.0015},
    };
    return rows;
}

const std::vector<RadiusRow>& builtin_radius_rows_q64() {
    static const std::vector<RadiusRow> rows = {
        {0.125, 21, 0.0156}, {0.25, 24, 0.0131}, {0.375, 20, 0.0104}, {0.5, 22, 0.0081},
        {0.625, 27, 0.0059}, {0.75, 24, 0.0037}, {0.875, 26, 0.0017},
    };
    return rows;
}

std::vector<RadiusRow> parse_radius_rows(std::istream& in) {
    std::vector<RadiusRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::string fields = line;
        for (char& c : fields)
            if (c == ',')
                c = ' ';
        std::istringstream ls(fields);
        double rate = 0, omega = 0;
        std::uint32_t ell = 0;
        if (!(ls >> rate))
            continue; // header, comment, or blank line
        if (!(ls >> ell >> omega))
            throw std::invalid_argument("bad radius table line: '" + line + "'");
        rows.push_back(RadiusRow{rate, ell, omega});
    }
    if (rows.empty())
        throw std::invalid_argument("radius table has no data rows");
    return rows;
}

std::vector<RadiusRow> load_radius_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open radius table '" + path + "'");
    return parse_radius_rows(in);
}

std::string radius_table_csv(const std::vector<RadiusEntry>& entries) {
    std::ostringstream out;
    out << "R,ell,omega_star,rho_s,rho_s_rounded,rho_m,rho_m_rounded\n";
    char buf[160];
    for (const RadiusEntry& e : entries) {
        std::snprintf(buf, sizeof buf, "%g,%u,%g,%.10g,%.4f,%.10g,%.4f\n", e.row.rate,
                      e.row.var_degree, e.row.omega_star, e.rho_single, e.rho_single_rounded,
                      e.rho_multi, e.rho_multi_rounded);
        out << buf;
    }
    return out.str();
}

} // namespace gfqldpc
