/**************************************************************************
 * code.cpp
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

#include "gfqldpc/code.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gfqldpc/errors.hpp"
#include "gfqldpc/rng.hpp"

namespace gfqldpc {

void CodeParams::validate() const {
    if (length == 0)
        throw std::invalid_argument("code length must be positive");
    if (var_degree < 2)
        throw std::invalid_argument("variable degree must be at least 2");
    if (check_degree < 2)
        throw std::invalid_argument("check degree must be at least 2");
    if (var_degree >= check_degree)
        throw std::invalid_argument(
            "variable degree must be below the check degree (positive design rate)");
    if (length % check_degree != 0)
        throw std::invalid_argument("check degree must divide the code length");
    // rejects unsupported orders early, with the same message the field gives
    Field::of_order(field_order, modulus);
}

LdpcCode::LdpcCode(CodeParams params, Field field, std::vector<std::vector<CheckEdge>> checks)
    : params_(params), field_(std::move(field)), checks_(std::move(checks)) {
    params_.validate();
    if (field_.order() != params_.field_order)
        throw std::invalid_argument("field does not match the declared order");
    const std::uint32_t n = params_.length;
    const std::uint32_t m = params_.check_count();
    if (checks_.size() != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " checks, got " +
                                    std::to_string(checks_.size()));

    vars_.assign(n, {});
    for (std::uint32_t j = 0; j < m; ++j) {
        const auto& row = checks_[j];
        if (row.size() != params_.check_degree)
            throw std::invalid_argument("check " + std::to_string(j) + " has degree " +
                                        std::to_string(row.size()));
        for (const CheckEdge& e : row) {
            if (e.position >= n)
                throw std::invalid_argument("position out of range in check " + std::to_string(j));
            if (e.coeff == 0 || e.coeff >= params_.field_order)
                throw std::invalid_argument("coefficient out of range in check " +
                                            std::to_string(j));
            vars_[e.position].push_back(VarEdge{j, e.coeff});
        }
        // distinct positions within the row
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end(),
                  [](const CheckEdge& a, const CheckEdge& b) { return a.position < b.position; });
        for (std::size_t k = 1; k < sorted.size(); ++k)
            if (sorted[k].position == sorted[k - 1].position)
                throw std::invalid_argument("check " + std::to_string(j) +
                                            " touches a position twice");
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (vars_[i].size() != params_.var_degree)
            throw std::invalid_argument("position " + std::to_string(i) + " has degree " +
                                        std::to_string(vars_[i].size()));
}

LdpcCode sample_regular_code(const CodeParams& params, std::uint64_t seed) {
    params.validate();
    Field field = Field::of_order(params.field_order, params.modulus);
    SplitMix64 rng(seed);

    const std::uint32_t n = params.length;
    const std::uint32_t n0 = params.check_degree;
    const std::uint32_t groups = n / n0;

    std::vector<std::vector<CheckEdge>> checks;
    checks.reserve(params.check_count());
    std::vector<std::uint32_t> perm(n);

    for (std::uint32_t round = 0; round < params.var_degree; ++round) {
        // A shuffled permutation cut into consecutive blocks puts every
        // position in exactly one check of this round, so block entries are
        // distinct by construction. The retry guard stays anyway: it is the
        // documented recovery path should the block test ever fail.
        int retries = 0;
        for (;;) {
            std::iota(perm.begin(), perm.end(), 0u);
            shuffle(perm, rng);
            bool ok = true;
            for (std::uint32_t g = 0; g < groups && ok; ++g) {
                auto first = perm.begin() + std::ptrdiff_t(g) * n0;
                std::sort(first, first + n0);
                for (std::uint32_t k = 1; k < n0; ++k)
                    if (first[k] == first[k - 1]) {
                        ok = false;
                        break;
                    }
            }
            if (ok)
                break;
            if (++retries > 1000)
                throw InternalError("could not draw a valid round after 1000 retries");
        }
        for (std::uint32_t g = 0; g < groups; ++g) {
            std::vector<CheckEdge> row(n0);
            for (std::uint32_t k = 0; k < n0; ++k)
                row[k] = CheckEdge{perm[g * n0 + k], 0};
            checks.push_back(std::move(row));
        }
    }

    // coefficients last, row-major over the finished structure
    for (auto& row : checks)
        for (CheckEdge& e : row)
            e.coeff = Symbol(1 + rng.below(params.field_order - 1));

    return LdpcCode(params, std::move(field), std::move(checks));
}

Syndrome compute_syndrome(const LdpcCode& code, const Word& word) {
    if (word.size() != code.length())
        throw std::invalid_argument("word length does not match the code");
    const Field& f = code.field();
    Syndrome s;
    s.values.assign(code.check_count(), 0);
    for (std::uint32_t j = 0; j < code.check_count(); ++j) {
        Symbol acc = 0;
        for (const CheckEdge& e : code.check_row(j))
            acc = f.add(acc, f.mul(e.coeff, word[e.position]));
        s.values[j] = acc;
        s.weight += (acc != 0);
    }
    return s;
}

void apply_symbol_change(const LdpcCode& code, Syndrome& syndrome, std::uint32_t position,
                         Symbol old_value, Symbol new_value) {
    if (old_value == new_value)
        return;
    const Field& f = code.field();
    const Symbol delta = f.sub(new_value, old_value);
    for (const VarEdge& e : code.var_row(position)) {
        Symbol before = syndrome.values[e.check];
        Symbol after = f.add(before, f.mul(e.coeff, delta));
        syndrome.weight += (after != 0);
        syndrome.weight -= (before != 0);
        syndrome.values[e.check] = after;
    }
}

std::pair<Ratio, Ratio> syndrome_weight_bounds(std::uint64_t error_weight,
                                               std::uint32_t var_degree) {
    const long long edges = static_cast<long long>(error_weight) * var_degree;
    return {Ratio(edges, 2), Ratio(edges)};
}

std::string serialize_code(const LdpcCode& code) {
    const CodeParams& p = code.params();
    std::ostringstream out;
    out << p.length << ' ' << p.check_count() << ' ' << p.field_order << ' ' << p.var_degree
        << ' ' << p.check_degree << ' ' << code.field().modulus() << '\n';
    for (std::uint32_t j = 0; j < code.check_count(); ++j) {
        const auto& row = code.check_row(j);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k)
                out << ' ';
            out << row[k].position + 1 << ':' << row[k].coeff;
        }
        out << '\n';
    }
    return out.str();
}

LdpcCode parse_code(std::istream& in) {
    std::uint32_t n = 0, m = 0, q = 0, ell = 0, n0 = 0, modulus = 0;
    if (!(in >> n >> m >> q >> ell >> n0 >> modulus))
        throw std::invalid_argument("malformed code header");
    CodeParams params{n, ell, n0, q, modulus};
    params.validate();
    if (m != params.check_count())
        throw std::invalid_argument("header check count " + std::to_string(m) +
                                    " contradicts the degrees (expected " +
                                    std::to_string(params.check_count()) + ")");
    std::vector<std::vector<CheckEdge>> checks(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        checks[j].resize(n0);
        for (std::uint32_t k = 0; k < n0; ++k) {
            std::string token;
            if (!(in >> token))
                throw std::invalid_argument("truncated code file at check " + std::to_string(j));
            auto colon = token.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("expected position:coefficient, got '" + token + "'");
            unsigned long pos = 0, coeff = 0;
            try {
                pos = std::stoul(token.substr(0, colon));
                coeff = std::stoul(token.substr(colon + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad token '" + token + "' in code file");
            }
            if (pos < 1 || pos > n)
                throw std::invalid_argument("position " + std::to_string(pos) +
                                            " outside 1.." + std::to_string(n));
            if (coeff < 1 || coeff >= q)
                throw std::invalid_argument("coefficient " + std::to_string(coeff) +
                                            " outside 1.." + std::to_string(q - 1));
            checks[j][k] = CheckEdge{std::uint32_t(pos - 1), Symbol(coeff)};
        }
    }
    return LdpcCode(params, Field::of_order(q, modulus), std::move(checks));
}

LdpcCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open code file '" + path + "'");
    return parse_code(in);
}

void save_code(const LdpcCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write code file '" + path + "'");
    out << serialize_code(code);
}

Word parse_word(std::istream& in, std::uint32_t length, std::uint32_t field_order) {
    Word w;
    w.reserve(length);
    long long v = 0;
    while (in >> v) {
        if (v < 0 || std::uint64_t(v) >= field_order)
            throw std::invalid_argument("symbol " + std::to_string(v) + " outside 0.." +
                                        std::to_string(field_order - 1));
        w.push_back(Symbol(v));
    }
    if (w.size() != length)
        throw std::invalid_argument("expected " + std::to_string(length) + " symbols, got " +
                                    std::to_string(w.size()));
    return w;
}

Word load_word(const std::string& path, std::uint32_t length, std::uint32_t field_order) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open word file '" + path + "'");
    return parse_word(in, length, field_order);
}

void save_word(const Word& word, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write word file '" + path + "'");
    for (std::size_t i = 0; i < word.size(); ++i)
        out << word[i] << (i + 1 == word.size() ? '\n' : ' ');
}

} // namespace gfqldpc
