/**************************************************************************
 * code.hpp
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gfqldpc/galois.hpp"
#include "gfqldpc/rational.hpp"

namespace gfqldpc {

/// Parameters of a regular LDPC code over GF(q): every variable node sits on
/// `var_degree` checks, every check touches `check_degree` variables, and each
/// check is a single parity-check equation (one row, minimum distance 2).
struct CodeParams {
    std::uint32_t length = 0;        // number of code symbols (variable nodes)
    std::uint32_t var_degree = 0;    // checks per symbol
    std::uint32_t check_degree = 0;  // symbols per check
    std::uint32_t field_order = 0;   // q
    std::uint32_t modulus = 0;       // reduction polynomial for q = 2^m; 0 = default

    std::uint32_t check_count() const { return var_degree * length / check_degree; }

    /// Rate of one constituent single-parity-check code.
    Ratio constituent_rate() const { return Ratio(check_degree - 1, check_degree); }

    std::uint32_t constituent_check_rows() const { return 1; }
    std::uint32_t constituent_min_distance() const { return 2; }

    /// Lower bound on the code rate, 1 - var_degree/check_degree.
    Ratio design_rate_bound() const {
        return Ratio(std::int64_t(check_degree) - var_degree, check_degree);
    }

    /// Throws std::invalid_argument on any violated constraint (degrees >= 2,
    /// var_degree < check_degree so the rate bound is positive, divisibility,
    /// supported field order).
    void validate() const;
};

/// One slot of a check row: which symbol it reads and with what coefficient.
struct CheckEdge {
    std::uint32_t position; // 0-based symbol index
    Symbol coeff;           // nonzero
};

/// One entry of a variable node's adjacency: which check and the coefficient
/// that check applies to this symbol.
struct VarEdge {
    std::uint32_t check; // 0-based check index
    Symbol coeff;        // nonzero
};

/// An instantiated code: parameters, field, and the bipartite graph in both
/// orientations. Construction validates regularity (exact degrees, distinct
/// positions per check, distinct checks per symbol, nonzero coefficients).
class LdpcCode {
  public:
    LdpcCode(CodeParams params, Field field, std::vector<std::vector<CheckEdge>> checks);

    const CodeParams& params() const { return params_; }
    const Field& field() const { return field_; }
    std::uint32_t length() const { return params_.length; }
    std::uint32_t var_degree() const { return params_.var_degree; }
    std::uint32_t check_degree() const { return params_.check_degree; }
    std::uint32_t check_count() const { return params_.check_count(); }

    const std::vector<CheckEdge>& check_row(std::uint32_t check) const { return checks_[check]; }
    const std::vector<VarEdge>& var_row(std::uint32_t position) const { return vars_[position]; }

  private:
    CodeParams params_;
    Field field_;
    std::vector<std::vector<CheckEdge>> checks_;
    std::vector<std::vector<VarEdge>> vars_;
};

/// A word over the code's field, one symbol per position.
using Word = std::vector<Symbol>;

/// Check values for a word together with the count of nonzero entries.
struct Syndrome {
    std::vector<Symbol> values;
    std::uint32_t weight = 0;

    /// Weight recomputed by scanning values; for consistency checks.
    std::uint32_t recount() const {
        std::uint32_t w = 0;
        for (Symbol v : values)
            w += (v != 0);
        return w;
    }
};

/// Draws a code with the stratified construction: var_degree independent
/// rounds, each a uniform random permutation of the positions cut into
/// consecutive blocks of check_degree, plus i.i.d. uniform nonzero
/// coefficients. Deterministic given (params, seed): one SplitMix64 stream
/// seeded with `seed` is consumed in a documented order (per-round shuffles
/// first, then coefficients row-major with positions sorted ascending).
LdpcCode sample_regular_code(const CodeParams& params, std::uint64_t seed);

/// Full syndrome of `word`: value of every check and the nonzero count.
Syndrome compute_syndrome(const LdpcCode& code, const Word& word);

/// Incremental syndrome maintenance after word[position] changes from
/// old_value to new_value. Touches only the var_degree adjacent checks;
/// the result equals a full recomputation.
void apply_symbol_change(const LdpcCode& code, Syndrome& syndrome, std::uint32_t position,
                         Symbol old_value, Symbol new_value);

/// Reference pair {threshold, ceiling} for an error of the given weight,
/// as exact rationals. The ceiling weight*var_degree always holds: an
/// erroneous symbol can unsatisfy at most var_degree checks. The threshold
/// weight*var_degree/2 is what certification measures a code against — the
/// decoding guarantees require every nonzero pattern up to the certified
/// weight to keep its syndrome weight strictly above it.
std::pair<Ratio, Ratio> syndrome_weight_bounds(std::uint64_t error_weight,
                                               std::uint32_t var_degree);

/// Text format, one code per file:
///   line 1:  N M q ell n0 modulus
///   then M lines, each n0 tokens "position:coefficient" with 1-based positions.
/// The serializer emits single spaces and one row per line; the parser accepts
/// any whitespace. Row and slot order are preserved, so parse -> serialize is
/// byte-identical up to whitespace normalization.
std::string serialize_code(const LdpcCode& code);
LdpcCode parse_code(std::istream& in);
LdpcCode load_code(const std::string& path);
void save_code(const LdpcCode& code, const std::string& path);

/// Word files are whitespace-separated integers, one per position.
Word parse_word(std::istream& in, std::uint32_t length, std::uint32_t field_order);
Word load_word(const std::string& path, std::uint32_t length, std::uint32_t field_order);
void save_word(const Word& word, const std::string& path);

} // namespace gfqldpc
