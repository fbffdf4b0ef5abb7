/**************************************************************************
 * galois.hpp
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
#include <vector>

namespace gfqldpc {

/// A field element. Always < q, so uint16_t covers every supported order
/// (q <= 65536 means values go up to 65535).
using Symbol = std::uint16_t;

/// Carry-less product of two GF(2) polynomials (bit i = coefficient of x^i),
/// reduced modulo `modulus` of the given degree. Schoolbook shift-and-xor;
/// used to build the log/antilog tables and as the slow reference multiply.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                           unsigned degree);

/// True when `modulus` is a degree-`degree` polynomial over GF(2) with no
/// factor of positive degree. Trial division by everything up to degree/2.
bool poly_is_irreducible(std::uint32_t modulus, unsigned degree);

/// Published default modulus per extension degree (1 <= degree <= 16).
/// All entries are primitive, e.g. x^4+x+1 (0x13) for degree 4 and
/// x^6+x+1 (0x43) for degree 6.
std::uint32_t default_modulus(unsigned degree);

/// GF(q) arithmetic. Prime q uses modular arithmetic; q = 2^m uses
/// log/antilog tables over the smallest multiplicative generator.
/// Supported orders: primes and powers of two, 2 <= q <= 65536.
/// Everything else (9, 27, ...) is rejected.
class Field {
  public:
    /// Dispatch on the factorization of q. `modulus` applies only to
    /// binary extension fields; 0 selects the published default.
    static Field of_order(std::uint32_t q, std::uint32_t modulus = 0);
    static Field prime_field(std::uint32_t p);
    static Field binary_field(unsigned degree, std::uint32_t modulus = 0);

    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return characteristic_; }
    unsigned degree() const { return degree_; }
    /// Reduction polynomial for binary extensions, 0 for prime fields.
    std::uint32_t modulus() const { return modulus_; }
    /// Smallest element generating the multiplicative group.
    Symbol generator() const { return generator_; }

    Symbol add(Symbol a, Symbol b) const {
        return tables() ? Symbol(a ^ b) : Symbol((std::uint32_t(a) + b) % q_);
    }

    Symbol sub(Symbol a, Symbol b) const {
        return tables() ? Symbol(a ^ b) : Symbol((q_ + a - b) % q_);
    }

    Symbol neg(Symbol a) const {
        if (tables())
            return a; // characteristic 2: every element is its own negative
        return a == 0 ? Symbol(0) : Symbol(q_ - a);
    }

    Symbol mul(Symbol a, Symbol b) const {
        if (tables())
            return (a && b) ? exp_[std::uint32_t(log_[a]) + log_[b]] : Symbol(0);
        return Symbol(std::uint64_t(a) * b % q_);
    }

    /// Multiplicative inverse. Throws std::domain_error for a == 0.
    Symbol inv(Symbol a) const;

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    friend bool operator==(const Field& x, const Field& y) {
        return x.q_ == y.q_ && x.modulus_ == y.modulus_;
    }

  private:
    Field() = default;
    bool tables() const { return degree_ > 1; }

    std::uint32_t q_ = 0;
    std::uint32_t characteristic_ = 0;
    std::uint32_t modulus_ = 0;
    unsigned degree_ = 0;
    Symbol generator_ = 0;
    // exp_[k] = g^k for k in [0, 2(q-1)), doubled so mul needs no reduction;
    // log_[a] inverts it on [1, q).
    std::vector<Symbol> exp_;
    std::vector<Symbol> log_;
};

} // namespace gfqldpc
