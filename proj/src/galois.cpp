/**************************************************************************
 * galois.cpp
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

#include "gfqldpc/galois.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "gfqldpc/errors.hpp"

namespace gfqldpc {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Remainder of a modulo b as GF(2) polynomials.
std::uint32_t poly_rem(std::uint32_t a, std::uint32_t b) {
    const int db = std::bit_width(b) - 1;
    int da;
    while ((da = std::bit_width(a) - 1) >= db && a != 0)
        a ^= b << (da - db);
    return a;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1)
            r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

std::string hex_string(std::uint32_t m) {
    std::string s;
    do {
        s.insert(s.begin(), "0123456789abcdef"[m & 15]);
        m >>= 4;
    } while (m);
    return "0x" + s;
}

// Smallest primitive root mod p: g passes iff g^((p-1)/f) != 1 for every
// prime factor f of p-1.
Symbol smallest_primitive_root(std::uint32_t p) {
    if (p == 2)
        return 1;
    std::uint32_t group = p - 1;
    std::uint32_t n = group;
    std::uint32_t factors[32];
    int nf = 0;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors[nf++] = d;
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        factors[nf++] = n;
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i)
            ok = mod_pow(g, group / factors[i], p) != 1;
        if (ok)
            return Symbol(g);
    }
    throw InternalError("no primitive root mod " + std::to_string(p));
}

} // namespace

std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                           unsigned degree) {
    const std::uint32_t top = 1u << degree;
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1)
            acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top)
            a ^= modulus;
    }
    return acc;
}

bool poly_is_irreducible(std::uint32_t modulus, unsigned degree) {
    if (degree == 0 || degree > 16)
        return false;
    if ((modulus >> degree) != 1u)
        return false; // wrong degree
    // any factor splits into one of degree <= degree/2
    const std::uint32_t limit = 1u << (degree / 2 + 1);
    for (std::uint32_t d = 2; d < limit; ++d)
        if (poly_rem(modulus, d) == 0)
            return false;
    return true;
}

std::uint32_t default_modulus(unsigned degree) {
    // primitive polynomials, one per degree
    static const std::uint32_t table[17] = {
        0,       0x3,     0x7,    0xb,    0x13,   0x25,    0x43,   0x89,  0x11d,
        0x211,   0x409,   0x805,  0x1053, 0x201b, 0x4443,  0x8003, 0x1100b,
    };
    if (degree < 1 || degree > 16)
        throw std::invalid_argument("no default modulus for degree " + std::to_string(degree));
    return table[degree];
}

Field Field::of_order(std::uint32_t q, std::uint32_t modulus) {
    if (q < 2 || q > 65536)
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " out of range [2, 65536]");
    if (is_prime(q)) {
        if (modulus != 0)
            throw std::invalid_argument("a modulus applies only to binary extension fields");
        return prime_field(q);
    }
    if ((q & (q - 1)) == 0)
        return binary_field(unsigned(std::bit_width(q) - 1), modulus);
    throw std::invalid_argument("field order " + std::to_string(q) +
                                " is neither prime nor a power of two");
}

Field Field::prime_field(std::uint32_t p) {
    if (p < 2 || p > 65536 || !is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
    Field f;
    f.q_ = p;
    f.characteristic_ = p;
    f.degree_ = 1;
    f.modulus_ = 0;
    f.generator_ = smallest_primitive_root(p);
    return f;
}

Field Field::binary_field(unsigned degree, std::uint32_t modulus) {
    if (degree < 2 || degree > 16)
        throw std::invalid_argument("binary extension degree " + std::to_string(degree) +
                                    " out of range [2, 16]");
    if (modulus == 0)
        modulus = default_modulus(degree);
    if (!poly_is_irreducible(modulus, degree))
        throw std::invalid_argument("modulus " + hex_string(modulus) +
                                    " is not irreducible of degree " + std::to_string(degree));

    Field f;
    f.q_ = 1u << degree;
    f.characteristic_ = 2;
    f.degree_ = degree;
    f.modulus_ = modulus;

    const std::uint32_t q = f.q_;
    f.log_.assign(q, 0);
    f.exp_.assign(2 * (q - 1), 0);

    // The unit group is cyclic of order q-1; scan for its smallest
    // generator, filling the tables along the way. With a primitive
    // modulus the very first candidate (the polynomial x, i.e. 2) wins.
    bool found = false;
    for (std::uint32_t g = 2; g < q && !found; ++g) {
        std::uint32_t x = 1;
        bool full_cycle = true;
        for (std::uint32_t k = 0; k < q - 1; ++k) {
            if (x == 1 && k > 0) {
                full_cycle = false; // g's order divides k < q-1
                break;
            }
            f.exp_[k] = Symbol(x);
            f.log_[x] = Symbol(k);
            x = poly_mul_mod(x, g, modulus, degree);
        }
        if (full_cycle) {
            f.generator_ = Symbol(g);
            found = true;
        }
    }
    if (!found)
        throw InternalError("no generator found, modulus cannot be irreducible");
    for (std::uint32_t k = 0; k < q - 1; ++k)
        f.exp_[q - 1 + k] = f.exp_[k];
    return f;
}

Symbol Field::inv(Symbol a) const {
    if (a == 0)
        throw std::domain_error("zero has no multiplicative inverse");
    if (tables())
        return exp_[q_ - 1 - log_[a]];
    // extended Euclid on (a, q); q prime makes every nonzero a invertible
    std::int64_t t = 0, nt = 1;
    std::int64_t r = q_, nr = a;
    while (nr != 0) {
        std::int64_t quot = r / nr;
        std::int64_t tmp = t - quot * nt;
        t = nt;
        nt = tmp;
        tmp = r - quot * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0)
        t += q_;
    return Symbol(t);
}

} // namespace gfqldpc
