#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "semistab/errors.hpp"

namespace semistab {

/// The prime field F_p for a prime p < 2^31. Elements are residues in
/// [0, p); with p below 2^31 every intermediate product fits in 64 bits.
class PrimeField {
public:
    using Element = uint64_t;

    explicit PrimeField(uint64_t p) : p_(p) {
        if (p < 2 || p >= (uint64_t{1} << 31))
            throw error("prime field characteristic out of range: " +
                        std::to_string(p));
        for (uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0)
                throw error("field characteristic " + std::to_string(p) +
                            " is not prime");
        }
    }

    unsigned long characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }

    Element from_long(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Element>(r);
    }

    Element from_fraction(const mpz_class& num, const mpz_class& den) const {
        mpz_class m(static_cast<unsigned long>(p_));
        mpz_class n = num % m, d = den % m;
        if (n < 0) n += m;
        if (d < 0) d += m;
        Element dv = static_cast<Element>(d.get_ui());
        if (dv == 0) throw error("denominator vanishes modulo p");
        return mul(static_cast<Element>(n.get_ui()), inv(dv));
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const { return (a * b) % p_; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

    Element inv(Element a) const {
        if (a == 0) throw error("division by zero");
        // extended Euclid on (a, p)
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += static_cast<int64_t>(p_);
        return static_cast<Element>(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element pow(Element a, unsigned long e) const {
        Element r = one(), base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }
    bool is_one(Element a) const { return a == 1; }

    std::string str(Element a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_;
    }

private:
    uint64_t p_;
};

} // namespace semistab
