#pragma once

#include <gmpxx.h>

#include <string>

#include "semistab/errors.hpp"

namespace semistab {

/// The field of rational numbers. Elements are GMP rationals kept in
/// lowest terms with positive denominator after every operation.
struct Rationals {
    using Element = mpq_class;

    unsigned long characteristic() const { return 0; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }

    Element from_long(long n) const { return Element(n); }

    Element from_fraction(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw error("rational with zero denominator");
        Element q(num, den);
        q.canonicalize();
        return q;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    Element inv(const Element& a) const {
        if (a == 0) throw error("division by zero");
        return Element(1) / a;
    }
    Element div(const Element& a, const Element& b) const {
        if (b == 0) throw error("division by zero");
        return a / b;
    }

    Element pow(const Element& a, unsigned long e) const {
        Element r;
        mpz_pow_ui(r.get_num().get_mpz_t(), a.get_num().get_mpz_t(), e);
        mpz_pow_ui(r.get_den().get_mpz_t(), a.get_den().get_mpz_t(), e);
        return r;
    }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool is_one(const Element& a) const { return a == 1; }

    std::string str(const Element& a) const { return a.get_str(); }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// ceil(num/den) for exact integers, den > 0.
inline mpz_class ceil_div(const mpz_class& num, const mpz_class& den) {
    if (den <= 0) throw error("ceil_div: denominator must be positive");
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

} // namespace semistab
