#pragma once

#include <random>
#include <string>
#include <vector>

#include "semistab/groebner.hpp"
#include "semistab/prime_field.hpp"
#include "semistab/rational.hpp"

namespace testutil {

using semistab::Monomial;
using semistab::Polynomial;
using semistab::PrimeField;
using semistab::Rationals;

inline const std::vector<std::string>& xyz() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

inline Polynomial<Rationals> pq(const std::string& s,
                                const std::vector<std::string>& vars = xyz()) {
    return semistab::parse_polynomial(Rationals{}, vars, s);
}

inline Polynomial<PrimeField> pf(uint64_t p, const std::string& s,
                                 const std::vector<std::string>& vars = xyz()) {
    return semistab::parse_polynomial(PrimeField(p), vars, s);
}

/// Random homogeneous polynomial: a random nonempty subset of the degree-d
/// monomials with small random nonzero coefficients.
template <class K>
Polynomial<K> random_homogeneous(const K& field, int arity, int degree,
                                 std::mt19937_64& rng) {
    auto monos = semistab::monomials_of_degree(arity, degree);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<size_t> howmany(1, std::min<size_t>(5, monos.size()));
    std::vector<typename Polynomial<K>::Term> terms;
    size_t n = howmany(rng);
    for (size_t i = 0; i < n; ++i) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        terms.emplace_back(monos[pick(rng)], field.from_long(c));
    }
    return Polynomial<K>::from_terms(field, std::move(terms));
}

} // namespace testutil
