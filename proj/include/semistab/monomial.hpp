#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

#include "semistab/errors.hpp"

namespace semistab {

/// Exponent vector of a power product, with the total degree cached.
/// The number of entries is the arity of the ambient ring.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int32_t> exponents)
        : exps_(std::move(exponents)),
          deg_(std::accumulate(exps_.begin(), exps_.end(), int64_t{0})) {
        assert(std::all_of(exps_.begin(), exps_.end(),
                           [](int32_t e) { return e >= 0; }));
    }

    static Monomial one(int arity) {
        return Monomial(std::vector<int32_t>(static_cast<size_t>(arity), 0));
    }

    int arity() const { return static_cast<int>(exps_.size()); }
    int64_t degree() const { return deg_; }
    int32_t exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int32_t>& exponents() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.arity() == b.arity());
        std::vector<int32_t> e(a.exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
        return Monomial(std::move(e));
    }

private:
    std::vector<int32_t> exps_;
    int64_t deg_ = 0;
};

/// Degree-reverse-lexicographic comparison with the first declared variable
/// largest: a < b iff deg a < deg b, or degrees agree and the last
/// coordinate where they differ is larger in a.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    assert(x.size() == y.size());
    for (size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] > y[i];
    }
    return false;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(a, b);
    }
};

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_less(b, a);
    }
};

inline bool divides(const Monomial& d, const Monomial& m) {
    assert(d.arity() == m.arity());
    if (d.degree() > m.degree()) return false;
    for (int i = 0; i < d.arity(); ++i) {
        if (d.exponent(i) > m.exponent(i)) return false;
    }
    return true;
}

/// m / d, assuming d | m.
inline Monomial quotient(const Monomial& m, const Monomial& d) {
    assert(divides(d, m));
    std::vector<int32_t> e(m.exponents());
    for (size_t i = 0; i < e.size(); ++i) e[i] -= d.exponent(static_cast<int>(i));
    return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    std::vector<int32_t> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], b.exponent(static_cast<int>(i)));
    return Monomial(std::move(e));
}

inline uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// All monomials of total degree d in the given arity, ascending in the
/// canonical order. Empty for d < 0.
inline std::vector<Monomial> monomials_of_degree(int arity, int64_t d) {
    if (arity <= 0) throw error("monomials_of_degree: arity must be positive");
    if (d < 0) return {};
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(
        binomial(static_cast<uint64_t>(d) + arity - 1, arity - 1)));
    std::vector<int32_t> cur(static_cast<size_t>(arity), 0);
    // Recurse over positions, assigning the leftover degree to the last slot.
    auto rec = [&](auto&& self, int pos, int64_t rest) -> void {
        if (pos == arity - 1) {
            cur[static_cast<size_t>(pos)] = static_cast<int32_t>(rest);
            out.emplace_back(cur);
            return;
        }
        for (int64_t e = 0; e <= rest; ++e) {
            cur[static_cast<size_t>(pos)] = static_cast<int32_t>(e);
            self(self, pos + 1, rest - e);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrevlexLess{});
    return out;
}

} // namespace semistab
