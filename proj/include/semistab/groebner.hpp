#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semistab/polynomial.hpp"

namespace semistab {

/// Values of the Hilbert function of a graded quotient together with the
/// stabilized linear polynomial slope*t + intercept.
struct HilbertData {
    std::vector<int64_t> values;   // values[d] = dim of degree-d piece, d = 0..D
    int64_t stabilized_slope = 0;
    int64_t stabilized_intercept = 0;
    int64_t stabilization_degree = 0;

    int64_t window_end() const { return static_cast<int64_t>(values.size()) - 1; }
};

namespace detail {

template <class K>
using Elem_t = typename K::Element;

/// Full reduction of p modulo a list of monic polynomials: no monomial of
/// the result is divisible by any leading monomial of the list.
template <class K>
Polynomial<K> reduce_full(const K& field, Polynomial<K> h,
                          const std::vector<Polynomial<K>>& basis) {
    using P = Polynomial<K>;
    std::vector<typename P::Term> remainder;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        const P* divisor = nullptr;
        for (const auto& g : basis) {
            if (divides(g.leading_monomial(), lm)) {
                divisor = &g;
                break;
            }
        }
        if (!divisor) {
            remainder.push_back(h.terms().front());
            std::vector<typename P::Term> tail(h.terms().begin() + 1,
                                               h.terms().end());
            h = P::from_sorted_terms(field, std::move(tail));
            continue;
        }
        Monomial u = quotient(lm, divisor->leading_monomial());
        Elem_t<K> c = field.div(h.leading_coefficient(),
                                divisor->leading_coefficient());
        h = h - divisor->times_monomial(u).scaled(c);
    }
    return P::from_sorted_terms(field, std::move(remainder));
}

template <class K>
Polynomial<K> s_polynomial(const K& field, const Polynomial<K>& f,
                           const Polynomial<K>& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Monomial uf = quotient(l, f.leading_monomial());
    Monomial ug = quotient(l, g.leading_monomial());
    Polynomial<K> a = f.times_monomial(uf).scaled(field.inv(f.leading_coefficient()));
    Polynomial<K> b = g.times_monomial(ug).scaled(field.inv(g.leading_coefficient()));
    return a - b;
}

} // namespace detail

/// Buchberger's algorithm with the normal selection strategy (lowest
/// degree S-pair first) and both classical pair criteria; the result is
/// the unique reduced Groebner basis for the active order, leading
/// coefficients 1, sorted by ascending leading monomial.
template <class K>
std::vector<Polynomial<K>> buchberger(const K& field,
                                      std::vector<Polynomial<K>> gens) {
    using P = Polynomial<K>;
    std::vector<P> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw validation_error("buchberger: generator is not homogeneous");
        basis.push_back(g.monic());
    }

    // pending S-pairs keyed by (degree of lcm, i, j), i < j
    std::set<std::tuple<int64_t, int, int>> pending;
    std::set<std::pair<int, int>> pending_flat;
    auto push_pair = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        int64_t d = lcm(basis[static_cast<size_t>(i)].leading_monomial(),
                        basis[static_cast<size_t>(j)].leading_monomial())
                        .degree();
        pending.emplace(d, i, j);
        pending_flat.emplace(i, j);
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            push_pair(static_cast<int>(i), static_cast<int>(j));

    while (!pending.empty()) {
        auto [d, i, j] = *pending.begin();
        pending.erase(pending.begin());
        pending_flat.erase({i, j});

        const Monomial& lmi = basis[static_cast<size_t>(i)].leading_monomial();
        const Monomial& lmj = basis[static_cast<size_t>(j)].leading_monomial();
        const Monomial l = lcm(lmi, lmj);

        // product criterion
        if (l.degree() == lmi.degree() + lmj.degree() && l == lmi * lmj) continue;

        // chain criterion: some k with LM_k | lcm and both (i,k), (j,k)
        // no longer pending
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            int kk = static_cast<int>(k);
            if (kk == i || kk == j) continue;
            if (!divides(basis[k].leading_monomial(), l)) continue;
            auto key = [&](int a, int b) {
                return a < b ? std::pair(a, b) : std::pair(b, a);
            };
            if (!pending_flat.count(key(i, kk)) && !pending_flat.count(key(j, kk)))
                skip = true;
        }
        if (skip) continue;

        P s = detail::s_polynomial(field, basis[static_cast<size_t>(i)],
                                   basis[static_cast<size_t>(j)]);
        P r = detail::reduce_full(field, std::move(s), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        int newi = static_cast<int>(basis.size()) - 1;
        for (int k = 0; k < newi; ++k) push_pair(k, newi);
    }

    // autoreduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<P> others;
            others.reserve(basis.size() - 1);
            for (size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            P r = detail::reduce_full(field, basis[i], others);
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (r != basis[i]) {
                basis[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const P& a, const P& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return basis;
}

/// A standard graded quotient ring K[x_1..x_v]/I presented by a reduced
/// Groebner basis. Immutable after construction; queries are thread-safe.
template <class K>
class GradedRing {
public:
    using P = Polynomial<K>;
    using Elem = typename K::Element;

    /// Normal form of every monomial of one degree, in coordinates of the
    /// monomial basis of that graded piece.
    struct DegreeTable {
        std::vector<Monomial> all;     // every monomial of the degree, ascending
        std::vector<Monomial> basis;   // those outside the leading-term ideal
        std::vector<int32_t> basis_pos; // position in `basis` or -1, per `all`
        std::vector<std::vector<std::pair<int32_t, Elem>>> nf; // per `all`
    };

    GradedRing(K field, std::vector<std::string> vars, std::vector<P> gens)
        : field_(std::move(field)), vars_(std::move(vars)) {
        if (vars_.empty()) throw validation_error("ring needs at least one variable");
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (!g.is_homogeneous())
                throw validation_error("ideal generator is not homogeneous");
            if (g.leading_monomial().arity() != arity())
                throw validation_error("generator arity does not match variables");
            gens_.push_back(std::move(g));
        }
        gb_ = buchberger(field_, gens_);
    }

    const K& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<P>& generators() const { return gens_; }
    const std::vector<P>& groebner_basis() const { return gb_; }

    /// Unique remainder modulo the reduced Groebner basis.
    P normal_form(const P& p) const {
        return detail::reduce_full(field_, p, gb_);
    }

    P parse(std::string_view text) const {
        return parse_polynomial(field_, vars_, text);
    }
    std::string str(const P& p) const { return to_string(p, vars_); }

    /// Monomial basis of the degree-d piece of the quotient, ascending.
    std::vector<Monomial> graded_basis(int64_t d) const {
        if (d < 0) return {};
        std::vector<Monomial> out;
        for (auto& m : monomials_of_degree(arity(), d))
            if (!in_leading_ideal(m)) out.push_back(std::move(m));
        return out;
    }

    /// Hilbert function over the heuristic window, with the stabilized
    /// linear polynomial. Throws when the tail is not linear.
    const HilbertData& hilbert() const {
        std::lock_guard<std::mutex> lk(mutex_);
        if (!hilbert_) hilbert_ = compute_hilbert();
        return *hilbert_;
    }

    const DegreeTable& monomial_table(int64_t d) const {
        std::lock_guard<std::mutex> lk(mutex_);
        auto it = tables_.find(d);
        if (it == tables_.end())
            it = tables_.emplace(d, build_table(d)).first;
        return *it->second;
    }

private:
    bool in_leading_ideal(const Monomial& m) const {
        for (const auto& g : gb_)
            if (divides(g.leading_monomial(), m)) return true;
        return false;
    }

    HilbertData compute_hilbert() const {
        int64_t window = 3;
        for (const auto& g : gb_) window += g.leading_monomial().degree();
        HilbertData h;
        h.values.resize(static_cast<size_t>(window) + 1);
        for (int64_t d = 0; d <= window; ++d)
            h.values[static_cast<size_t>(d)] =
                static_cast<int64_t>(graded_basis(d).size());

        int64_t vD = h.values[static_cast<size_t>(window)];
        int64_t vD1 = h.values[static_cast<size_t>(window - 1)];
        int64_t vD2 = h.values[static_cast<size_t>(window - 2)];
        if (vD - vD1 != vD1 - vD2)
            throw validation_error(
                "hilbert: quotient is not a curve or point scheme "
                "(Hilbert function is not eventually linear)");
        h.stabilized_slope = vD - vD1;
        h.stabilized_intercept = vD - h.stabilized_slope * window;
        int64_t s = window;
        while (s > 0 &&
               h.values[static_cast<size_t>(s - 1)] ==
                   h.stabilized_slope * (s - 1) + h.stabilized_intercept)
            --s;
        h.stabilization_degree = s;
        return h;
    }

    std::unique_ptr<DegreeTable> build_table(int64_t d) const {
        auto t = std::make_unique<DegreeTable>();
        if (d < 0) return t;
        t->all = monomials_of_degree(arity(), d);
        t->basis_pos.assign(t->all.size(), -1);
        t->nf.resize(t->all.size());
        for (size_t i = 0; i < t->all.size(); ++i) {
            if (!in_leading_ideal(t->all[i])) {
                t->basis_pos[i] = static_cast<int32_t>(t->basis.size());
                t->basis.push_back(t->all[i]);
            }
        }
        auto rank_of = [&](const Monomial& m) -> size_t {
            auto it = std::lower_bound(t->all.begin(), t->all.end(), m,
                                       GrevlexLess{});
            return static_cast<size_t>(it - t->all.begin());
        };
        // ascending pass: every reduction step only references strictly
        // smaller monomials of the same degree
        for (size_t i = 0; i < t->all.size(); ++i) {
            if (t->basis_pos[i] >= 0) {
                t->nf[i] = {{t->basis_pos[i], field_.one()}};
                continue;
            }
            const Monomial& m = t->all[i];
            const P* g = nullptr;
            for (const auto& cand : gb_) {
                if (divides(cand.leading_monomial(), m)) {
                    g = &cand;
                    break;
                }
            }
            Monomial u = quotient(m, g->leading_monomial());
            std::map<int32_t, Elem> acc;
            const auto& terms = g->terms();
            for (size_t ti = 1; ti < terms.size(); ++ti) {
                Monomial mm = u * terms[ti].first;
                Elem c = field_.neg(terms[ti].second);
                for (const auto& [pos, cc] : t->nf[rank_of(mm)]) {
                    auto it = acc.find(pos);
                    if (it == acc.end())
                        acc.emplace(pos, field_.mul(c, cc));
                    else
                        it->second = field_.add(it->second, field_.mul(c, cc));
                }
            }
            auto& row = t->nf[i];
            for (auto& [pos, c] : acc)
                if (!field_.is_zero(c)) row.emplace_back(pos, std::move(c));
        }
        return t;
    }

    K field_;
    std::vector<std::string> vars_;
    std::vector<P> gens_;
    std::vector<P> gb_;
    mutable std::mutex mutex_;
    mutable std::optional<HilbertData> hilbert_;
    mutable std::map<int64_t, std::unique_ptr<DegreeTable>> tables_;
};

template <class K>
using RingPtr = std::shared_ptr<const GradedRing<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars,
                     std::vector<Polynomial<K>> gens) {
    return std::make_shared<const GradedRing<K>>(std::move(field),
                                                 std::move(vars),
                                                 std::move(gens));
}

} // namespace semistab
