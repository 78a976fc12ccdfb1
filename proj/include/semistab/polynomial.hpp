#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semistab/monomial.hpp"

namespace semistab {

/// Sparse multivariate polynomial over a coefficient field K.
/// Terms are kept sorted with the leading monomial first; no stored
/// coefficient is zero.
template <class K>
class Polynomial {
public:
    using Elem = typename K::Element;
    using Term = std::pair<Monomial, Elem>;

    explicit Polynomial(K field) : field_(std::move(field)) {}

    Polynomial(K field, const Monomial& m, Elem c) : field_(std::move(field)) {
        if (!field_.is_zero(c)) terms_.emplace_back(m, std::move(c));
    }

    static Polynomial zero(K field) { return Polynomial(std::move(field)); }

    static Polynomial constant(K field, Elem c, int arity) {
        return Polynomial(std::move(field), Monomial::one(arity), std::move(c));
    }

    /// Adopts terms already sorted leading-first with no zero coefficients.
    static Polynomial from_sorted_terms(K field, std::vector<Term> terms) {
        Polynomial p(std::move(field));
        p.terms_ = std::move(terms);
#ifndef NDEBUG
        for (size_t i = 0; i + 1 < p.terms_.size(); ++i)
            assert(grevlex_less(p.terms_[i + 1].first, p.terms_[i].first));
        for (const auto& [m, c] : p.terms_) assert(!p.field_.is_zero(c));
#endif
        return p;
    }

    /// Builds from arbitrary (monomial, coefficient) pairs; collects like
    /// terms and drops zeros.
    static Polynomial from_terms(K field, std::vector<Term> raw) {
        std::map<Monomial, Elem, GrevlexGreater> acc;
        for (auto& [m, c] : raw) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, std::move(c));
            else
                it->second = field.add(it->second, c);
        }
        Polynomial p(field);
        for (auto& [m, c] : acc)
            if (!field.is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    const K& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw error("leading monomial of zero polynomial");
        return terms_.front().first;
    }
    const Elem& leading_coefficient() const {
        if (is_zero()) throw error("leading coefficient of zero polynomial");
        return terms_.front().second;
    }

    /// Total degree (of the leading term; -1 for the zero polynomial).
    int64_t degree() const { return is_zero() ? -1 : terms_.front().first.degree(); }

    /// The common degree of all terms, or nullopt when terms of different
    /// degrees are present or the polynomial is zero.
    std::optional<int64_t> homogeneous_degree() const {
        if (is_zero()) return std::nullopt;
        int64_t d = terms_.front().first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(a.field_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            const auto& ta = a.terms_[i];
            const auto& tb = b.terms_[j];
            if (ta.first == tb.first) {
                Elem c = a.field_.add(ta.second, tb.second);
                if (!a.field_.is_zero(c)) r.terms_.emplace_back(ta.first, std::move(c));
                ++i, ++j;
            } else if (grevlex_less(tb.first, ta.first)) {
                r.terms_.push_back(ta);
                ++i;
            } else {
                r.terms_.push_back(tb);
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    Polynomial operator-() const {
        Polynomial r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, field_.neg(c));
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        std::map<Monomial, Elem, GrevlexGreater> acc;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma * mb;
                Elem c = a.field_.mul(ca, cb);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = a.field_.add(it->second, c);
            }
        }
        Polynomial r(a.field_);
        for (auto& [m, c] : acc)
            if (!a.field_.is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial r(field_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, cc] : terms_) {
            Elem v = field_.mul(cc, c);
            if (!field_.is_zero(v)) r.terms_.emplace_back(m, std::move(v));
        }
        return r;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, c] : terms_) r.terms_.emplace_back(mm * m, c);
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading_coefficient()));
    }

    /// Partial derivative with respect to variable index i. In positive
    /// characteristic the exponent factor is reduced into the field.
    Polynomial derivative(int var) const {
        Polynomial r(field_);
        for (const auto& [m, c] : terms_) {
            int32_t e = m.exponent(var);
            if (e == 0) continue;
            Elem ec = field_.mul(c, field_.from_long(e));
            if (field_.is_zero(ec)) continue;
            std::vector<int32_t> exps(m.exponents());
            exps[static_cast<size_t>(var)] -= 1;
            r.terms_.emplace_back(Monomial(std::move(exps)), std::move(ec));
        }
        // differentiation preserves the term order
        return r;
    }

    Polynomial pow(unsigned long e) const {
        if (terms_.empty()) {
            if (e == 0) throw error("0^0 is undefined here");
            return *this;
        }
        int arity = terms_.front().first.arity();
        Polynomial r = constant(field_, field_.one(), arity);
        Polynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].first != b.terms_[i].first) return false;
            if (!a.field_.eq(a.terms_[i].second, b.terms_[i].second)) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

private:
    void check_compatible(const Polynomial& other) const {
        if (!(field_ == other.field_))
            throw error("coefficient field mismatch");
        if (!terms_.empty() && !other.terms_.empty() &&
            terms_.front().first.arity() != other.terms_.front().first.arity())
            throw error("ring arity mismatch");
    }

    K field_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text syntax. Terms joined by + / -, integer or a/b coefficients, powers
// written x^3, '*' between factors optional. Printing always emits '*'.
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

struct PolyLexer {
    std::string_view text;
    size_t pos = 0;
    int line = 1, col = 1;

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') { ++line; col = 1; }
            else ++col;
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                text[pos] == '\r'))
            advance();
    }
    bool done() { skip_ws(); return pos >= text.size(); }
    char peek() { skip_ws(); return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, col);
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') advance();
        if (pos == start) fail("expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    /// Longest match against the declared variable names; -1 if none.
    int variable(const std::vector<std::string>& vars) {
        skip_ws();
        int best = -1;
        size_t best_len = 0;
        for (size_t v = 0; v < vars.size(); ++v) {
            const std::string& name = vars[v];
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                // must not be a prefix of a longer identifier chunk unless a
                // declared variable also matches that longer chunk
                best = static_cast<int>(v);
                best_len = name.size();
            }
        }
        if (best >= 0)
            for (size_t i = 0; i < best_len; ++i) advance();
        return best;
    }
};

} // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const K& field,
                               const std::vector<std::string>& vars,
                               std::string_view text) {
    detail::PolyLexer lx{text};
    using Term = typename Polynomial<K>::Term;
    std::vector<Term> terms;
    const int arity = static_cast<int>(vars.size());

    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            lx.advance();
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;

        // optional coefficient
        mpz_class num = 1, den = 1;
        bool saw_coeff = false;
        if (lx.peek() >= '0' && lx.peek() <= '9') {
            num = lx.integer();
            saw_coeff = true;
            if (lx.peek() == '/') {
                lx.advance();
                den = lx.integer();
            }
        }
        if (sign < 0) num = -num;

        // factors
        std::vector<int32_t> exps(static_cast<size_t>(arity), 0);
        bool saw_factor = false;
        for (;;) {
            if (lx.peek() == '*') {
                lx.advance();
                continue;
            }
            size_t save = lx.pos;
            int v = lx.variable(vars);
            if (v < 0) {
                if (detail::is_ident_char(lx.peek()) && lx.peek() != '\0' &&
                    !(lx.peek() >= '0' && lx.peek() <= '9'))
                    lx.fail("unknown variable");
                lx.pos = save;
                break;
            }
            saw_factor = true;
            int64_t e = 1;
            if (lx.peek() == '^') {
                lx.advance();
                e = lx.integer().get_si();
                if (e < 0) lx.fail("negative exponent");
            }
            exps[static_cast<size_t>(v)] += static_cast<int32_t>(e);
        }
        if (!saw_coeff && !saw_factor) lx.fail("expected term");
        terms.emplace_back(Monomial(std::move(exps)),
                           field.from_fraction(num, den));
    }
    if (first) lx.fail("empty polynomial");
    return Polynomial<K>::from_terms(field, std::move(terms));
}

inline std::string monomial_to_string(const Monomial& m,
                                      const std::vector<std::string>& vars) {
    std::string s;
    for (int i = 0; i < m.arity(); ++i) {
        int32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += vars[static_cast<size_t>(i)];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

template <class K>
std::string to_string(const Polynomial<K>& p,
                      const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    const K& field = p.field();
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = field.str(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(cs.begin());
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        std::string ms = monomial_to_string(m, vars);
        if (ms.empty())
            out += cs;
        else if (cs == "1")
            out += ms;
        else
            out += cs + "*" + ms;
    }
    return out;
}

} // namespace semistab
