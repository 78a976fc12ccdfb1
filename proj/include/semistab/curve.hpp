#pragma once

#include <functional>
#include <optional>

#include "semistab/groebner.hpp"

namespace semistab {

struct CurveInvariants {
    int64_t degree = 0;
    int64_t genus = 0;
};

/// Degree and genus of X = Proj S from the stabilized Hilbert polynomial
/// deg(X)*t + (1 - g).
template <class K>
CurveInvariants curve_invariants(const GradedRing<K>& ring) {
    const HilbertData& h = ring.hilbert();
    if (h.stabilized_slope <= 0)
        throw validation_error("the given ring does not define a curve "
                               "(Hilbert slope is not positive)");
    CurveInvariants inv;
    inv.degree = h.stabilized_slope;
    inv.genus = 1 - h.stabilized_intercept;
    if (inv.genus < 0)
        throw validation_error("negative genus: the input ring is not the "
                               "coordinate ring of an integral curve");
    return inv;
}

struct SmoothnessResult {
    bool ok = false;
    /// When not smooth: a degree at which the singular-locus quotient is
    /// still nonzero.
    std::optional<int64_t> witness_degree;
};

namespace detail {

template <class K>
Polynomial<K> minor_det(const K& field,
                        const std::vector<std::vector<Polynomial<K>>>& jac,
                        const std::vector<int>& rows,
                        const std::vector<int>& cols) {
    // cofactor expansion along the first selected row
    if (rows.size() == 1)
        return jac[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[0])];
    Polynomial<K> det(field);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t c = 0; c < cols.size(); ++c) {
        const auto& pivot = jac[static_cast<size_t>(rows[0])][static_cast<size_t>(cols[c])];
        if (pivot.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t cc = 0; cc < cols.size(); ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        auto cof = pivot * minor_det(field, jac, sub_rows, sub_cols);
        det = (c % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

inline void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace detail

/// Jacobian smoothness criterion: the curve is smooth iff the ideal
/// generated by I together with the codimension-sized minors of the
/// Jacobian matrix is primary to the irrelevant ideal, which we detect by
/// the Hilbert function of the quotient vanishing.
template <class K>
SmoothnessResult check_smooth(const GradedRing<K>& ring) {
    const int v = ring.arity();
    const auto& gens = ring.generators();
    if (gens.empty()) {
        // Proj of the free ring: a curve only for two variables, and then smooth.
        return {v == 2, std::nullopt};
    }
    const int codim = v - 2;
    if (codim < 1)
        throw validation_error("check_smooth: ambient space is too small");

    const K& field = ring.field();
    std::vector<std::vector<Polynomial<K>>> jac;
    for (const auto& g : gens) {
        std::vector<Polynomial<K>> row;
        for (int j = 0; j < v; ++j) row.push_back(g.derivative(j));
        jac.push_back(std::move(row));
    }

    std::vector<Polynomial<K>> sing = gens;
    const int t = static_cast<int>(gens.size());
    if (t < codim)
        throw validation_error("check_smooth: fewer generators than the "
                               "codimension; not a complete description of a curve");
    detail::combinations(t, codim, [&](const std::vector<int>& rows) {
        detail::combinations(v, codim, [&](const std::vector<int>& cols) {
            auto d = detail::minor_det(field, jac, rows, cols);
            if (!d.is_zero()) sing.push_back(std::move(d));
        });
    });

    GradedRing<K> quotient(field, ring.vars(), std::move(sing));
    const HilbertData& h = quotient.hilbert();
    if (h.stabilized_slope == 0 && h.stabilized_intercept == 0)
        return {true, std::nullopt};

    int64_t witness = h.window_end();
    while (witness > 0 && h.values[static_cast<size_t>(witness)] == 0) --witness;
    return {false, witness};
}

} // namespace semistab
