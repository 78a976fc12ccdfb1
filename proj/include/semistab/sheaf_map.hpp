#pragma once

#include <gmpxx.h>

#include <vector>

#include "semistab/curve.hpp"
#include "semistab/groebner.hpp"

namespace semistab {

/// A map of twisted sums O_X(-e_i) -> O_X(-d_j) given by an m x n matrix
/// of homogeneous polynomials; entry (j,i), when nonzero, has degree
/// e_i - d_j. Entries are stored in normal form. The kernel sheaf of the
/// map is what the rest of the library probes.
template <class K>
class SheafMap {
public:
    using P = Polynomial<K>;

    SheafMap(RingPtr<K> ring, std::vector<std::vector<P>> entries,
             std::vector<int64_t> col_twists, std::vector<int64_t> row_twists)
        : ring_(std::move(ring)),
          entries_(std::move(entries)),
          col_twists_(std::move(col_twists)),
          row_twists_(std::move(row_twists)) {
        if (entries_.empty() || entries_.front().empty())
            throw validation_error("sheaf map must have at least one entry");
        if (row_twists_.size() != entries_.size())
            throw validation_error("row twist count does not match matrix");
        for (auto& row : entries_)
            if (row.size() != col_twists_.size())
                throw validation_error("column twist count does not match matrix");
        for (size_t j = 0; j < entries_.size(); ++j) {
            for (size_t i = 0; i < entries_[j].size(); ++i) {
                P nf = ring_->normal_form(entries_[j][i]);
                if (!nf.is_zero()) {
                    auto deg = nf.homogeneous_degree();
                    if (!deg || *deg != col_twists_[i] - row_twists_[j])
                        throw validation_error(
                            "entry (" + std::to_string(j + 1) + "," +
                            std::to_string(i + 1) +
                            ") is not homogeneous of degree e_i - d_j");
                }
                entries_[j][i] = std::move(nf);
            }
        }
    }

    const RingPtr<K>& ring() const { return ring_; }
    size_t rows() const { return entries_.size(); }
    size_t cols() const { return col_twists_.size(); }
    const P& entry(size_t j, size_t i) const { return entries_[j][i]; }
    const std::vector<int64_t>& col_twists() const { return col_twists_; }
    const std::vector<int64_t>& row_twists() const { return row_twists_; }

    bool is_zero() const {
        for (const auto& row : entries_)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }

private:
    RingPtr<K> ring_;
    std::vector<std::vector<P>> entries_;
    std::vector<int64_t> col_twists_;
    std::vector<int64_t> row_twists_;
};

/// Tensoring with O(k): subtracts k from every twist, entries unchanged.
template <class K>
SheafMap<K> twist(const SheafMap<K>& A, int64_t k) {
    std::vector<std::vector<Polynomial<K>>> entries;
    for (size_t j = 0; j < A.rows(); ++j) {
        std::vector<Polynomial<K>> row;
        for (size_t i = 0; i < A.cols(); ++i) row.push_back(A.entry(j, i));
        entries.push_back(std::move(row));
    }
    auto e = A.col_twists();
    auto d = A.row_twists();
    for (auto& v : e) v -= k;
    for (auto& v : d) v -= k;
    return SheafMap<K>(A.ring(), std::move(entries), std::move(e), std::move(d));
}

/// Single-row map O(-deg f_i) -> O with column twists inferred from the
/// entry degrees. Entries must be nonzero (else twists are ambiguous).
template <class K>
SheafMap<K> syzygy_map(RingPtr<K> ring, std::vector<Polynomial<K>> entries) {
    std::vector<int64_t> e;
    for (auto& f : entries) {
        auto nf = ring->normal_form(f);
        auto d = nf.homogeneous_degree();
        if (!d)
            throw validation_error(
                "syzygy entries must be nonzero homogeneous polynomials");
        e.push_back(*d);
        f = std::move(nf);
    }
    return SheafMap<K>(std::move(ring), {std::move(entries)}, std::move(e), {0});
}

struct KernelInvariants {
    int64_t rank = 0;
    int64_t degree = 0;
    mpq_class slope; // degree/rank in lowest terms
};

/// Rank, degree and slope of ker A for a single-row map A. The degree is
/// -deg(X) * sum(e_i) plus the constant value of the Hilbert polynomial of
/// S/J, where J is generated by the entries; the correction vanishes when
/// J is primary to the irrelevant ideal.
template <class K>
KernelInvariants kernel_invariants(const SheafMap<K>& A) {
    if (A.rows() != 1)
        throw validation_error("kernel invariants are defined for single-row maps");
    if (A.is_zero()) throw validation_error("kernel invariants of the zero map");
    if (A.cols() < 2)
        throw validation_error("kernel of a 1x1 map is zero; no invariants");

    const auto& ring = *A.ring();
    int64_t deg_x = curve_invariants(ring).degree;

    std::vector<Polynomial<K>> gens = ring.generators();
    for (size_t i = 0; i < A.cols(); ++i)
        if (!A.entry(0, i).is_zero()) gens.push_back(A.entry(0, i));
    GradedRing<K> quotient(ring.field(), ring.vars(), std::move(gens));
    const HilbertData& h = quotient.hilbert();
    if (h.stabilized_slope != 0)
        throw validation_error("entry ideal does not define a finite scheme "
                               "on the curve");
    int64_t correction = h.stabilized_intercept;

    KernelInvariants inv;
    inv.rank = static_cast<int64_t>(A.cols()) - 1;
    int64_t esum = 0;
    for (int64_t e : A.col_twists()) esum += e;
    // deg ker A = -deg X * sum(e_i) - deg(im A), and im A sits inside
    // O(-d_1), so its degree is -HP(S/J) - d_1 * deg X.
    inv.degree = -deg_x * esum + deg_x * A.row_twists()[0] + correction;
    inv.slope = mpq_class(inv.degree, inv.rank);
    inv.slope.canonicalize();
    return inv;
}

} // namespace semistab
