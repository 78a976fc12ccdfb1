#pragma once

#include <ostream>
#include <variant>

#include "semistab/sheaf_map.hpp"

namespace semistab {

/// Exponent tuple a with sum(a) = q, labelling a column of a symmetric
/// power matrix.
struct MultiIndex {
    std::vector<int32_t> exps;

    int64_t sum() const {
        int64_t s = 0;
        for (int32_t e : exps) s += e;
        return s;
    }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Sorted subset of {1,..,n} labelling a column of an exterior power
/// matrix. Elements are 1-based and strictly increasing.
struct SubsetIndex {
    std::vector<int32_t> elems;
    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

using PowerLabel = std::variant<MultiIndex, SubsetIndex>;

/// All multi-indices over n slots with sum q, lexicographically descending.
inline std::vector<MultiIndex> multi_indices(int n, int q) {
    std::vector<MultiIndex> out;
    std::vector<int32_t> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = static_cast<int32_t>(rest);
            out.push_back(MultiIndex{cur});
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[static_cast<size_t>(pos)] = static_cast<int32_t>(e);
            self(self, pos + 1, rest - e);
        }
    };
    if (n > 0 && q >= 0) rec(rec, 0, q);
    return out;
}

/// All size-s subsets of {1,..,n} in lexicographic order.
inline std::vector<SubsetIndex> subset_indices(int n, int s) {
    std::vector<SubsetIndex> out;
    std::vector<int32_t> cur(static_cast<size_t>(s));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == s) {
            out.push_back(SubsetIndex{cur});
            return;
        }
        for (int i = start; i <= n; ++i) {
            cur[static_cast<size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    if (s >= 0 && s <= n) rec(rec, 1, 0);
    return out;
}

/// A symmetric or exterior power matrix together with the labels of its
/// rows and columns. `map` carries the entries and inherited twists; the
/// kernel of the associated sheaf map is the corresponding power of the
/// kernel of the base map.
template <class K>
struct PowerMatrix {
    SheafMap<K> map;
    std::vector<PowerLabel> col_labels;
    std::vector<std::pair<PowerLabel, int32_t>> row_labels; // (label, base row j)
};

/// The matrix A_q presenting Sym^q(ker A): columns indexed by
/// multi-indices a with |a| = q, rows by (b, j) with |b| = q - 1; the
/// entry at ((b,j), a) is a_i * A_{j,i} for the unique i with a_i > b_i
/// when b <= a componentwise, else zero.
template <class K>
PowerMatrix<K> sym_power(const SheafMap<K>& A, int q) {
    if (q < 1) throw validation_error("symmetric power exponent must be >= 1");
    const int n = static_cast<int>(A.cols());
    const int m = static_cast<int>(A.rows());
    const K& field = A.ring()->field();

    auto cols = multi_indices(n, q);
    auto rows = multi_indices(n, q - 1);

    std::map<std::vector<int32_t>, size_t> col_pos;
    for (size_t c = 0; c < cols.size(); ++c) col_pos.emplace(cols[c].exps, c);

    std::vector<int64_t> col_twists;
    col_twists.reserve(cols.size());
    for (const auto& a : cols) {
        int64_t t = 0;
        for (int i = 0; i < n; ++i) t += int64_t(a.exps[size_t(i)]) * A.col_twists()[size_t(i)];
        col_twists.push_back(t);
    }

    std::vector<int64_t> row_twists;
    std::vector<std::pair<PowerLabel, int32_t>> row_labels;
    std::vector<std::vector<Polynomial<K>>> entries;
    for (const auto& b : rows) {
        int64_t base_twist = 0;
        for (int i = 0; i < n; ++i)
            base_twist += int64_t(b.exps[size_t(i)]) * A.col_twists()[size_t(i)];
        for (int j = 0; j < m; ++j) {
            row_twists.push_back(base_twist + A.row_twists()[size_t(j)]);
            row_labels.emplace_back(PowerLabel{b}, j);
            std::vector<Polynomial<K>> row(cols.size(), Polynomial<K>::zero(field));
            for (int i = 0; i < n; ++i) {
                auto a = b.exps;
                a[size_t(i)] += 1;
                size_t c = col_pos.at(a);
                row[c] = A.entry(size_t(j), size_t(i))
                             .scaled(field.from_long(a[size_t(i)]));
            }
            entries.push_back(std::move(row));
        }
    }

    SheafMap<K> map(A.ring(), std::move(entries), std::move(col_twists),
                    std::move(row_twists));
    std::vector<PowerLabel> col_labels;
    for (auto& a : cols) col_labels.emplace_back(std::move(a));
    return PowerMatrix<K>{std::move(map), std::move(col_labels), std::move(row_labels)};
}

/// The matrix presenting Wedge^s(ker A): columns indexed by size-s subsets
/// I, rows by (J, j) with #J = s - 1; the entry at ((J,j), I) for J inside
/// I is sign(i*, I) * A_{j,i*} with i* the unique element of I minus J.
/// The sign is +1 when i* is the smallest element of I and alternates with
/// the position, matching the alternating contraction.
template <class K>
PowerMatrix<K> ext_power(const SheafMap<K>& A, int s) {
    const int n = static_cast<int>(A.cols());
    const int m = static_cast<int>(A.rows());
    if (s < 1 || s > n)
        throw validation_error("exterior power exponent out of range");
    const K& field = A.ring()->field();

    auto cols = subset_indices(n, s);
    auto rows = subset_indices(n, s - 1);

    std::map<std::vector<int32_t>, size_t> col_pos;
    for (size_t c = 0; c < cols.size(); ++c) col_pos.emplace(cols[c].elems, c);

    std::vector<int64_t> col_twists;
    for (const auto& I : cols) {
        int64_t t = 0;
        for (int32_t i : I.elems) t += A.col_twists()[size_t(i - 1)];
        col_twists.push_back(t);
    }

    std::vector<int64_t> row_twists;
    std::vector<std::pair<PowerLabel, int32_t>> row_labels;
    std::vector<std::vector<Polynomial<K>>> entries;
    for (const auto& J : rows) {
        int64_t base_twist = 0;
        for (int32_t i : J.elems) base_twist += A.col_twists()[size_t(i - 1)];
        for (int j = 0; j < m; ++j) {
            row_twists.push_back(base_twist + A.row_twists()[size_t(j)]);
            row_labels.emplace_back(PowerLabel{J}, j);
            std::vector<Polynomial<K>> row(cols.size(), Polynomial<K>::zero(field));
            for (int32_t i = 1; i <= n; ++i) {
                if (std::find(J.elems.begin(), J.elems.end(), i) != J.elems.end())
                    continue;
                std::vector<int32_t> I(J.elems);
                I.insert(std::upper_bound(I.begin(), I.end(), i), i);
                size_t c = col_pos.at(I);
                size_t pos = static_cast<size_t>(
                    std::find(I.begin(), I.end(), i) - I.begin()); // 0-based
                auto e = A.entry(size_t(j), size_t(i - 1));
                row[c] = (pos % 2 == 0) ? e : -e;
            }
            entries.push_back(std::move(row));
        }
    }

    SheafMap<K> map(A.ring(), std::move(entries), std::move(col_twists),
                    std::move(row_twists));
    std::vector<PowerLabel> col_labels;
    for (auto& I : cols) col_labels.emplace_back(std::move(I));
    return PowerMatrix<K>{std::move(map), std::move(col_labels), std::move(row_labels)};
}

/// Sym^q of the s-th exterior power, presented as the symmetric power of
/// the exterior power matrix.
template <class K>
PowerMatrix<K> sym_of_ext(const SheafMap<K>& A, int s, int q) {
    if (s == 1) return sym_power(A, q);
    return sym_power(ext_power(A, s).map, q);
}

inline std::string label_to_string(const PowerLabel& l) {
    std::string out;
    if (std::holds_alternative<MultiIndex>(l)) {
        out += "(";
        const auto& mi = std::get<MultiIndex>(l);
        for (size_t i = 0; i < mi.exps.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(mi.exps[i]);
        }
        out += ")";
    } else {
        out += "{";
        const auto& si = std::get<SubsetIndex>(l);
        for (size_t i = 0; i < si.elems.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(si.elems[i]);
        }
        out += "}";
    }
    return out;
}

/// Debug dump: one line per row, labels first, entries in text syntax.
template <class K>
void dump(std::ostream& os, const PowerMatrix<K>& P) {
    const auto& vars = P.map.ring()->vars();
    os << "cols:";
    for (size_t c = 0; c < P.col_labels.size(); ++c)
        os << " " << label_to_string(P.col_labels[c]) << "(" << -P.map.col_twists()[c]
           << ")";
    os << "\n";
    for (size_t r = 0; r < P.map.rows(); ++r) {
        os << label_to_string(P.row_labels[r].first) << ",j=" << P.row_labels[r].second + 1
           << "(" << -P.map.row_twists()[r] << "):";
        for (size_t c = 0; c < P.map.cols(); ++c)
            os << " " << to_string(P.map.entry(r, c), vars);
        os << "\n";
    }
}

} // namespace semistab
