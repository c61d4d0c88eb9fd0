#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

/// One sparse row: (column, value) pairs sorted by column, no zero values.
using Row = std::vector<std::pair<int, Rational>>;

inline Row row_from_svec(const Svec& v) {
    Row r;
    r.reserve(v.size());
    for (const auto& [idx, val] : v) r.emplace_back(idx, val);
    return r;
}

inline Svec svec_from_row(const Row& r) {
    Svec v;
    for (const auto& [idx, val] : r) v.emplace(idx, val);
    return v;
}

/// Sparse matrix with explicit shape. Stored entries are always nonzero and
/// in range; the value type is exact, so equality of matrices is decidable.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rational> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.entries.emplace(std::make_pair(i, i), Rational(1));
        return m;
    }

    void add(int r, int c, const Rational& val) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw ValidationError("sparse matrix index out of range");
        if (val == 0)
            return;
        auto key = std::make_pair(r, c);
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries.emplace(key, val);
        } else {
            it->second += val;
            if (it->second == 0)
                entries.erase(it);
        }
    }

    Rational at(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return entries.empty(); }

    long long nnz() const { return static_cast<long long>(entries.size()); }

    SparseMatrix transpose() const {
        SparseMatrix t(cols, rows);
        for (const auto& [key, val] : entries) t.entries.emplace(std::make_pair(key.second, key.first), val);
        return t;
    }

    /// Matrix product this * other.
    SparseMatrix compose(const SparseMatrix& other) const {
        if (cols != other.rows)
            throw ValidationError("sparse matrix composition shape mismatch");
        SparseMatrix out(rows, other.cols);
        // group other's entries by row
        std::vector<Row> orows(other.rows);
        for (const auto& [key, val] : other.entries) orows[key.first].emplace_back(key.second, val);
        for (const auto& [key, val] : entries) {
            for (const auto& [c2, v2] : orows[key.second]) out.add(key.first, c2, val * v2);
        }
        return out;
    }

    /// m . x for a sparse column vector keyed by column index; result keyed by row.
    Svec apply(const Svec& x) const {
        Svec out;
        for (const auto& [key, val] : entries) {
            auto it = x.find(key.second);
            if (it == x.end())
                continue;
            out[key.first] += val * it->second;
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second == 0)
                it = out.erase(it);
            else
                ++it;
        }
        return out;
    }

    std::vector<Row> row_list() const {
        std::vector<Row> out(rows);
        for (const auto& [key, val] : entries) out[key.first].emplace_back(key.second, val);
        return out;
    }

    /// Column-major adjacency, for repeated applications to sparse vectors.
    std::vector<std::vector<std::pair<int, Rational>>> col_list() const {
        std::vector<std::vector<std::pair<int, Rational>>> out(cols);
        for (const auto& [key, val] : entries) out[key.second].emplace_back(key.first, val);
        return out;
    }

    bool operator==(const SparseMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }

    /// Debug dump, one line per entry: "row col numerator/denominator".
    void dump(std::ostream& os) const {
        for (const auto& [key, val] : entries)
            os << key.first << ' ' << key.second << ' ' << rational_to_string(val) << '\n';
    }
};

}  // namespace homalg
