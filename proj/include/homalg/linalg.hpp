#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homalg/sparse.hpp"

namespace homalg {

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Entry-operation budget for one top-level operation. Every scalar
/// multiply-add in the elimination core charges one unit; exceeding the cap
/// aborts cleanly instead of thrashing.
class WorkGuard {
  public:
    WorkGuard() : cap_(default_cap()) {}
    explicit WorkGuard(long long cap) : cap_(cap) {}

    static long long default_cap() {
        if (const char* env = std::getenv("HOMOLOGY_SIZE_GUARD")) {
            long long v = std::atoll(env);
            if (v > 0)
                return v;
        }
        return 200000000LL;  // 2e8 entry-operations
    }

    void charge(long long amount, const char* what) {
        used_ += amount;
        if (used_ > cap_)
            throw SizeGuardError(std::string("size guard exceeded (cap ") + std::to_string(cap_) +
                                 " entry-operations) during " + what);
    }

    /// Cheap feasibility pre-check: anything that must touch more stored
    /// entries than the whole budget is rejected before allocation.
    void project(long long amount, const char* what) {
        if (amount > cap_)
            throw SizeGuardError(std::string("projected workload ") + std::to_string(amount) +
                                 " exceeds size guard cap " + std::to_string(cap_) + " for " + what);
    }

    long long used() const { return used_; }
    long long cap() const { return cap_; }

  private:
    long long cap_;
    long long used_ = 0;
};

/// Reduced row echelon basis of a row span. Rows are sorted by pivot column,
/// each pivot entry is 1 and is the only nonzero in its column.
struct Echelon {
    int ncols = 0;
    std::vector<Row> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }

    bool is_pivot(int col) const {
        return std::binary_search(pivots.begin(), pivots.end(), col);
    }
};

namespace detail {

inline void row_axpy(Row& target, const Rational& scale, const Row& source, WorkGuard& guard) {
    guard.charge(static_cast<long long>(target.size() + source.size()), "row update");
    Row out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || source[j].first < target[i].first) {
            out.emplace_back(source[j].first, scale * source[j].second);
            ++j;
        } else {
            Rational v = target[i].second + scale * source[j].second;
            if (v != 0)
                out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

inline void row_normalize_leading(Row& r) {
    if (r.empty())
        return;
    Rational lead = r.front().second;
    if (lead == 1)
        return;
    for (auto& [c, v] : r) v /= lead;
}

}  // namespace detail

/// Incremental sparse eliminator maintaining a fully reduced row echelon
/// form: every stored row has leading coefficient 1 at its pivot and no
/// support on any other pivot column. Insertion reduces the incoming row in
/// one left-to-right pass (stored rows only ever add columns to the right of
/// the one being cancelled) and then clears the new pivot column from the
/// stored rows through a column-usage index, so chained relation systems
/// reduce in near-linear work.
class EchelonBuilder {
  public:
    EchelonBuilder(int ncols, WorkGuard& guard) : ncols_(ncols), guard_(&guard) {}

    /// Fully reduce r against the current rows.
    void reduce(Row& r) const {
        std::size_t i = 0;
        while (i < r.size()) {
            auto it = rows_.find(r[i].first);
            if (it == rows_.end()) {
                ++i;
                continue;
            }
            detail::row_axpy(r, -r[i].second, it->second, *guard_);
        }
    }

    /// Insert a row; returns true if the rank grew.
    bool insert(Row r) {
        reduce(r);
        if (r.empty())
            return false;
        detail::row_normalize_leading(r);
        const int pivot = r.front().first;
        // clear the new pivot column from stored rows (all have smaller pivots)
        auto users = col_users_.find(pivot);
        if (users != col_users_.end()) {
            std::vector<int> affected(users->second.begin(), users->second.end());
            for (int p : affected) {
                Row& s = rows_[p];
                Rational coeff;
                for (const auto& [c, v] : s)
                    if (c == pivot) {
                        coeff = v;
                        break;
                    }
                index_remove(p, s);
                detail::row_axpy(s, -coeff, r, *guard_);
                index_add(p, s);
            }
        }
        index_add(pivot, r);
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Canonical RREF of everything inserted so far.
    Echelon finalize() const {
        Echelon e;
        e.ncols = ncols_;
        for (const auto& [piv, row] : rows_) {
            e.pivots.push_back(piv);
            e.rows.push_back(row);
        }
        return e;
    }

  private:
    void index_add(int pivot, const Row& r) {
        for (const auto& [c, v] : r)
            if (c != pivot)
                col_users_[c].insert(pivot);
    }

    void index_remove(int pivot, const Row& r) {
        for (const auto& [c, v] : r) {
            if (c == pivot)
                continue;
            auto it = col_users_.find(c);
            if (it != col_users_.end()) {
                it->second.erase(pivot);
                if (it->second.empty())
                    col_users_.erase(it);
            }
        }
    }

    int ncols_;
    WorkGuard* guard_;
    std::map<int, Row> rows_;
    std::map<int, std::set<int>> col_users_;  // column -> pivots of rows supported there
};

/// Fully reduce a vector modulo a finalized echelon basis. The remainder is
/// the canonical representative of v + span(e): it has no support on pivot
/// columns.
inline Row echelon_reduce(const Echelon& e, Row v, WorkGuard& guard) {
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = std::lower_bound(e.pivots.begin(), e.pivots.end(), v[i].first);
        if (it == e.pivots.end() || *it != v[i].first) {
            ++i;
            continue;
        }
        std::size_t idx = static_cast<std::size_t>(it - e.pivots.begin());
        detail::row_axpy(v, -v[i].second, e.rows[idx], guard);
        // the pivot column vanished; entries before position i are pivot-free
    }
    return v;
}

/// Canonical RREF of a set of rows. Insertion order does not affect the
/// result; rows are fed sparsest-first to keep intermediate fill low.
inline Echelon rref_of_rows(std::vector<Row> rows, int ncols, WorkGuard& guard) {
    long long nnz = 0;
    for (const auto& r : rows) nnz += static_cast<long long>(r.size());
    guard.project(nnz, "rref input");
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.size() < b.size(); });
    EchelonBuilder builder(ncols, guard);
    for (auto& r : rows) builder.insert(std::move(r));
    return builder.finalize();
}

/// Subspace of Q^ambient_dim given by its canonical reduced-echelon basis.
struct Subspace {
    int ambient_dim = 0;
    std::vector<Row> basis;
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }

    static Subspace from_echelon(const Echelon& e) {
        return Subspace{e.ncols, e.rows, e.pivots};
    }

    Echelon as_echelon() const { return Echelon{ambient_dim, basis, pivots}; }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
};

struct RankBases {
    int rank = 0;
    Subspace kernel;
    Subspace image;
};

/// RREF of the matrix rows (row space echelon form).
inline Echelon row_space(const SparseMatrix& m, WorkGuard& guard) {
    return rref_of_rows(m.row_list(), m.cols, guard);
}

inline int rank(const SparseMatrix& m, WorkGuard& guard) {
    // eliminate along the shorter side
    if (m.rows <= m.cols) {
        std::vector<Row> rows = m.transpose().row_list();
        return rref_of_rows(std::move(rows), m.rows, guard).rank();
    }
    return row_space(m, guard).rank();
}

/// Canonical echelon basis of { x : m x = 0 }.
inline Subspace kernel_subspace(const SparseMatrix& m, WorkGuard& guard) {
    Echelon e = row_space(m, guard);
    std::vector<Row> kernel_rows;
    std::size_t pi = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (pi < e.pivots.size() && e.pivots[pi] == c) {
            ++pi;
            continue;
        }
        // free column c: 1 at c, minus the RREF column above each pivot
        Row v;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            for (const auto& [col, val] : e.rows[r]) {
                if (col == c) {
                    v.emplace_back(e.pivots[r], -val);
                    break;
                }
                if (col > c)
                    break;
            }
        }
        v.emplace_back(c, Rational(1));
        std::sort(v.begin(), v.end());
        kernel_rows.push_back(std::move(v));
    }
    return Subspace::from_echelon(rref_of_rows(std::move(kernel_rows), m.cols, guard));
}

/// Canonical echelon basis of the column space.
inline Subspace image_subspace(const SparseMatrix& m, WorkGuard& guard) {
    return Subspace::from_echelon(rref_of_rows(m.transpose().row_list(), m.rows, guard));
}

/// Rank together with canonical kernel and image bases.
inline RankBases rank_and_bases(const SparseMatrix& m, WorkGuard* guard_in = nullptr) {
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    RankBases out;
    out.kernel = kernel_subspace(m, guard);
    out.image = image_subspace(m, guard);
    out.rank = out.image.dim();
    if (out.rank + out.kernel.dim() != m.cols)
        throw ValidationError("rank-nullity violation (internal)");
    return out;
}

/// Deterministic exact solve of m x = b: free variables are zero, pivot
/// variables come from the RREF of the augmented system. Returns nothing if
/// the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(const SparseMatrix& m,
                                                         const std::vector<Rational>& b,
                                                         WorkGuard* guard_in = nullptr) {
    if (static_cast<int>(b.size()) != m.rows)
        throw ValidationError("solve_linear: right-hand side length mismatch");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    std::vector<Row> rows = m.row_list();
    for (int r = 0; r < m.rows; ++r)
        if (b[r] != 0)
            rows[r].emplace_back(m.cols, b[r]);
    Echelon e = rref_of_rows(std::move(rows), m.cols + 1, guard);
    std::vector<Rational> x(m.cols, Rational(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols)
            return std::nullopt;  // pivot in the augmented column
        for (const auto& [col, val] : e.rows[i])
            if (col == m.cols)
                x[e.pivots[i]] = val;
    }
    return x;
}

struct ContainmentError : std::runtime_error {
    int offending_index;
    ContainmentError(const std::string& msg, int idx) : std::runtime_error(msg), offending_index(idx) {}
};

/// dim(big) - dim(small), after checking small really is contained in big.
inline int quotient_dim(const Subspace& big, const Subspace& small, WorkGuard* guard_in = nullptr) {
    if (big.ambient_dim != small.ambient_dim)
        throw ValidationError("quotient_dim: ambient dimensions differ");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    Echelon e = big.as_echelon();
    for (std::size_t i = 0; i < small.basis.size(); ++i) {
        Row rem = echelon_reduce(e, small.basis[i], guard);
        if (!rem.empty())
            throw ContainmentError(
                "quotient_dim: basis vector " + std::to_string(i) + " of the small subspace is not contained in the big one",
                static_cast<int>(i));
    }
    return big.dim() - small.dim();
}

/// Canonical homology representatives: kernel basis reduced modulo the
/// boundary span, then re-echelonized. Each output row is a cycle and the
/// rows are independent modulo the boundaries.
inline std::vector<Row> quotient_representatives(const Subspace& kernel, const Echelon& boundaries,
                                                 WorkGuard& guard) {
    std::vector<Row> reduced;
    for (const auto& v : kernel.basis) {
        Row r = echelon_reduce(boundaries, v, guard);
        if (!r.empty())
            reduced.push_back(std::move(r));
    }
    Echelon e = rref_of_rows(std::move(reduced), kernel.ambient_dim, guard);
    return e.rows;
}

}  // namespace homalg
