#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/chain_complex.hpp"

namespace homalg {

namespace detail {

/// Lexicographic enumeration of p-element subsets of {0..n-1}.
inline std::vector<std::vector<int>> subsets(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n)
        return out;
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[i] == n - p + i) --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline long subset_index(const std::vector<std::vector<int>>& table, const std::vector<int>& s) {
    auto it = std::lower_bound(table.begin(), table.end(), s);
    return static_cast<long>(it - table.begin());
}

}  // namespace detail

/// Chevalley-Eilenberg complex of g with trivial coefficients:
/// C_p = Lambda^p g with the lexicographic wedge basis and
///   d(x_1 ^ .. ^ x_p) = sum_{a<b} (-1)^{a+b} [x_a, x_b] ^ x_1 ^ .. ^x_a^ .. ^x_b^ .. ^ x_p
/// (1-based signs). The complex vanishes above dim g, so when cap >= dim g
/// every degree is exact.
inline ChainComplex chevalley_eilenberg_complex(const LieAlgebraData& g, int cap,
                                                WorkGuard* guard_in = nullptr) {
    if (cap < 0)
        throw ValidationError("chevalley_eilenberg_complex: cap must be >= 0");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    const int n = g.dim();
    const int top = std::min(cap, n);
    ChainComplex cc;
    cc.name = "chevalley-eilenberg(" + g.name + ")";
    cc.cap = top;
    cc.vanishes_above = true;  // Lambda^{top+1} is only reachable when top = cap < n; see below
    cc.dims.resize(top + 1);
    cc.d.resize(top + 1);
    cc.labels.resize(top + 1);

    std::vector<std::vector<std::vector<int>>> basis(top + 1);
    for (int p = 0; p <= top; ++p) {
        basis[p] = detail::subsets(n, p);
        cc.dims[p] = static_cast<long>(basis[p].size());
        guard.project(cc.dims[p], "chevalley-eilenberg chain space");
        for (const auto& s : basis[p]) {
            std::string l;
            for (int i : s) l += (l.empty() ? "" : "^") + g.labels[i];
            cc.labels[p].push_back(l.empty() ? "1" : l);
        }
    }
    for (int p = 1; p <= top; ++p) {
        SparseMatrix d(static_cast<int>(cc.dims[p - 1]), static_cast<int>(cc.dims[p]));
        for (long col = 0; col < cc.dims[p]; ++col) {
            const std::vector<int>& s = basis[p][col];
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b) {
                    int sign = ((a + 1) + (b + 1)) % 2 == 0 ? 1 : -1;
                    std::vector<int> rest;
                    rest.reserve(p - 2);
                    for (int i = 0; i < p; ++i)
                        if (i != a && i != b)
                            rest.push_back(s[i]);
                    const Svec& br = g.bracket[s[a]][s[b]];
                    for (const auto& [x, c] : br) {
                        // insert x into the sorted rest, tracking the wedge sign
                        if (std::binary_search(rest.begin(), rest.end(), x))
                            continue;
                        std::vector<int> w = rest;
                        auto pos = std::lower_bound(w.begin(), w.end(), x);
                        int shift = static_cast<int>(pos - w.begin());
                        w.insert(pos, x);
                        int s2 = shift % 2 == 0 ? 1 : -1;
                        d.add(static_cast<int>(detail::subset_index(basis[p - 1], w)),
                              static_cast<int>(col), Rational(sign * s2) * c);
                    }
                }
        }
        cc.d[p] = std::move(d);
        guard.charge(cc.d[p].nnz(), "chevalley-eilenberg boundary");
    }
    if (cap > n) {
        // requested beyond dim g: pad with zero degrees, everything is exact
        cc.cap = cap;
        cc.dims.resize(cap + 1, 0);
        cc.labels.resize(cap + 1);
        cc.d.resize(cap + 1);
        for (int p = n + 1; p <= cap; ++p)
            cc.d[p] = SparseMatrix(static_cast<int>(cc.dims[p - 1]), 0);
    } else if (top < n) {
        cc.vanishes_above = false;  // genuine truncation below the top exterior power
    }
    cc.verify();
    return cc;
}

}  // namespace homalg
