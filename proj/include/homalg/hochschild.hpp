#pragma once

#include <string>
#include <vector>

#include "homalg/algebra.hpp"
#include "homalg/chain_complex.hpp"

namespace homalg {

/// Canonical enumeration of the tensor basis of M (x) A^{(x) p}: the module
/// index varies slowest, then a_1, ..., a_p. All boundary/operator matrices
/// in this project are written in these coordinates.
struct TensorSpace {
    int module_dim = 0;
    int algebra_dim = 0;
    int degree = 0;

    long dim() const {
        long d = module_dim;
        for (int i = 0; i < degree; ++i) d *= algebra_dim;
        return d;
    }

    long index(const std::vector<int>& tuple) const {
        long idx = tuple[0];
        for (int i = 1; i <= degree; ++i) idx = idx * algebra_dim + tuple[i];
        return idx;
    }

    std::vector<int> tuple(long idx) const {
        std::vector<int> t(degree + 1);
        for (int i = degree; i >= 1; --i) {
            t[i] = static_cast<int>(idx % algebra_dim);
            idx /= algebra_dim;
        }
        t[0] = static_cast<int>(idx);
        return t;
    }

    /// Coefficient vector of the chain equal to `tuple` with slot `slot`
    /// replaced by the sparse element `value` (module element for slot 0,
    /// algebra element otherwise).
    Svec expand_slot(const std::vector<int>& tuple, int slot, const Svec& value) const {
        Svec out;
        std::vector<int> t = tuple;
        for (const auto& [b, c] : value) {
            t[slot] = b;
            out[index(t)] = c;
        }
        return out;
    }

    std::vector<std::string> make_labels(const std::vector<std::string>& module_labels,
                                         const std::vector<std::string>& algebra_labels) const {
        std::vector<std::string> out;
        out.reserve(dim());
        std::vector<int> t(degree + 1, 0);
        for (long i = 0; i < dim(); ++i) {
            std::string l = module_labels[t[0]];
            for (int s = 1; s <= degree; ++s) l += "|" + algebra_labels[t[s]];
            out.push_back(std::move(l));
            for (int s = degree; s >= 0; --s) {
                int lim = s == 0 ? module_dim : algebra_dim;
                if (++t[s] < lim)
                    break;
                t[s] = 0;
            }
        }
        return out;
    }
};

/// Matrix of the Hochschild boundary b : M (x) A^{(x)p} -> M (x) A^{(x)p-1},
///   b(m,a_1..a_p) = (m a_1, a_2..a_p)
///                 + sum_{i=1}^{p-1} (-1)^i (m, a_1.., a_i a_{i+1}, .., a_p)
///                 + (-1)^p (a_p m, a_1..a_{p-1}).
inline SparseMatrix hochschild_boundary(const AlgebraPtr& a, const Bimodule& m, int p) {
    if (p < 1)
        throw ValidationError("hochschild_boundary: degree must be >= 1");
    TensorSpace src{m.dim(), a->dim(), p};
    TensorSpace dst{m.dim(), a->dim(), p - 1};
    SparseMatrix out(static_cast<int>(dst.dim()), static_cast<int>(src.dim()));
    for (long col = 0; col < src.dim(); ++col) {
        std::vector<int> t = src.tuple(col);
        // i = 0: multiply a_1 into the module slot
        {
            std::vector<int> u(p);  // (m', a_2..a_p)
            for (int s = 2; s <= p; ++s) u[s - 1] = t[s];
            Svec prod = m.act_right(svec_unit(t[0]), svec_unit(t[1]));
            for (const auto& [b, c] : prod) {
                u[0] = b;
                out.add(static_cast<int>(dst.index(u)), static_cast<int>(col), c);
            }
        }
        // interior multiplications
        int sign = 1;
        for (int i = 1; i <= p - 1; ++i) {
            sign = -sign;
            std::vector<int> u(p);
            u[0] = t[0];
            for (int s = 1; s < i; ++s) u[s] = t[s];
            for (int s = i + 2; s <= p; ++s) u[s - 1] = t[s];
            const Svec& prod = a->mul_basis(t[i], t[i + 1]);
            for (const auto& [b, c] : prod) {
                u[i] = b;
                out.add(static_cast<int>(dst.index(u)), static_cast<int>(col),
                        sign > 0 ? c : Rational(-c));
            }
        }
        // cyclic term: a_p multiplies the module slot from the left
        {
            int csign = (p % 2 == 0) ? 1 : -1;
            std::vector<int> u(p);
            for (int s = 1; s <= p - 1; ++s) u[s] = t[s];
            Svec prod = m.act_left(svec_unit(t[p]), svec_unit(t[0]));
            for (const auto& [b, c] : prod) {
                u[0] = b;
                out.add(static_cast<int>(dst.index(u)), static_cast<int>(col),
                        csign > 0 ? c : Rational(-c));
            }
        }
    }
    return out;
}

/// Hochschild complex C_*(A, M) up to degree cap (top degree flagged as a
/// truncation boundary by the homology driver).
inline ChainComplex build_hochschild_complex(const AlgebraPtr& a, const Bimodule& m, int cap,
                                             WorkGuard* guard_in = nullptr) {
    if (cap < 0)
        throw ValidationError("build_hochschild_complex: cap must be >= 0");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    ChainComplex cc;
    cc.name = "hochschild(" + a->name + ")";
    cc.cap = cap;
    cc.dims.resize(cap + 1);
    cc.d.resize(cap + 1);
    cc.labels.resize(cap + 1);
    for (int p = 0; p <= cap; ++p) {
        TensorSpace ts{m.dim(), a->dim(), p};
        guard.project(ts.dim(), ("hochschild chain space at degree " + std::to_string(p)).c_str());
        cc.dims[p] = ts.dim();
        cc.labels[p] = ts.make_labels(m.labels, a->labels);
        if (p >= 1)
            cc.d[p] = hochschild_boundary(a, m, p);
    }
    cc.verify();
    return cc;
}

inline ChainComplex build_hochschild_complex(const AlgebraPtr& a, int cap, WorkGuard* guard = nullptr) {
    return build_hochschild_complex(a, algebra_as_bimodule(a), cap, guard);
}

}  // namespace homalg
