#pragma once

#include <string>
#include <vector>

#include "homalg/constructions.hpp"
#include "homalg/hochschild.hpp"

namespace homalg {

/// Relative Hochschild complex C_*^S(A, M): the quotient of M (x) A^{(x)p}
/// by every S-balancing relation, i.e. s moved across each tensor sign
///   (m s, a_1, ..) ~ (m, s a_1, ..),  (.., a_i s, a_{i+1}, ..) ~ (.., a_i, s a_{i+1}, ..)
/// and around the cycle
///   (m, a_1, .., a_p s) ~ (s m, a_1, .., a_p).
/// Chain coordinates are the ambient tensor-basis indices not used as
/// relation pivots; projection/section realize the quotient explicitly.
struct RelativeComplex {
    ChainComplex complex;                    // the induced complex
    std::vector<Echelon> relations;          // per degree, RREF of the relation span
    std::vector<std::vector<int>> free_cols;  // per degree, ambient indices carrying the quotient basis
    std::vector<SparseMatrix> projection;    // per degree, quotient_dim x ambient_dim

    /// Section: quotient coordinates -> ambient chain (unit vectors on free columns).
    Svec section(int degree, const Svec& q) const {
        Svec out;
        for (const auto& [i, c] : q) out.emplace(free_cols[degree][i], c);
        return out;
    }
};

namespace detail {

inline std::vector<Row> balancing_relations(const AlgebraPtr& a, const Bimodule& m,
                                            const SeparabilityWitness& w, int p) {
    TensorSpace ts{m.dim(), a->dim(), p};
    std::vector<Row> rels;
    std::vector<Svec> s_embedded;
    for (std::size_t s = 0; s < w.embedding.size(); ++s) s_embedded.push_back(w.embedding[s]);
    for (long idx = 0; idx < ts.dim(); ++idx) {
        std::vector<int> t = ts.tuple(idx);
        for (const Svec& es : s_embedded) {
            // position 0: (m s, a_1, ...) - (m, s a_1, ...); for p = 0 this is
            // the cyclic relation (m s) - (s m)
            {
                Svec lhs = ts.expand_slot(t, 0, m.act_right(svec_unit(t[0]), es));
                Svec rhs = p >= 1 ? ts.expand_slot(t, 1, a->mul(es, svec_unit(t[1])))
                                  : ts.expand_slot(t, 0, m.act_left(es, svec_unit(t[0])));
                Svec rel = svec_diff(lhs, rhs);
                if (!rel.empty())
                    rels.push_back(row_from_svec(rel));
            }
            // interior positions between a_i and a_{i+1}
            for (int i = 1; i <= p - 1; ++i) {
                Svec lhs = ts.expand_slot(t, i, a->mul(svec_unit(t[i]), es));
                Svec rhs = ts.expand_slot(t, i + 1, a->mul(es, svec_unit(t[i + 1])));
                Svec rel = svec_diff(lhs, rhs);
                if (!rel.empty())
                    rels.push_back(row_from_svec(rel));
            }
            // cyclic position: (m, ..., a_p s) - (s m, a_1, ..., a_p)
            if (p >= 1) {
                Svec lhs = ts.expand_slot(t, p, a->mul(svec_unit(t[p]), es));
                Svec rhs = ts.expand_slot(t, 0, m.act_left(es, svec_unit(t[0])));
                Svec rel = svec_diff(lhs, rhs);
                if (!rel.empty())
                    rels.push_back(row_from_svec(rel));
            }
        }
    }
    return rels;
}

}  // namespace detail

inline RelativeComplex build_relative_hochschild_complex(const AlgebraPtr& a, const Bimodule& m,
                                                         const SeparabilityWitness& w, int cap,
                                                         WorkGuard* guard_in = nullptr) {
    if (w.ambient != a)
        throw ValidationError("relative complex: witness is for a different ambient algebra");
    SeparabilityVerdict sv = verify_separability(w);
    if (!sv.pass)
        throw ValidationError("relative complex: separability witness fails: " + sv.failure);
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;

    RelativeComplex rc;
    rc.complex.name = "relative-hochschild(" + a->name + ")";
    rc.complex.cap = cap;
    rc.complex.dims.resize(cap + 1);
    rc.complex.d.resize(cap + 1);
    rc.complex.labels.resize(cap + 1);
    rc.relations.resize(cap + 1);
    rc.free_cols.resize(cap + 1);
    rc.projection.resize(cap + 1);

    std::vector<SparseMatrix> ambient_d(cap + 1);
    for (int p = 0; p <= cap; ++p) {
        TensorSpace ts{m.dim(), a->dim(), p};
        guard.project(ts.dim(), ("relative chain space at degree " + std::to_string(p)).c_str());
        rc.relations[p] = rref_of_rows(detail::balancing_relations(a, m, w, p),
                                       static_cast<int>(ts.dim()), guard);
        const Echelon& rel = rc.relations[p];
        std::vector<int>& free_cols = rc.free_cols[p];
        for (int c = 0; c < static_cast<int>(ts.dim()); ++c)
            if (!rel.is_pivot(c))
                free_cols.push_back(c);
        rc.complex.dims[p] = static_cast<long>(free_cols.size());
        std::vector<std::string> ambient_labels = ts.make_labels(m.labels, a->labels);
        for (int f : free_cols) rc.complex.labels[p].push_back(ambient_labels[f]);
        rc.projection[p] = SparseMatrix(static_cast<int>(free_cols.size()), static_cast<int>(ts.dim()));
        for (int c = 0; c < static_cast<int>(ts.dim()); ++c) {
            Row red = echelon_reduce(rel, Row{{c, Rational(1)}}, guard);
            for (const auto& [col, val] : red) {
                auto it = std::lower_bound(free_cols.begin(), free_cols.end(), col);
                rc.projection[p].add(static_cast<int>(it - free_cols.begin()), c, val);
            }
        }
        if (p >= 1)
            ambient_d[p] = hochschild_boundary(a, m, p);
    }

    for (int p = 1; p <= cap; ++p) {
        auto d_cols = ambient_d[p].col_list();
        auto apply_d = [&](const Row& v) {
            Svec img;
            for (const auto& [c, val] : v)
                for (const auto& [r, dv] : d_cols[c]) {
                    auto& slot = img[r];
                    slot += val * dv;
                    if (slot == 0)
                        img.erase(r);
                }
            return img;
        };
        // the boundary must descend: relation span maps into the relation span below
        for (std::size_t ri = 0; ri < rc.relations[p].rows.size(); ++ri) {
            Row rem =
                echelon_reduce(rc.relations[p - 1], row_from_svec(apply_d(rc.relations[p].rows[ri])),
                               guard);
            if (!rem.empty())
                throw ValidationError(
                    "relative complex: boundary does not descend at degree " + std::to_string(p) +
                    ", relation with pivot chain index " +
                    std::to_string(rc.relations[p].pivots[ri]) + " (internal error)");
        }
        auto proj_cols = rc.projection[p - 1].col_list();
        SparseMatrix dq(static_cast<int>(rc.free_cols[p - 1].size()),
                        static_cast<int>(rc.free_cols[p].size()));
        for (std::size_t j = 0; j < rc.free_cols[p].size(); ++j) {
            Svec img = apply_d(Row{{rc.free_cols[p][j], Rational(1)}});
            for (const auto& [c, val] : img)
                for (const auto& [i, pv] : proj_cols[c]) dq.add(i, static_cast<int>(j), val * pv);
        }
        rc.complex.d[p] = std::move(dq);
    }
    rc.complex.verify();
    return rc;
}

/// Canonical projection phi : C_p(A, M) -> C_p^S(A, M) in quotient coordinates.
inline const SparseMatrix& relative_projection(const RelativeComplex& rc, int p) {
    return rc.projection[p];
}

/// The section psi : C_p^S(A, M) -> C_p(A, M) built from the separability
/// idempotent e = sum_t c_t u_t (x) v_t:
///   psi(m, r_1, .., r_p) = sum over index tuples (t_0..t_p) of
///     (v_{t_p} m u_{t_0}, v_{t_0} r_1 u_{t_1}, ..., v_{t_{p-1}} r_p u_{t_p}).
/// Returned as an ambient -> ambient matrix; it kills the relation span, so
/// composing with the section on quotient coordinates is well defined.
inline SparseMatrix separability_section(const AlgebraPtr& a, const Bimodule& m,
                                         const SeparabilityWitness& w, int p) {
    TensorSpace ts{m.dim(), a->dim(), p};
    struct Term {
        Svec u, v;
        Rational c;
    };
    std::vector<Term> terms;
    for (const auto& [key, c] : w.idempotent)
        terms.push_back({w.embed(svec_unit(key.first)), w.embed(svec_unit(key.second)), c});
    SparseMatrix out(static_cast<int>(ts.dim()), static_cast<int>(ts.dim()));
    std::vector<int> pick(p + 1, 0);
    const int nterms = static_cast<int>(terms.size());
    for (long col = 0; col < ts.dim(); ++col) {
        std::vector<int> t = ts.tuple(col);
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            Rational coeff(1);
            for (int s = 0; s <= p; ++s) coeff *= terms[pick[s]].c;
            // module slot: v_{t_p} m u_{t_0}
            Svec mod = m.act_left(terms[pick[p]].v, m.act_right(svec_unit(t[0]), terms[pick[0]].u));
            Svec acc = ts.expand_slot(t, 0, mod);
            for (int s = 1; s <= p; ++s) {
                Svec factor = a->mul(terms[pick[s - 1]].v, a->mul(svec_unit(t[s]), terms[pick[s]].u));
                Svec next;
                for (const auto& [chain, cc] : acc) {
                    std::vector<int> ct = ts.tuple(chain);
                    Svec exp = ts.expand_slot(ct, s, factor);
                    svec_add_scaled(next, exp, cc);
                }
                acc = std::move(next);
            }
            for (const auto& [chain, cc] : acc)
                out.add(static_cast<int>(chain), static_cast<int>(col), cc * coeff);
            int s = p;
            while (s >= 0 && ++pick[s] == nterms) pick[s--] = 0;
            if (s < 0)
                break;
        }
    }
    return out;
}

/// The contracting homotopy h = sum_i (-1)^i h_i : C_p(A, M) -> C_{p+1}(A, M),
///   h_i(m, r_1, .., r_p) = sum over (j_0..j_i) of
///     (m u_{j_0}, v_{j_0} r_1 u_{j_1}, .., v_{j_{i-1}} r_i u_{j_i}, v_{j_i}, r_{i+1}, .., r_p).
inline SparseMatrix separability_homotopy(const AlgebraPtr& a, const Bimodule& m,
                                          const SeparabilityWitness& w, int p) {
    TensorSpace src{m.dim(), a->dim(), p};
    TensorSpace dst{m.dim(), a->dim(), p + 1};
    struct Term {
        Svec u, v;
        Rational c;
    };
    std::vector<Term> terms;
    for (const auto& [key, c] : w.idempotent)
        terms.push_back({w.embed(svec_unit(key.first)), w.embed(svec_unit(key.second)), c});
    const int nterms = static_cast<int>(terms.size());
    SparseMatrix out(static_cast<int>(dst.dim()), static_cast<int>(src.dim()));
    for (long col = 0; col < src.dim(); ++col) {
        std::vector<int> t = src.tuple(col);
        int isign = 1;
        for (int i = 0; i <= p; ++i, isign = -isign) {
            std::vector<int> pick(i + 1, 0);
            while (true) {
                Rational coeff(isign);
                for (int s = 0; s <= i; ++s) coeff *= terms[pick[s]].c;
                // assemble (m u_{j_0}, v_{j_0} r_1 u_{j_1}, .., v_{j_i}, r_{i+1}, .., r_p)
                std::vector<int> base(p + 2, 0);
                for (int s = i + 2; s <= p + 1; ++s) base[s] = t[s - 1];
                Svec acc = dst.expand_slot(base, 0, m.act_right(svec_unit(t[0]), terms[pick[0]].u));
                for (int s = 1; s <= i; ++s) {
                    Svec factor =
                        a->mul(terms[pick[s - 1]].v, a->mul(svec_unit(t[s]), terms[pick[s]].u));
                    Svec next;
                    for (const auto& [chain, cc] : acc) {
                        std::vector<int> ct = dst.tuple(chain);
                        svec_add_scaled(next, dst.expand_slot(ct, s, factor), cc);
                    }
                    acc = std::move(next);
                }
                {
                    Svec next;
                    for (const auto& [chain, cc] : acc) {
                        std::vector<int> ct = dst.tuple(chain);
                        svec_add_scaled(next, dst.expand_slot(ct, i + 1, terms[pick[i]].v), cc);
                    }
                    acc = std::move(next);
                }
                for (const auto& [chain, cc] : acc)
                    out.add(static_cast<int>(chain), static_cast<int>(col), cc * coeff);
                int s = i;
                while (s >= 0 && ++pick[s] == nterms) pick[s--] = 0;
                if (s < 0)
                    break;
            }
        }
    }
    return out;
}

}  // namespace homalg
