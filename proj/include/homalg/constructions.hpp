#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

/// The ground field as a 1-dimensional algebra.
inline AlgebraPtr ground_field() {
    return build_algebra("k", {"1"}, {{svec_unit(0)}}, svec_unit(0));
}

/// Dual numbers k[x]/(x^2).
inline AlgebraPtr dual_numbers() {
    std::vector<std::vector<Svec>> t(2, std::vector<Svec>(2));
    t[0][0] = svec_unit(0);
    t[0][1] = svec_unit(1);
    t[1][0] = svec_unit(1);
    t[1][1] = Svec{};
    return build_algebra("k[eps]", {"1", "eps"}, std::move(t), svec_unit(0));
}

/// Componentwise product a x b.
inline AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    const int da = a->dim(), db = b->dim();
    std::vector<std::string> labels;
    for (const auto& l : a->labels) labels.push_back(l + ".L");
    for (const auto& l : b->labels) labels.push_back(l + ".R");
    auto shift = [da](const Svec& v) {
        Svec out;
        for (const auto& [i, c] : v) out.emplace(i + da, c);
        return out;
    };
    std::vector<std::vector<Svec>> t(da + db, std::vector<Svec>(da + db));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) t[i][j] = a->mul_basis(i, j);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) t[da + i][da + j] = shift(b->mul_basis(i, j));
    Svec unit = a->unit;
    svec_add_scaled(unit, shift(b->unit), 1);
    return build_algebra(a->name + "x" + b->name, std::move(labels), std::move(t), std::move(unit));
}

/// n copies of the ground field, basis e1..en of orthogonal idempotents.
inline AlgebraPtr idempotent_tuple_algebra(int n) {
    std::vector<std::string> labels;
    std::vector<std::vector<Svec>> t(n, std::vector<Svec>(n));
    Svec unit;
    for (int i = 0; i < n; ++i) {
        labels.push_back("e" + std::to_string(i + 1));
        t[i][i] = svec_unit(i);
        unit[i] = 1;
    }
    return build_algebra("k^" + std::to_string(n), std::move(labels), std::move(t), std::move(unit));
}

/// Matrix algebra M_n(R). Basis label "(i,j)l" for matrix position (i,j)
/// (1-based) with R-basis label l; index = ((i-1)*n + (j-1))*dim(R) + r.
struct MatrixAlgebra {
    AlgebraPtr alg;
    AlgebraPtr coeff;
    int n = 0;

    int index(int i, int j, int r) const { return ((i - 1) * n + (j - 1)) * coeff->dim() + r; }
    Svec unit_entry(int i, int j) const {
        Svec out;
        for (const auto& [r, c] : coeff->unit) out.emplace(index(i, j, r), c);
        return out;
    }
};

inline MatrixAlgebra matrix_algebra(const AlgebraPtr& r, int n) {
    if (n < 1)
        throw ValidationError("matrix_algebra: n must be >= 1");
    const int dr = r->dim();
    MatrixAlgebra m;
    m.coeff = r;
    m.n = n;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int a = 0; a < dr; ++a)
                labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")" + r->labels[a]);
    const int dim = n * n * dr;
    std::vector<std::vector<Svec>> t(dim, std::vector<Svec>(dim));
    auto idx = [&](int i, int j, int a) { return ((i - 1) * n + (j - 1)) * dr + a; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int a = 0; a < dr; ++a)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        for (int b = 0; b < dr; ++b) {
                            if (j != k)
                                continue;
                            Svec& out = t[idx(i, j, a)][idx(k, l, b)];
                            for (const auto& [c, v] : r->mul_basis(a, b)) out[idx(i, l, c)] = v;
                        }
    Svec unit;
    for (int i = 1; i <= n; ++i)
        for (const auto& [a, c] : r->unit) unit[idx(i, i, a)] = c;
    m.alg = build_algebra("M" + std::to_string(n) + "(" + r->name + ")", std::move(labels), std::move(t),
                          std::move(unit));
    return m;
}

/// Group algebra of a finite cyclic group, with the group-like Hopf data the
/// constructions below need (diagonal coproduct, counit, inverse antipode).
struct GroupAlgebra {
    AlgebraPtr alg;  // basis g^0 .. g^{n-1}
    int order = 0;

    int inverse(int i) const { return (order - i) % order; }
    Rational counit(int) const { return Rational(1); }
};

inline GroupAlgebra cyclic_group_algebra(int n) {
    if (n < 1)
        throw ValidationError("cyclic_group_algebra: order must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::vector<Svec>> t(n, std::vector<Svec>(n));
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = svec_unit((i + j) % n);
    GroupAlgebra g;
    g.order = n;
    g.alg = build_algebra("k[Z/" + std::to_string(n) + "]", std::move(labels), std::move(t), svec_unit(0));
    return g;
}

/// Verified algebra automorphism given by its matrix on the basis.
struct AlgebraAutomorphism {
    AlgebraPtr on;
    std::vector<Svec> images;  // images[i] = phi(e_i)

    Svec apply(const Svec& v) const {
        Svec out;
        for (const auto& [i, c] : v) svec_add_scaled(out, images[i], c);
        return out;
    }
};

inline AlgebraAutomorphism build_automorphism(const AlgebraPtr& a, std::vector<Svec> images,
                                              WorkGuard* guard_in = nullptr) {
    AlgebraAutomorphism phi{a, std::move(images)};
    if (static_cast<int>(phi.images.size()) != a->dim())
        throw ValidationError("automorphism: wrong number of basis images");
    if (phi.apply(a->unit) != a->unit)
        throw ValidationError("automorphism: unit is not fixed");
    for (int i = 0; i < a->dim(); ++i)
        for (int j = 0; j < a->dim(); ++j)
            if (phi.apply(a->mul_basis(i, j)) != a->mul(phi.images[i], phi.images[j]))
                throw ValidationError("automorphism: multiplicativity fails on basis pair (" +
                                      a->labels[i] + ", " + a->labels[j] + ")");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    SparseMatrix m(a->dim(), a->dim());
    for (int j = 0; j < a->dim(); ++j)
        for (const auto& [i, c] : phi.images[j]) m.add(i, j, c);
    if (rank(m, guard) != a->dim())
        throw ValidationError("automorphism: matrix is not invertible");
    return phi;
}

/// Smash product A # k[Z/n] for a cyclic group acting by a verified
/// automorphism phi of order dividing n:
///   (a (x) g^i)(b (x) g^j) = a * phi^i(b) (x) g^{i+j}.
/// Basis label "a@gi"; index = a_idx * n + i.
struct SmashProduct {
    AlgebraPtr alg;
    AlgebraPtr component;  // A
    GroupAlgebra group;

    int index(int a, int i) const { return a * group.order + i; }
};

inline SmashProduct smash_product(const AlgebraPtr& a, const GroupAlgebra& h,
                                  const AlgebraAutomorphism& phi) {
    if (phi.on != a)
        throw ValidationError("smash_product: automorphism acts on a different algebra");
    const int n = h.order;
    // phi must have order dividing n for the action of Z/n to be defined
    std::vector<std::vector<Svec>> powers(n + 1);
    powers[0].resize(a->dim());
    for (int i = 0; i < a->dim(); ++i) powers[0][i] = svec_unit(i);
    for (int p = 1; p <= n; ++p) {
        powers[p].resize(a->dim());
        for (int i = 0; i < a->dim(); ++i) powers[p][i] = phi.apply(powers[p - 1][i]);
    }
    for (int i = 0; i < a->dim(); ++i)
        if (powers[n][i] != svec_unit(i))
            throw ValidationError("smash_product: automorphism order does not divide the group order; fails on basis element '" +
                                  a->labels[i] + "'");
    const int da = a->dim();
    const int dim = da * n;
    std::vector<std::string> labels;
    for (int x = 0; x < da; ++x)
        for (int i = 0; i < n; ++i) labels.push_back(a->labels[x] + "@g" + std::to_string(i));
    auto idx = [n](int x, int i) { return x * n + i; };
    std::vector<std::vector<Svec>> t(dim, std::vector<Svec>(dim));
    for (int x = 0; x < da; ++x)
        for (int i = 0; i < n; ++i)
            for (int y = 0; y < da; ++y)
                for (int j = 0; j < n; ++j) {
                    Svec prod = a->mul(svec_unit(x), powers[i][y]);
                    Svec& out = t[idx(x, i)][idx(y, j)];
                    for (const auto& [z, c] : prod) out[idx(z, (i + j) % n)] = c;
                }
    Svec unit;
    for (const auto& [x, c] : a->unit) unit[idx(x, 0)] = c;
    SmashProduct s;
    s.component = a;
    s.group = h;
    s.alg = build_algebra(a->name + "#" + h.alg->name, std::move(labels), std::move(t), std::move(unit));
    return s;
}

/// Abelianization R/[R,R]: dimension and the projection matrix onto the
/// canonical complement of the commutator span (non-pivot coordinates).
struct Abelianization {
    int dim = 0;
    SparseMatrix projection;  // dim x dim(R)
    Subspace commutator_span;

    std::vector<Rational> project(const Svec& v) const {
        std::vector<Rational> out(dim, Rational(0));
        Svec img = projection.apply(v);
        for (const auto& [i, c] : img) out[i] = c;
        return out;
    }
};

inline Abelianization abelianization(const AlgebraPtr& r, WorkGuard* guard_in = nullptr) {
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    const int n = r->dim();
    std::vector<Row> comms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Svec c = r->commutator(svec_unit(i), svec_unit(j));
            if (!c.empty())
                comms.push_back(row_from_svec(c));
        }
    Echelon e = rref_of_rows(std::move(comms), n, guard);
    Abelianization ab;
    ab.commutator_span = Subspace::from_echelon(e);
    ab.dim = n - e.rank();
    ab.projection = SparseMatrix(ab.dim, n);
    // coordinates of the reduction of each basis vector on non-pivot columns
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!e.is_pivot(c))
            free_cols.push_back(c);
    for (int c = 0; c < n; ++c) {
        Row red = echelon_reduce(e, Row{{c, Rational(1)}}, guard);
        for (const auto& [col, val] : red) {
            auto it = std::lower_bound(free_cols.begin(), free_cols.end(), col);
            ab.projection.add(static_cast<int>(it - free_cols.begin()), c, val);
        }
    }
    return ab;
}

/// Separability witness: a subalgebra S of an ambient algebra together with
/// an idempotent e = sum c * (u (x) v) in S (x) S^op.
struct SeparabilityWitness {
    AlgebraPtr ambient;
    AlgebraPtr sub;                  // S with its own structure constants
    std::vector<Svec> embedding;     // S basis -> ambient coordinates
    std::map<std::pair<int, int>, Rational> idempotent;  // (i,j) -> coeff of s_i (x) s_j

    Svec embed(const Svec& v) const {
        Svec out;
        for (const auto& [i, c] : v) svec_add_scaled(out, embedding[i], c);
        return out;
    }
};

struct SeparabilityVerdict {
    bool pass = true;
    std::string failure;  // first failed identity, with the offending element
};

inline SeparabilityVerdict verify_separability(const SeparabilityWitness& w) {
    const auto& s = *w.sub;
    auto tensor_mul_left = [&](const Svec& x, const std::map<std::pair<int, int>, Rational>& e) {
        // (x (x) 1) * e  with multiplication in S on the first leg
        std::map<std::pair<int, int>, Rational> out;
        for (const auto& [key, c] : e) {
            Svec prod = s.mul(x, svec_unit(key.first));
            for (const auto& [i, v] : prod) {
                auto& slot = out[{i, key.second}];
                slot += v * c;
                if (slot == 0)
                    out.erase({i, key.second});
            }
        }
        return out;
    };
    auto tensor_mul_right = [&](const std::map<std::pair<int, int>, Rational>& e, const Svec& x) {
        // (1 (x) x) * e in S (x) S^op: the second leg multiplies opposite, v |-> v * x
        std::map<std::pair<int, int>, Rational> out;
        for (const auto& [key, c] : e) {
            Svec prod = s.mul(svec_unit(key.second), x);
            for (const auto& [j, v] : prod) {
                auto& slot = out[{key.first, j}];
                slot += v * c;
                if (slot == 0)
                    out.erase({key.first, j});
            }
        }
        return out;
    };
    // (1) multiplication map sends e to 1
    Svec mu;
    for (const auto& [key, c] : w.idempotent)
        svec_add_scaled(mu, s.mul_basis(key.first, key.second), c);
    if (mu != s.unit)
        return {false, "sum u_i v_i != 1 (got " + s.format_element(mu) + ")"};
    // (2) (s (x) 1) e = (1 (x) s) e for every basis s
    for (int i = 0; i < s.dim(); ++i) {
        if (tensor_mul_left(svec_unit(i), w.idempotent) != tensor_mul_right(w.idempotent, svec_unit(i)))
            return {false, "(s (x) 1)e != (1 (x) s)e for s = " + s.labels[i]};
    }
    // (3) e * e = e in S (x) S^op
    std::map<std::pair<int, int>, Rational> sq;
    for (const auto& [k1, c1] : w.idempotent)
        for (const auto& [k2, c2] : w.idempotent) {
            Svec first = s.mul_basis(k1.first, k2.first);
            Svec second = s.mul_basis(k2.second, k1.second);  // opposite order on the second leg
            for (const auto& [i, vi] : first)
                for (const auto& [j, vj] : second) {
                    auto& slot = sq[{i, j}];
                    slot += vi * vj * c1 * c2;
                    if (slot == 0)
                        sq.erase({i, j});
                }
        }
    if (sq != w.idempotent)
        return {false, "e*e != e in S (x) S^op"};
    return {true, ""};
}

/// Build a witness from the ambient algebra and an embedded basis of S; the
/// S-structure constants are computed in the ambient algebra and must close.
inline SeparabilityWitness make_separability_witness(
    const AlgebraPtr& ambient, std::vector<std::string> sub_labels, std::vector<Svec> embedding,
    std::map<std::pair<int, int>, Rational> idempotent, WorkGuard* guard_in = nullptr) {
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    const int ds = static_cast<int>(embedding.size());
    // coordinate solver on span(embedding)
    SparseMatrix emb(ambient->dim(), ds);
    for (int j = 0; j < ds; ++j)
        for (const auto& [i, c] : embedding[j]) emb.add(i, j, c);
    auto coords = [&](const Svec& v) -> Svec {
        std::vector<Rational> rhs(ambient->dim(), Rational(0));
        for (const auto& [i, c] : v) rhs[i] = c;
        auto sol = solve_linear(emb, rhs, &guard);
        if (!sol)
            throw ValidationError("separable subalgebra candidate is not closed under multiplication");
        Svec out;
        for (int i = 0; i < ds; ++i)
            if ((*sol)[i] != 0)
                out.emplace(i, (*sol)[i]);
        return out;
    };
    std::vector<std::vector<Svec>> table(ds, std::vector<Svec>(ds));
    for (int i = 0; i < ds; ++i)
        for (int j = 0; j < ds; ++j) table[i][j] = coords(ambient->mul(embedding[i], embedding[j]));
    Svec unit_coords = coords(ambient->unit);
    SeparabilityWitness w;
    w.ambient = ambient;
    w.sub = build_algebra("S<" + ambient->name + ">", std::move(sub_labels), std::move(table),
                          std::move(unit_coords));
    w.embedding = std::move(embedding);
    w.idempotent = std::move(idempotent);
    return w;
}

/// Commutator Lie algebra of an associative algebra.
inline LieAlgebraData commutator_lie(const AlgebraPtr& a) {
    const int n = a->dim();
    std::vector<std::vector<Svec>> br(n, std::vector<Svec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) br[i][j] = a->commutator(svec_unit(i), svec_unit(j));
    // verification cannot fail for associative input; build_lie_algebra aborts otherwise
    return build_lie_algebra("gl(" + a->name + ")", a->labels, std::move(br));
}

/// Coinvariants of a k[G]-bimodule under the left action, right action
/// trivial: quotient of M by span{ g.m - m.g }.
struct Coinvariants {
    int dim = 0;
    SparseMatrix projection;  // dim x dim(M)
    Subspace relation_span;
};

inline Coinvariants group_coinvariants(const GroupAlgebra& h, const Bimodule& m,
                                       WorkGuard* guard_in = nullptr) {
    if (m.over != h.alg)
        throw ValidationError("group_coinvariants: bimodule is not over the given group algebra");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    std::vector<Row> rels;
    for (int g = 0; g < h.order; ++g)
        for (int mm = 0; mm < m.dim(); ++mm) {
            Svec rel = svec_diff(m.act_left(svec_unit(g), svec_unit(mm)),
                                 m.act_right(svec_unit(mm), svec_unit(g)));
            if (!rel.empty())
                rels.push_back(row_from_svec(rel));
        }
    Echelon e = rref_of_rows(std::move(rels), m.dim(), guard);
    Coinvariants out;
    out.relation_span = Subspace::from_echelon(e);
    out.dim = m.dim() - e.rank();
    out.projection = SparseMatrix(out.dim, m.dim());
    std::vector<int> free_cols;
    for (int c = 0; c < m.dim(); ++c)
        if (!e.is_pivot(c))
            free_cols.push_back(c);
    for (int c = 0; c < m.dim(); ++c) {
        Row red = echelon_reduce(e, Row{{c, Rational(1)}}, guard);
        for (const auto& [col, val] : red) {
            auto it = std::lower_bound(free_cols.begin(), free_cols.end(), col);
            out.projection.add(static_cast<int>(it - free_cols.begin()), c, val);
        }
    }
    return out;
}

}  // namespace homalg
