#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homalg/linalg.hpp"
#include "homalg/rational.hpp"

namespace homalg {

/// Finite-dimensional associative unital algebra over Q, by structure
/// constants on a named basis. Constructed through build_algebra, which
/// verifies associativity and unitality on every basis triple/element.
struct StructureAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<Svec>> table;  // table[i][j] = coefficients of e_i * e_j
    Svec unit;

    int dim() const { return static_cast<int>(labels.size()); }

    const Svec& mul_basis(int i, int j) const { return table[i][j]; }

    Svec mul(const Svec& a, const Svec& b) const {
        Svec out;
        for (const auto& [i, ai] : a)
            for (const auto& [j, bj] : b) svec_add_scaled(out, table[i][j], ai * bj);
        return out;
    }

    Svec commutator(const Svec& a, const Svec& b) const { return svec_diff(mul(a, b), mul(b, a)); }

    int label_index(const std::string& l) const {
        for (int i = 0; i < dim(); ++i)
            if (labels[i] == l)
                return i;
        throw InputError("unknown basis label '" + l + "' in algebra " + name);
    }

    std::string format_element(const Svec& v) const {
        if (v.empty())
            return "0";
        std::string out;
        for (const auto& [i, c] : v) {
            if (!out.empty())
                out += " + ";
            out += rational_to_string(c) + "*" + labels[i];
        }
        return out;
    }
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

inline AlgebraPtr build_algebra(std::string name, std::vector<std::string> labels,
                                std::vector<std::vector<Svec>> table, Svec unit) {
    auto alg = std::make_shared<StructureAlgebra>();
    alg->name = std::move(name);
    alg->labels = std::move(labels);
    alg->table = std::move(table);
    alg->unit = std::move(unit);
    const int n = alg->dim();
    if (static_cast<int>(alg->table.size()) != n)
        throw ValidationError("algebra " + alg->name + ": structure-constant table is not square");
    for (const auto& row : alg->table)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("algebra " + alg->name + ": structure-constant table is not square");
    // unit axiom on every basis element
    for (int i = 0; i < n; ++i) {
        if (alg->mul(alg->unit, svec_unit(i)) != svec_unit(i) ||
            alg->mul(svec_unit(i), alg->unit) != svec_unit(i))
            throw ValidationError("algebra " + alg->name + ": unit fails on basis element '" +
                                  alg->labels[i] + "'");
    }
    // associativity on every basis triple
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Svec& ij = alg->table[i][j];
            for (int k = 0; k < n; ++k) {
                Svec left = alg->mul(ij, svec_unit(k));
                Svec right = alg->mul(svec_unit(i), alg->table[j][k]);
                if (left != right)
                    throw ValidationError("algebra " + alg->name + ": associativity fails on triple (" +
                                          alg->labels[i] + ", " + alg->labels[j] + ", " + alg->labels[k] +
                                          ")");
            }
        }
    return alg;
}

/// Bimodule over a StructureAlgebra, by explicit basis actions. Verified on
/// construction: both associativities, the mixed one, and unitality.
struct Bimodule {
    AlgebraPtr over;
    std::vector<std::string> labels;
    std::vector<std::vector<Svec>> left;   // left[i][m]  = e_i . m
    std::vector<std::vector<Svec>> right;  // right[i][m] = m . e_i

    int dim() const { return static_cast<int>(labels.size()); }

    Svec act_left(const Svec& a, const Svec& m) const {
        Svec out;
        for (const auto& [i, ai] : a)
            for (const auto& [mm, mv] : m) svec_add_scaled(out, left[i][mm], ai * mv);
        return out;
    }

    Svec act_right(const Svec& m, const Svec& a) const {
        Svec out;
        for (const auto& [i, ai] : a)
            for (const auto& [mm, mv] : m) svec_add_scaled(out, right[i][mm], ai * mv);
        return out;
    }
};

inline Bimodule build_bimodule(AlgebraPtr over, std::vector<std::string> labels,
                               std::vector<std::vector<Svec>> left, std::vector<std::vector<Svec>> right) {
    Bimodule m;
    m.over = std::move(over);
    m.labels = std::move(labels);
    m.left = std::move(left);
    m.right = std::move(right);
    const int n = m.over->dim();
    const int d = m.dim();
    if (static_cast<int>(m.left.size()) != n || static_cast<int>(m.right.size()) != n)
        throw ValidationError("bimodule action tables have wrong algebra dimension");
    auto unit_m = [&](int mm) {
        return m.act_left(m.over->unit, svec_unit(mm));
    };
    for (int mm = 0; mm < d; ++mm) {
        if (unit_m(mm) != svec_unit(mm) || m.act_right(svec_unit(mm), m.over->unit) != svec_unit(mm))
            throw ValidationError("bimodule: unit does not act as identity on '" + m.labels[mm] + "'");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Svec ab = m.over->mul_basis(i, j);
            for (int mm = 0; mm < d; ++mm) {
                Svec x = svec_unit(mm);
                if (m.act_left(ab, x) != m.act_left(svec_unit(i), m.act_left(svec_unit(j), x)))
                    throw ValidationError("bimodule: left associativity fails at (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(mm) + ")");
                if (m.act_right(x, ab) != m.act_right(m.act_right(x, svec_unit(i)), svec_unit(j)))
                    throw ValidationError("bimodule: right associativity fails at (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(mm) + ")");
                if (m.act_right(m.act_left(svec_unit(i), x), svec_unit(j)) !=
                    m.act_left(svec_unit(i), m.act_right(x, svec_unit(j))))
                    throw ValidationError("bimodule: mixed associativity fails at (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(mm) + ")");
            }
        }
    return m;
}

/// The algebra as a bimodule over itself.
inline Bimodule algebra_as_bimodule(const AlgebraPtr& a) {
    const int n = a->dim();
    std::vector<std::vector<Svec>> left(n, std::vector<Svec>(n)), right(n, std::vector<Svec>(n));
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            left[i][m] = a->mul_basis(i, m);
            right[i][m] = a->mul_basis(m, i);
        }
    return build_bimodule(a, a->labels, std::move(left), std::move(right));
}

/// Algebra morphism A -> B given on basis, verified multiplicative + unital.
struct AlgebraMorphism {
    AlgebraPtr from;
    AlgebraPtr to;
    std::vector<Svec> images;  // images[i] = f(e_i) in B coordinates

    Svec apply(const Svec& v) const {
        Svec out;
        for (const auto& [i, c] : v) svec_add_scaled(out, images[i], c);
        return out;
    }
};

inline AlgebraMorphism build_algebra_morphism(AlgebraPtr from, AlgebraPtr to, std::vector<Svec> images) {
    AlgebraMorphism f{std::move(from), std::move(to), std::move(images)};
    if (static_cast<int>(f.images.size()) != f.from->dim())
        throw ValidationError("algebra morphism: wrong number of basis images");
    if (f.apply(f.from->unit) != f.to->unit)
        throw ValidationError("algebra morphism: unit is not preserved");
    for (int i = 0; i < f.from->dim(); ++i)
        for (int j = 0; j < f.from->dim(); ++j)
            if (f.apply(f.from->mul_basis(i, j)) != f.to->mul(f.images[i], f.images[j]))
                throw ValidationError("algebra morphism: multiplicativity fails on basis pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
    return f;
}

/// Restrict a B-bimodule along a morphism A -> B.
inline Bimodule restrict_bimodule(const AlgebraMorphism& f, const Bimodule& m) {
    const int n = f.from->dim();
    std::vector<std::vector<Svec>> left(n, std::vector<Svec>(m.dim())),
        right(n, std::vector<Svec>(m.dim()));
    for (int i = 0; i < n; ++i)
        for (int mm = 0; mm < m.dim(); ++mm) {
            left[i][mm] = m.act_left(f.images[i], svec_unit(mm));
            right[i][mm] = m.act_right(svec_unit(mm), f.images[i]);
        }
    return build_bimodule(f.from, m.labels, std::move(left), std::move(right));
}

inline Bimodule bimodule_direct_sum(const Bimodule& a, const Bimodule& b) {
    if (a.over != b.over)
        throw ValidationError("bimodule direct sum: different base algebras");
    const int n = a.over->dim();
    const int da = a.dim();
    std::vector<std::string> labels = a.labels;
    for (const auto& l : b.labels) labels.push_back(l + "'");
    auto shift = [da](const Svec& v) {
        Svec out;
        for (const auto& [i, c] : v) out.emplace(i + da, c);
        return out;
    };
    std::vector<std::vector<Svec>> left(n), right(n);
    for (int i = 0; i < n; ++i) {
        left[i] = a.left[i];
        right[i] = a.right[i];
        for (int mm = 0; mm < b.dim(); ++mm) {
            left[i].push_back(shift(b.left[i][mm]));
            right[i].push_back(shift(b.right[i][mm]));
        }
    }
    return build_bimodule(a.over, std::move(labels), std::move(left), std::move(right));
}

/// Lie algebra by bracket constants; antisymmetry and Jacobi verified.
struct LieAlgebraData {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<Svec>> bracket;  // bracket[i][j] = [e_i, e_j]

    int dim() const { return static_cast<int>(labels.size()); }

    Svec apply_bracket(const Svec& a, const Svec& b) const {
        Svec out;
        for (const auto& [i, ai] : a)
            for (const auto& [j, bj] : b) svec_add_scaled(out, bracket[i][j], ai * bj);
        return out;
    }
};

inline LieAlgebraData build_lie_algebra(std::string name, std::vector<std::string> labels,
                                        std::vector<std::vector<Svec>> bracket) {
    LieAlgebraData g{std::move(name), std::move(labels), std::move(bracket)};
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.bracket[i][j] != svec_scaled(g.bracket[j][i], -1))
                throw ValidationError("lie algebra " + g.name + ": antisymmetry fails at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Svec sum = g.apply_bracket(g.bracket[i][j], svec_unit(k));
                svec_add_scaled(sum, g.apply_bracket(g.bracket[j][k], svec_unit(i)), 1);
                svec_add_scaled(sum, g.apply_bracket(g.bracket[k][i], svec_unit(j)), 1);
                if (!sum.empty())
                    throw ValidationError("lie algebra " + g.name + ": Jacobi fails at (" +
                                          std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
            }
    return g;
}

}  // namespace homalg
