#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/hochschild.hpp"

namespace homalg {

/// Connes' operator B : R^{(x)p+1} -> R^{(x)p+2},
///   B(r_0..r_p) = sum_{i=0}^{p} (-1)^{pi} [ (1, r_i, .., r_p, r_0, .., r_{i-1})
///                                          + (r_i, 1, r_{i+1}, .., r_p, r_0, .., r_{i-1}) ].
/// Anticommutes with the Hochschild boundary: b B + B b = 0.
inline SparseMatrix connes_B(const AlgebraPtr& r, int p) {
    if (p < 0)
        throw ValidationError("connes_B: degree must be >= 0");
    TensorSpace src{r->dim(), r->dim(), p};
    TensorSpace dst{r->dim(), r->dim(), p + 1};
    SparseMatrix out(static_cast<int>(dst.dim()), static_cast<int>(src.dim()));
    for (long col = 0; col < src.dim(); ++col) {
        std::vector<int> t = src.tuple(col);
        for (int i = 0; i <= p; ++i) {
            int sign = (p * i) % 2 == 0 ? 1 : -1;
            std::vector<int> rot(p + 1);
            for (int s = 0; s <= p; ++s) rot[s] = t[(i + s) % (p + 1)];
            // (1, rot...) and (rot_0, 1, rot_1..): expand the unit of R
            for (const auto& [u, uc] : r->unit) {
                Rational c = uc * sign;
                std::vector<int> first(p + 2);
                first[0] = u;
                for (int s = 0; s <= p; ++s) first[s + 1] = rot[s];
                out.add(static_cast<int>(dst.index(first)), static_cast<int>(col), c);
                std::vector<int> second(p + 2);
                second[0] = rot[0];
                second[1] = u;
                for (int s = 1; s <= p; ++s) second[s + 1] = rot[s];
                out.add(static_cast<int>(dst.index(second)), static_cast<int>(col), c);
            }
        }
    }
    return out;
}

/// Connes bicomplex: cell (p, q) = R^{(x) q-p+1} for q >= p >= 0, vertical
/// Hochschild boundaries and horizontal B operators. Constructor verifies
/// b^2 = 0, B^2 = 0 and b B + B b = 0 on every cell in range.
struct ConnesBicomplex {
    AlgebraPtr algebra;
    int cap = 0;  // cells with p + q <= cap (plus the boundary blocks from cap+1)
    std::map<std::pair<int, int>, long> cells;
    std::vector<SparseMatrix> b;  // by tensor degree j: R^{(x)j+1} -> R^{(x)j}
    std::vector<SparseMatrix> B;  // by tensor degree j: R^{(x)j+1} -> R^{(x)j+2}

    long cell_dim(int p, int q) const {
        auto it = cells.find({p, q});
        return it == cells.end() ? 0 : it->second;
    }
};

inline ConnesBicomplex build_connes_bicomplex(const AlgebraPtr& r, int cap,
                                              WorkGuard* guard_in = nullptr) {
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    ConnesBicomplex bc;
    bc.algebra = r;
    bc.cap = cap;
    Bimodule rr = algebra_as_bimodule(r);
    const int max_tensor = cap + 1;  // largest tensor degree appearing in cells p+q <= cap+1
    bc.b.resize(max_tensor + 1);
    bc.B.resize(max_tensor + 1);
    for (int j = 0; j <= max_tensor; ++j) {
        TensorSpace ts{r->dim(), r->dim(), j};
        guard.project(ts.dim(), "connes bicomplex cell");
        if (j >= 1)
            bc.b[j] = hochschild_boundary(r, rr, j);
        bc.B[j] = connes_B(r, j);
    }
    for (int q = 0; q <= cap; ++q)
        for (int p = 0; p <= q; ++p) {
            TensorSpace ts{r->dim(), r->dim(), q - p};
            bc.cells[{p, q}] = ts.dim();
        }
    // structural identities, on every tensor degree in range
    for (int j = 0; j + 1 <= max_tensor; ++j) {
        if (j >= 1 && !bc.b[j].compose(bc.b[j + 1]).is_zero())
            throw ValidationError("connes bicomplex: b^2 != 0");
        if (j + 1 < max_tensor && !bc.B[j + 1].compose(bc.B[j]).is_zero())
            throw ValidationError("connes bicomplex: B^2 != 0");
        SparseMatrix anti = bc.b[j + 1].compose(bc.B[j]);
        if (j >= 1) {
            SparseMatrix other = bc.B[j - 1].compose(bc.b[j]);
            for (const auto& [key, val] : other.entries) anti.add(key.first, key.second, val);
        }
        if (!anti.is_zero())
            throw ValidationError("connes bicomplex: bB + Bb != 0 at tensor degree " +
                                  std::to_string(j));
    }
    return bc;
}

/// Layout of the total complex Tot_n = (+)_{p+q=n, q>=p>=0} cell(p,q).
/// Cells are ordered by increasing p within a total degree.
struct TotalLayout {
    struct Cell {
        int p, q;
        long offset;
        long dim;
    };
    std::vector<std::vector<Cell>> by_degree;  // index = total degree
    std::vector<long> dims;

    const Cell* find(int n, int p) const {
        if (n < 0 || n >= static_cast<int>(by_degree.size()))
            return nullptr;
        for (const auto& c : by_degree[n])
            if (c.p == p)
                return &c;
        return nullptr;
    }
};

inline TotalLayout total_layout(const ConnesBicomplex& bc, int cap) {
    TotalLayout lay;
    lay.by_degree.resize(cap + 1);
    lay.dims.assign(cap + 1, 0);
    for (int n = 0; n <= cap; ++n) {
        long off = 0;
        for (int p = 0; 2 * p <= n; ++p) {
            int q = n - p;
            TensorSpace ts{bc.algebra->dim(), bc.algebra->dim(), q - p};
            lay.by_degree[n].push_back({p, q, off, ts.dim()});
            off += ts.dim();
        }
        lay.dims[n] = off;
    }
    return lay;
}

/// Total complex of the Connes bicomplex. The differential on a cell in
/// column p is b + (-1)^p B. The boundary block arriving from total degree
/// cap+1 is kept, so homology is exact at every degree 0..cap.
inline ChainComplex build_cyclic_total_complex(const AlgebraPtr& r, int cap,
                                               WorkGuard* guard_in = nullptr) {
    if (cap < 0)
        throw ValidationError("build_cyclic_total_complex: cap must be >= 0");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    ConnesBicomplex bc = build_connes_bicomplex(r, cap, &guard);
    TotalLayout lay = total_layout(bc, cap + 1);

    auto assemble = [&](int n) {
        SparseMatrix d(static_cast<int>(n - 1 <= cap ? lay.dims[n - 1] : 0),
                       static_cast<int>(lay.dims[n]));
        for (const auto& cell : lay.by_degree[n]) {
            int j = cell.q - cell.p;  // tensor degree
            // vertical: b into cell (p, q-1), present when q-1 >= p
            if (cell.q - 1 >= cell.p) {
                const TotalLayout::Cell* tgt = lay.find(n - 1, cell.p);
                for (const auto& [key, val] : bc.b[j].entries)
                    d.add(static_cast<int>(tgt->offset + key.first),
                          static_cast<int>(cell.offset + key.second), val);
            }
            // horizontal: (-1)^p B into cell (p-1, q)
            if (cell.p >= 1) {
                const TotalLayout::Cell* tgt = lay.find(n - 1, cell.p - 1);
                int sign = cell.p % 2 == 0 ? 1 : -1;
                for (const auto& [key, val] : bc.B[j].entries)
                    d.add(static_cast<int>(tgt->offset + key.first),
                          static_cast<int>(cell.offset + key.second), sign > 0 ? val : Rational(-val));
            }
        }
        return d;
    };

    ChainComplex cc;
    cc.name = "cyclic-total(" + r->name + ")";
    cc.cap = cap;
    cc.dims.resize(cap + 1);
    cc.d.resize(cap + 1);
    cc.labels.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        cc.dims[n] = lay.dims[n];
        for (const auto& cell : lay.by_degree[n]) {
            TensorSpace ts{r->dim(), r->dim(), cell.q - cell.p};
            auto cell_labels = ts.make_labels(r->labels, r->labels);
            for (auto& l : cell_labels)
                cc.labels[n].push_back("(" + std::to_string(cell.p) + "," + std::to_string(cell.q) +
                                       ")" + l);
        }
        if (n >= 1)
            cc.d[n] = assemble(n);
    }
    cc.d_top = assemble(cap + 1);
    cc.verify();
    guard.charge(0, "cyclic total complex");
    return cc;
}

/// Connecting data of the periodicity sequence
///   HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} -> ...
/// from the short exact sequence of complexes
///   0 -> (column p = 0) -> Tot -> Tot/(column 0) -> 0,
/// with Tot/(column 0) identified with Tot shifted by two via
/// cell (p, q) |-> (-1)^p cell (p-1, q-1).
struct PeriodicityMaps {
    int cap = 0;
    std::vector<long> hh;  // Betti of HH_n, n = 0..cap-1 (reliable range)
    std::vector<long> hc;  // Betti of HC_n, n = 0..cap
    // maps in homology coordinates
    std::vector<SparseMatrix> include_hh_to_hc;   // I_n : HH_n -> HC_n
    std::vector<SparseMatrix> shift_hc;           // S_n : HC_n -> HC_{n-2}
    std::vector<SparseMatrix> connect_to_hh;      // B_n : HC_{n-2} -> HH_{n-1}
    bool exact = true;
    std::vector<std::string> failures;
};

namespace detail {

/// Express the homology class of a cycle in the canonical representative
/// coordinates of a computed degree: reduce modulo boundaries, then read off
/// the representative pivots.
struct ClassSolver {
    Echelon boundaries;
    std::vector<Row> reps;
    std::vector<int> rep_pivots;

    ClassSolver() = default;
    ClassSolver(const ChainComplex& cc, const HomologyReport& hr, int degree, WorkGuard& guard) {
        const SparseMatrix* dm = degree + 1 <= cc.cap ? &cc.d[degree + 1]
                                : cc.d_top            ? &*cc.d_top
                                                      : nullptr;
        if (dm && degree + 1 <= cc.cap + 1)
            boundaries = rref_of_rows(dm->transpose().row_list(), dm->rows, guard);
        else
            boundaries = Echelon{static_cast<int>(cc.dims[degree]), {}, {}};
        reps = hr.degrees[degree].representatives;
        for (const auto& r : reps) rep_pivots.push_back(r.front().first);
    }

    std::vector<Rational> coords(const Row& cycle, WorkGuard& guard) const {
        Row rem = echelon_reduce(boundaries, cycle, guard);
        std::vector<Rational> out(reps.size(), Rational(0));
        // reps form an RREF basis of the reduced cycle space: peel off pivots
        while (!rem.empty()) {
            bool hit = false;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (rem.front().first == rep_pivots[i]) {
                    out[i] = rem.front().second;
                    detail::row_axpy(rem, -rem.front().second, reps[i], guard);
                    hit = true;
                    break;
                }
            }
            if (!hit)
                throw ValidationError("class solver: vector is not a cycle modulo boundaries");
        }
        return out;
    }
};

}  // namespace detail

inline PeriodicityMaps periodicity_maps(const AlgebraPtr& r, int cap, WorkGuard* guard_in = nullptr) {
    if (cap < 2)
        throw ValidationError("periodicity_maps: cap must be >= 2");
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;

    ChainComplex tot = build_cyclic_total_complex(r, cap, &guard);
    ChainComplex hh = build_hochschild_complex(r, cap, &guard);
    HomologyReport tot_h = compute_homology(tot, true, &guard);
    HomologyReport hh_h = compute_homology(hh, true, &guard);
    ConnesBicomplex bc = build_connes_bicomplex(r, cap, &guard);
    TotalLayout lay = total_layout(bc, cap + 1);

    PeriodicityMaps pm;
    pm.cap = cap;
    for (int n = 0; n <= cap; ++n) pm.hc.push_back(tot_h.degrees[n].betti);
    for (int n = 0; n < cap; ++n) pm.hh.push_back(hh_h.degrees[n].betti);

    std::vector<detail::ClassSolver> hc_solver(cap + 1), hh_solver(cap);
    for (int n = 0; n <= cap; ++n) hc_solver[n] = detail::ClassSolver(tot, tot_h, n, guard);
    for (int n = 0; n < cap; ++n) hh_solver[n] = detail::ClassSolver(hh, hh_h, n, guard);

    // column-0 chain inclusion: HH tensor degree n sits at cell (0, n)
    auto include_chain = [&](int n, const Row& v) {
        const TotalLayout::Cell* cell = lay.find(n, 0);
        Row out = v;
        for (auto& [c, val] : out) c += static_cast<int>(cell->offset);
        return out;
    };
    // quotient projection and the shift identification cell (p,q) -> (p-1,q-1), sign (-1)^p
    auto project_shift = [&](int n, const Row& v) {
        Row out;
        for (const auto& [c, val] : v) {
            // locate the cell containing coordinate c
            for (const auto& cell : lay.by_degree[n]) {
                if (c >= cell.offset && c < cell.offset + cell.dim) {
                    if (cell.p >= 1) {
                        const TotalLayout::Cell* tgt = lay.find(n - 2, cell.p - 1);
                        int sign = cell.p % 2 == 0 ? 1 : -1;
                        out.emplace_back(static_cast<int>(tgt->offset + (c - cell.offset)),
                                         sign > 0 ? val : Rational(-val));
                    }
                    break;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    // inverse of the shift identification, landing in the quotient lift with
    // zero column-0 component
    auto unshift = [&](int n, const Row& v) {
        Row out;
        for (const auto& [c, val] : v) {
            for (const auto& cell : lay.by_degree[n - 2]) {
                if (c >= cell.offset && c < cell.offset + cell.dim) {
                    const TotalLayout::Cell* tgt = lay.find(n, cell.p + 1);
                    int sign = (cell.p + 1) % 2 == 0 ? 1 : -1;
                    out.emplace_back(static_cast<int>(tgt->offset + (c - cell.offset)),
                                     sign > 0 ? val : Rational(-val));
                    break;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto column0_part = [&](int n, const Svec& v) {
        const TotalLayout::Cell* cell = lay.find(n, 0);
        Row out;
        for (const auto& [c, val] : v) {
            if (c >= cell->offset && c < cell->offset + cell->dim)
                out.emplace_back(static_cast<int>(c - cell->offset), val);
            else {
                for (const auto& other : lay.by_degree[n])
                    if (other.p >= 1 && c >= other.offset && c < other.offset + other.dim)
                        throw ValidationError("periodicity: connecting image not in column 0");
            }
        }
        return out;
    };

    pm.include_hh_to_hc.resize(cap);
    pm.shift_hc.resize(cap + 1);
    pm.connect_to_hh.resize(cap + 1);

    for (int n = 0; n < cap; ++n) {
        SparseMatrix In(static_cast<int>(pm.hc[n]), static_cast<int>(pm.hh[n]));
        for (std::size_t j = 0; j < hh_h.degrees[n].representatives.size(); ++j) {
            Row cyc = include_chain(n, hh_h.degrees[n].representatives[j]);
            auto coords = hc_solver[n].coords(cyc, guard);
            for (std::size_t i = 0; i < coords.size(); ++i) In.add(static_cast<int>(i), static_cast<int>(j), coords[i]);
        }
        pm.include_hh_to_hc[n] = std::move(In);
    }
    for (int n = 2; n <= cap; ++n) {
        SparseMatrix Sn(static_cast<int>(pm.hc[n - 2]), static_cast<int>(pm.hc[n]));
        for (std::size_t j = 0; j < tot_h.degrees[n].representatives.size(); ++j) {
            Row img = project_shift(n, tot_h.degrees[n].representatives[j]);
            auto coords = hc_solver[n - 2].coords(img, guard);
            for (std::size_t i = 0; i < coords.size(); ++i) Sn.add(static_cast<int>(i), static_cast<int>(j), coords[i]);
        }
        pm.shift_hc[n] = std::move(Sn);
    }
    for (int n = 2; n <= cap; ++n) {
        if (n - 1 >= cap) {
            pm.connect_to_hh[n] = SparseMatrix(0, static_cast<int>(pm.hc[n - 2]));
            continue;
        }
        SparseMatrix Bn(static_cast<int>(pm.hh[n - 1]), static_cast<int>(pm.hc[n - 2]));
        for (std::size_t j = 0; j < tot_h.degrees[n - 2].representatives.size(); ++j) {
            // lift the class through the quotient and apply the total differential
            Row lift = unshift(n, tot_h.degrees[n - 2].representatives[j]);
            Svec img = tot.d[n].apply(svec_from_row(lift));
            Row col0 = column0_part(n - 1, img);
            auto coords = hh_solver[n - 1].coords(col0, guard);
            for (std::size_t i = 0; i < coords.size(); ++i) Bn.add(static_cast<int>(i), static_cast<int>(j), coords[i]);
        }
        pm.connect_to_hh[n] = std::move(Bn);
    }

    // exactness: im(f) = ker(g) <=> g f = 0 and rank f + rank g = dim middle
    auto check_node = [&](const SparseMatrix& f, const SparseMatrix& g, const std::string& where) {
        if (!g.compose(f).is_zero()) {
            pm.exact = false;
            pm.failures.push_back("composition not zero at " + where);
            return;
        }
        if (rank(f, guard) + rank(g, guard) != f.rows) {
            pm.exact = false;
            pm.failures.push_back("im != ker at " + where);
        }
    };
    for (int n = 0; n + 1 < cap; ++n) {
        // node HC_n: I_n then S_n (for n < 2 the outgoing map lands in 0)
        {
            const SparseMatrix& In = pm.include_hh_to_hc[n];
            SparseMatrix Sn = n >= 2 ? pm.shift_hc[n] : SparseMatrix(0, static_cast<int>(pm.hc[n]));
            check_node(In, Sn, "HC_" + std::to_string(n));
        }
        // node HC_{n-2}: S_n then B_n
        if (n >= 2)
            check_node(pm.shift_hc[n], pm.connect_to_hh[n], "HC_" + std::to_string(n - 2));
        // node HH_n: B_{n+1} then I_n  (sequence ... -> HC_{n-1} -> HH_n -> HC_n -> ...);
        // for n = 0 the incoming map is from HC_{-1} = 0
        {
            SparseMatrix Bn1 = n + 1 >= 2 ? pm.connect_to_hh[n + 1]
                                          : SparseMatrix(static_cast<int>(pm.hh[n]), 0);
            check_node(Bn1, pm.include_hh_to_hc[n], "HH_" + std::to_string(n));
        }
    }
    return pm;
}

}  // namespace homalg
