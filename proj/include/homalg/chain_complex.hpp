#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "homalg/linalg.hpp"

namespace homalg {

/// Non-negatively graded chain complex with exact sparse boundaries.
/// Degrees 0..cap; d[p] : C_p -> C_{p-1} for 1 <= p <= cap. When the
/// truncated degree cap+1 is still known (its boundary into C_cap is stored
/// in d_top, or the complex provably vanishes above cap), the homology at
/// degree cap is exact too; otherwise it is flagged.
struct ChainComplex {
    std::string name;
    int cap = 0;
    std::vector<long> dims;                    // size cap+1
    std::vector<SparseMatrix> d;               // size cap+1; d[0] unused
    std::optional<SparseMatrix> d_top;         // C_{cap+1} -> C_cap
    bool vanishes_above = false;
    std::vector<std::vector<std::string>> labels;  // size cap+1; may be empty per degree

    void verify() const {
        if (static_cast<int>(dims.size()) != cap + 1 || static_cast<int>(d.size()) != cap + 1)
            throw ValidationError("chain complex " + name + ": degree bookkeeping mismatch");
        for (int p = 1; p <= cap; ++p) {
            if (d[p].rows != dims[p - 1] || d[p].cols != dims[p])
                throw ValidationError("chain complex " + name + ": boundary shape mismatch at degree " +
                                      std::to_string(p));
            if (p >= 2 && !d[p - 1].compose(d[p]).is_zero())
                throw ValidationError("chain complex " + name + ": d o d != 0 at degree " +
                                      std::to_string(p));
        }
        if (d_top) {
            if (d_top->rows != dims[cap])
                throw ValidationError("chain complex " + name + ": top boundary shape mismatch");
            if (cap >= 1 && !d[cap].compose(*d_top).is_zero())
                throw ValidationError("chain complex " + name + ": d o d != 0 at the truncation degree");
        }
    }

    bool degree_reliable(int p) const { return p < cap || vanishes_above || d_top.has_value(); }
};

struct DegreeHomology {
    int degree = 0;
    long betti = 0;
    bool reliable = true;
    std::vector<Row> representatives;  // canonical cycles, empty when not computed
    long dim = 0;                      // chain-space dimension
    long long boundary_nnz = 0;        // nnz of d[degree]
    long long wall_ms = 0;
};

struct HomologyReport {
    std::string complex_name;
    std::vector<DegreeHomology> degrees;
    long long work_used = 0;

    std::vector<long> betti() const {
        std::vector<long> out;
        for (const auto& d : degrees) out.push_back(d.betti);
        return out;
    }
};

/// Betti numbers and canonical representatives of a complex.
/// betti[p] = dim ker d_p - dim im d_{p+1}; representatives are the kernel
/// echelon basis reduced modulo the boundary span and re-echelonized.
inline HomologyReport compute_homology(const ChainComplex& cc, bool with_representatives = true,
                                       WorkGuard* guard_in = nullptr) {
    WorkGuard local;
    WorkGuard& guard = guard_in ? *guard_in : local;
    HomologyReport report;
    report.complex_name = cc.name;

    // image echelon of d_{p+1} for each degree p (row space of the transpose)
    std::vector<Echelon> boundary_rref(cc.cap + 1);
    for (int p = 0; p <= cc.cap; ++p) {
        const SparseMatrix* dm = nullptr;
        if (p + 1 <= cc.cap)
            dm = &cc.d[p + 1];
        else if (cc.d_top)
            dm = &*cc.d_top;
        if (dm)
            boundary_rref[p] = rref_of_rows(dm->transpose().row_list(), dm->rows, guard);
        else
            boundary_rref[p] = Echelon{static_cast<int>(cc.dims[p]), {}, {}};
    }

    for (int p = 0; p <= cc.cap; ++p) {
        auto start = std::chrono::steady_clock::now();
        DegreeHomology dh;
        dh.degree = p;
        dh.dim = cc.dims[p];
        dh.reliable = cc.degree_reliable(p);
        dh.boundary_nnz = p >= 1 ? cc.d[p].nnz() : 0;

        long kernel_dim;
        std::optional<Subspace> kernel;
        if (p == 0) {
            kernel_dim = cc.dims[0];
            if (with_representatives && dh.reliable) {
                std::vector<Row> id_rows;
                for (int c = 0; c < cc.dims[0]; ++c) id_rows.push_back(Row{{c, Rational(1)}});
                kernel = Subspace{static_cast<int>(cc.dims[0]), id_rows, {}};
            }
        } else if (with_representatives && dh.reliable) {
            kernel = kernel_subspace(cc.d[p], guard);
            kernel_dim = kernel->dim();
        } else {
            // rank d_p was already computed as the image echelon at degree p-1
            kernel_dim = cc.dims[p] - boundary_rref[p - 1].rank();
        }

        dh.betti = kernel_dim - boundary_rref[p].rank();
        if (with_representatives && dh.reliable && kernel)
            dh.representatives = quotient_representatives(*kernel, boundary_rref[p], guard);

        dh.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
        report.degrees.push_back(std::move(dh));
    }
    report.work_used = guard.used();
    return report;
}

}  // namespace homalg
