#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "homalg/constructions.hpp"

namespace homalg {

/// Element of the algebra of Z x Z banded matrices over R, in its finite
/// description: a "diagonal part" of finitely many shift-periodic diagonals
/// plus a finite-support corner correction.
///
/// A diagonal entry keyed by (offset o, residue s mod period n) with value
/// r in R stands for sum_{i = s mod n} r e_{i, i+o}. Period 1 diagonals are
/// the shift-invariant ones (r I at offset 0, r tau at offset 1, ...); the
/// period-n refinement carries the block generators without leaving finite
/// descriptions. The class is closed under sums, products and brackets.
struct Banded {
    AlgebraPtr base;
    int period = 1;
    std::map<std::pair<long, int>, Svec> diag;    // (offset, residue) -> R element
    std::map<std::pair<long, long>, Svec> corner;  // (row, col) -> R element

    bool is_zero() const { return diag.empty() && corner.empty(); }

    long bandwidth() const {
        long w = 0;
        for (const auto& [k, v] : diag) w = std::max(w, std::labs(k.first));
        for (const auto& [k, v] : corner) w = std::max(w, std::labs(k.first - k.second));
        return w;
    }

    /// Fold the period to the minimal one and drop stored zeros.
    void normalize() {
        for (auto it = diag.begin(); it != diag.end();)
            it = it->second.empty() ? diag.erase(it) : std::next(it);
        for (auto it = corner.begin(); it != corner.end();)
            it = it->second.empty() ? corner.erase(it) : std::next(it);
        for (int d = 1; d < period; ++d) {
            if (period % d != 0)
                continue;
            bool periodic = true;
            for (const auto& [k, v] : diag) {
                auto other = diag.find({k.first, (k.second + d) % period});
                if (other == diag.end() || other->second != v) {
                    periodic = false;
                    break;
                }
            }
            if (periodic) {
                std::map<std::pair<long, int>, Svec> folded;
                for (const auto& [k, v] : diag)
                    if (k.second < d)
                        folded.emplace(k, v);
                diag = std::move(folded);
                period = d;
                break;
            }
        }
        if (diag.empty())
            period = 1;
    }

    bool operator==(const Banded& o) const {
        Banded a = *this, b = o;
        a.normalize();
        b.normalize();
        return a.base == b.base && a.period == b.period && a.diag == b.diag && a.corner == b.corner;
    }
};

inline Banded banded_zero(const AlgebraPtr& r) { return Banded{r, 1, {}, {}}; }

/// r * tau^p: the shift-invariant diagonal with value r at offset p.
inline Banded banded_diagonal(const AlgebraPtr& r, const Svec& value, long offset = 0) {
    Banded x{r, 1, {}, {}};
    if (!value.empty())
        x.diag.emplace(std::make_pair(offset, 0), value);
    return x;
}

inline Banded banded_unit(const AlgebraPtr& r) { return banded_diagonal(r, r->unit, 0); }

/// The shift tau = sum_i e_{i,i+1} (and its powers).
inline Banded banded_tau(const AlgebraPtr& r, long power = 1) {
    return banded_diagonal(r, r->unit, power);
}

inline Banded banded_corner_unit(const AlgebraPtr& r, long i, long j, const Svec& value) {
    Banded x{r, 1, {}, {}};
    if (!value.empty())
        x.corner.emplace(std::make_pair(i, j), value);
    return x;
}

namespace detail {

inline int mod_residue(long a, int n) {
    long m = a % n;
    return static_cast<int>(m < 0 ? m + n : m);
}

inline void lift_diag(std::map<std::pair<long, int>, Svec>& out,
                      const std::map<std::pair<long, int>, Svec>& in, int from, int to) {
    for (const auto& [k, v] : in)
        for (int s = k.second; s < to; s += from) {
            auto& slot = out[{k.first, s}];
            svec_add_scaled(slot, v, 1);
            if (slot.empty())
                out.erase({k.first, s});
        }
}

}  // namespace detail

inline Banded banded_add(const Banded& x, const Banded& y, const Rational& scale = Rational(1)) {
    if (x.base != y.base)
        throw ValidationError("banded add: different coefficient algebras");
    Banded out{x.base, static_cast<int>(std::lcm(x.period, y.period)), {}, {}};
    detail::lift_diag(out.diag, x.diag, x.period, out.period);
    std::map<std::pair<long, int>, Svec> ylift;
    detail::lift_diag(ylift, y.diag, y.period, out.period);
    for (const auto& [k, v] : ylift) {
        auto& slot = out.diag[k];
        svec_add_scaled(slot, v, scale);
        if (slot.empty())
            out.diag.erase(k);
    }
    out.corner = x.corner;
    for (const auto& [k, v] : y.corner) {
        auto& slot = out.corner[k];
        svec_add_scaled(slot, v, scale);
        if (slot.empty())
            out.corner.erase(k);
    }
    out.normalize();
    return out;
}

inline Banded banded_scale(const Banded& x, const Rational& c) {
    Banded out{x.base, x.period, {}, {}};
    if (c == 0)
        return out;
    for (const auto& [k, v] : x.diag) out.diag.emplace(k, svec_scaled(v, c));
    for (const auto& [k, v] : x.corner) out.corner.emplace(k, svec_scaled(v, c));
    return out;
}

/// Product in the banded matrix algebra. Diagonal x diagonal composes
/// offsets (a period-n diagonal at residue s meets one at residue s' exactly
/// when s + o = s' mod n); diagonal x corner and corner x corner are finite
/// index bookkeeping.
inline Banded banded_mul(const Banded& x, const Banded& y) {
    if (x.base != y.base)
        throw ValidationError("banded mul: different coefficient algebras");
    const auto& R = *x.base;
    int n = static_cast<int>(std::lcm(x.period, y.period));
    std::map<std::pair<long, int>, Svec> dx, dy;
    detail::lift_diag(dx, x.diag, x.period, n);
    detail::lift_diag(dy, y.diag, y.period, n);
    Banded out{x.base, n, {}, {}};
    for (const auto& [kx, vx] : dx)
        for (const auto& [ky, vy] : dy) {
            // entries (a, a+o1)(a+o1, a+o1+o2): need a = s1, a+o1 = s2 (mod n)
            if (detail::mod_residue(kx.second + kx.first, n) != ky.second)
                continue;
            Svec prod = R.mul(vx, vy);
            if (prod.empty())
                continue;
            auto& slot = out.diag[{kx.first + ky.first, kx.second}];
            svec_add_scaled(slot, prod, 1);
            if (slot.empty())
                out.diag.erase({kx.first + ky.first, kx.second});
        }
    auto add_corner = [&](long i, long j, const Svec& v) {
        if (v.empty())
            return;
        auto& slot = out.corner[{i, j}];
        svec_add_scaled(slot, v, 1);
        if (slot.empty())
            out.corner.erase({i, j});
    };
    for (const auto& [kx, vx] : dx)
        for (const auto& [ky, vy] : y.corner) {
            // diagonal entry (i - o, i) meets corner entry (i, j)
            long a = ky.first - kx.first;
            if (detail::mod_residue(a, n) != kx.second)
                continue;
            add_corner(a, ky.second, R.mul(vx, vy));
        }
    for (const auto& [kx, vx] : x.corner)
        for (const auto& [ky, vy] : dy) {
            // corner entry (i, j) meets diagonal entry (j, j + o)
            if (detail::mod_residue(kx.second, n) != ky.second)
                continue;
            add_corner(kx.first, kx.second + ky.first, R.mul(vx, vy));
        }
    for (const auto& [kx, vx] : x.corner)
        for (const auto& [ky, vy] : y.corner) {
            if (kx.second != ky.first)
                continue;
            add_corner(kx.first, ky.second, R.mul(vx, vy));
        }
    out.normalize();
    return out;
}

inline Banded banded_bracket(const Banded& x, const Banded& y) {
    return banded_add(banded_mul(x, y), banded_mul(y, x), Rational(-1));
}

/// Affine generator e_{i,j}(p) = sum_r e_{i+rn, j+(p+r)n} in the period-n
/// model (1 <= i, j <= n). Satisfies
///   [e_{i,j}(p), e_{k,l}(q)] = delta_{j,k} e_{i,l}(p+q) - delta_{l,i} e_{k,j}(p+q).
inline Banded affine_generator(const AlgebraPtr& r, int n, int i, int j, long p) {
    if (n < 1 || i < 1 || i > n || j < 1 || j > n)
        throw ValidationError("affine_generator: indices must satisfy 1 <= i,j <= n");
    Banded x{r, n, {}, {}};
    x.diag.emplace(std::make_pair(static_cast<long>(j - i) + p * n, detail::mod_residue(i, n)),
                   r->unit);
    x.normalize();
    return x;
}

/// Dense window of the element on indices |i|, |j| <= w, for oracle checks.
inline std::vector<std::vector<Svec>> banded_window(const Banded& x, int w) {
    int size = 2 * w + 1;
    std::vector<std::vector<Svec>> grid(size, std::vector<Svec>(size));
    for (const auto& [k, v] : x.diag) {
        for (long a = -w; a <= w; ++a) {
            if (detail::mod_residue(a, x.period) != k.second)
                continue;
            long b = a + k.first;
            if (b < -w || b > w)
                continue;
            svec_add_scaled(grid[a + w][b + w], v, 1);
        }
    }
    for (const auto& [k, v] : x.corner) {
        if (std::labs(k.first) <= w && std::labs(k.second) <= w)
            svec_add_scaled(grid[k.first + w][k.second + w], v, 1);
    }
    return grid;
}

/// Block decomposition into an n x n matrix of banded elements: big index
/// a = i + r n with i in {1..n} block-row representative. Corner entries
/// route to block corners, diagonals to refined block diagonals.
struct BlockMatrix {
    AlgebraPtr base;
    int n = 0;
    std::vector<std::vector<Banded>> blocks;  // blocks[i-1][j-1]

    Banded& at(int i, int j) { return blocks[i - 1][j - 1]; }
    const Banded& at(int i, int j) const { return blocks[i - 1][j - 1]; }
};

namespace detail {

/// Decompose a big index a as a = rep + n * quot with rep in {1..n}.
inline void block_coords(long a, int n, int& rep, long& quot) {
    long r = a % n;
    if (r <= 0)
        r += n;
    rep = static_cast<int>(r);
    quot = (a - r) / n;
}

}  // namespace detail

inline BlockMatrix block_decompose(int n, const Banded& x) {
    if (n < 2)
        throw ValidationError("block_decompose: n must be >= 2");
    BlockMatrix bm;
    bm.base = x.base;
    bm.n = n;
    bm.blocks.assign(n, std::vector<Banded>(n, banded_zero(x.base)));
    for (const auto& [k, v] : x.corner) {
        int i, j;
        long r, s;
        detail::block_coords(k.first, n, i, r);
        detail::block_coords(k.second, n, j, s);
        auto& slot = bm.at(i, j).corner[{r, s}];
        svec_add_scaled(slot, v, 1);
        if (slot.empty())
            bm.at(i, j).corner.erase({r, s});
    }
    for (const auto& [k, v] : x.diag) {
        const long o = k.first;
        const int m = x.period;
        const long L = std::lcm(static_cast<long>(n), static_cast<long>(m));
        const int step = static_cast<int>(L / n);  // block-row period of each contribution
        // rows in the residue class k.second mod m, grouped by class mod L
        for (long a0 = 1; a0 <= L; ++a0) {
            if (detail::mod_residue(a0, m) != k.second)
                continue;
            int i, j;
            long r0, s0;
            detail::block_coords(a0, n, i, r0);
            detail::block_coords(a0 + o, n, j, s0);
            // rows a = a0 + t L: block rows r = r0 + t*step, block offset s0 - r0 fixed
            Banded& blk = bm.at(i, j);
            if (blk.diag.empty()) {
                blk.period = step;
            } else if (blk.period % step != 0) {
                int lifted = static_cast<int>(std::lcm(blk.period, step));
                std::map<std::pair<long, int>, Svec> tmp;
                detail::lift_diag(tmp, blk.diag, blk.period, lifted);
                blk.diag = std::move(tmp);
                blk.period = lifted;
            }
            for (int s = detail::mod_residue(r0, step); s < blk.period; s += step) {
                auto& slot = blk.diag[{s0 - r0, s}];
                svec_add_scaled(slot, v, 1);
                if (slot.empty())
                    blk.diag.erase({s0 - r0, s});
            }
        }
    }
    for (auto& row : bm.blocks)
        for (auto& b : row) b.normalize();
    return bm;
}

/// Inverse of block_decompose.
inline Banded block_compose(const BlockMatrix& bm) {
    const int n = bm.n;
    Banded out = banded_zero(bm.base);
    long period = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            period = std::lcm(period, static_cast<long>(bm.at(i, j).period) * n);
    out.period = static_cast<int>(period);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Banded& blk = bm.at(i, j);
            for (const auto& [k, v] : blk.corner) {
                long a = i + k.first * n, b = j + k.second * n;
                auto& slot = out.corner[{a, b}];
                svec_add_scaled(slot, v, 1);
                if (slot.empty())
                    out.corner.erase({a, b});
            }
            for (const auto& [k, v] : blk.diag) {
                // block rows r = k.second + t * blk.period: big rows a = i + r n,
                // big offset (j - i) + k.first * n, residue of a mod (blk.period * n)
                long o = static_cast<long>(j - i) + k.first * n;
                int m = blk.period * n;
                int s = detail::mod_residue(i + static_cast<long>(k.second) * n, m);
                for (int s2 = s; s2 < out.period; s2 += m) {
                    auto& slot = out.diag[{o, s2}];
                    svec_add_scaled(slot, v, 1);
                    if (slot.empty())
                        out.diag.erase({o, s2});
                }
            }
        }
    out.normalize();
    return out;
}

inline BlockMatrix block_mul(const BlockMatrix& x, const BlockMatrix& y) {
    BlockMatrix out;
    out.base = x.base;
    out.n = x.n;
    out.blocks.assign(x.n, std::vector<Banded>(x.n, banded_zero(x.base)));
    for (int i = 1; i <= x.n; ++i)
        for (int j = 1; j <= x.n; ++j)
            for (int k = 1; k <= x.n; ++k)
                out.at(i, j) = banded_add(out.at(i, j), banded_mul(x.at(i, k), y.at(k, j)));
    return out;
}

inline BlockMatrix block_bracket(const BlockMatrix& x, const BlockMatrix& y) {
    BlockMatrix xy = block_mul(x, y), yx = block_mul(y, x);
    BlockMatrix out;
    out.base = x.base;
    out.n = x.n;
    out.blocks.assign(x.n, std::vector<Banded>(x.n, banded_zero(x.base)));
    for (int i = 1; i <= x.n; ++i)
        for (int j = 1; j <= x.n; ++j) out.at(i, j) = banded_add(xy.at(i, j), yx.at(i, j), Rational(-1));
    return out;
}

/// Finite-support matrix over R (the corner compressions live here).
using FiniteMat = std::map<std::pair<long, long>, Svec>;

enum class CornerSide { PlusMinus, MinusPlus };  // I+ x I-  resp.  I- x I+

/// I+ x I- (rows >= 0, cols < 0) or I- x I+ (rows < 0, cols >= 0). A
/// diagonal of offset o crosses the corner in exactly |o| entries, so the
/// result has genuinely finite support.
inline FiniteMat corner_extract(const Banded& x, CornerSide side) {
    FiniteMat out;
    auto keep = [&](long i, long j) {
        return side == CornerSide::PlusMinus ? (i >= 0 && j < 0) : (i < 0 && j >= 0);
    };
    auto add = [&](long i, long j, const Svec& v) {
        if (v.empty())
            return;
        auto& slot = out[{i, j}];
        svec_add_scaled(slot, v, 1);
        if (slot.empty())
            out.erase({i, j});
    };
    for (const auto& [k, v] : x.diag) {
        const long o = k.first;
        long lo, hi;  // row range crossing the corner
        if (side == CornerSide::PlusMinus) {
            if (o >= 0)
                continue;
            lo = 0;
            hi = -o - 1;
        } else {
            if (o <= 0)
                continue;
            lo = -o;
            hi = -1;
        }
        for (long a = lo; a <= hi; ++a)
            if (detail::mod_residue(a, x.period) == k.second)
                add(a, a + o, v);
    }
    for (const auto& [k, v] : x.corner)
        if (keep(k.first, k.second))
            add(k.first, k.second, v);
    return out;
}

inline FiniteMat finite_mul(const AlgebraPtr& r, const FiniteMat& x, const FiniteMat& y) {
    FiniteMat out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            if (kx.second != ky.first)
                continue;
            Svec prod = r->mul(vx, vy);
            if (prod.empty())
                continue;
            auto& slot = out[{kx.first, ky.second}];
            svec_add_scaled(slot, prod, 1);
            if (slot.empty())
                out.erase({kx.first, ky.second});
        }
    return out;
}

/// Value in R^{ab}, as coordinates through an Abelianization projection.
using AbelianizedValue = std::vector<Rational>;

inline bool abelianized_is_zero(const AbelianizedValue& v) {
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

/// Trace of a finite-support matrix, projected to R^{ab}.
inline AbelianizedValue trace_ab(const AlgebraPtr&, const Abelianization& ab, const FiniteMat& m) {
    Svec tr;
    for (const auto& [k, v] : m)
        if (k.first == k.second)
            svec_add_scaled(tr, v, 1);
    return ab.project(tr);
}

/// The corner 2-cocycle Psi(X, Y) = Tr((I+ Y I-)(I- X I+) - (I+ X I-)(I- Y I+))
/// in R^{ab}. Only finite corner compressions are ever formed.
inline AbelianizedValue corner_cocycle(const Abelianization& ab, const Banded& x, const Banded& y) {
    const AlgebraPtr& r = x.base;
    FiniteMat t1 = finite_mul(r, corner_extract(y, CornerSide::PlusMinus),
                              corner_extract(x, CornerSide::MinusPlus));
    FiniteMat t2 = finite_mul(r, corner_extract(x, CornerSide::PlusMinus),
                              corner_extract(y, CornerSide::MinusPlus));
    Svec tr;
    for (const auto& [k, v] : t1)
        if (k.first == k.second)
            svec_add_scaled(tr, v, 1);
    for (const auto& [k, v] : t2)
        if (k.first == k.second)
            svec_add_scaled(tr, v, -1);
    return ab.project(tr);
}

/// Element of the one-dimensional-center extension: (banded part, central part).
struct ExtendedElement {
    Banded x;
    AbelianizedValue central;
};

/// Bracket of the central extension: [(x,c),(y,c')] = ([x,y], Psi(x,y)).
inline ExtendedElement central_extension_bracket(const Abelianization& ab, const ExtendedElement& a,
                                                 const ExtendedElement& b) {
    ExtendedElement out;
    out.x = banded_bracket(a.x, b.x);
    out.central = corner_cocycle(ab, a.x, b.x);
    return out;
}

/// Deterministic text dump: "P n" when the period is refined, then
/// "L offset [residue] coeff-list", then "C i j coeff-list"; offsets
/// ascending, corners lexicographic. Coefficients are "label=p/q" pairs.
inline void banded_dump(std::ostream& os, const Banded& in) {
    Banded x = in;
    x.normalize();
    const auto& labels = x.base->labels;
    auto coeffs = [&](const Svec& v) {
        std::string out;
        for (const auto& [i, c] : v) out += " " + labels[i] + "=" + rational_to_string(c);
        return out;
    };
    if (x.period > 1)
        os << "P " << x.period << '\n';
    for (const auto& [k, v] : x.diag) {
        os << "L " << k.first;
        if (x.period > 1)
            os << " " << k.second;
        os << coeffs(v) << '\n';
    }
    for (const auto& [k, v] : x.corner) os << "C " << k.first << ' ' << k.second << coeffs(v) << '\n';
}

}  // namespace homalg
