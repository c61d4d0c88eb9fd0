#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "homalg/banded.hpp"

namespace homalg {

/// Formal chain in R^{(x) arity}: basis tensors of R-basis indices with
/// rational coefficients, the first slot playing the module role.
struct RChain {
    AlgebraPtr base;
    int arity = 0;  // number of tensor factors
    std::map<std::vector<int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const std::vector<int>& t, const Rational& c) {
        if (c == 0)
            return;
        auto& slot = terms[t];
        slot += c;
        if (slot == 0)
            terms.erase(t);
    }

    bool operator==(const RChain& o) const {
        return base == o.base && arity == o.arity && terms == o.terms;
    }
};

inline RChain rchain_tensor(const AlgebraPtr& r, const std::vector<int>& t) {
    RChain c{r, static_cast<int>(t.size()), {}};
    c.add(t, Rational(1));
    return c;
}

/// Hochschild boundary on formal tensors (coefficients in R itself).
inline RChain rchain_boundary(const RChain& c) {
    const auto& R = *c.base;
    const int p = c.arity - 1;
    RChain out{c.base, c.arity - 1, {}};
    if (p < 1)
        return out;
    for (const auto& [t, coeff] : c.terms) {
        for (int i = 0; i <= p - 1; ++i) {
            Rational sign = i % 2 == 0 ? coeff : -coeff;
            const Svec& prod = R.mul_basis(t[i], t[i + 1]);
            std::vector<int> u(t.size() - 1);
            for (int s = 0; s < i; ++s) u[s] = t[s];
            for (int s = i + 2; s <= p; ++s) u[s - 1] = t[s];
            for (const auto& [b, v] : prod) {
                u[i] = b;
                out.add(u, sign * v);
            }
        }
        Rational csign = p % 2 == 0 ? coeff : -coeff;
        const Svec& prod = R.mul_basis(t[p], t[0]);
        std::vector<int> u(t.begin(), t.end() - 1);
        for (const auto& [b, v] : prod) {
            u[0] = b;
            out.add(u, csign * v);
        }
    }
    return out;
}

/// Connes operator on formal tensors.
inline RChain rchain_connes_B(const RChain& c) {
    const auto& R = *c.base;
    const int p = c.arity - 1;
    RChain out{c.base, c.arity + 1, {}};
    for (const auto& [t, coeff] : c.terms) {
        for (int i = 0; i <= p; ++i) {
            Rational sign = (p * i) % 2 == 0 ? coeff : -coeff;
            std::vector<int> rot(p + 1);
            for (int s = 0; s <= p; ++s) rot[s] = t[(i + s) % (p + 1)];
            for (const auto& [u, uc] : R.unit) {
                std::vector<int> first(p + 2);
                first[0] = u;
                for (int s = 0; s <= p; ++s) first[s + 1] = rot[s];
                out.add(first, sign * uc);
                std::vector<int> second(p + 2);
                second[0] = rot[0];
                second[1] = u;
                for (int s = 1; s <= p; ++s) second[s + 1] = rot[s];
                out.add(second, sign * uc);
            }
        }
    }
    return out;
}

/// Norm operator N = sum_k t^k with t(r_0..r_p) = (-1)^p (r_p, r_0, .., r_{p-1}).
inline RChain rchain_cyclic_t(const RChain& c) {
    const int p = c.arity - 1;
    RChain out{c.base, c.arity, {}};
    for (const auto& [t, coeff] : c.terms) {
        std::vector<int> u(p + 1);
        u[0] = t[p];
        for (int s = 0; s < p; ++s) u[s + 1] = t[s];
        out.add(u, p % 2 == 0 ? coeff : -coeff);
    }
    return out;
}

inline RChain norm_operator(const RChain& c) {
    RChain out{c.base, c.arity, {}};
    RChain cur = c;
    for (int k = 0; k <= c.arity - 1; ++k) {
        for (const auto& [t, coeff] : cur.terms) out.add(t, coeff);
        cur = rchain_cyclic_t(cur);
    }
    return out;
}

/// Atomic banded factor: a single refined diagonal or a single corner entry,
/// with a single R-basis coefficient. Tensors of atoms are the canonical
/// basis for formal chains of banded elements.
struct BandedAtom {
    bool is_corner = false;
    long a = 0;      // diagonal offset, or corner row
    long b = 0;      // corner column
    int residue = 0;
    int period = 1;
    int rbasis = 0;

    auto key() const { return std::tie(is_corner, a, b, residue, period, rbasis); }
    bool operator<(const BandedAtom& o) const { return key() < o.key(); }
    bool operator==(const BandedAtom& o) const { return key() == o.key(); }
};

inline std::vector<std::pair<BandedAtom, Rational>> banded_atoms(const Banded& in) {
    Banded x = in;
    x.normalize();
    std::vector<std::pair<BandedAtom, Rational>> out;
    for (const auto& [k, v] : x.diag)
        for (const auto& [rb, c] : v)
            out.push_back({BandedAtom{false, k.first, 0, k.second, x.period, rb}, c});
    for (const auto& [k, v] : x.corner)
        for (const auto& [rb, c] : v)
            out.push_back({BandedAtom{true, k.first, k.second, 0, 1, rb}, c});
    return out;
}

inline Banded atom_banded(const AlgebraPtr& r, const BandedAtom& a) {
    Banded x{r, a.period, {}, {}};
    if (a.is_corner)
        x.corner.emplace(std::make_pair(a.a, a.b), svec_unit(a.rbasis));
    else
        x.diag.emplace(std::make_pair(a.a, a.residue), svec_unit(a.rbasis));
    return x;
}

/// Formal chain in (banded algebra)^{(x) arity}, in canonical atom form.
struct BandedChain {
    AlgebraPtr base;
    int arity = 0;
    std::map<std::vector<BandedAtom>, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    void add_atoms(const std::vector<BandedAtom>& t, const Rational& c) {
        if (c == 0)
            return;
        auto& slot = terms[t];
        slot += c;
        if (slot == 0)
            terms.erase(t);
    }

    /// Multilinear expansion of a tensor of banded elements.
    void add_tensor(const std::vector<Banded>& factors, const Rational& coeff) {
        std::vector<std::vector<std::pair<BandedAtom, Rational>>> expanded;
        for (const auto& f : factors) {
            expanded.push_back(banded_atoms(f));
            if (expanded.back().empty())
                return;  // a zero factor kills the tensor
        }
        std::vector<int> pick(factors.size(), 0);
        while (true) {
            Rational c = coeff;
            std::vector<BandedAtom> t;
            t.reserve(factors.size());
            for (std::size_t s = 0; s < factors.size(); ++s) {
                t.push_back(expanded[s][pick[s]].first);
                c *= expanded[s][pick[s]].second;
            }
            add_atoms(t, c);
            int s = static_cast<int>(factors.size()) - 1;
            while (s >= 0 && ++pick[s] == static_cast<int>(expanded[s].size())) pick[s--] = 0;
            if (s < 0)
                break;
        }
    }

    void add(const BandedChain& o, const Rational& scale = Rational(1)) {
        for (const auto& [t, c] : o.terms) add_atoms(t, c * scale);
    }

    bool operator==(const BandedChain& o) const {
        return base == o.base && arity == o.arity && terms == o.terms;
    }
};

/// Hochschild boundary evaluated symbolically on banded factors.
inline BandedChain banded_chain_boundary(const BandedChain& c) {
    const int p = c.arity - 1;
    BandedChain out{c.base, c.arity - 1, {}};
    if (p < 1)
        return out;
    for (const auto& [t, coeff] : c.terms) {
        for (int i = 0; i <= p - 1; ++i) {
            Rational sign = i % 2 == 0 ? coeff : -coeff;
            Banded prod = banded_mul(atom_banded(c.base, t[i]), atom_banded(c.base, t[i + 1]));
            for (const auto& [atom, ac] : banded_atoms(prod)) {
                std::vector<BandedAtom> u;
                u.reserve(t.size() - 1);
                for (int s = 0; s < i; ++s) u.push_back(t[s]);
                u.push_back(atom);
                for (int s = i + 2; s <= p; ++s) u.push_back(t[s]);
                out.add_atoms(u, sign * ac);
            }
        }
        Rational csign = p % 2 == 0 ? coeff : -coeff;
        Banded prod = banded_mul(atom_banded(c.base, t[p]), atom_banded(c.base, t[0]));
        for (const auto& [atom, ac] : banded_atoms(prod)) {
            std::vector<BandedAtom> u;
            u.reserve(t.size() - 1);
            u.push_back(atom);
            for (int s = 1; s <= p - 1; ++s) u.push_back(t[s]);
            out.add_atoms(u, csign * ac);
        }
    }
    return out;
}

/// Connes operator evaluated symbolically; the inserted unit is the banded
/// identity I (diagonal offset 0 with the unit of R).
inline BandedChain banded_chain_connes_B(const BandedChain& c) {
    const int p = c.arity - 1;
    BandedChain out{c.base, c.arity + 1, {}};
    auto unit_atoms = banded_atoms(banded_unit(c.base));
    for (const auto& [t, coeff] : c.terms) {
        for (int i = 0; i <= p; ++i) {
            Rational sign = (p * i) % 2 == 0 ? coeff : -coeff;
            std::vector<BandedAtom> rot(p + 1);
            for (int s = 0; s <= p; ++s) rot[s] = t[(i + s) % (p + 1)];
            for (const auto& [u, uc] : unit_atoms) {
                std::vector<BandedAtom> first;
                first.reserve(p + 2);
                first.push_back(u);
                for (int s = 0; s <= p; ++s) first.push_back(rot[s]);
                out.add_atoms(first, sign * uc);
                std::vector<BandedAtom> second;
                second.reserve(p + 2);
                second.push_back(rot[0]);
                second.push_back(u);
                for (int s = 1; s <= p; ++s) second.push_back(rot[s]);
                out.add_atoms(second, sign * uc);
            }
        }
    }
    return out;
}

/// Degree-raising stabilization map R^{(x)p+1} -> (banded)^{(x)p+2}:
///   (r_0, .., r_p) |-> sum_{k=0}^{p} (-1)^k (r_0 I, r_1 I, .., r_k I, tau, r_{k+1} I, .., r_p I),
/// inserting the shift tau after slot k. Anticommutes with the boundaries
/// and intertwines the Connes operators up to an explicit boundary.
inline BandedChain stabilization_map(const RChain& c) {
    BandedChain out{c.base, c.arity + 1, {}};
    const int p = c.arity - 1;
    Banded tau = banded_tau(c.base);
    for (const auto& [t, coeff] : c.terms) {
        for (int k = 0; k <= p; ++k) {
            std::vector<Banded> factors;
            factors.reserve(p + 2);
            for (int s = 0; s <= k; ++s)
                factors.push_back(banded_diagonal(c.base, svec_unit(t[s]), 0));
            factors.push_back(tau);
            for (int s = k + 1; s <= p; ++s)
                factors.push_back(banded_diagonal(c.base, svec_unit(t[s]), 0));
            out.add_tensor(factors, k % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

/// Embed an R-chain into banded chains slotwise, r |-> r I.
inline BandedChain embed_rchain(const RChain& c) {
    BandedChain out{c.base, c.arity, {}};
    for (const auto& [t, coeff] : c.terms) {
        std::vector<Banded> factors;
        for (int s = 0; s < c.arity; ++s) factors.push_back(banded_diagonal(c.base, svec_unit(t[s]), 0));
        out.add_tensor(factors, coeff);
    }
    return out;
}

struct BCompatibilityReport {
    bool pass = false;
    BandedChain lhs;  // stab(B_R w) + B_J(stab(w))
    BandedChain rhs;  // -b(I, tau, I, N(w))
};

/// For a Hochschild cycle w in R^{(x)p+1}, check the chain-level identity
///   (stab o B_R + B_J o stab)(w) = -b(I (x) tau (x) I (x) N(w)).
inline BCompatibilityReport check_B_compatibility(const RChain& w) {
    if (!rchain_boundary(w).is_zero())
        throw ValidationError("check_B_compatibility: input chain is not a cycle");
    BCompatibilityReport rep;
    BandedChain lhs = stabilization_map(rchain_connes_B(w));
    lhs.add(banded_chain_connes_B(stabilization_map(w)));
    RChain nw = norm_operator(w);
    BandedChain wrap{w.base, w.arity + 3, {}};
    for (const auto& [t, coeff] : nw.terms) {
        std::vector<Banded> factors;
        factors.push_back(banded_unit(w.base));
        factors.push_back(banded_tau(w.base));
        factors.push_back(banded_unit(w.base));
        for (int s = 0; s < nw.arity; ++s) factors.push_back(banded_diagonal(w.base, svec_unit(t[s]), 0));
        wrap.add_tensor(factors, coeff);
    }
    BandedChain rhs{w.base, w.arity + 2, {}};
    rhs.add(banded_chain_boundary(wrap), Rational(-1));
    rep.lhs = lhs;
    rep.rhs = rhs;
    BandedChain diff = lhs;
    diff.add(rhs, Rational(-1));
    rep.pass = diff.is_zero();
    return rep;
}

}  // namespace homalg
