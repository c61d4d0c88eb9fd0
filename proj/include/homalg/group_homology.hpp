#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

namespace detail {

using VValue = std::vector<Rational>;

inline bool vvalue_is_zero(const VValue& v) {
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

inline VValue vvalue_add(const VValue& a, const VValue& b, const Rational& scale) {
    VValue out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
    return out;
}

}  // namespace detail

/// Element of the module prod_{i in Z} V e_i in its representable class:
/// a left-eventual value (i << 0), a right-eventual value (i >> 0) and
/// finitely many corrections in between. The decomposition into eventual
/// values plus corrections is unique; corrections are stored as full values
/// at their index. Closed under shifts, sums, and the degree-one boundary.
struct SeqElement {
    int vdim = 0;
    std::vector<Rational> left;   // value for i << 0
    std::vector<Rational> right;  // value for i >= 0, up to corrections
    std::map<long, std::vector<Rational>> corrections;  // index -> value - eventual value

    static SeqElement zero(int vdim) {
        return SeqElement{vdim, std::vector<Rational>(vdim, Rational(0)),
                          std::vector<Rational>(vdim, Rational(0)), {}};
    }

    static SeqElement constant(std::vector<Rational> v) {
        SeqElement s;
        s.vdim = static_cast<int>(v.size());
        s.left = v;
        s.right = std::move(v);
        return s;
    }

    /// The single basis-style element v e_i.
    static SeqElement spike(int vdim, long i, std::vector<Rational> v) {
        SeqElement s = zero(vdim);
        if (!detail::vvalue_is_zero(v))
            s.corrections.emplace(i, std::move(v));
        return s;
    }

    std::vector<Rational> eventual(long i) const { return i < 0 ? left : right; }

    std::vector<Rational> value(long i) const {
        auto v = eventual(i);
        auto it = corrections.find(i);
        if (it != corrections.end())
            v = detail::vvalue_add(v, it->second, 1);
        return v;
    }

    void set_value(long i, const std::vector<Rational>& v) {
        auto dev = detail::vvalue_add(v, eventual(i), -1);
        if (detail::vvalue_is_zero(dev))
            corrections.erase(i);
        else
            corrections[i] = std::move(dev);
    }

    bool is_zero() const {
        return detail::vvalue_is_zero(left) && detail::vvalue_is_zero(right) && corrections.empty();
    }

    bool is_finitely_supported() const {
        return detail::vvalue_is_zero(left) && detail::vvalue_is_zero(right);
    }

    /// Representable element of the half-line module prod_{i>=0} V e_i (+) (+)_{i<0} V e_i:
    /// nothing stored towards -infinity.
    bool in_halfline_module() const { return detail::vvalue_is_zero(left); }

    bool operator==(const SeqElement& o) const {
        return vdim == o.vdim && left == o.left && right == o.right && corrections == o.corrections;
    }

    SeqElement scaled(const Rational& c) const {
        SeqElement out = zero(vdim);
        if (c == 0)
            return out;
        out.left = detail::vvalue_add(out.left, left, c);
        out.right = detail::vvalue_add(out.right, right, c);
        for (const auto& [i, v] : corrections) out.corrections.emplace(i, detail::vvalue_add(std::vector<Rational>(vdim, Rational(0)), v, c));
        return out;
    }

    SeqElement plus(const SeqElement& o, const Rational& scale = Rational(1)) const {
        SeqElement out;
        out.vdim = vdim;
        out.left = detail::vvalue_add(left, o.left, scale);
        out.right = detail::vvalue_add(right, o.right, scale);
        out.corrections = corrections;
        for (const auto& [i, v] : o.corrections) {
            auto it = out.corrections.find(i);
            if (it == out.corrections.end()) {
                auto nv = detail::vvalue_add(std::vector<Rational>(vdim, Rational(0)), v, scale);
                if (!detail::vvalue_is_zero(nv))
                    out.corrections.emplace(i, std::move(nv));
            } else {
                it->second = detail::vvalue_add(it->second, v, scale);
                if (detail::vvalue_is_zero(it->second))
                    out.corrections.erase(it);
            }
        }
        return out;
    }

    /// m[p] = tau^p(m): value'(i) = value(i + p). Eventual values are fixed,
    /// corrections move; the sign-boundary band picks up new corrections.
    SeqElement shift(long p) const {
        SeqElement out = zero(vdim);
        out.left = left;
        out.right = right;
        std::vector<long> candidates;
        for (const auto& [i, v] : corrections) candidates.push_back(i - p);
        if (p > 0)
            for (long i = -p; i < 0; ++i) candidates.push_back(i);
        else
            for (long i = 0; i < -p; ++i) candidates.push_back(i);
        for (long i : candidates) out.set_value(i, value(i + p));
        return out;
    }
};

/// One-chains m (x) tau^p and two-chains m (x) tau^p (x) tau^q with the
/// Hochschild boundary for the bimodule structure "left action by the shift,
/// right action trivial":
///   b(m (x) tau^p) = m - m[p]
///   b(m (x) tau^p (x) tau^q) = m (x) tau^q - m (x) tau^{p+q} + m[q] (x) tau^p.
struct GroupOneChain {
    int vdim = 0;
    std::map<long, SeqElement> terms;  // exponent -> coefficient element

    void add(const SeqElement& m, long p, const Rational& scale = Rational(1)) {
        auto it = terms.find(p);
        if (it == terms.end()) {
            SeqElement v = m.scaled(scale);
            if (!v.is_zero())
                terms.emplace(p, std::move(v));
        } else {
            it->second = it->second.plus(m, scale);
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    bool operator==(const GroupOneChain& o) const { return vdim == o.vdim && terms == o.terms; }
};

struct GroupTwoChain {
    int vdim = 0;
    std::vector<std::tuple<SeqElement, long, long>> terms;  // (m, p, q)
};

inline SeqElement group_boundary_one(const SeqElement& m, long p) { return m.plus(m.shift(p), -1); }

inline SeqElement group_boundary(const GroupOneChain& c) {
    SeqElement out = SeqElement::zero(c.vdim);
    for (const auto& [p, m] : c.terms) out = out.plus(group_boundary_one(m, p));
    return out;
}

inline GroupOneChain group_boundary(const GroupTwoChain& c) {
    GroupOneChain out;
    out.vdim = c.vdim;
    for (const auto& [m, p, q] : c.terms) {
        out.add(m, q);
        out.add(m, p + q, Rational(-1));
        out.add(m.shift(q), p);
    }
    return out;
}

/// Explicit preimage for the degree-zero boundary on the full-line module:
/// for finitely supported m, the partial-sum element
///   mtilde_i = sum_{0 < r <= i} m_r (i > 0), 0 (i = 0), -sum_{i < r <= 0} m_r (i < 0)
/// satisfies b(mtilde (x) tau^{-1}) = m. The output is a two-sided step
/// function: right-eventual value sum_{r>0} m_r, left-eventual -sum_{r<=0} m_r.
inline GroupOneChain h0_preimage(const SeqElement& m) {
    if (!m.is_finitely_supported())
        throw InputError("h0_preimage: not finitely supported; preimage formula inapplicable");
    SeqElement out = SeqElement::zero(m.vdim);
    long lo = 0, hi = 0;
    for (const auto& [i, v] : m.corrections) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    std::vector<Rational> right(m.vdim, Rational(0)), left(m.vdim, Rational(0));
    for (const auto& [i, v] : m.corrections) {
        if (i > 0)
            right = detail::vvalue_add(right, v, 1);
        else
            left = detail::vvalue_add(left, v, -1);
    }
    out.right = right;
    out.left = left;
    // fix up the window so the values match the partial sums exactly
    std::vector<Rational> acc(m.vdim, Rational(0));
    for (long i = 1; i <= hi + 1; ++i) {
        acc = detail::vvalue_add(acc, m.value(i), 1);
        out.set_value(i, acc);
    }
    acc.assign(m.vdim, Rational(0));
    for (long i = 0; i >= lo - 1; --i) {
        out.set_value(i, detail::vvalue_add(std::vector<Rational>(m.vdim, Rational(0)), acc, -1));
        acc = detail::vvalue_add(acc, m.value(i), 1);
    }
    GroupOneChain chain;
    chain.vdim = m.vdim;
    chain.add(out, -1);
    return chain;
}

/// Reduction of m (x) tau^p to an equivalent class representative m' (x) tau:
///   p > 0: m' = sum_{k=0}^{p-1} m[k];  p = 0: m' = 0;  p < 0: m' = -sum_{k=p}^{-1} m[k].
inline SeqElement reduce_to_tau(const SeqElement& m, long p) {
    SeqElement out = SeqElement::zero(m.vdim);
    if (p > 0)
        for (long k = 0; k < p; ++k) out = out.plus(m.shift(k));
    else if (p < 0)
        for (long k = p; k <= -1; ++k) out = out.plus(m.shift(k), Rational(-1));
    return out;
}

/// Two-chain witness W with b(W) = m (x) tau^p - reduce_to_tau(m, p) (x) tau,
/// assembled from the relations b(x (x) tau^a (x) tau^b).
inline GroupTwoChain tau_reduction_witness(const SeqElement& m, long p) {
    GroupTwoChain w;
    w.vdim = m.vdim;
    if (p == 0) {
        w.terms.emplace_back(m, 0, 0);
        return w;
    }
    if (p > 0) {
        for (long k = 0; k <= p - 2; ++k) w.terms.emplace_back(m.shift(k).scaled(Rational(-1)), p - 1 - k, 1);
        return w;
    }
    // p < 0: lift through m[p] (x) tau^p (x) tau^{-p}, then reduce the positive power
    SeqElement mp = m.shift(p);
    w.terms.emplace_back(mp, p, -p);
    for (long k = 0; k <= -p - 2; ++k) w.terms.emplace_back(mp.shift(k), -p - 1 - k, 1);
    w.terms.emplace_back(mp, 0, 0);
    return w;
}

/// Kernel characterization at chain degree one: m (x) tau is a cycle iff
/// m is shift-invariant, i.e. a constant section.
inline bool h1_kernel_test(const SeqElement& m) {
    return m.corrections.empty() && m.left == m.right;
}

/// Combined kernel/image report for one representable element of the
/// half-line module: whether m (x) tau^p is a cycle (for p != 0 this forces
/// m = 0, since a shift-periodic element vanishing far to the left vanishes
/// everywhere), and a degree-zero preimage when one exists in the
/// representable class.
struct HalflineReport {
    bool in_module = false;
    bool is_cycle = false;          // b(m (x) tau^p) = 0
    bool has_preimage = false;      // m = b(preimage) with a representable chain
    GroupOneChain preimage;
    std::string note;               // restriction notes, printed by callers
};

inline GroupOneChain halfline_h0_preimage(const SeqElement& m);

inline HalflineReport halfline_kernel_image_test(const SeqElement& m, long p) {
    HalflineReport rep;
    rep.in_module = m.in_halfline_module();
    if (!rep.in_module) {
        rep.note = "element is not in the half-line module";
        return rep;
    }
    rep.is_cycle = p == 0 || group_boundary_one(m, p).is_zero();
    if (detail::vvalue_is_zero(m.right)) {
        rep.preimage = halfline_h0_preimage(m);
        rep.has_preimage = true;
    } else {
        rep.note =
            "no representable preimage: the eventual value cancels in every boundary image, so "
            "only finitely supported targets have witnesses in the representable class";
    }
    return rep;
}

/// Constructive degree-zero preimage on the half-line module. Only targets
/// with vanishing right-eventual value admit a representable witness (the
/// eventual values cancel in every b-image), so this requires a finitely
/// supported target and returns the left partial sums.
inline GroupOneChain halfline_h0_preimage(const SeqElement& m) {
    if (!m.in_halfline_module())
        throw InputError("halfline_h0_preimage: target is not in the half-line module");
    if (!detail::vvalue_is_zero(m.right))
        throw InputError(
            "halfline_h0_preimage: no representable witness exists for a target with nonzero "
            "eventual value");
    SeqElement out = SeqElement::zero(m.vdim);
    long lo = 0, hi = 0;
    for (const auto& [i, v] : m.corrections) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    std::vector<Rational> total(m.vdim, Rational(0));
    for (const auto& [i, v] : m.corrections) total = detail::vvalue_add(total, v, 1);
    out.right = total;  // x_j = sum_{r <= j} m_r stabilizes at the total mass
    std::vector<Rational> acc(m.vdim, Rational(0));
    for (long i = lo; i <= hi; ++i) {
        acc = detail::vvalue_add(acc, m.value(i), 1);
        out.set_value(i, acc);
    }
    GroupOneChain chain;
    chain.vdim = m.vdim;
    chain.add(out, -1);
    return chain;
}

}  // namespace homalg
