#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace homalg {

/// Exact rational scalar. GMP keeps values in lowest terms with positive
/// denominator; zero is canonically 0/1.
using Rational = mpq_class;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational_from_string(const std::string& text) {
    mpq_class q;
    try {
        q = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: '" + text + "'");
    }
    if (q.get_den() == 0)
        throw InputError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

/// Sparse coefficient vector over an indexed basis. Zero entries are never stored.
using Svec = std::map<int, Rational>;

inline void svec_add_scaled(Svec& target, const Svec& other, const Rational& scale) {
    if (scale == 0)
        return;
    for (const auto& [idx, val] : other) {
        auto it = target.find(idx);
        if (it == target.end()) {
            target.emplace(idx, val * scale);
        } else {
            it->second += val * scale;
            if (it->second == 0)
                target.erase(it);
        }
    }
}

inline Svec svec_scaled(const Svec& v, const Rational& scale) {
    Svec out;
    svec_add_scaled(out, v, scale);
    return out;
}

inline Svec svec_sum(const Svec& a, const Svec& b) {
    Svec out = a;
    svec_add_scaled(out, b, 1);
    return out;
}

inline Svec svec_diff(const Svec& a, const Svec& b) {
    Svec out = a;
    svec_add_scaled(out, b, -1);
    return out;
}

inline Rational svec_at(const Svec& v, int idx) {
    auto it = v.find(idx);
    return it == v.end() ? Rational(0) : it->second;
}

inline Svec svec_unit(int idx) { return Svec{{idx, Rational(1)}}; }

}  // namespace homalg
