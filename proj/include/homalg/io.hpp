#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "homalg/chain_complex.hpp"
#include "homalg/constructions.hpp"

namespace homalg {

/// Algebra file format (JSON):
///   {
///     "name":   "k[eps]",                      // optional
///     "labels": ["1", "eps"],
///     "unit":   {"1": "1"},                    // label -> rational "p/q"
///     "products": [
///       {"left": "1",   "right": "1",   "result": {"1": "1"}},
///       {"left": "1",   "right": "eps", "result": {"eps": "1"}},
///       {"left": "eps", "right": "1",   "result": {"eps": "1"}}
///     ]                                        // omitted products are zero
///   }
/// Validation (associativity, unit) happens in build_algebra.
inline AlgebraPtr parse_algebra(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    try {
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        auto label_index = [&](const std::string& l) {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == l)
                    return static_cast<int>(i);
            throw InputError(source + ": unknown basis label '" + l + "'");
        };
        auto parse_svec = [&](const nlohmann::json& sv) {
            Svec out;
            for (auto it = sv.begin(); it != sv.end(); ++it) {
                Rational c = rational_from_string(it.value().get<std::string>());
                if (c != 0)
                    out[label_index(it.key())] = c;
            }
            return out;
        };
        const int n = static_cast<int>(labels.size());
        std::vector<std::vector<Svec>> table(n, std::vector<Svec>(n));
        for (const auto& p : j.value("products", nlohmann::json::array())) {
            int l = label_index(p.at("left").get<std::string>());
            int r = label_index(p.at("right").get<std::string>());
            table[l][r] = parse_svec(p.at("result"));
        }
        Svec unit = parse_svec(j.at("unit"));
        std::string name = j.value("name", source);
        return build_algebra(name, labels, table, unit);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(source + ": " + e.what());
    }
}

/// Separable-subalgebra file format (JSON):
///   {
///     "labels": ["d1", "d2"],
///     "embedding": {"d1": {"e11": "1"}, "d2": {"e22": "1"}},
///     "idempotent": [
///       {"left": "d1", "right": "d1", "coeff": "1"},
///       {"left": "d2", "right": "d2", "coeff": "1"}
///     ]
///   }
inline SeparabilityWitness parse_witness(const std::string& text, const std::string& source,
                                         const AlgebraPtr& ambient) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    try {
        std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
        auto sub_index = [&](const std::string& l) {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == l)
                    return static_cast<int>(i);
            throw InputError(source + ": unknown subalgebra label '" + l + "'");
        };
        std::vector<Svec> embedding(labels.size());
        const auto& emb = j.at("embedding");
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto& sv = emb.at(labels[i]);
            for (auto it = sv.begin(); it != sv.end(); ++it)
                embedding[i][ambient->label_index(it.key())] =
                    rational_from_string(it.value().get<std::string>());
        }
        std::map<std::pair<int, int>, Rational> idem;
        for (const auto& term : j.at("idempotent")) {
            int u = sub_index(term.at("left").get<std::string>());
            int v = sub_index(term.at("right").get<std::string>());
            idem[{u, v}] += rational_from_string(term.at("coeff").get<std::string>());
        }
        return make_separability_witness(ambient, labels, embedding, idem);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(source + ": " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline AlgebraPtr load_algebra_file(const std::string& path) {
    return parse_algebra(read_file(path), path);
}

inline SeparabilityWitness load_witness_file(const std::string& path, const AlgebraPtr& ambient) {
    return parse_witness(read_file(path), path, ambient);
}

enum class ReportFormat { text, records };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "text")
        return ReportFormat::text;
    if (s == "records")
        return ReportFormat::records;
    throw InputError("unknown format '" + s + "' (expected text|records)");
}

/// Deterministic serialization of a homology report. Wall-clock lines are
/// emitted only when with_timings is set, so identical invocations produce
/// byte-identical output by default.
inline std::string serialize_homology_report(const HomologyReport& hr, const ChainComplex& cc,
                                             ReportFormat fmt, bool with_timings = false) {
    std::ostringstream os;
    auto rep_string = [&](int degree, const Row& rep) {
        std::string out;
        for (const auto& [idx, val] : rep) {
            if (!out.empty())
                out += " ";
            std::string label = cc.labels[degree].empty() ? std::to_string(idx)
                                                          : cc.labels[degree][idx];
            out += label + "=" + rational_to_string(val);
        }
        return out;
    };
    if (fmt == ReportFormat::records) {
        os << "complex " << hr.complex_name << " cap " << cc.cap << "\n";
        for (const auto& d : hr.degrees) {
            os << "degree " << d.degree << " dim " << d.dim << " nnz " << d.boundary_nnz << " betti "
               << d.betti << " status " << (d.reliable ? "exact" : "truncation-boundary") << "\n";
            for (std::size_t i = 0; i < d.representatives.size(); ++i)
                os << "rep " << d.degree << " " << i << " " << rep_string(d.degree, d.representatives[i])
                   << "\n";
            if (with_timings)
                os << "wall-ms " << d.degree << " " << d.wall_ms << "\n";
        }
        os << "work " << hr.work_used << "\n";
    } else {
        os << "Homology of " << hr.complex_name << " (degrees 0.." << cc.cap << ")\n";
        for (const auto& d : hr.degrees) {
            os << "  degree " << d.degree << ": betti " << d.betti;
            if (!d.reliable)
                os << " [unreliable: truncation boundary]";
            os << "  (dim " << d.dim << ", boundary nnz " << d.boundary_nnz << ")";
            if (with_timings)
                os << " [" << d.wall_ms << " ms]";
            os << "\n";
            for (std::size_t i = 0; i < d.representatives.size(); ++i)
                os << "    representative " << i << ": " << rep_string(d.degree, d.representatives[i])
                   << "\n";
        }
        os << "  entry-operations used: " << hr.work_used << "\n";
    }
    return os.str();
}

}  // namespace homalg
