#pragma once

/// @file io.hpp
/// JSON serialization for the core types. Parsers throw
/// std::invalid_argument with a message naming the violated invariant.

#include <cmath>
#include <string>

#include <json.hpp>

#include "omseq/norm.hpp"
#include "omseq/sequence.hpp"
#include "omseq/validation.hpp"
#include "omseq/weight.hpp"
#include "omseq/young.hpp"

namespace omseq {

using json = nlohmann::json;

inline json to_json(const SYoungSpec& f) {
    json j{{"family", family_name(f.family)}, {"s", f.s}};
    if (f.family != YoungFamily::exp_minus_one) j["p"] = f.p;
    return j;
}

inline SYoungSpec syoung_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("young spec: expected an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("young spec: missing family");
    const std::string fam = j["family"].get<std::string>();

    SYoungSpec f;
    if (fam == "power")
        f.family = YoungFamily::power;
    else if (fam == "exp_minus_one")
        f.family = YoungFamily::exp_minus_one;
    else if (fam == "power_log")
        f.family = YoungFamily::power_log;
    else
        throw std::invalid_argument("young spec: unknown family \"" + fam + "\"");

    if (f.family != YoungFamily::exp_minus_one) {
        if (!j.contains("p") || !j["p"].is_number())
            throw std::invalid_argument("young spec: family \"" + fam + "\" requires numeric p");
        f.p = j["p"].get<double>();
    }
    if (!j.contains("s") || !j["s"].is_number())
        throw std::invalid_argument("young spec: missing numeric s");
    f.s = j["s"].get<double>();
    if (!(f.s > 0.0 && f.s <= 1.0)) throw std::invalid_argument("s out of (0,1]");
    return f;
}

inline json to_json(const WeightSpec& w) {
    switch (w.family) {
        case WeightFamily::identity: return json{{"family", "identity"}};
        case WeightFamily::power: return json{{"family", "power"}, {"theta", w.theta}};
        case WeightFamily::constant: return json{{"family", "constant"}, {"c", w.c}};
    }
    throw std::logic_error("weight spec: unknown family");
}

// Lenient on parameter ranges: out-of-range theta or c parse fine so the
// validator can exhibit them; norm commands reject them at validation.
inline WeightSpec weight_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("weight spec: expected an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("weight spec: missing family");
    const std::string fam = j["family"].get<std::string>();

    if (fam == "identity") return WeightSpec::identity();
    if (fam == "power") {
        if (!j.contains("theta") || !j["theta"].is_number())
            throw std::invalid_argument("weight spec: power family requires numeric theta");
        return WeightSpec::power(j["theta"].get<double>());
    }
    if (fam == "constant") {
        if (!j.contains("c") || !j["c"].is_number())
            throw std::invalid_argument("weight spec: constant family requires numeric c");
        return WeightSpec::constant(j["c"].get<double>());
    }
    throw std::invalid_argument("weight spec: unknown family \"" + fam + "\"");
}

inline json to_json(const FiniteSequence& x) {
    return json{{"offset", x.offset}, {"values", x.values}};
}

inline FiniteSequence sequence_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("sequence: expected an object");
    if (!j.contains("offset") || !j["offset"].is_number_integer())
        throw std::invalid_argument("sequence: missing integer offset");
    if (!j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("sequence: missing values array");
    FiniteSequence x;
    x.offset = j["offset"].get<long long>();
    for (const auto& v : j["values"]) {
        if (!v.is_number()) throw std::invalid_argument("sequence: values must be numbers");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw std::invalid_argument("sequence: values must be finite");
        x.values.push_back(d);
    }
    return x;
}

inline json to_json(const Window& w) {
    return json{{"m", w.center}, {"N", w.half_width}};
}

inline json to_json(const Violation& v) {
    return json{{"property", v.property}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

inline json to_json(const ValidationReport& r) {
    json out{{"valid", r.valid()}, {"violations", json::array()}};
    for (const auto& v : r.violations()) out["violations"].push_back(to_json(v));
    return out;
}

inline json to_json(const NormResult& r) {
    return json{{"norm", r.value},
                {"witness", to_json(r.witness)},
                {"iterations", r.iterations},
                {"residual", r.residual}};
}

}  // namespace omseq
