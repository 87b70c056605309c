#include "zdeform/sim_config.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "zdeform/io.hpp"

namespace zdeform {

const char* variant_name(Variant v) {
    return v == Variant::as_printed ? "as_printed" : "reconstructed";
}

Variant variant_from_name(const std::string& name) {
    if (name == "as_printed") return Variant::as_printed;
    if (name == "reconstructed") return Variant::reconstructed;
    throw UnknownName("unknown variant '" + name + "' (expected as_printed|reconstructed)");
}

CharacteristicForm builtin_form(const std::string& name, double b0, Variant variant) {
    CharacteristicForm f;
    f.name = name;
    f.provenance = Provenance::builtin;
    f.P = Polynomial{0.0, 1.0};   // z
    f.Q = Polynomial{-1.0, 1.0};  // z - 1
    if (name == "no_delay") {
        f.R = Polynomial{1.0, -2.0, 1.0};  // (z - 1)^2
        return f;
    }
    if (name == "unit_delay") {
        f.R = Polynomial{0.0, 1.0, -2.0, 1.0};  // z (z - 1)^2
        return f;
    }
    if (name == "real_damping") {
        if (!(b0 > 0.0)) throw InvalidParam("real_damping requires b0 > 0");
        double e = std::exp(-b0);
        double gain = b0 / (1.0 - e);
        f.params["b0"] = b0;
        f.variant = variant_name(variant);
        if (variant == Variant::as_printed) {
            // z (z - 1) * b0 / (1 - e^{-b0})
            f.R = Polynomial{0.0, -gain, gain};
        } else {
            // z (z - 1) (z - e^{-b0}) * b0 / (1 - e^{-b0})
            f.R = Polynomial{0.0, gain * e, -gain * (1.0 + e), gain};
        }
        return f;
    }
    throw UnknownName("unknown built-in configuration '" + name +
                      "' (expected no_delay|unit_delay|real_damping)");
}

Polynomial assemble(const CharacteristicForm& f, const DiscreteParams& d) {
    return f.P * d.K + f.Q * d.B + f.R;
}

namespace {

Polynomial poly_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("config field '" + field + "' must be an array of reals");
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw SchemaError("config field '" + field + "' must contain only reals");
        c.push_back(v.get<double>());
    }
    return Polynomial(std::move(c));
}

}  // namespace

CharacteristicForm load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw SchemaError("config root must be an object");
    for (const char* field : {"name", "P", "Q", "R"})
        if (!j.contains(field)) throw SchemaError(std::string("config missing field '") + field + "'");
    if (!j["name"].is_string()) throw SchemaError("config field 'name' must be a string");

    CharacteristicForm f;
    f.name = j["name"].get<std::string>();
    f.P = poly_from_json(j["P"], "P");
    f.Q = poly_from_json(j["Q"], "Q");
    f.R = poly_from_json(j["R"], "R");
    f.provenance = Provenance::file;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw SchemaError("config field 'params' must be an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
            if (!it.value().is_number())
                throw SchemaError("config param '" + it.key() + "' must be a real");
            f.params[it.key()] = it.value().get<double>();
        }
    }
    if (j.contains("variant")) {
        if (!j["variant"].is_string()) throw SchemaError("config field 'variant' must be a string");
        f.variant = j["variant"].get<std::string>();
        variant_from_name(*f.variant);  // validate
    }
    if (f.P.is_zero() && f.Q.is_zero() && f.R.is_zero())
        throw InvariantError("config " + path + ": P, Q, R must not all be zero");
    return f;
}

std::string config_to_json(const CharacteristicForm& f) {
    JsonWriter w;
    w.begin_object();
    w.key("name").value(f.name);
    auto poly = [&w](const char* key, const Polynomial& p) {
        w.key(key).begin_array();
        for (double c : p.coeffs()) w.value(c);
        w.end_array();
    };
    poly("P", f.P);
    poly("Q", f.Q);
    poly("R", f.R);
    w.key("params").begin_object();
    for (const auto& [k, v] : f.params) w.key(k).value(v);
    w.end_object();
    if (f.variant) w.key("variant").value(*f.variant);
    w.end_object();
    return w.str() + "\n";
}

void save_config(const CharacteristicForm& f, const std::string& path) {
    write_file(path, config_to_json(f));
}

}  // namespace zdeform
