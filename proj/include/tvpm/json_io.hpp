#ifndef TVPM_JSON_IO_HPP
#define TVPM_JSON_IO_HPP

#include <tvpm/affine_system.hpp>
#include <tvpm/colored.hpp>
#include <tvpm/config.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvpm::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "tvpm/1";

inline void check_schema(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema)
        throw std::invalid_argument("unsupported schema '" + j.at("schema").dump() + "', expected " + kSchema);
}

inline Rat rat_from(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw std::invalid_argument("rational must be a \"p\" or \"p/q\" string, got " + j.dump());
}

inline json to_json(const RVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline RVec rvec_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    RVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rat_from(j[i]);
    return v;
}

inline json to_json(const IndexSet& s) { return json(std::vector<std::size_t>(s.begin(), s.end())); }

inline IndexSet index_set_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of indices");
    IndexSet s;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw std::invalid_argument("index must be a nonnegative integer");
        s.push_back(x.get<std::size_t>());
    }
    return s;
}

/// {"schema", "d", "r", "points": [[rat, ...], ...], optional "m": [index, ...]}
inline json config_to_json(const PointConfig& cfg, const std::optional<IndexSet>& m = std::nullopt) {
    json j;
    j["schema"] = kSchema;
    j["d"] = cfg.d();
    j["r"] = cfg.r();
    json pts = json::array();
    for (const auto& p : cfg.points()) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    if (m) j["m"] = to_json(*m);
    return j;
}

inline PointConfig config_from_json(const json& j) {
    check_schema(j);
    std::vector<RVec> pts;
    for (const auto& p : j.at("points")) pts.push_back(rvec_from(p));
    return PointConfig(j.at("d").get<std::size_t>(), j.at("r").get<std::size_t>(), std::move(pts));
}

inline std::optional<IndexSet> m_from_json(const json& j) {
    if (!j.contains("m")) return std::nullopt;
    return index_set_from(j.at("m"));
}

inline json to_json(const Partition& p) {
    json a = json::array();
    for (const auto& part : p.parts()) a.push_back(to_json(part));
    return a;
}

inline Partition partition_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array of index arrays");
    std::vector<IndexSet> parts;
    for (const auto& part : j) parts.push_back(index_set_from(part));
    return Partition(std::move(parts));
}

/// {"schema", "result": "certificate", "partition", "z", "alpha": {"i": rat}, "negatives", "zero_set", "gamma"}
inline json certificate_to_json(const Partition& p, const AffineCertificate& c) {
    json j;
    j["schema"] = kSchema;
    j["result"] = "certificate";
    j["partition"] = to_json(p);
    j["z"] = to_json(c.z);
    json alpha = json::object();
    for (std::size_t i = 0; i < c.alpha.size(); ++i) alpha[std::to_string(i)] = c.alpha[i].str();
    j["alpha"] = std::move(alpha);
    j["negatives"] = to_json(c.negatives);
    j["zero_set"] = to_json(c.zero_set);
    j["gamma"] = c.gamma.str();
    return j;
}

inline std::pair<Partition, AffineCertificate> certificate_from_json(const json& j) {
    check_schema(j);
    AffineCertificate c;
    c.z = rvec_from(j.at("z"));
    const auto& alpha = j.at("alpha");
    if (!alpha.is_object()) throw std::invalid_argument("alpha must map indices to rationals");
    c.alpha.assign(alpha.size(), Rat());
    for (const auto& [key, val] : alpha.items()) {
        std::size_t pos = 0;
        const unsigned long idx = std::stoul(key, &pos);
        if (pos != key.size() || idx >= alpha.size())
            throw std::invalid_argument("alpha key '" + key + "' is not an index in range");
        c.alpha[idx] = rat_from(val);
    }
    c.negatives = j.contains("negatives") ? index_set_from(j.at("negatives")) : IndexSet{};
    c.zero_set = j.contains("zero_set") ? index_set_from(j.at("zero_set")) : IndexSet{};
    c.gamma = j.contains("gamma") ? rat_from(j.at("gamma")) : Rat(1);
    return {partition_from(j.at("partition")), std::move(c)};
}

/// {"schema", "d", "r", "classes": [[[rat, ...], ...], ...], optional "m"}
inline json classes_to_json(const ColorClasses& cc, const std::optional<IndexSet>& m = std::nullopt) {
    json j;
    j["schema"] = kSchema;
    j["d"] = cc.d();
    j["r"] = cc.r();
    json classes = json::array();
    for (const auto& f : cc.classes()) {
        json pts = json::array();
        for (const auto& p : f) pts.push_back(to_json(p));
        classes.push_back(std::move(pts));
    }
    j["classes"] = std::move(classes);
    if (m) j["m"] = to_json(*m);
    return j;
}

inline ColorClasses classes_from_json(const json& j) {
    check_schema(j);
    std::vector<std::vector<RVec>> classes;
    for (const auto& f : j.at("classes")) {
        std::vector<RVec> pts;
        for (const auto& p : f) pts.push_back(rvec_from(p));
        classes.push_back(std::move(pts));
    }
    return ColorClasses(j.at("d").get<std::size_t>(), j.at("r").get<std::size_t>(), std::move(classes));
}

/// {"schema", "result": "colored", "assignment": [[k, ...], ...], "coefficients", "z"}
inline json colorful_to_json(const ColorfulPartition& cp) {
    json j;
    j["schema"] = kSchema;
    j["result"] = "colored";
    j["assignment"] = cp.assignment;
    json coef = json::array();
    for (const auto& c : cp.coefficients) coef.push_back(c.str());
    j["coefficients"] = std::move(coef);
    j["z"] = to_json(cp.z);
    return j;
}

inline ColorfulPartition colorful_from_json(const json& j) {
    check_schema(j);
    ColorfulPartition cp;
    cp.assignment = j.at("assignment").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& c : j.at("coefficients")) cp.coefficients.push_back(rat_from(c));
    cp.z = rvec_from(j.at("z"));
    return cp;
}

}  // namespace tvpm::io

#endif  // TVPM_JSON_IO_HPP
