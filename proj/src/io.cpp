#include "totlab/io.hpp"

#include <regex>
#include <sstream>

namespace totlab::io {

Json pgood_json(const pgood::PGoodReport& r) {
    Json j;
    j["n"] = to_string(r.n);
    j["p"] = r.p ? Json(to_string(*r.p)) : Json(nullptr);
    j["good"] = r.good;
    j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
    return j;
}

std::string pgood_line(const pgood::PGoodReport& r) {
    std::ostringstream out;
    out << "pgood n=" << to_string(r.n);
    out << " p=" << (r.p ? to_string(*r.p) : "none");
    out << " good=" << (r.good ? "true" : "false");
    out << " witness=" << (r.witness ? to_string(*r.witness) : "none");
    return out.str();
}

Json scan_json(const ineq::ScanReport& r) {
    Json j;
    j["which"] = ineq::which_name(r.which);
    j["limit"] = r.limit;
    j["checked"] = r.checked;
    j["failures"] = Json::array();
    for (const auto& f : r.failures) {
        Json row;
        row["inputs"] = Json::array();
        for (const auto& v : f.inputs) row["inputs"].push_back(to_string(v));
        row["lhs"] = to_string(f.lhs);
        row["rhs"] = to_string(f.rhs);
        j["failures"].push_back(std::move(row));
    }
    return j;
}

std::string scan_csv(const ineq::ScanReport& r) {
    // columns: kind,which,i1,i2,i3,lhs,rhs
    // failure rows carry the violating inputs; the summary row carries
    // checked in i1 and the failure count in i2.
    std::ostringstream out;
    out << "kind,which,i1,i2,i3,lhs,rhs\n";
    for (const auto& f : r.failures) {
        out << "failure," << ineq::which_name(r.which);
        for (std::size_t i = 0; i < 3; ++i) {
            out << ",";
            if (i < f.inputs.size()) out << to_string(f.inputs[i]);
        }
        out << "," << to_string(f.lhs) << "," << to_string(f.rhs) << "\n";
    }
    out << "summary," << ineq::which_name(r.which) << "," << r.checked << "," << r.failures.size() << ",,,\n";
    return out.str();
}

std::string scan_plain(const ineq::ScanReport& r) {
    std::ostringstream out;
    out << "scan " << ineq::which_name(r.which) << " limit=" << r.limit << " checked=" << r.checked
        << " failures=" << r.failures.size() << "\n";
    for (const auto& f : r.failures) {
        out << "  violated at";
        for (const auto& v : f.inputs) out << " " << to_string(v);
        out << ": " << to_string(f.lhs) << " >= " << to_string(f.rhs) << "\n";
    }
    return out.str();
}

Json structure_report_json(const folio::StructureReport& r) {
    Json j;
    j["structure"] = r.structure;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["budget"] = r.budget;
    j["pool"] = r.pool;
    j["axioms"] = Json::array();
    for (const auto& a : r.axioms) {
        Json row;
        row["name"] = a.name;
        row["verdict"] = folio::tri_name(a.verdict);
        row["samples"] = a.samples;
        row["definite_true"] = a.definite_true;
        row["definite_false"] = a.definite_false;
        row["undecided"] = a.undecided;
        row["counterexamples"] = Json::array();
        for (const auto& ce : a.counterexamples) {
            Json m = Json::object();
            for (const auto& [k, v] : ce) m[k] = v;
            row["counterexamples"].push_back(std::move(m));
        }
        row["refutations"] = Json::array();
        for (const auto& re : a.refutations) {
            Json m = Json::object();
            for (const auto& [k, v] : re) m[k] = v;
            row["refutations"].push_back(std::move(m));
        }
        if (!a.note.empty()) row["note"] = a.note;
        j["axioms"].push_back(std::move(row));
    }
    return j;
}

namespace {

bool type_matches(const std::string& type, const nlohmann::json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

bool validate_rec(const nlohmann::json& schema, const nlohmann::json& value, const std::string& path,
                  std::string& error) {
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = type_matches(t.get<std::string>(), value);
        else if (t.is_array()) {
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
        }
        if (!ok) {
            error = path + ": type mismatch";
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || alt == value;
        if (!ok) {
            error = path + ": not in enum";
            return false;
        }
    }
    if (schema.contains("pattern") && value.is_string()) {
        std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re)) {
            error = path + ": pattern mismatch";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key '" + key.get<std::string>() + "'";
                    return false;
                }
            }
        }
        const nlohmann::json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        bool extra_ok = true;
        if (schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean()) {
            extra_ok = schema["additionalProperties"].get<bool>();
        }
        for (const auto& [key, sub] : value.items()) {
            if (props && props->contains(key)) {
                if (!validate_rec((*props)[key], sub, path + "/" + key, error)) return false;
            } else if (!extra_ok) {
                error = path + ": unexpected key '" + key + "'";
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& sub : value) {
            if (!validate_rec(schema["items"], sub, path + "/" + std::to_string(i), error)) return false;
            ++i;
        }
    }
    return true;
}

}  // namespace

bool validate_schema(const nlohmann::json& schema, const nlohmann::json& value, std::string& error) {
    error.clear();
    return validate_rec(schema, value, "$", error);
}

}  // namespace totlab::io
