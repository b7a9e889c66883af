#pragma once

// JSON surfaces: problem files, curve descriptions, and the deterministic
// reports the CLI prints. Key order is fixed and all big numbers travel as
// strings, so identical inputs serialize to identical bytes.

#include <finorb/criterion.hpp>
#include <finorb/oracle.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace finorb::io {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_name = "finorb";
inline constexpr const char* tool_version = "0.1.0";

namespace detail {

inline Rat rat_from_json(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return rat_from_string(v.get<std::string>());
        if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    } catch (const input_error& e) {
        throw input_error(where + ": " + e.what());
    }
    throw input_error(where + ": expected a rational as string or integer");
}

inline GaussianRational gauss_from_json(const json& v, const std::string& where) {
    if (v.is_object()) {
        GaussianRational g;
        if (v.contains("re")) g.re = rat_from_json(v["re"], where + ".re");
        if (v.contains("im")) g.im = rat_from_json(v["im"], where + ".im");
        return g;
    }
    return GaussianRational(rat_from_json(v, where), Rat(0));
}

inline json gauss_to_json(const GaussianRational& g) {
    return json{{"re", rat_to_string(g.re)}, {"im", rat_to_string(g.im)}};
}

inline Int int_from_json(const json& v, const std::string& where) {
    Rat q = rat_from_json(v, where);
    if (denominator(q) != 1) throw input_error(where + ": expected an integer");
    return numerator(q);
}

inline json int_vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

inline IntVector int_vector_from_json(const json& v, const std::string& where) {
    if (!v.is_array()) throw input_error(where + ": expected an array");
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(int_from_json(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace detail

// ---- problem files ----

inline criterion::ProblemSpec parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("top level: expected an object");

    criterion::ProblemSpec spec;
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw input_error("k: required integer");
    spec.k = doc["k"].get<int>();
    if (!doc.contains("mode") || !doc["mode"].is_string())
        throw input_error("mode: required string 'affine' or 'projective'");
    std::string mode = doc["mode"].get<std::string>();
    if (mode == "affine")
        spec.mode = criterion::Mode::affine;
    else if (mode == "projective")
        spec.mode = criterion::Mode::projective;
    else
        throw input_error("mode: expected 'affine' or 'projective', got '" + mode + "'");

    if (!doc.contains("components") || !doc["components"].is_array())
        throw input_error("components: required array");
    for (std::size_t i = 0; i < doc["components"].size(); ++i) {
        const json& cj = doc["components"][i];
        std::string where = "components[" + std::to_string(i) + "]";
        if (!cj.is_object()) throw input_error(where + ": expected an object");
        criterion::ComponentSpec comp;
        if (!cj.contains("character"))
            throw input_error(where + ".character: required array");
        comp.character = detail::int_vector_from_json(cj["character"], where + ".character");
        if (!cj.contains("degree") || !cj["degree"].is_number_integer())
            throw input_error(where + ".degree: required integer");
        comp.degree = cj["degree"].get<int>();
        if (cj.contains("roots")) {
            const json& rj = cj["roots"];
            if (!rj.is_array()) throw input_error(where + ".roots: expected an array");
            for (std::size_t r = 0; r < rj.size(); ++r) {
                std::string rwhere = where + ".roots[" + std::to_string(r) + "]";
                const json& root = rj[r];
                if (!root.is_object() || !root.contains("re") || !root.contains("mult"))
                    throw input_error(rwhere + ": expected an object with re and mult");
                GaussianRational a = detail::gauss_from_json(root, rwhere);
                if (!root["mult"].is_number_integer() || root["mult"].get<long long>() < 1)
                    throw input_error(rwhere + ".mult: expected a positive integer");
                int mult = root["mult"].get<int>();
                if (comp.roots.count(a))
                    throw input_error(rwhere + ": repeated root value " + gauss_to_string(a));
                comp.roots[a] = mult;
            }
        }
        spec.components.push_back(std::move(comp));
    }
    criterion::validate(spec);
    return spec;
}

inline json problem_to_json(const criterion::ProblemSpec& spec) {
    json doc;
    doc["k"] = spec.k;
    doc["mode"] = criterion::mode_name(spec.mode);
    json comps = json::array();
    for (const criterion::ComponentSpec& c : spec.components) {
        json cj;
        json chars = json::array();
        for (const Int& x : c.character) chars.push_back(x.convert_to<long long>());
        cj["character"] = chars;
        cj["degree"] = c.degree;
        json roots = json::array();
        for (const auto& [a, e] : c.roots)
            roots.push_back(json{{"re", rat_to_string(a.re)},
                                 {"im", rat_to_string(a.im)},
                                 {"mult", e}});
        cj["roots"] = roots;
        comps.push_back(std::move(cj));
    }
    doc["components"] = std::move(comps);
    return doc;
}

inline std::string serialize_problem(const criterion::ProblemSpec& spec) {
    return problem_to_json(spec).dump(2) + "\n";
}

// ---- curves ----

inline oracle::CurveSpec parse_curve(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("curve JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("curve: expected an object");
    oracle::CurveSpec curve;
    if (doc.contains("r")) curve.r = detail::int_vector_from_json(doc["r"], "curve.r");
    if (!doc.contains("p")) throw input_error("curve.p: required integer");
    curve.p = detail::int_from_json(doc["p"], "curve.p");
    if (doc.contains("q")) curve.q = detail::int_from_json(doc["q"], "curve.q");
    if (doc.contains("c")) curve.c = detail::gauss_from_json(doc["c"], "curve.c");
    if (doc.contains("h")) {
        if (!doc["h"].is_array()) throw input_error("curve.h: expected an array");
        for (std::size_t i = 0; i < doc["h"].size(); ++i)
            curve.h.push_back(
                detail::gauss_from_json(doc["h"][i], "curve.h[" + std::to_string(i) + "]"));
    }
    return curve;
}

// ---- reports ----

namespace detail {

inline json violation_to_json(const criterion::Violation& v) {
    return json{{"beta", int_vector_to_json(v.beta)},
                {"root", gauss_to_json(v.root)},
                {"value", v.value.str()}};
}

inline criterion::Violation violation_from_json(const json& v) {
    criterion::Violation out;
    out.beta = int_vector_from_json(v["beta"], "violation.beta");
    out.root = gauss_from_json(v["root"], "violation.root");
    out.value = Int(v["value"].get<std::string>());
    return out;
}

inline json face_report_to_json(const criterion::FaceReport& rep) {
    json f;
    f["indices"] = rep.face.indices;
    f["normal"] = rep.face.normal ? int_vector_to_json(*rep.face.normal) : json(nullptr);
    json kernel = json::array();
    for (const IntVector& beta : rep.kernel) kernel.push_back(int_vector_to_json(beta));
    f["kernel"] = kernel;
    f["violation"] = rep.violation ? violation_to_json(*rep.violation) : json(nullptr);
    return f;
}

}  // namespace detail

struct Report {
    std::string mode;
    std::optional<std::string> route;
    std::string input_sha256;
    bool with_modality = true;
    criterion::Verdict verdict;
};

inline json report_to_json(const Report& rep) {
    json doc;
    doc["tool"] = tool_name;
    doc["version"] = tool_version;
    doc["input_sha256"] = rep.input_sha256;
    doc["mode"] = rep.mode;
    if (rep.route) doc["route"] = *rep.route;
    json verdict;
    verdict["finite"] = rep.verdict.finite;
    if (rep.with_modality) verdict["modality"] = rep.verdict.modality;
    json faces = json::array();
    for (const criterion::FaceReport& fr : rep.verdict.reports)
        faces.push_back(detail::face_report_to_json(fr));
    verdict["faces"] = faces;
    if (rep.verdict.witness) {
        json w;
        w["face"] = *rep.verdict.witness_face;
        w["beta"] = detail::int_vector_to_json(rep.verdict.witness->beta);
        w["root"] = detail::gauss_to_json(rep.verdict.witness->root);
        w["value"] = rep.verdict.witness->value.str();
        verdict["witness"] = w;
    } else {
        verdict["witness"] = nullptr;
    }
    doc["verdict"] = verdict;
    return doc;
}

inline Report report_from_json(const json& doc) {
    Report rep;
    rep.input_sha256 = doc["input_sha256"].get<std::string>();
    rep.mode = doc["mode"].get<std::string>();
    if (doc.contains("route")) rep.route = doc["route"].get<std::string>();
    const json& verdict = doc["verdict"];
    rep.verdict.finite = verdict["finite"].get<bool>();
    rep.with_modality = verdict.contains("modality");
    rep.verdict.modality = rep.with_modality ? verdict["modality"].get<int>()
                                             : (rep.verdict.finite ? 0 : 1);
    for (const json& f : verdict["faces"]) {
        criterion::FaceReport fr;
        fr.face.indices = f["indices"].get<std::vector<int>>();
        if (!f["normal"].is_null())
            fr.face.normal = detail::int_vector_from_json(f["normal"], "face.normal");
        for (const json& beta : f["kernel"])
            fr.kernel.push_back(detail::int_vector_from_json(beta, "face.kernel"));
        if (!f["violation"].is_null())
            fr.violation = detail::violation_from_json(f["violation"]);
        rep.verdict.reports.push_back(std::move(fr));
    }
    if (!verdict["witness"].is_null()) {
        rep.verdict.witness = detail::violation_from_json(verdict["witness"]);
        rep.verdict.witness_face = verdict["witness"]["face"].get<std::vector<int>>();
    }
    return rep;
}

inline json faces_to_json(const std::vector<geometry::Face>& faces) {
    json arr = json::array();
    for (const geometry::Face& f : faces) {
        json fj;
        fj["indices"] = f.indices;
        fj["normal"] = f.normal ? detail::int_vector_to_json(*f.normal) : json(nullptr);
        arr.push_back(std::move(fj));
    }
    return arr;
}

inline json limit_to_json(const oracle::LimitVector& lim) {
    json doc;
    doc["case"] = lim.case_id;
    doc["divergent"] = lim.divergent;
    json exps = json::array();
    for (const Int& e : lim.exponents) exps.push_back(e.str());
    doc["exponents"] = exps;
    json entries = json::array();
    if (lim.divergent) {
        doc["entries"] = json(nullptr);
    } else {
        for (const oracle::LimitEntry& e : lim.entries) {
            if (std::holds_alternative<std::monostate>(e)) {
                entries.push_back(nullptr);
            } else if (const auto* m = std::get_if<oracle::MonomialEntry>(&e)) {
                entries.push_back(json{{"coeff", detail::gauss_to_json(m->coeff)},
                                       {"x", m->x_exp},
                                       {"y", m->y_exp}});
            } else {
                const auto& f = std::get<oracle::FormEntry>(e);
                json factors = json::array();
                for (const auto& [a, mult] : f.factors)
                    factors.push_back(
                        json{{"root", detail::gauss_to_json(a)}, {"mult", mult}});
                entries.push_back(json{{"x_power", f.x_power}, {"factors", factors}});
            }
        }
        doc["entries"] = entries;
    }
    if (lim.rescale) {
        doc["rescale"] = json{{"base", detail::gauss_to_json(lim.rescale->base)},
                              {"denominator", lim.rescale->exponent_denominator.str()}};
    } else {
        doc["rescale"] = nullptr;
    }
    return doc;
}

inline std::string dump_report(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace finorb::io
