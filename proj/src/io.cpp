#include "setlat/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "setlat/examples.hpp"
#include "setlat/lp.hpp"

namespace setlat {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_number(const Json& j, const std::string& where) {
    if (!j.is_string())
        throw IoError("NUMBER_FORMAT", where + ": numbers must be decimal strings");
    const std::string& s = j.get_ref<const std::string&>();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw IoError("NUMBER_FORMAT", where + ": cannot parse '" + s + "'");
    return v;
}

namespace {

Vec parse_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw IoError("SCHEMA_VIOLATION", where + ": expected an array");
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = parse_number(j[i], where);
    return v;
}

Mat parse_mat(const Json& j, int cols_hint, const std::string& where) {
    if (!j.is_array()) throw IoError("SCHEMA_VIOLATION", where + ": expected an array of rows");
    if (j.empty()) return Mat(0, cols_hint < 0 ? 0 : cols_hint);
    Mat m(j.size(), 0);
    for (size_t i = 0; i < j.size(); ++i) {
        Vec row = parse_vec(j[i], where);
        if (i == 0) m.resize(static_cast<int>(j.size()), row.size());
        if (row.size() != m.cols())
            throw IoError("DIMENSION_MISMATCH", where + ": ragged rows");
        m.row(static_cast<int>(i)) = row.transpose();
    }
    return m;
}

Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(format_number(v(i)));
    return a;
}

Json mat_json(const Mat& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i).transpose()));
    return a;
}

PolyCone parse_cone(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("generators"))
        throw IoError("SCHEMA_VIOLATION", where + ": expected {\"generators\": [...]}");
    std::vector<Vec> gens;
    int dim = -1;
    for (const auto& g : j["generators"]) {
        Vec v = parse_vec(g, where + ".generators");
        if (dim < 0) dim = static_cast<int>(v.size());
        if (v.size() != dim) throw IoError("DIMENSION_MISMATCH", where + ": mixed generator sizes");
        gens.push_back(v);
    }
    if (dim < 0) throw IoError("SCHEMA_VIOLATION", where + ": at least one generator required");
    return PolyCone(dim, gens);
}

UpperSet parse_tail(const Json& j, const PolyCone& cone, const std::string& where) {
    std::vector<Vec> pts, rays;
    for (const auto& p : j.value("Q_vertices", Json::array()))
        pts.push_back(parse_vec(p, where + ".Q_vertices"));
    for (const auto& r : j.value("Q_rays", Json::array()))
        rays.push_back(parse_vec(r, where + ".Q_rays"));
    for (const auto& v : pts)
        if (v.size() != cone.dim()) throw IoError("DIMENSION_MISMATCH", where + ": Q_vertices");
    for (const auto& v : rays)
        if (v.size() != cone.dim()) throw IoError("DIMENSION_MISMATCH", where + ": Q_rays");
    if (pts.empty()) throw IoError("SCHEMA_VIOLATION", where + ": Q_vertices must be nonempty");
    // recession requirement: the declared ray list must already span the
    // cone, otherwise the declared set is not upper closed as written
    PolyCone declared(cone.dim(), rays.empty() ? std::vector<Vec>{Vec::Zero(cone.dim())} : rays);
    for (const auto& g : cone.generators())
        if (!declared.contains(g))
            throw IoError("UPPER_SET_VIOLATION",
                          where + ": Q_rays do not contain the ordering cone's recession");
    return upper_close(pts, rays, cone);
}

SetValuedMap parse_map(const Json& j, const PolyCone& cone, const std::string& where,
                       std::string* builtin) {
    if (!j.is_object()) throw IoError("SCHEMA_VIOLATION", where + ": expected an object");
    if (j.contains("builtin")) {
        if (!builtin)
            throw IoError("SCHEMA_VIOLATION", where + ": builtins are not allowed here");
        std::string name = j["builtin"].get<std::string>();
        *builtin = name;
        if (name == "sec3") return examples::sec3_objective();
        throw IoError("SCHEMA_VIOLATION", where + ": unknown builtin '" + name + "'");
    }
    if (!j.contains("domain") || !j.contains("pieces"))
        throw IoError("SCHEMA_VIOLATION", where + ": need domain and pieces");
    const Json& jd = j["domain"];
    Vec e = parse_vec(jd.value("e", Json::array()), where + ".domain.e");
    Mat E = parse_mat(jd.value("E", Json::array()), -1, where + ".domain.E");
    if (E.rows() != e.size()) throw IoError("DIMENSION_MISMATCH", where + ".domain");
    int n = E.rows() > 0 ? static_cast<int>(E.cols()) : -1;
    std::vector<SetValuedMap::Piece> pieces;
    for (const auto& jp : j["pieces"]) {
        Mat F = parse_mat(jp.at("F"), n, where + ".F");
        Vec c = parse_vec(jp.at("c"), where + ".c");
        if (F.rows() != cone.dim() || c.size() != cone.dim() || (n >= 0 && F.cols() != n))
            throw IoError("DIMENSION_MISMATCH", where + ": piece shapes");
        if (n < 0) n = static_cast<int>(F.cols());
        pieces.emplace_back(F, c, parse_tail(jp, cone, where));
    }
    if (n < 0) throw IoError("SCHEMA_VIOLATION", where + ": argument dimension undeterminable");
    if (E.cols() != n) E.resize(E.rows(), n);
    try {
        return SetValuedMap::affine(Polyhedron{E, e}, std::move(pieces), cone);
    } catch (const std::invalid_argument& ex) {
        throw IoError("DIMENSION_MISMATCH", where + ": " + ex.what());
    }
}

}  // namespace

ProblemDocument parse_problem_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw IoError("SCHEMA_VIOLATION", std::string("not valid JSON: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("version"))
        throw IoError("SCHEMA_VIOLATION", "top level must be an object with a version");
    if (j["version"] != "1") throw IoError("SCHEMA_VIOLATION", "unsupported document version");
    for (const char* key : {"C", "D", "f", "g"})
        if (!j.contains(key))
            throw IoError("SCHEMA_VIOLATION", std::string("missing field '") + key + "'");
    try {
        PolyCone C = parse_cone(j["C"], "C");
        PolyCone D = parse_cone(j["D"], "D");
        std::string builtin;
        SetValuedMap f = parse_map(j["f"], C, "f", &builtin);
        SetValuedMap g = parse_map(j["g"], D, "g", nullptr);
        if (g.arg_dim() != f.arg_dim())
            throw IoError("DIMENSION_MISMATCH", "f and g take arguments of different dimension");
        return ProblemDocument{make_instance(std::move(f), std::move(g)), builtin,
                               j.value("options", Json::object())};
    } catch (const nlohmann::json::exception& ex) {
        throw IoError("SCHEMA_VIOLATION", ex.what());
    }
}

ProblemDocument parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("IO_ERROR", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

namespace {

Json cone_json(const PolyCone& K) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : K.generators()) gens.push_back(vec_json(g));
    j["generators"] = gens;
    return j;
}

Json map_json(const SetValuedMap& f, const std::string& builtin) {
    Json j;
    if (!builtin.empty()) {
        j["builtin"] = builtin;
        return j;
    }
    Json dom;
    dom["E"] = mat_json(f.domain().E);
    dom["e"] = vec_json(f.domain().e);
    j["domain"] = dom;
    Json pieces = Json::array();
    for (const auto& p : f.pieces()) {
        Json jp;
        jp["F"] = mat_json(p.F);
        jp["c"] = vec_json(p.c);
        Json qv = Json::array(), qr = Json::array();
        for (const auto& v : p.Q.vertices()) qv.push_back(vec_json(v));
        for (const auto& r : p.Q.rays()) qr.push_back(vec_json(r));
        jp["Q_vertices"] = qv;
        jp["Q_rays"] = qr;
        pieces.push_back(jp);
    }
    j["pieces"] = pieces;
    return j;
}

}  // namespace

std::string emit_problem(const ProblemDocument& doc) {
    Json j;
    j["version"] = "1";
    j["C"] = cone_json(doc.inst.C());
    j["D"] = cone_json(doc.inst.D());
    j["f"] = map_json(doc.inst.f, doc.f_builtin);
    j["g"] = map_json(doc.inst.g, "");
    j["options"] = doc.options.is_null() ? Json::object() : doc.options;
    return j.dump(2) + "\n";
}

Json upper_set_json(const UpperSet& A) {
    Json j;
    switch (A.tag()) {
        case UpperSet::Tag::EMPTY: j["tag"] = "EMPTY"; return j;
        case UpperSet::Tag::FULL: j["tag"] = "FULL"; return j;
        default: break;
    }
    j["tag"] = "PROPER";
    Json vs = Json::array(), rs = Json::array(), hs = Json::array();
    for (const auto& v : A.vertices()) vs.push_back(vec_json(v));
    for (const auto& r : A.rays()) rs.push_back(vec_json(r));
    for (const auto& h : A.halfspaces()) {
        Json jh;
        jh["normal"] = vec_json(h.normal);
        jh["offset"] = format_number(h.offset);
        hs.push_back(jh);
    }
    j["vertices"] = vs;
    j["rays"] = rs;
    j["halfspaces"] = hs;
    return j;
}

Json strong_result_json(const StrongDualityResult& r) {
    Json j;
    j["p"] = upper_set_json(r.report.p);
    j["d"] = upper_set_json(r.report.d);
    Json table = Json::array();
    for (const auto& row : r.report.table) {
        Json jr;
        jr["zstar"] = vec_json(row.zstar);
        jr["p_z"] = row.p_z.str();
        jr["d_z"] = row.d_z.str();
        jr["ystar"] = vec_json(row.ystar);
        table.push_back(jr);
    }
    j["table"] = table;
    j["slater"] = r.report.slater;
    j["certified"] = r.report.certified;
    j["gap_certificate"] = format_number(r.report.gap_certificate);
    j["note"] = r.report.note;
    Json delta = Json::array();
    for (const auto& ent : r.delta.entries) {
        Json je;
        je["ystar"] = vec_json(ent.pair.ystar);
        je["zstar"] = vec_json(ent.pair.zstar);
        je["h_offset"] = format_number(ent.h_offset);
        je["p_scalar"] = format_number(ent.scalar_value);
        delta.push_back(je);
    }
    j["delta"] = delta;
    j["delta_complete"] = r.delta.complete;
    Json tol;
    tol["geometry"] = format_number(kGeomTol);
    tol["lp"] = format_number(kLpTol);
    tol["duality"] = format_number(kDualTol);
    tol["slater_margin"] = format_number(kSlaterMargin);
    j["tolerances"] = tol;
    return j;
}

Json saddle_verdict_json(const SaddleVerdict& v) {
    Json j;
    j["condition_a"] = v.condition_a;
    j["condition_b"] = v.condition_b;
    j["lemma_eq"] = v.lemma_eq;
    j["saddle"] = v.saddle();
    j["full"] = v.is_full;
    return j;
}

}  // namespace setlat
