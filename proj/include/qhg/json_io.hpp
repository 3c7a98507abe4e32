#pragma once

// JSON serialization: instance specs in, reports and structure dumps out.
// Every scalar is written as exact rational strings {"re": "n/d", "im": "n/d"},
// so a dump can be reloaded (or diffed) without any loss.

#include <json.hpp>

#include <qhg/suite.hpp>

namespace qhg {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qhg/1";

inline json scalar_json(const Scalar& s) {
    return json{{"re", rat_str(s.re)}, {"im", rat_str(s.im)}};
}

inline Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar(parse_rat(j.get<std::string>()));
    if (!j.is_object()) throw std::invalid_argument("scalar: expected object or string");
    Scalar s;
    if (j.contains("re")) s.re = parse_rat(j.at("re").get<std::string>());
    if (j.contains("im")) s.im = parse_rat(j.at("im").get<std::string>());
    return s;
}

inline json vec_json(const Vec& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(scalar_json(v[i]));
    return out;
}

inline Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector: expected array");
    Vec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = scalar_from_json(j.at(static_cast<size_t>(i)));
    return v;
}

inline json mat_json(const Mat& m) {
    json out = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(scalar_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(row.at(static_cast<size_t>(c)));
    }
    return m;
}

// ---------------------------------------------------------------------------
// instance specs

inline GroupPtr group_from_json(const json& j) {
    if (j.is_string()) return catalog(j.get<std::string>()).group;
    if (!j.is_object()) throw std::invalid_argument("group: expected object or catalog name");
    if (j.contains("catalog")) return catalog(j.at("catalog").get<std::string>()).group;
    if (!j.contains("table")) throw std::invalid_argument("group: need \"catalog\" or \"table\"");
    const json& t = j.at("table");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) table.push_back(row.get<std::vector<int>>());
    return group_from_table(std::move(table),
                            j.value("name", std::string("custom")));
}

inline InstanceSpec instance_spec_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance spec: expected object");
    if (j.value("schema", std::string(kSchema)) != kSchema)
        throw std::invalid_argument("instance spec: unsupported schema");
    InstanceSpec spec;
    if (!j.contains("group")) throw std::invalid_argument("instance spec: missing \"group\"");
    spec.group = group_from_json(j.at("group"));
    if (!j.contains("subgroup")) throw std::invalid_argument("instance spec: missing \"subgroup\"");
    const json& sg = j.at("subgroup");
    if (sg.is_string()) {
        const json& gj = j.at("group");
        const std::string gname =
            gj.is_string() ? gj.get<std::string>() : gj.value("catalog", std::string());
        if (gname.empty())
            throw std::invalid_argument("instance spec: named subgroup needs a catalog group");
        const CatalogEntry entry = catalog(gname);
        const auto it = entry.subgroups.find(sg.get<std::string>());
        if (it == entry.subgroups.end())
            throw std::invalid_argument("instance spec: unknown subgroup name " +
                                        sg.get<std::string>());
        spec.subgroup = it->second;
    } else {
        spec.subgroup = sg.get<std::vector<int>>();
        std::sort(spec.subgroup.begin(), spec.subgroup.end());
    }
    spec.weight = parse_rat(j.value("weight", std::string("1")));
    if (sgn(spec.weight) <= 0)
        throw std::invalid_argument("instance spec: weight must be positive");
    spec.with_duals = j.value("with_duals", true);
    if (j.contains("chain"))
        for (const auto& c : j.at("chain")) {
            std::vector<int> sub = c.get<std::vector<int>>();
            std::sort(sub.begin(), sub.end());
            spec.chain.push_back(std::move(sub));
        }
    spec.name = j.value("name", std::string());
    if (spec.name.empty()) {
        const json& gj = j.at("group");
        spec.name = gj.is_string() ? gj.get<std::string>()
                                   : gj.value("catalog", gj.value("name", std::string("custom")));
        spec.name += "/";
        spec.name += sg.is_string() ? sg.get<std::string>()
                                    : "K" + std::to_string(spec.subgroup.size());
    }
    return spec;
}

// ---------------------------------------------------------------------------
// algebra dump / load (the unit is re-derived on load, not trusted from disk)

inline json algebra_json(const HopfStarAlgebra& A) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "hopf_star_algebra";
    out["name"] = A.name;
    out["dim"] = A.dim;
    out["labels"] = A.labels;
    json mult = json::array();
    for (int i = 0; i < A.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < A.dim; ++j)
            row.push_back(vec_json(A.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        mult.push_back(std::move(row));
    }
    out["mult"] = std::move(mult);
    json comult = json::array();
    for (int i = 0; i < A.dim; ++i) comult.push_back(mat_json(A.comult[static_cast<size_t>(i)]));
    out["comult"] = std::move(comult);
    out["counit"] = vec_json(A.counit);
    out["antipode"] = mat_json(A.antipode);
    out["star"] = mat_json(A.star);
    out["phi"] = vec_json(A.phi);
    out["psi"] = vec_json(A.psi);
    return out;
}

inline Vec solve_unit(const HopfStarAlgebra& A) {
    const int d = A.dim;
    Mat m(d * d, d);
    Vec rhs(d * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i)
                m.at(j * d + k, i) = A.mult[static_cast<size_t>(i)][static_cast<size_t>(j)][k];
            rhs[j * d + k] = j == k ? Scalar(1) : Scalar(0);
        }
    auto u = solve(m, rhs);
    if (!u) throw std::invalid_argument("algebra load: no two-sided unit exists");
    return *u;
}

inline HopfStarAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || j.value("kind", std::string()) != "hopf_star_algebra")
        throw std::invalid_argument("algebra load: not a hopf_star_algebra dump");
    if (j.value("schema", std::string()) != kSchema)
        throw std::invalid_argument("algebra load: unsupported schema");
    HopfStarAlgebra A;
    A.dim = j.at("dim").get<int>();
    if (A.dim <= 0) throw std::invalid_argument("algebra load: dim must be positive");
    A.name = j.value("name", std::string("loaded"));
    A.labels = j.value("labels", std::vector<std::string>());
    if (A.labels.empty())
        for (int i = 0; i < A.dim; ++i) A.labels.push_back("e" + std::to_string(i));
    if (static_cast<int>(A.labels.size()) != A.dim)
        throw std::invalid_argument("algebra load: labels length mismatch");
    const json& mult = j.at("mult");
    if (static_cast<int>(mult.size()) != A.dim)
        throw std::invalid_argument("algebra load: mult shape mismatch");
    A.mult.resize(static_cast<size_t>(A.dim));
    for (int i = 0; i < A.dim; ++i) {
        const json& row = mult.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != A.dim)
            throw std::invalid_argument("algebra load: mult shape mismatch");
        for (int k = 0; k < A.dim; ++k) {
            Vec v = vec_from_json(row.at(static_cast<size_t>(k)));
            if (v.dim() != A.dim) throw std::invalid_argument("algebra load: mult shape mismatch");
            A.mult[static_cast<size_t>(i)].push_back(std::move(v));
        }
    }
    const json& comult = j.at("comult");
    if (static_cast<int>(comult.size()) != A.dim)
        throw std::invalid_argument("algebra load: comult shape mismatch");
    for (int i = 0; i < A.dim; ++i) {
        Mat m = mat_from_json(comult.at(static_cast<size_t>(i)));
        if (m.rows != A.dim || m.cols != A.dim)
            throw std::invalid_argument("algebra load: comult shape mismatch");
        A.comult.push_back(std::move(m));
    }
    A.counit = vec_from_json(j.at("counit"));
    A.antipode = mat_from_json(j.at("antipode"));
    A.star = mat_from_json(j.at("star"));
    A.phi = vec_from_json(j.at("phi"));
    A.psi = vec_from_json(j.at("psi"));
    if (A.counit.dim() != A.dim || A.phi.dim() != A.dim || A.psi.dim() != A.dim ||
        A.antipode.rows != A.dim || A.antipode.cols != A.dim || A.star.rows != A.dim ||
        A.star.cols != A.dim)
        throw std::invalid_argument("algebra load: component shape mismatch");
    A.unit = solve_unit(A);
    return A;
}

// ---------------------------------------------------------------------------
// reports

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Finding: return "finding";
    }
    return "unknown";
}

inline json report_json(const VerificationReport& r) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "verification_report";
    out["instance"] = r.instance;
    json summary;
    summary["records"] = r.records.size();
    summary["pass"] = r.count(CheckStatus::Pass);
    summary["fail"] = r.count(CheckStatus::Fail);
    summary["skipped"] = r.count(CheckStatus::Skipped);
    summary["finding"] = r.count(CheckStatus::Finding);
    summary["ok"] = r.ok();
    out["summary"] = std::move(summary);
    json records = json::array();
    for (const auto& [target, rec] : r.records) {
        json e;
        e["target"] = target;
        e["id"] = rec.id;
        e["status"] = status_str(rec.status);
        if (!rec.detail.empty()) e["detail"] = rec.detail;
        if (!rec.witness.empty()) {
            json w;
            w["description"] = rec.witness.description;
            json fields = json::array();
            for (const auto& [k, v] : rec.witness.fields)
                fields.push_back(json{{"key", k}, {"value", v}});
            w["fields"] = std::move(fields);
            e["witness"] = std::move(w);
        }
        records.push_back(std::move(e));
    }
    out["records"] = std::move(records);
    return out;
}

// ---------------------------------------------------------------------------
// structure dumps for the CLI

inline json hecke_json(const GroupPtr& g, const std::vector<int>& K) {
    const HeckeData H = build_hecke(g, K);
    json out;
    out["schema"] = kSchema;
    out["kind"] = "double_coset_algebra";
    out["group_order"] = g->order;
    out["subgroup"] = K;
    out["classes"] = H.classes;
    json pis = json::array();
    for (const auto& v : H.pi_class) pis.push_back(vec_json(v));
    out["pi_class"] = std::move(pis);
    return out;
}

inline json discrete_json(const HopfStarAlgebra& A, const DiscreteData& D) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "discrete_part";
    out["ambient"] = A.name;
    out["h"] = vec_json(D.h);
    out["phi0"] = vec_json(D.phi0);
    out["c1_dim"] = D.c1.dim;
    json basis = json::array();
    for (int i = 0; i < D.c1.dim; ++i) basis.push_back(vec_json(D.c1.basis_vec(i)));
    out["c1_basis"] = std::move(basis);
    out["expectation_right"] = mat_json(D.E);
    out["expectation_left"] = mat_json(D.Ep);
    out["coproduct_restricts"] = D.ranges_ok;
    if (D.ranges_ok) out["algebra"] = algebra_json(D.alg1);
    return out;
}

inline json compact_json(const HopfStarAlgebra& A, const CompactHypergroup& H) {
    json out;
    out["schema"] = kSchema;
    out["kind"] = "compact_part";
    out["ambient"] = A.name;
    out["h"] = vec_json(H.h);
    out["dim"] = H.basis.dim;
    json basis = json::array();
    for (int i = 0; i < H.basis.dim; ++i) basis.push_back(vec_json(H.basis.basis_vec(i)));
    out["basis"] = std::move(basis);
    out["algebra"] = algebra_json(H.alg0);
    return out;
}

}  // namespace qhg
