#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "wallx/base.hpp"
#include "wallx/crystal.hpp"
#include "wallx/engine.hpp"
#include "wallx/homalg.hpp"
#include "wallx/quiver.hpp"
#include "wallx/rootlat.hpp"
#include "wallx/series.hpp"
#include "wallx/toric.hpp"

namespace wallx {

using Json = nlohmann::ordered_json;

inline Json geometry_to_json(const Geometry& g) {
    Json sig = Json::array();
    for (const auto& e : g.sigma) sig.push_back(Json{{"x2", e.x2}, {"y", e.y}});
    return Json{{"N0", g.N0}, {"N1", g.N1}, {"sigma", sig}};
}

inline Geometry geometry_from_json(const Json& j) {
    std::vector<SigmaEntry> sig;
    for (const auto& e : j.at("sigma")) sig.push_back({e.at("x2").get<int>(), e.at("y").get<int>()});
    return parse_geometry(j.at("N0").get<int>(), j.at("N1").get<int>(), sig);
}

// Matches the printed two-row matrix layout: top row eps=1, bottom row eps=0.
inline Json divisor_to_json(const Divisor& d) {
    return Json{{"row1", d.row1}, {"row0", d.row0}};
}

inline Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows)
        arrows.push_back(Json{{"id", a.id}, {"from", a.from}, {"to", a.to}});
    Json pot = Json::array();
    for (const auto& t : q.potential) {
        Json cyc = Json::array();
        for (int a : t.cycle) cyc.push_back(q.arrows[a].id);
        pot.push_back(Json{{"sign", t.sign}, {"cycle", cyc}});
    }
    return Json{{"N", q.N}, {"Ir", q.ir}, {"arrows", arrows}, {"potential", pot}};
}

inline Json series_to_json(const Series& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"exp", e}, {"coeff", c.str()}});
    return Json{{"vars", s.nvars()}, {"degree", s.cap()}, {"terms", terms}};
}

inline Series series_from_json(const Json& j, std::vector<int> weights = {}) {
    const int nvars = j.at("vars").get<int>();
    const int cap = j.at("degree").get<int>();
    Series s = weights.empty() ? Series(nvars, cap) : Series(nvars, cap, std::move(weights));
    for (const auto& t : j.at("terms")) {
        Series::Exp e = t.at("exp").get<std::vector<int>>();
        s.add_term(e, Int(t.at("coeff").get<std::string>()));
    }
    return s;
}

inline Json graded_table_to_json(const GradedTable& t) {
    Json rows = Json::array();
    for (const auto& [key, c] : t)
        rows.push_back(Json{{"n", key.first}, {"beta", key.second}, {"coeff", c.str()}});
    return Json{{"table", rows}};
}

inline Json chamber_path_to_json(const ChamberPath& p) {
    Json xs = Json::array();
    for (const auto& x : p.crossings) {
        xs.push_back(Json{{"alpha", x.root.v},
                          {"c", rat_to_string(x.c)},
                          {"k", x.simple},
                          {"family", x.root.family == Root::PlusFamily ? "alpha+n*delta"
                                                                       : "n*delta-alpha"},
                          {"a", x.root.a},
                          {"b", x.root.b},
                          {"n", x.root.n}});
    }
    return Json{{"side", p.negative_side ? "sum<0" : "sum>0"}, {"crossings", xs}};
}

inline Json zeta_to_json(const Zeta& z) {
    Json out = Json::array();
    for (const auto& r : z) out.push_back(rat_to_string(r));
    return out;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Mat mat_from_json(const Json& j, int rows, int cols) {
    Mat m(rows, cols);
    if ((int)j.size() != rows) fail("BadShape", "matrix row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) fail("BadShape", "matrix column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(i, c) = parse_rat(j[i][c].get<std::string>());
    }
    return m;
}

inline Json rep_to_json(const Quiver& q, const Rep& r) {
    Json mats = Json::object();
    for (size_t a = 0; a < q.arrows.size(); ++a) mats[q.arrows[a].id] = mat_to_json(r.mat[a]);
    Json j{{"dim", r.dim}, {"framed", r.framed}, {"matrices", mats}};
    if (r.framed) {
        j["dim_inf"] = r.dim_inf;
        j["framing"] = mat_to_json(r.framing);
    }
    return j;
}

inline Rep rep_from_json(const Quiver& q, const Json& j) {
    const auto dims = j.at("dim").get<std::vector<int>>();
    const bool framed = j.value("framed", false);
    const int dim_inf = framed ? j.value("dim_inf", 1) : 0;
    Rep r = rep_zero(q, dims, framed, dim_inf);
    const auto& mats = j.at("matrices");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& id = q.arrows[a].id;
        if (mats.contains(id))
            r.mat[a] = mat_from_json(mats.at(id), dims[q.arrows[a].to], dims[q.arrows[a].from]);
    }
    if (framed && j.contains("framing"))
        r.framing = mat_from_json(j.at("framing"), dims.empty() ? 0 : dims[0], dim_inf);
    return r;
}

inline Json provenance_to_json(const Provenance& p) {
    return Json{{"geometry_hash", p.geometry_hash},
                {"mode", p.mode},
                {"flavor", p.flavor},
                {"beta_orientation", p.beta_orientation},
                {"dtpt_identity_used", p.dtpt_identity_used}};
}

}  // namespace wallx
