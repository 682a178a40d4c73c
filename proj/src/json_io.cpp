#include "json_io.hpp"

namespace grassfold {

Json tableau_to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

Tableau tableau_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorCode::Parse, "tableau must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) rows.push_back(row.get<std::vector<int>>());
    return Tableau(static_cast<int>(rows.size()), std::move(rows));
}

static Json vertex_to_json(const Vertex& v) {
    Json out;
    out["id"] = v.id;
    if (v.pos)
        out["pos"] = Json::array({v.pos->first, v.pos->second});
    else
        out["pos"] = nullptr;
    out["frozen"] = v.frozen;
    return out;
}

static Json arrows_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& [u, v, m] : q.arrows()) arrows.push_back(Json::array({u, v, m}));
    return arrows;
}

Json quiver_to_json(const Quiver& q) {
    Json out;
    Json vertices = Json::array();
    for (const auto& v : q.vertices()) vertices.push_back(vertex_to_json(v));
    out["vertices"] = std::move(vertices);
    out["arrows"] = arrows_to_json(q);
    return out;
}

Json seed_to_json(const Seed& s) {
    Json out;
    out["k"] = s.k();
    out["n"] = s.n();
    Json vertices = Json::array();
    for (const auto& v : s.quiver().vertices()) {
        Json jv = vertex_to_json(v);
        jv["label"] = tableau_to_json(s.label(v.id));
        vertices.push_back(std::move(jv));
    }
    out["vertices"] = std::move(vertices);
    out["arrows"] = arrows_to_json(s.quiver());
    return out;
}

Seed seed_from_json(const Json& j) {
    try {
        int k = j.at("k").get<int>();
        int n = j.at("n").get<int>();
        std::vector<Vertex> vertices;
        std::map<int, Tableau> labels;
        for (const auto& jv : j.at("vertices")) {
            Vertex v;
            v.id = jv.at("id").get<int>();
            if (!jv.at("pos").is_null()) {
                auto p = jv.at("pos").get<std::vector<int>>();
                if (p.size() != 2) fail(ErrorCode::Parse, "pos must be a pair");
                v.pos = GridPos{p[0], p[1]};
            }
            v.frozen = jv.at("frozen").get<bool>();
            labels.emplace(v.id, tableau_from_json(jv.at("label")));
            vertices.push_back(std::move(v));
        }
        Quiver q(std::move(vertices));
        for (const auto& ja : j.at("arrows")) {
            auto a = ja.get<std::vector<int>>();
            if (a.size() != 3) fail(ErrorCode::Parse, "arrow must be [u, v, m]");
            q.add_arrows(a[0], a[1], a[2]);
        }
        return Seed(k, n, std::move(q), std::move(labels));
    } catch (const Json::exception& e) {
        fail(ErrorCode::Parse, std::string("invalid seed JSON: ") + e.what());
    }
}

Json record_to_json(const ExchangeRecord& rec) {
    Json out;
    out["vertex"] = rec.vertex;
    out["old_label"] = tableau_to_json(rec.old_label);
    out["new_label"] = tableau_to_json(rec.new_label);
    Json in = Json::array(), outs = Json::array();
    for (const auto& t : rec.in_labels) in.push_back(tableau_to_json(t));
    for (const auto& t : rec.out_labels) outs.push_back(tableau_to_json(t));
    out["in_labels"] = std::move(in);
    out["out_labels"] = std::move(outs);
    return out;
}

Json equation_to_json(const EquationForm& eq) {
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& [sym, e] : eq.exponents) {
        if (e > 0)
            lhs.push_back(Json::array({sym.indices, e}));
        else
            rhs.push_back(Json::array({sym.indices, -e}));
    }
    Json out;
    out["lhs"] = std::move(lhs);
    out["rhs"] = std::move(rhs);
    return out;
}

Json schedule_to_json(const Schedule& sched) {
    Json runs = Json::array();
    for (const auto& r : sched.runs) runs.push_back(Json::array({r.column, r.target}));
    Json out;
    out["vertex_ids"] = sched.vertex_ids;
    out["runs"] = std::move(runs);
    return out;
}

std::string seed_to_dot(const Seed& s) {
    std::map<int, std::string> labels;
    for (const auto& [id, t] : s.labels()) {
        std::string text;
        if (t.is_rectangular() && t.columns() == 1) {
            for (int e : t.column_entries()) text += (text.empty() ? "" : ",") + std::to_string(e);
        } else {
            text = t.str();
        }
        labels[id] = std::to_string(id) + ": " + text;
    }
    return s.quiver().to_dot(labels);
}

} // namespace grassfold
