#include "ospchar/json_io.hpp"

namespace ospchar {

namespace {

Json rat_list(const std::vector<Rat>& v) {
    Json arr = Json::array();
    for (const Rat& r : v) arr.push_back(r.to_string());
    return arr;
}

Json index_list(const std::vector<Gi>& v) {
    Json arr = Json::array();
    for (const Gi& g : v) arr.push_back(g.to_string());
    return arr;
}

} // namespace

Json signature_json(const Signature& sig) {
    Json j;
    j["m"] = sig.m;
    j["n"] = sig.n;
    return j;
}

Json weight_json(const Weight& w) {
    Json j;
    j["even"] = rat_list(w.even);
    j["odd"] = rat_list(w.odd);
    j["text"] = format_weight(w);
    return j;
}

Json roots_json(const CharRoots& r) {
    Json j;
    j["alpha_even"] = rat_list(r.even);
    j["alpha_odd"] = rat_list(r.odd);
    return j;
}

Json degeneracy_json(const std::vector<std::pair<Gi, Gi>>& pairs) {
    Json arr = Json::array();
    for (const auto& [a, b] : pairs) arr.push_back(Json::array({a.to_string(), b.to_string()}));
    return arr;
}

Json branch_child_json(const BranchContext& ctx) {
    Json j;
    j["weight"] = weight_json(ctx.child_weight);
    j["I0"] = index_list(ctx.I0);
    j["I1"] = index_list(ctx.I1);
    j["I1bar"] = index_list(ctx.I1bar);
    Json itilde = Json::array();
    for (const CIdx& q : ctx.Itilde) itilde.push_back(q.to_string());
    j["Itilde"] = itilde;
    return j;
}

Json invariant_table_json(const InvariantTable& t) {
    Json j;
    Json c = Json::object();
    for (const auto& [q, v] : t.C) c[q.to_string()] = v.to_string();
    j["C"] = c;
    Json gamma = Json::object();
    for (const auto& [p, v] : t.gamma) gamma[p.to_string()] = v.to_string();
    j["gamma"] = gamma;
    Json gamma_s = Json::object();
    for (const auto& [key, v] : t.gamma_s) gamma_s[key.first.to_string()][key.second.to_string()] = v.to_string();
    j["gamma_s"] = gamma_s;
    Json mu = Json::object();
    for (const auto& [p, v] : t.mu) mu[p.to_string()] = v.to_string();
    j["mu"] = mu;
    Json omega = Json::object();
    for (const auto& [key, v] : t.omega) omega[key.first.to_string()][key.second.to_string()] = v.to_string();
    j["omega"] = omega;
    return j;
}

Json rat_matrix_json(const RatMat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json ext_matrix_json(const ExtMat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json check_report_json(const CheckReport& r) {
    Json j;
    j["parent_weight"] = weight_json(r.parent_weight);
    j["child_weight"] = weight_json(r.child_weight);
    Json items = Json::array();
    for (const CheckItem& it : r.items) {
        Json e;
        e["name"] = it.name;
        switch (it.status) {
        case CheckStatus::Match: e["status"] = "match"; break;
        case CheckStatus::Mismatch: e["status"] = "mismatch"; break;
        case CheckStatus::Skipped: e["status"] = "skipped"; break;
        }
        e["note"] = it.note;
        items.push_back(std::move(e));
    }
    j["items"] = items;
    j["summary"] = r.summary();
    j["ok"] = r.all_ok();
    return j;
}

Json suite_json(const std::vector<SuiteCheck>& checks) {
    Json arr = Json::array();
    for (const SuiteCheck& c : checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ospchar
