#include "conflie/json_io.hpp"

#include "conflie/errors.hpp"

namespace conflie {

Json scalars_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(scalar_to_string(x));
    return arr;
}

Vec scalars_from_json(const Json& j) {
    Vec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.push_back(Scalar(x.get<long>()));
        else
            v.push_back(scalar_from_string(x.get<std::string>()));
    }
    return v;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["schema"] = "1";
    j["kind"] = inst.kind;
    j["seed"] = inst.seed;
    Json pts = Json::array();
    for (std::size_t i = 0; i < inst.panel.config.size(); ++i) {
        Json p;
        p["label"] = inst.panel.config.labels[i];
        if (inst.panel.config.coords) p["coords"] = scalars_to_json((*inst.panel.config.coords)[i]);
        pts.push_back(p);
    }
    j["points"] = pts;
    Json rows = Json::array();
    for (std::size_t i = 0; i < inst.panel.basis.dim(); ++i)
        rows.push_back(scalars_to_json(inst.panel.basis.basis_vector(i)));
    j["panel"] = rows;
    return j;
}

Panel panel_from_json(const Json& j) {
    if (!j.contains("points")) throw precondition_error("input lacks 'points'");
    Configuration cfg;
    bool any_coords = false;
    for (const auto& p : j["points"]) {
        cfg.labels.push_back(p.at("label").get<std::string>());
        if (p.contains("coords")) any_coords = true;
    }
    if (any_coords) {
        cfg.coords = std::vector<Vec>();
        for (const auto& p : j["points"]) cfg.coords->push_back(scalars_from_json(p.at("coords")));
    }
    const std::size_t d = cfg.size();
    if (j.contains("panel")) {
        std::vector<Vec> rows;
        for (const auto& r : j["panel"]) {
            rows.push_back(scalars_from_json(r));
            if (rows.back().size() != d) throw precondition_error("panel row length != d");
        }
        return Panel(cfg, Subspace::span_of(rows, d));
    }
    if (j.contains("pencil")) {
        const Json& pj = j["pencil"];
        std::vector<Vec> rows;
        for (const auto& r : pj.at("sections")) {
            rows.push_back(scalars_from_json(r));
            if (rows.back().size() != d) throw precondition_error("section length != d");
        }
        return panel_from_pencil(cfg, Mat::from_rows(rows, d),
                                 pj.at("sigma_prime").get<std::size_t>());
    }
    throw precondition_error("input needs 'panel' or 'pencil'");
}

Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (auto x : p) arr.push_back(x);
    return arr;
}

Json analysis_to_json(const Panel& p, const Analysis& a) {
    Json j;
    j["schema"] = "1";
    j["d"] = p.degree();
    j["r"] = p.r();
    j["length"] = a.filt.length();
    j["hilbert"] = a.filt.hilbert;
    j["d_prime"] = a.red.d_prime();
    Json blocks = Json::array();
    for (const auto& b : a.red.blocks) {
        Json labels = Json::array();
        for (auto z : b) labels.push_back(p.config.labels[z]);
        blocks.push_back(labels);
    }
    j["blocks"] = blocks;
    Json dims = Json::array();
    for (const auto& s : a.graded.summands) dims.push_back(s.dim());
    j["summand_dims"] = dims;
    j["algebra_dim"] = a.lie.algebra_dim;
    j["center_dim"] = a.lie.center_dim;
    Json wblocks = Json::array();
    for (const auto& b : pull_back_blocks(a.lie.blocks, a.red)) {
        Json labels = Json::array();
        for (auto z : b) labels.push_back(p.config.labels[z]);
        wblocks.push_back(labels);
    }
    j["weight_blocks"] = wblocks;
    j["block_dims"] = a.lie.block_dims;
    j["class"] = to_string(a.lie.classification);
    j["torelli_kernel_dims"] = a.torelli.kernel_dims;
    if (a.torelli.tau)
        j["torelli_index"] = *a.torelli.tau;
    else
        j["torelli_index"] = nullptr;
    j["strong_torelli"] = a.torelli.strong;
    j["kernel_dim_total"] = a.torelli.total_kernel_dim;
    return j;
}

Json equation_set_to_json(const EquationSet& es, const std::vector<std::string>& point_labels) {
    Json j;
    j["vars"] = es.vars;
    Json polys = Json::array();
    for (const auto& p : es.polys) {
        Json terms = Json::array();
        for (const auto& [e, c] : p.terms()) {
            Json t;
            t["coef"] = scalar_to_string(c);
            t["exps"] = e;
            terms.push_back(t);
        }
        polys.push_back(Json{{"terms", terms}});
    }
    j["polys"] = polys;
    Json assign = Json::array();
    for (std::size_t i = 0; i < es.vars.size(); ++i)
        assign.push_back(scalars_to_json(es.assignment.row(i)));
    j["assignment"] = assign;
    j["points"] = point_labels;
    Json cert = Json::array();
    for (const auto& row : es.certificate) cert.push_back(scalars_to_json(row));
    j["certificate"] = cert;
    if (!es.note.empty()) j["note"] = es.note;
    return j;
}

EquationSet equation_set_from_json(const Json& j) {
    EquationSet es;
    for (const auto& v : j.at("vars")) es.vars.push_back(v.get<std::string>());
    const std::size_t nv = es.vars.size();
    for (const auto& pj : j.at("polys")) {
        Poly p(nv);
        for (const auto& t : pj.at("terms")) {
            std::vector<unsigned> e = t.at("exps").get<std::vector<unsigned>>();
            p.add_term(e, scalar_from_string(t.at("coef").get<std::string>()));
        }
        es.polys.push_back(std::move(p));
    }
    std::vector<Vec> rows;
    for (const auto& r : j.at("assignment")) rows.push_back(scalars_from_json(r));
    if (rows.size() != nv) throw precondition_error("assignment rows != vars");
    es.assignment = Mat::from_rows(rows, rows.empty() ? 0 : rows[0].size());
    return es;
}

Json symfun_to_json(const SymFunPoly& f) {
    Json j;
    j["n"] = f.n;
    Json terms = Json::array();
    for (const auto& [lambda, poly] : f.terms) {
        Json t;
        t["lambda"] = partition_to_json(lambda);
        t["poly_q"] = poly;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

}  // namespace conflie
