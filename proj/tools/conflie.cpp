// Command-line front end: JSON in, JSON out, everything seeded and exact.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "conflie/analysis.hpp"
#include "conflie/equations.hpp"
#include "conflie/json_io.hpp"
#include "conflie/springer.hpp"

using namespace conflie;

namespace {

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// Parses "a/b,c,d/e,..." as values at the points of the input panel.
FnVec parse_t(const std::string& text, std::size_t d) {
    FnVec out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(scalar_from_string(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (out.size() != d) throw precondition_error("--t needs one value per point");
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<std::size_t> parts;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(std::stoul(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return normalized(std::move(parts));
}

struct Loaded {
    Panel panel;
    Analysis analysis;
    std::string input_hash;
};

// FNV-1a over the raw input bytes; identifies the run record.
std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Loaded load(const std::string& path) {
    Panel p = panel_from_json(read_json(path));
    Analysis a = analyze(p);
    return {std::move(p), std::move(a), file_hash(path)};
}

Json run_record(const Loaded& l, const std::string& command) {
    Json j;
    j["schema"] = "1";
    j["command"] = command;
    j["input_hash"] = l.input_hash;
    return j;
}

// A random non-constant panel element of the reduced model.
FnVec sample_t(const Model& m, std::uint64_t seed) {
    Rng rng(seed);
    Subspace constants = Subspace::span_of({FnVec(m.n, Scalar(1))}, m.n);
    while (true) {
        FnVec t(m.n, Scalar(0));
        for (std::size_t i = 0; i < m.panel.dim(); ++i) {
            long c = rng.integer(-9, 9);
            if (c == 0) continue;
            FnVec b = m.panel.basis_vector(i);
            for (std::size_t z = 0; z < m.n; ++z) t[z] += Scalar(c) * b[z];
        }
        if (!constants.contains(t)) return t;
    }
}

FnVec choose_t(const Loaded& l, const std::string& t_arg, std::uint64_t seed, bool ambient) {
    const Model& m = ambient ? l.analysis.ambient : l.analysis.reduced;
    if (!t_arg.empty()) {
        FnVec on_z = parse_t(t_arg, l.panel.degree());
        if (!l.analysis.ambient.panel.contains(on_z))
            throw precondition_error("--t must lie in the panel");
        return ambient ? on_z : restrict_to_blocks(on_z, l.analysis.red);
    }
    if (ambient) {
        // sample on the reduced model, lift constant-on-class values back
        FnVec reduced_t = sample_t(l.analysis.reduced, seed);
        FnVec out(l.panel.degree());
        for (std::size_t b = 0; b < l.analysis.red.blocks.size(); ++b)
            for (std::size_t z : l.analysis.red.blocks[b]) out[z] = reduced_t[b];
        return out;
    }
    return sample_t(m, seed);
}

Json mult_matrix_json(const std::vector<std::vector<std::size_t>>& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

int cmd_analyze(const std::string& input, bool pretty) {
    Loaded l = load(input);
    Json j = run_record(l, "analyze");
    j.update(analysis_to_json(l.panel, l.analysis));
    emit(j, pretty);
    return 0;
}

int cmd_jordan(const std::string& input, const std::string& t_arg, std::uint64_t seed,
               std::size_t samples, bool pretty) {
    Loaded l = load(input);
    FnVec t = choose_t(l, t_arg, seed, false);
    FnVec t_ambient = choose_t(l, t_arg, seed, true);
    GradedJordan plus = graded_jordan_plus(t, l.analysis.reduced);
    MinusJordan minus = graded_jordan_minus(t, l.analysis.reduced);
    if (!reflection_identity_holds(plus.matrix, minus.mu_prime))
        throw invariant_violation("reflection identity between the two multiplicity matrices");
    Bigrading bg = bigrading(t, l.analysis.reduced);
    Truncation tr = truncate(t_ambient, l.analysis.ambient);

    Json j = run_record(l, "jordan");
    j["seed"] = seed;
    j["t"] = scalars_to_json(t_ambient);
    j["partition"] = partition_to_json(plus.partition.lambda);
    Json graded = Json::array();
    for (const auto& lam : plus.partition.per_level) graded.push_back(partition_to_json(lam));
    j["graded"] = graded;
    j["mult_matrix"] = mult_matrix_json(plus.matrix.mu);
    j["mult_matrix_minus"] = mult_matrix_json(minus.mu_prime);
    Json bgj = Json::array();
    for (const auto& row : bg.dim_pn) bgj.push_back(row);
    j["bigrading"] = bgj;
    j["weight_dims"] = bg.weight_dims;
    j["ambient_partition"] = partition_to_json(tr.lambda);
    j["truncated"] = partition_to_json(tr.lambda_hat);
    if (samples > 0) {
        StrataReport rep = sample_strata(l.analysis.reduced, samples, seed);
        Json obs = Json::array();
        for (const auto& s : rep.observed) {
            Json o;
            o["partition"] = partition_to_json(s.partition.lambda);
            o["mult_matrix"] = mult_matrix_json(s.matrix.mu);
            o["count"] = s.count;
            obs.push_back(o);
        }
        j["strata"] = obs;
        j["generic_index"] = rep.generic_index;
        j["generic_ambiguous"] = rep.ambiguous;
        j["generic_forgotten"] = partition_to_json(rep.generic_forgotten);
        Json fs = Json::array();
        for (const auto& fp : rep.forgotten_set) fs.push_back(partition_to_json(fp));
        j["forgotten_partitions"] = fs;
    }
    emit(j, pretty);
    return 0;
}

int cmd_equations(const std::string& input, const std::string& kind, const std::string& t_arg,
                  std::uint64_t seed, unsigned degree_cap, bool pretty) {
    Loaded l = load(input);
    std::vector<std::string> labels_reduced;
    for (const auto& b : l.analysis.red.blocks) labels_reduced.push_back(l.panel.config.labels[b[0]]);

    Json j = run_record(l, "equations");
    j["kind"] = kind;
    Json sets = Json::object();
    if (kind == "monomial") {
        FnVec t = choose_t(l, t_arg, seed, false);
        Sl2Basis b = sl2_basis(t, l.analysis.reduced);
        MonomialRelations rel = monomial_relations(b, degree_cap);
        sets["affine"] = equation_set_to_json(rel.affine, labels_reduced);
        sets["homogeneous"] = equation_set_to_json(rel.homogeneous, labels_reduced);
        // every nonzero multiplicity contributes its rank-bounded forms
        GradedJordan gj = graded_jordan_plus(t, l.analysis.reduced);
        for (std::size_t q = 0; q < gj.matrix.levels; ++q)
            for (std::size_t p = q; p < gj.matrix.levels; ++p)
                if (gj.matrix.mu[q][p] != 0) {
                    EquationSet es = rank_bounded_relations(b, q, p);
                    sets["degree_" + std::to_string(p + 2) + "_q" + std::to_string(q)] =
                        equation_set_to_json(es, labels_reduced);
                }
    } else if (kind == "rank4") {
        EquationSet es = rank4_quadrics(l.analysis.reduced);
        sets["quadrics"] = equation_set_to_json(es, labels_reduced);
    } else if (kind == "scroll") {
        FnVec t = choose_t(l, t_arg, seed, true);
        AdjointCoords ac = adjoint_coordinates(t, l.analysis.ambient);
        EquationSet es = scroll_equations(ac);
        Json sj = equation_set_to_json(es, l.panel.config.labels);
        sj["truncated"] = partition_to_json(ac.trunc.lambda_hat);
        sets["minors"] = sj;
    } else {
        throw precondition_error("equations kind must be monomial, rank4 or scroll");
    }
    j["sets"] = sets;
    emit(j, pretty);
    return 0;
}

int cmd_mu00(const std::string& input, bool pretty) {
    Loaded l = load(input);
    Mu00Split sp = mu00_split(l.analysis.reduced);
    Json j = run_record(l, "mu00");
    j["t"] = scalars_to_json(sp.t);
    auto labels = [&](const std::vector<std::size_t>& part) {
        Json arr = Json::array();
        for (std::size_t cls : part)
            for (std::size_t z : l.analysis.red.blocks[cls])
                arr.push_back(l.panel.config.labels[z]);
        return arr;
    };
    j["z1"] = labels(sp.z1);
    j["z2"] = labels(sp.z2);
    j["mu00"] = sp.mu00;
    j["vanish_on_z1"] = sp.vanish_on_z1;
    j["vanish_on_z2"] = sp.vanish_on_z2;
    emit(j, pretty);
    return 0;
}

int cmd_loop(const std::string& input, const std::string& t_arg, std::uint64_t seed,
             bool pretty) {
    Loaded l = load(input);
    FnVec t = choose_t(l, t_arg, seed, false);
    LoopData ld = loop_exponents(t, l.analysis.reduced);
    Json j = run_record(l, "loop");
    j["seed"] = seed;
    j["traces"] = ld.traces;
    j["loop_exponents"] = ld.exponents;
    j["coweight"] = ld.exponents;  // the exponent vector is the orbit label
    emit(j, pretty);
    return 0;
}

int cmd_macdonald(const std::string& mu_spec, std::size_t n, bool pretty) {
    Partition mu = parse_partition(mu_spec);
    SymFunPoly f = macdonald_value(mu, n == 0 ? weight(mu) : n);
    Json j;
    j["schema"] = "1";
    j.update(symfun_to_json(f));
    emit(j, pretty);
    return 0;
}

int cmd_verify(const std::string& eq_path, bool pretty) {
    Json j = read_json(eq_path);
    std::size_t checked = 0;
    bool ok = true;
    std::function<void(const Json&)> walk = [&](const Json& node) {
        if (node.is_object() && node.contains("vars") && node.contains("polys") &&
            node.contains("assignment")) {
            EquationSet es = equation_set_from_json(node);
            ++checked;
            if (!verify(es)) ok = false;
            return;
        }
        if (node.is_object() || node.is_array())
            for (const auto& child : node) walk(child);
    };
    walk(j);
    Json out;
    out["schema"] = "1";
    out["sets_checked"] = checked;
    out["all_zero"] = ok;
    emit(out, pretty);
    if (checked == 0) throw precondition_error("no equation sets found in the file");
    return ok ? 0 : 1;
}

int cmd_gen(const std::string& kind, std::size_t d, std::size_t r, std::size_t m,
            std::size_t blocks, std::uint64_t seed, bool pretty) {
    Instance inst = generate(kind, d, r, m, blocks, seed);
    emit(instance_to_json(inst), pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and equations of point configurations with a panel"};
    app.require_subcommand(1);

    std::string input, t_arg, kind, mu_spec, eq_path;
    std::uint64_t seed = 0;
    unsigned degree_cap = 4;
    std::size_t samples = 0, d = 6, r = 2, m = 3, blocks = 2, n = 0;
    bool pretty = false, json_flag = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "instance JSON file")->required();
        cmd->add_flag("--pretty", pretty, "indented output");
        cmd->add_flag("--json", json_flag, "compact output (default)");
    };

    CLI::App* an = app.add_subcommand("analyze", "filtration, reduction, Lie data");
    add_common(an, true);

    CLI::App* jo = app.add_subcommand("jordan", "graded Jordan data of a tangent direction");
    add_common(jo, true);
    jo->add_option("--t", t_arg, "values of t at the points, comma separated");
    jo->add_option("--seed", seed, "seed for sampling t");
    jo->add_option("--samples", samples, "also sample this many strata");

    CLI::App* eq = app.add_subcommand("equations", "vanishing equations with certificates");
    add_common(eq, true);
    eq->add_option("--kind", kind, "monomial | rank4 | scroll")->required();
    eq->add_option("--t", t_arg, "values of t at the points");
    eq->add_option("--seed", seed, "seed for sampling t");
    eq->add_option("--degree-cap", degree_cap, "monomial degree cap");

    CLI::App* mu = app.add_subcommand("mu00", "hyperplane split and speciality counts");
    add_common(mu, true);

    CLI::App* lo = app.add_subcommand("loop", "graded traces and loop exponents");
    add_common(lo, true);
    lo->add_option("--t", t_arg, "values of t at the points");
    lo->add_option("--seed", seed, "seed for sampling t");

    CLI::App* ma = app.add_subcommand("macdonald", "graded Springer character");
    ma->add_option("--mu", mu_spec, "partition, comma separated")->required();
    ma->add_option("--n", n, "weight (defaults to |mu|)");
    ma->add_flag("--pretty", pretty, "indented output");
    ma->add_flag("--json", json_flag, "compact output (default)");

    CLI::App* ve = app.add_subcommand("verify", "re-evaluate every polynomial at every point");
    ve->add_option("--equations", eq_path, "equations JSON file")->required();
    ve->add_flag("--pretty", pretty, "indented output");
    ve->add_flag("--json", json_flag, "compact output (default)");

    CLI::App* ge = app.add_subcommand("gen", "synthetic instance generators");
    ge->add_option("--kind", kind, "general | chain | blocks | rnc | union")->required();
    ge->add_option("--d", d, "number of points");
    ge->add_option("--r", r, "panel dimension minus one");
    ge->add_option("--m", m, "curve parameter for rnc (d = 2m)");
    ge->add_option("--blocks", blocks, "number of classes for blocks");
    ge->add_option("--seed", seed, "generator seed");
    ge->add_flag("--pretty", pretty, "indented output");
    ge->add_flag("--json", json_flag, "compact output (default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(input, pretty);
        if (jo->parsed()) return cmd_jordan(input, t_arg, seed, samples, pretty);
        if (eq->parsed()) return cmd_equations(input, kind, t_arg, seed, degree_cap, pretty);
        if (mu->parsed()) return cmd_mu00(input, pretty);
        if (lo->parsed()) return cmd_loop(input, t_arg, seed, pretty);
        if (ma->parsed()) return cmd_macdonald(mu_spec, n, pretty);
        if (ve->parsed()) return cmd_verify(eq_path, pretty);
        if (ge->parsed()) return cmd_gen(kind, d, r, m, blocks, seed, pretty);
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
