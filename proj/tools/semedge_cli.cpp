// semedge: edge interventions in linear Gaussian SEMs over ADMGs.
#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>

#include "semedge/constraints.hpp"
#include "semedge/io.hpp"
#include "semedge/random.hpp"

using namespace semedge;

namespace {

struct Options {
    std::string graph_path, params_path, sigma_path, data_path, out_path;
    std::string edge, op = "remove", format = "machine", method = "regression";
    double lambda = 0.0;
    bool lambda_set = false;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::int64_t n = 1000;
    int vertices = 6, ndirected = 6, nbidirected = 2;
    bool standardize = false, no_standardize = false;
};

void emit(const Options& opt, const json& j, const std::string& table) {
    std::string text = opt.format == "table" ? table : j.dump(2) + "\n";
    if (opt.out_path.empty())
        std::cout << text;
    else
        write_file(opt.out_path, text);
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path), nullptr, true, true);
    } catch (const json::exception& e) {
        fail(errc::parse_error, path + ": " + e.what());
    }
}

Admg load_graph(const Options& opt) {
    if (opt.graph_path.empty()) fail(errc::bad_argument, "--graph is required");
    return admg_from_json(parse_json_file(opt.graph_path));
}

// Exactly one covariance source among --params (computed), --sigma, --data.
CovMatrix load_sigma(const Options& opt, const Admg& g) {
    int sources = !opt.params_path.empty() + !opt.sigma_path.empty() + !opt.data_path.empty();
    if (sources != 1)
        fail(errc::bad_argument,
             "exactly one covariance source among --params, --sigma, --data is required");
    if (!opt.params_path.empty()) {
        SemParameters p =
            params_from_json(parse_json_file(opt.params_path), g);
        return covariance_from_params(p);
    }
    if (!opt.sigma_path.empty()) {
        CovMatrix s = cov_from_json(parse_json_file(opt.sigma_path));
        return s.reordered(g.vertices());
    }
    Dataset d = dataset_from_csv(read_file(opt.data_path));
    return sample_cov(d).reordered(g.vertices());
}

SigmaDMethod method_of(const Options& opt) {
    if (opt.method == "regression") return SigmaDMethod::regression;
    if (opt.method == "cutvertex") return SigmaDMethod::cutvertex;
    fail(errc::bad_argument, "--method must be regression or cutvertex");
}

std::string fmt_table(const Eigen::MatrixXd& m, const std::vector<Vertex>& labels) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << std::setw(8) << "";
    for (const auto& l : labels) os << std::setw(10) << l;
    os << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << std::setw(8) << labels[i];
        for (int j = 0; j < m.cols(); ++j) os << std::setw(10) << m(i, j);
        os << "\n";
    }
    return os.str();
}

int cmd_validate(const Options& opt) {
    Admg g = load_graph(opt);
    json j;
    j["ok"] = true;
    j["vertices"] = g.vertices().size();
    j["directed"] = g.directed().size();
    j["bidirected"] = g.bidirected().size();
    j["topological_order"] = g.topological_order();
    if (!opt.params_path.empty()) {
        params_from_json(parse_json_file(opt.params_path), g);
        j["params"] = "ok";
    }
    if (!opt.sigma_path.empty()) {
        CovMatrix s = cov_from_json(parse_json_file(opt.sigma_path));
        s.reordered(g.vertices());
        j["sigma"] = "ok";
        j["sigma_pd"] = s.is_positive_definite();
    }
    std::ostringstream tab;
    tab << "OK: " << g.vertices().size() << " vertices, " << g.directed().size()
        << " directed, " << g.bidirected().size() << " bidirected\n";
    emit(opt, j, tab.str());
    return 0;
}

int cmd_identify(const Options& opt) {
    Admg g = load_graph(opt);
    if (opt.edge.empty()) fail(errc::bad_argument, "--edge is required");
    EdgeSpec e = parse_edge(opt.edge);
    IdReport rep;
    json j;
    if (e.bidirected) {
        rep = check_remove_bidirected(g, e.a, e.b);
        j["omega"] = to_json(identify_omega(g, e.a, e.b));
    } else if (opt.op == "add") {
        rep = check_add_directed(g, e.a, e.b);
    } else if (g.has_directed(e.a, e.b)) {
        rep = check_remove_directed(g, e.a, e.b);
        j["lambda"] = to_json(identify_lambda(g, e.a, e.b));
    } else {
        rep = identify_path_sum_cutvertex(g, e.a, e.b);  // path-sum query
    }
    j["report"] = to_json(rep);
    std::ostringstream tab;
    tab << rep.target << ": " << to_string(rep.status)
        << (rep.reason.empty() ? "" : " — " + rep.reason) << "\n";
    emit(opt, j, tab.str());
    return rep.ok() || rep.status == IdStatus::generically_identifiable ? 0 : 2;
}

int cmd_intervene(const Options& opt) {
    Admg g = load_graph(opt);
    if (opt.edge.empty()) fail(errc::bad_argument, "--edge is required");
    EdgeSpec e = parse_edge(opt.edge);
    CovMatrix s = load_sigma(opt, g);
    InterventionResult res;
    if (e.bidirected) {
        if (opt.op != "remove") fail(errc::bad_argument, "bidirected edges support --op remove only");
        res = remove_bidirected(s, g, e.a, e.b);
    } else if (opt.op == "remove") {
        res = remove_directed(s, g, e.a, e.b, method_of(opt));
    } else if (opt.op == "add") {
        if (!opt.lambda_set) fail(errc::bad_argument, "--lambda is required for --op add");
        res = add_directed(s, g, e.a, e.b, opt.lambda, method_of(opt));
    } else {
        fail(errc::bad_argument, "--op must be remove or add");
    }
    std::ostringstream tab;
    tab << "Sigma* (" << opt.op << " " << opt.edge << "), pd_check="
        << (res.pd_ok ? "true" : "false") << "\n"
        << fmt_table(res.new_cov.values(), res.new_cov.labels());
    emit(opt, to_json(res), tab.str());
    return 0;
}

int cmd_transform(const Options& opt) {
    Admg g = load_graph(opt);
    if (opt.edge.empty()) fail(errc::bad_argument, "--edge is required");
    if (opt.data_path.empty()) fail(errc::bad_argument, "--data is required");
    EdgeSpec e = parse_edge(opt.edge);
    if (e.bidirected) fail(errc::bad_argument, "data transforms exist for directed edges only");
    Dataset d = dataset_from_csv(read_file(opt.data_path));
    // Covariance source: --sigma/--params if given, else the data itself.
    Options cov_opt = opt;
    if (cov_opt.sigma_path.empty() && cov_opt.params_path.empty())
        cov_opt.data_path = opt.data_path;
    else
        cov_opt.data_path.clear();

    bool do_std = !opt.no_standardize;  // default ON for raw data
    Standardization st;
    if (do_std) st = standardize(d);
    {
        // dataset columns must line up with the graph's label order
        std::vector<int> perm;
        for (const auto& v : g.vertices()) {
            auto it = std::find(d.labels.begin(), d.labels.end(), v);
            if (it == d.labels.end()) fail(errc::label_mismatch, "dataset is missing column " + v);
            perm.push_back(static_cast<int>(it - d.labels.begin()));
        }
        Dataset re;
        re.labels = g.vertices();
        re.rows.resize(d.rows.rows(), d.rows.cols());
        Standardization st2;
        st2.mean.resize(perm.size());
        st2.sd.resize(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) {
            re.rows.col(static_cast<Eigen::Index>(i)) = d.rows.col(perm[i]);
            if (do_std) {
                st2.mean(static_cast<Eigen::Index>(i)) = st.mean(perm[i]);
                st2.sd(static_cast<Eigen::Index>(i)) = st.sd(perm[i]);
            }
        }
        d = std::move(re);
        st = st2;
    }
    CovMatrix s = opt.sigma_path.empty() && opt.params_path.empty()
                      ? sample_cov(d)
                      : load_sigma(cov_opt, g);
    Dataset out = opt.op == "add"
                      ? transform_data_add(d, s, g, e.a, e.b,
                                           opt.lambda_set ? opt.lambda : 0.0, method_of(opt))
                      : transform_data_remove(d, s, g, e.a, e.b, method_of(opt));
    if (do_std) unstandardize(out, st);
    std::string csv = to_csv(out);
    if (opt.out_path.empty())
        std::cout << csv;
    else
        write_file(opt.out_path, csv);
    return 0;
}

int cmd_constraints(const Options& opt, bool all_edges) {
    Admg g = load_graph(opt);
    RemovalPlan plan =
        plan_removals(g, all_edges ? RemovalTarget::all_edges : RemovalTarget::directed_only);
    ConstraintSet cs = derive_constraints(g, plan);
    json j = to_json(cs);
    std::ostringstream tab;
    tab << "plan:";
    for (const auto& s : plan.steps)
        tab << " " << (s.bidirected ? bi_name(s.tail, s.head) : dir_name(s.tail, s.head));
    tab << "\nconstrained pairs:";
    for (const auto& [a, b] : cs.pairs) tab << " (" << a << "," << b << ")";
    tab << "\n";
    if (!opt.sigma_path.empty() || !opt.params_path.empty() || !opt.data_path.empty()) {
        CovMatrix s = load_sigma(opt, g);
        auto rs = residual_of_plan(s, g, cs);
        j["residuals"] = json::array();
        tab << std::scientific << std::setprecision(4);
        for (const auto& r : rs) {
            j["residuals"].push_back({{"pair", {r.pair.first, r.pair.second}},
                                      {"value", r.value},
                                      {"scale", r.scale}});
            tab << "residual (" << r.pair.first << "," << r.pair.second << ") = " << r.value
                << " (scale " << r.scale << ")\n";
        }
    }
    emit(opt, j, tab.str());
    return 0;
}

int cmd_random(const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    Admg g = random_admg(opt.vertices, opt.ndirected, opt.nbidirected, rng);
    SemParameters p = random_params(g, rng);
    json j;
    j["graph"] = to_json(g);
    j["params"] = to_json(p);
    emit(opt, j, j.dump(2) + "\n");
    return 0;
}

int cmd_cov(const Options& opt) {
    Admg g = load_graph(opt);
    if (opt.params_path.empty()) fail(errc::bad_argument, "--params is required");
    SemParameters p =
        params_from_json(parse_json_file(opt.params_path), g);
    CovMatrix s = covariance_from_params(p);
    emit(opt, to_json(s), fmt_table(s.values(), s.labels()));
    return 0;
}

int cmd_treks(const Options& opt) {
    Admg g = load_graph(opt);
    if (opt.edge.empty()) fail(errc::bad_argument, "--edge is required (endpoint pair 'v->w')");
    EdgeSpec e = parse_edge(opt.edge);
    auto treks = enumerate_treks(g, e.a, e.b);
    std::optional<SemParameters> p;
    if (!opt.params_path.empty())
        p = params_from_json(parse_json_file(opt.params_path), g);
    json j;
    j["count"] = treks.size();
    j["treks"] = json::array();
    std::ostringstream tab;
    double total = 0;
    for (const auto& t : treks) {
        json tj;
        tj["source"] = t.source_left == t.source_right
                           ? json(t.source_left)
                           : json({t.source_left, t.source_right});
        tj["left"] = t.left;
        tj["right"] = t.right;
        std::string desc;
        for (auto it = t.left.rbegin(); it != t.left.rend(); ++it)
            desc += (desc.empty() ? "" : " <- ") + *it;
        if (t.source_left != t.source_right) desc += " <-> ";
        else desc += " | ";
        bool first = true;
        for (const auto& v : t.right) {
            desc += (first ? "" : " -> ") + v;
            first = false;
        }
        if (p) {
            double m = t.monomial(*p);
            tj["monomial"] = m;
            total += m;
        }
        j["treks"].push_back(tj);
        tab << desc << "\n";
    }
    if (p) {
        j["sum"] = total;
        tab << "sum = " << total << "\n";
    }
    emit(opt, j, tab.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge interventions in linear Gaussian SEMs over ADMGs"};
    app.require_subcommand(1);
    Options opt;
    bool all_edges = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--graph", opt.graph_path, "graph file (JSON)");
        c->add_option("--params", opt.params_path, "parameter file (JSON)");
        c->add_option("--sigma", opt.sigma_path, "covariance file (JSON)");
        c->add_option("--data", opt.data_path, "dataset file (CSV with header)");
        c->add_option("--edge", opt.edge, "edge designation: a->b or a<->b");
        c->add_option("--op", opt.op, "remove | add")->check(CLI::IsMember({"remove", "add"}));
        c->add_option("--lambda", opt.lambda, "edge coefficient for --op add")
            ->each([&](const std::string&) { opt.lambda_set = true; });
        c->add_option("--tol", opt.tol, "tolerance override");
        c->add_option("--seed", opt.seed, "random seed");
        c->add_option("--n", opt.n, "sample count");
        c->add_flag("--standardize,!--no-standardize", opt.standardize,
                    "center and scale data columns");
        c->add_option("--out", opt.out_path, "output path (default stdout)");
        c->add_option("--format", opt.format, "machine | table")
            ->check(CLI::IsMember({"machine", "table"}));
        c->add_option("--method", opt.method, "path-sum identification: regression | cutvertex")
            ->check(CLI::IsMember({"regression", "cutvertex"}));
    };

    auto* validate = app.add_subcommand("validate", "parse and validate inputs");
    auto* identify = app.add_subcommand("identify", "identifiability report for an edge");
    auto* intervene = app.add_subcommand("intervene", "compute the interventional covariance");
    auto* transform = app.add_subcommand("transform", "transform individual-level data");
    auto* constraints = app.add_subcommand("constraints", "derive covariance constraints");
    auto* random = app.add_subcommand("random", "generate a random model");
    auto* cov = app.add_subcommand("cov", "covariance from parameters");
    auto* treks = app.add_subcommand("treks", "enumerate treks between two vertices");
    for (auto* c : {validate, identify, intervene, transform, constraints, random, cov, treks})
        add_common(c);
    constraints->add_flag("--all-edges", all_edges, "also remove bidirected edges");
    random->add_option("--vertices", opt.vertices, "vertex count");
    random->add_option("--ndirected", opt.ndirected, "directed edge count");
    random->add_option("--nbidirected", opt.nbidirected, "bidirected edge count");

    // --standardize defaults ON for transform (raw data pipeline), OFF elsewhere.
    CLI11_PARSE(app, argc, argv);
    opt.no_standardize = false;
    if (transform->parsed()) {
        if (transform->count("--no-standardize")) opt.no_standardize = true;
    } else if (!opt.standardize) {
        opt.no_standardize = true;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (identify->parsed()) return cmd_identify(opt);
        if (intervene->parsed()) return cmd_intervene(opt);
        if (transform->parsed()) return cmd_transform(opt);
        if (constraints->parsed()) return cmd_constraints(opt, all_edges);
        if (random->parsed()) return cmd_random(opt);
        if (cov->parsed()) return cmd_cov(opt);
        if (treks->parsed()) return cmd_treks(opt);
    } catch (const Error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_of(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
