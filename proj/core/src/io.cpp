#include "semedge/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace semedge {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(errc::parse_error, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Vertex> string_array(const json& j, const char* what) {
    if (!j.is_array()) fail(errc::parse_error, std::string(what) + " must be an array");
    std::vector<Vertex> out;
    for (const auto& e : j) {
        if (!e.is_string()) fail(errc::parse_error, std::string(what) + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

json to_json(const Admg& g) {
    json j;
    j["vertices"] = g.vertices();
    j["directed"] = json::array();
    for (const auto& [a, b] : g.directed()) j["directed"].push_back({a, b});
    j["bidirected"] = json::array();
    for (const auto& [a, b] : g.bidirected()) j["bidirected"].push_back({a, b});
    return j;
}

Admg admg_from_json(const json& j) {
    std::vector<Vertex> vs = string_array(need(j, "vertices"), "vertices");
    std::set<DirEdge> d;
    for (const auto& e : need(j, "directed")) {
        auto pair = string_array(e, "directed edge");
        if (pair.size() != 2) fail(errc::parse_error, "directed edges are [tail, head] pairs");
        if (!d.insert({pair[0], pair[1]}).second)
            fail(errc::duplicate_edge, "duplicate directed edge: " + dir_name(pair[0], pair[1]));
    }
    std::set<BiEdge> b;
    for (const auto& e : j.value("bidirected", json::array())) {
        auto pair = string_array(e, "bidirected edge");
        if (pair.size() != 2) fail(errc::parse_error, "bidirected edges are [u, v] pairs");
        if (!b.insert(make_bi(pair[0], pair[1])).second)
            fail(errc::duplicate_edge, "duplicate bidirected edge: " + bi_name(pair[0], pair[1]));
    }
    return Admg(vs, d, b);
}

json to_json(const SemParameters& p) {
    json j;
    j["lambda"] = json::object();
    for (const auto& [e, v] : p.lambda) j["lambda"][dir_name(e.first, e.second)] = v;
    j["omega"] = json::object();
    for (const auto& [v, x] : p.omega_diag) j["omega"][v] = x;
    for (const auto& [e, x] : p.omega_off) j["omega"][bi_name(e.first, e.second)] = x;
    return j;
}

SemParameters params_from_json(const json& j, const Admg& g) {
    SemParameters p;
    p.graph = g;
    for (const auto& [key, val] : need(j, "lambda").items()) {
        EdgeSpec e = parse_edge(key);
        if (e.bidirected) fail(errc::parse_error, "lambda key must be directed: " + key);
        if (!val.is_number()) fail(errc::parse_error, "lambda value must be a number: " + key);
        p.lambda[{e.a, e.b}] = val.get<double>();
    }
    for (const auto& [key, val] : need(j, "omega").items()) {
        if (!val.is_number()) fail(errc::parse_error, "omega value must be a number: " + key);
        if (key.find("<->") != std::string::npos) {
            EdgeSpec e = parse_edge(key);
            p.omega_off[make_bi(e.a, e.b)] = val.get<double>();
        } else {
            p.omega_diag[key] = val.get<double>();
        }
    }
    p.validate();
    return p;
}

json to_json(const CovMatrix& s) {
    json j;
    j["labels"] = s.labels();
    j["values"] = json::array();
    for (int i = 0; i < s.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.size(); ++k) row.push_back(s.values()(i, k));
        j["values"].push_back(row);
    }
    return j;
}

CovMatrix cov_from_json(const json& j) {
    std::vector<Vertex> labels = string_array(need(j, "labels"), "labels");
    const auto& rows = need(j, "values");
    const int n = static_cast<int>(labels.size());
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        fail(errc::parse_error, "values must be an n x n array");
    Eigen::MatrixXd S(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(errc::parse_error, "values must be an n x n array");
        for (int k = 0; k < n; ++k) {
            if (!row.at(k).is_number()) fail(errc::parse_error, "covariance entries must be numbers");
            S(i, k) = row.at(k).get<double>();
        }
    }
    return CovMatrix(labels, S);
}

json to_json(const IdReport& r) {
    json j;
    j["target"] = r.target;
    j["status"] = to_string(r.status);
    if (r.adjustment) j["adjustment"] = std::vector<Vertex>(r.adjustment->begin(), r.adjustment->end());
    if (!r.recipe.empty()) {
        j["recipe"] = json::array();
        for (const auto& st : r.recipe)
            j["recipe"].push_back({{"from", st.from},
                                   {"to", st.to},
                                   {"adjust", std::vector<Vertex>(st.adjust.begin(), st.adjust.end())}});
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

json to_json(const InterventionResult& r) {
    json j;
    j["graph"] = to_json(r.new_graph);
    j["sigma"] = to_json(r.new_cov);
    j["used"] = json::object();
    for (const auto& [k, v] : r.used) j["used"][k] = v;
    j["pd_check"] = r.pd_ok;
    j["pd_margin"] = r.pd_margin;
    return j;
}

json to_json(const RemovalPlan& p) {
    json j;
    j["steps"] = json::array();
    for (const auto& st : p.steps)
        j["steps"].push_back({{"edge", st.bidirected ? bi_name(st.tail, st.head)
                                                     : dir_name(st.tail, st.head)},
                              {"kind", st.bidirected ? "bidirected" : "directed"}});
    j["terminal"] = to_json(p.terminal);
    return j;
}

json to_json(const ConstraintSet& cs) {
    json j;
    j["plan"] = to_json(cs.plan);
    j["pairs"] = json::array();
    for (const auto& [a, b] : cs.pairs) j["pairs"].push_back({a, b});
    return j;
}

std::string to_csv(const Dataset& d) {
    std::ostringstream os;
    os.precision(17);
    for (size_t i = 0; i < d.labels.size(); ++i) os << (i ? "," : "") << d.labels[i];
    os << "\n";
    for (Eigen::Index r = 0; r < d.rows.rows(); ++r) {
        for (Eigen::Index c = 0; c < d.rows.cols(); ++c) os << (c ? "," : "") << d.rows(r, c);
        os << "\n";
    }
    return os.str();
}

Dataset dataset_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) fail(errc::parse_error, "empty dataset");
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string field;
        std::istringstream ls(s);
        while (std::getline(ls, field, ',')) out.push_back(field);
        if (!s.empty() && s.back() == ',') out.push_back("");
        return out;
    };
    Dataset d;
    d.labels = split(line);
    if (d.labels.empty()) fail(errc::parse_error, "dataset header has no columns");
    std::vector<std::vector<double>> rows;
    size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != d.labels.size())
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(d.labels.size()) + " fields");
        std::vector<double> row;
        for (const auto& f : fields) {
            try {
                size_t pos = 0;
                row.push_back(std::stod(f, &pos));
                if (pos != f.size()) throw std::invalid_argument(f);
            } catch (const std::exception&) {
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": bad number '" + f + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(errc::too_few_rows, "dataset has no rows");
    d.rows.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d.labels.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = 0; k < rows[i].size(); ++k) d.rows(i, k) = rows[i][k];
    return d;
}

EdgeSpec parse_edge(const std::string& text) {
    auto bi = text.find("<->");
    if (bi != std::string::npos) {
        EdgeSpec e{text.substr(0, bi), text.substr(bi + 3), true};
        if (e.a.empty() || e.b.empty()) fail(errc::parse_error, "bad edge designation: " + text);
        return e;
    }
    auto di = text.find("->");
    if (di != std::string::npos) {
        EdgeSpec e{text.substr(0, di), text.substr(di + 2), false};
        if (e.a.empty() || e.b.empty()) fail(errc::parse_error, "bad edge designation: " + text);
        return e;
    }
    fail(errc::parse_error, "edge designation must be 'a->b' or 'a<->b': " + text);
}

Standardization standardize(Dataset& d) {
    const auto n = d.rows.rows();
    if (n < 2) fail(errc::too_few_rows, "need at least 2 rows to standardize");
    Standardization st;
    st.mean = d.rows.colwise().mean();
    d.rows.rowwise() -= st.mean;
    st.sd = (d.rows.colwise().squaredNorm() / double(n - 1)).cwiseSqrt();
    for (Eigen::Index c = 0; c < d.rows.cols(); ++c) {
        if (st.sd(c) <= 0) fail(errc::bad_argument, "constant column: " + d.labels[c]);
        d.rows.col(c) /= st.sd(c);
    }
    return st;
}

void unstandardize(Dataset& d, const Standardization& st) {
    for (Eigen::Index c = 0; c < d.rows.cols(); ++c) d.rows.col(c) *= st.sd(c);
    d.rows.rowwise() += st.mean;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(errc::parse_error, "cannot write file: " + path);
    f << content;
}

}  // namespace semedge
