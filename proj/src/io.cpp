#include "isoembed/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace isoembed::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void write(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                write(value, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                write(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
            out += buf;
            break;
        }
        default: out += j.dump(); break;
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    write(j, out);
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        parse_fail(path.string() + ": " + e.what());
    }
}

MetricSpace metric_from_json(const Json& j, double tol) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_array()) parse_fail("metric JSON needs an array field \"d\"");
    const auto& rows = j["d"];
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " of \"d\" does not have " +
                                                  std::to_string(n) + " entries");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto& v = row[static_cast<std::size_t>(k)];
            if (!v.is_number()) parse_fail("non-numeric distance at row " + std::to_string(i));
            d(i, k) = v.get<double>();
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) parse_fail("\"labels\" must be an array");
        for (const auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
    return validate_metric(d, tol, std::move(labels));
}

Json metric_to_json(const MetricSpace& m) {
    Json j;
    j["labels"] = m.labels();
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    j["d"] = std::move(rows);
    return j;
}

WeightedGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) parse_fail("graph JSON needs an integer field \"n\"");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) parse_fail("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                (e.size() == 3 && !e[2].is_number())) {
                parse_fail("edge entries must be [u, v] or [u, v, w], got " + e.dump());
            }
            edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? e[2].get<double>() : 1.0});
        }
    }
    return WeightedGraph(j["n"].get<int>(), std::move(edges));
}

Json graph_to_json(const WeightedGraph& g) {
    Json j;
    j["n"] = g.size();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.w}));
    j["edges"] = std::move(edges);
    return j;
}

Json vector_to_json(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Json report_to_json(const EmbeddabilityReport& r, const std::vector<double>& trace_profile) {
    Json j;
    j["embeddable"] = r.embeddable;
    j["lambda_max"] = r.lambda_max;
    j["witness"] = r.witness ? vector_to_json(*r.witness) : Json(nullptr);
    j["trace_profile"] = trace_profile;
    return j;
}

Json embedding_to_json(const Embedding& e) {
    Json j;
    j["base"] = e.base;
    j["rank"] = e.rank();
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < e.coords.rows(); ++i) coords.push_back(vector_to_json(e.coords.row(i).transpose()));
    j["coords"] = std::move(coords);
    j["residual"] = e.residual;
    return j;
}

}  // namespace isoembed::io
