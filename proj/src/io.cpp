#include "toughtree/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace toughtree::io {

using nlohmann::json;

std::string to_json(const GraphDocument& doc) {
    const Graph& g = doc.graph;
    json j;
    j["n"] = g.num_vertices();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        json labels = json::object();
        for (auto& [v, tag] : g.labels()) labels[std::to_string(v)] = tag;
        j["labels"] = std::move(labels);
    }
    if (doc.k) j["k"] = *doc.k;
    if (doc.certificate) {
        j["base"] = doc.certificate->base;
        json steps = json::array();
        for (const auto& st : doc.certificate->build_order)
            steps.push_back(json{{"vertex", st.vertex}, {"clique", st.clique}});
        j["build_order"] = std::move(steps);
    }
    return j.dump(2) + "\n";
}

GraphDocument from_json(const std::string& text) {
    json j = json::parse(text);
    GraphDocument doc;
    int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("negative vertex count");
    doc.graph = Graph(n);
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("edge endpoint out of range");
        doc.graph.add_edge(u, v);
    }
    if (j.contains("labels"))
        for (auto& [key, tag] : j["labels"].items())
            doc.graph.set_label(std::stoi(key), tag.get<std::string>());
    if (j.contains("k")) doc.k = j["k"].get<int>();
    if (j.contains("build_order")) {
        core::KTreeCertificate cert;
        cert.k = doc.k.value_or(0);
        if (j.contains("base")) {
            cert.base = j["base"].get<std::vector<int>>();
            for (int v : cert.base)
                if (v < 0 || v >= n) throw std::invalid_argument("base vertex out of range");
        }
        for (const auto& st : j["build_order"]) {
            core::BuildStep step;
            step.vertex = st.at("vertex").get<int>();
            step.clique = st.at("clique").get<std::vector<int>>();
            cert.build_order.push_back(std::move(step));
        }
        doc.certificate = std::move(cert);
    }
    return doc;
}

GraphDocument read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void write_file(const std::string& path, const GraphDocument& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(doc);
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  v" << v << " [label=\"" << v;
        std::string tag = g.label(v);
        if (!tag.empty()) out << ":" << tag;
        out << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace toughtree::io
