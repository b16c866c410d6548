#ifndef TOUGHTREE_IO_HPP
#define TOUGHTREE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "toughtree/core.hpp"
#include "toughtree/graph.hpp"

namespace toughtree::io {

/// Graph JSON schema: {"n": int, "edges": [[u, v], ...] with u < v,
/// "labels": {"id": tag, ...} (optional), "k": int (optional),
/// "build_order": [{"vertex": v, "clique": [...]}, ...] (optional)}.
struct GraphDocument {
    Graph graph;
    std::optional<int> k;
    std::optional<core::KTreeCertificate> certificate;
};

std::string to_json(const GraphDocument& doc);
GraphDocument from_json(const std::string& text);

GraphDocument read_file(const std::string& path);
void write_file(const std::string& path, const GraphDocument& doc);

/// DOT export; vertex label is the id plus the tag, when present.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace toughtree::io

#endif
