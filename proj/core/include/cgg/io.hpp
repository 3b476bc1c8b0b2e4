#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgg/graph.hpp"

namespace cgg {

inline constexpr std::string_view kSchemaVersion = "1";

struct GraphMeta {
  std::optional<std::string> construction;  // "Gnk", "Gnkl", "star", ...
  std::optional<int> k;
  std::optional<int> ell;
  std::optional<int> q;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

struct GraphDocument {
  std::string schema_version{kSchemaVersion};
  Cgg graph;
  GraphMeta meta;
};

/// Canonical JSON: sorted keys, sorted edge list, two-space indent, trailing
/// newline.
std::string serialize(const Cgg& g, const GraphMeta& meta = {});

/// Throws ParseError (UnsupportedVersionError for a foreign schemaVersion)
/// naming the offending field.
GraphDocument parse_document(std::string_view text);
Cgg parse(std::string_view text);

enum class EdgeStyle { kOrdinary, kBold, kPunctured };

struct StyledEdge {
  Edge edge;
  EdgeStyle style;
  bool ghost = false;  // drawn for reference, not part of the graph
};

/// Drawing classes for the edges of a known construction, from metadata. Graphs
/// without a recognised construction come back uniformly ordinary.
std::vector<StyledEdge> classify_edges(const Cgg& g, const GraphMeta& meta);

/// Vertices to mark as avoided, from metadata.
std::vector<Label> avoided_vertices(const Cgg& g, const GraphMeta& meta);

struct SvgOptions {
  int size = 480;
  bool style_edges = true;
};

std::string render_svg(const Cgg& g, const GraphMeta& meta = {}, const SvgOptions& options = {});
std::string render_dot(const Cgg& g, const GraphMeta& meta = {});

}  // namespace cgg
