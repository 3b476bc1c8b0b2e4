#include "cgg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "cgg/constructions.hpp"
#include "cgg/errors.hpp"

namespace cgg {

namespace {

// Fixed two-decimal output with no negative zero, so files are byte-stable.
std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Point {
  double x;
  double y;
};

// Corner `position` of the 2n-gon; label 0 on the right, labels increasing
// counterclockwise. y grows downward as in SVG.
Point corner(int n, int position, double cx, double cy, double radius) {
  const double angle = std::numbers::pi * position / n;
  return {cx + radius * std::cos(angle), cy - radius * std::sin(angle)};
}

std::vector<StyledEdge> classify_gnk(const Cgg& g, int k) {
  const int n = g.n();
  const int m = (n - 2 * k) / 2;
  const auto mod = [n](int x) { return ((x % n) + n) % n; };
  std::set<int> punctured = {mod(m), mod(-m)};
  if (n % 2 == 1) {
    punctured.insert(mod(m + 1));
    punctured.insert(mod(-m - 1));
  }
  std::vector<StyledEdge> out;
  for (const Edge& e : g.edges()) {
    const int d = edge_direction(g.labelling(), e).value;
    const int j = d <= n / 2 ? d : d - n;
    EdgeStyle style = EdgeStyle::kBold;
    if (punctured.count(d)) {
      style = EdgeStyle::kPunctured;
    } else if (std::abs(j) < m) {
      style = EdgeStyle::kOrdinary;
    }
    out.push_back({e, style, false});
  }
  return out;
}

std::vector<StyledEdge> classify_gnkl(const Cgg& g, const ConstructionSpec& spec) {
  const Cgg reference = gnk_in_labelling_of(spec);
  std::vector<StyledEdge> out;
  for (const Edge& e : g.edges()) out.push_back({e, reference.contains(e) ? EdgeStyle::kOrdinary : EdgeStyle::kBold, false});
  for (const Edge& e : reference.edges()) {
    if (!g.contains(e)) out.push_back({e, EdgeStyle::kPunctured, true});
  }
  return out;
}

std::vector<StyledEdge> uniform(const Cgg& g) {
  std::vector<StyledEdge> out;
  for (const Edge& e : g.edges()) out.push_back({e, EdgeStyle::kOrdinary, false});
  return out;
}

std::string_view style_class(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::kOrdinary:
      return "ordinary";
    case EdgeStyle::kBold:
      return "bold";
    case EdgeStyle::kPunctured:
      return "punctured";
  }
  return "ordinary";
}

std::string_view dot_style(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::kOrdinary:
      return "solid";
    case EdgeStyle::kBold:
      return "bold";
    case EdgeStyle::kPunctured:
      return "dashed";
  }
  return "solid";
}

std::string caption(const Cgg& g, const GraphMeta& meta) {
  std::string out = "CGG on " + std::to_string(g.n()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
  if (meta.construction) out += ", " + *meta.construction;
  if (meta.k) out += " k=" + std::to_string(*meta.k);
  if (meta.ell) out += " ell=" + std::to_string(*meta.ell);
  if (meta.q) out += " q=" + std::to_string(*meta.q);
  return out;
}

}  // namespace

std::vector<StyledEdge> classify_edges(const Cgg& g, const GraphMeta& meta) {
  if (!meta.construction || !meta.k) return uniform(g);
  try {
    if (*meta.construction == "Gnk") {
      const ConstructionSpec spec(g.n(), *meta.k, 0);
      if (spec.labelling() == g.labelling()) return classify_gnk(g, *meta.k);
    } else if (*meta.construction == "Gnkl" && meta.ell) {
      const ConstructionSpec spec(g.n(), *meta.k, *meta.ell);
      if (spec.labelling() == g.labelling()) return classify_gnkl(g, spec);
    }
  } catch (const ParameterError&) {
    // Metadata that does not describe a valid construction: plain styling.
  }
  return uniform(g);
}

std::vector<Label> avoided_vertices(const Cgg& g, const GraphMeta& meta) {
  const int n = g.n();
  try {
    if (meta.construction && meta.k && (*meta.construction == "Gnk" || *meta.construction == "Gnkl")) {
      const ConstructionSpec spec(n, *meta.k, meta.ell.value_or(0));
      if (spec.labelling() == g.labelling()) return spec.free_arc();
    }
    if (meta.q && *meta.q >= 1 && *meta.q <= n - 1 && canonical_labelling(n, *meta.q) == g.labelling()) {
      return canonical_free_arc(n, *meta.q);
    }
  } catch (const ParameterError&) {
  }
  return {};
}

std::string render_svg(const Cgg& g, const GraphMeta& meta, const SvgOptions& options) {
  const int n = g.n();
  const double size = options.size;
  const double c = size / 2;
  const double radius = size / 2 - 40;
  const double text_radius = radius + 18;
  const Labelling& lab = g.labelling();
  const auto avoided = avoided_vertices(g, meta);
  const std::set<Label> avoided_set(avoided.begin(), avoided.end());
  const auto styled = options.style_edges ? classify_edges(g, meta) : uniform(g);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
      << options.size << "\" viewBox=\"0 0 " << options.size << " " << options.size << "\">\n";
  out << "  <title>" << caption(g, meta) << "</title>\n";
  out << "  <style>\n"
         "    .polygon { fill: none; stroke: #bbbbbb; stroke-width: 1; }\n"
         "    .edge { stroke: #000000; stroke-width: 1.2; }\n"
         "    .bold { stroke-width: 3; }\n"
         "    .punctured { stroke-dasharray: 6 4; }\n"
         "    .ghost { stroke: #999999; }\n"
         "    .vertex { fill: #000000; }\n"
         "    .vertex.avoided { fill: #cc0000; }\n"
         "    .label { font-family: sans-serif; font-size: 12px; text-anchor: middle; dominant-baseline: central; }\n"
         "    .label.avoided { fill: #cc0000; text-decoration: underline; }\n"
         "  </style>\n";

  out << "  <polygon class=\"polygon\" points=\"";
  for (int p = -n + 1; p <= n; ++p) {
    const Point pt = corner(n, p, c, c, radius);
    out << (p == -n + 1 ? "" : " ") << num(pt.x) << "," << num(pt.y);
  }
  out << "\"/>\n";

  out << "  <g class=\"edges\">\n";
  for (const StyledEdge& se : styled) {
    const Point a = corner(n, se.edge.lo(), c, c, radius);
    const Point b = corner(n, se.edge.hi(), c, c, radius);
    out << "    <line class=\"edge " << style_class(se.style) << (se.ghost ? " ghost" : "") << "\" x1=\"" << num(a.x)
        << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"vertices\">\n";
  for (Label v : lab.labels()) {
    const Point pt = corner(n, v, c, c, radius);
    const Point tp = corner(n, v, c, c, text_radius);
    const char* extra = avoided_set.count(v) ? " avoided" : "";
    out << "    <circle class=\"vertex" << extra << "\" cx=\"" << num(pt.x) << "\" cy=\"" << num(pt.y)
        << "\" r=\"3\"/>\n";
    out << "    <text class=\"label" << extra << "\" x=\"" << num(tp.x) << "\" y=\"" << num(tp.y) << "\">" << v
        << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::string render_dot(const Cgg& g, const GraphMeta& meta) {
  const int n = g.n();
  const auto avoided = avoided_vertices(g, meta);
  const std::set<Label> avoided_set(avoided.begin(), avoided.end());
  const auto styled = classify_edges(g, meta);
  const double radius = 144;  // points

  std::ostringstream out;
  out << "graph cgg {\n";
  out << "  graph [layout=neato, splines=false, label=\"" << caption(g, meta) << "\"];\n";
  out << "  node [shape=circle, fixedsize=true, width=0.35, fontsize=10];\n";
  for (Label v : g.labelling().labels()) {
    const Point pt = corner(n, v, 0, 0, radius);
    out << "  \"v" << v << "\" [label=\"" << v << "\", pos=\"" << num(pt.x) << "," << num(-pt.y) << "!\"";
    if (avoided_set.count(v)) out << ", color=red, fontcolor=red";
    out << "];\n";
  }
  for (const StyledEdge& se : styled) {
    out << "  \"v" << se.edge.lo() << "\" -- \"v" << se.edge.hi() << "\" [style=" << dot_style(se.style);
    if (se.ghost) out << ", color=gray";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cgg
