#include "cgg/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "cgg/errors.hpp"
#include "json.hpp"

namespace cgg {

using nlohmann::json;

namespace {

json meta_to_json(const GraphMeta& meta) {
  json out = json::object();
  if (meta.construction) out["construction"] = *meta.construction;
  if (meta.k) out["k"] = *meta.k;
  if (meta.ell) out["ell"] = *meta.ell;
  if (meta.q) out["q"] = *meta.q;
  return out;
}

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

int require_int(const json& doc, const std::string& field) {
  if (!doc.is_number_integer()) fail(field, "expected an integer");
  return doc.get<int>();
}

std::string location(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

GraphMeta parse_meta(const json& doc) {
  if (!doc.is_object()) fail("meta", "expected an object");
  GraphMeta meta;
  if (doc.contains("construction")) {
    if (!doc["construction"].is_string()) fail("meta.construction", "expected a string");
    meta.construction = doc["construction"].get<std::string>();
  }
  if (doc.contains("k")) meta.k = require_int(doc["k"], "meta.k");
  if (doc.contains("ell")) meta.ell = require_int(doc["ell"], "meta.ell");
  if (doc.contains("q")) meta.q = require_int(doc["q"], "meta.q");
  return meta;
}

}  // namespace

std::string serialize(const Cgg& g, const GraphMeta& meta) {
  // Keys in sorted order; one edge per line.
  std::ostringstream out;
  out << "{\n  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    [" << edges[i].lo() << ", " << edges[i].hi() << "]";
  }
  out << (edges.empty() ? "]" : "\n  ]") << ",\n";
  const json m = meta_to_json(meta);
  if (!m.empty()) out << "  \"meta\": " << m.dump() << ",\n";
  out << "  \"n\": " << g.n() << ",\n";
  out << "  \"parity\": \"" << to_string(g.labelling().parity()) << "\",\n";
  out << "  \"schemaVersion\": \"" << kSchemaVersion << "\"\n}\n";
  return out.str();
}

GraphDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");

  if (!doc.contains("schemaVersion")) fail("schemaVersion", "missing");
  if (!doc["schemaVersion"].is_string()) fail("schemaVersion", "expected a string");
  const auto version = doc["schemaVersion"].get<std::string>();
  if (version != kSchemaVersion) {
    throw UnsupportedVersionError("schemaVersion: unsupported version \"" + version + "\" (supported: \"" +
                                  std::string(kSchemaVersion) + "\")");
  }

  if (!doc.contains("n")) fail("n", "missing");
  const int n = require_int(doc["n"], "n");
  if (n < 4) fail("n", "must be at least 4, got " + std::to_string(n));

  if (!doc.contains("parity")) fail("parity", "missing");
  const json& parity_field = doc["parity"];
  if (!parity_field.is_string()) fail("parity", "expected \"odd\" or \"even\"");
  const auto parity_name = parity_field.get<std::string>();
  if (parity_name != "odd" && parity_name != "even") fail("parity", "expected \"odd\" or \"even\", got \"" + parity_name + "\"");
  const Labelling labelling(n, parity_name == "odd" ? Parity::kOdd : Parity::kEven);

  if (!doc.contains("edges")) fail("edges", "missing");
  if (!doc["edges"].is_array()) fail("edges", "expected an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  const json& list = doc["edges"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    const json& item = list[i];
    if (!item.is_array() || item.size() != 2) fail(field, "expected a pair of labels");
    const int a = require_int(item[0], field + "[0]");
    const int b = require_int(item[1], field + "[1]");
    for (int v : {a, b}) {
      if (v <= -n || v > n) {
        fail(field, "label " + std::to_string(v) + " outside " + std::to_string(-n + 1) + ".." + std::to_string(n));
      }
      if (!labelling.is_vertex(v)) {
        fail(field, "label " + std::to_string(v) + " does not have " + parity_name + " parity");
      }
    }
    if (a == b) fail(field, "self-loop at " + std::to_string(a));
    const Edge e(a, b);
    if (!seen.insert(e).second) fail(field, "duplicate edge " + e.to_string());
    edges.push_back(e);
  }

  GraphMeta meta;
  if (doc.contains("meta")) meta = parse_meta(doc["meta"]);
  return GraphDocument{version, Cgg(labelling, std::move(edges)), meta};
}

Cgg parse(std::string_view text) { return parse_document(text).graph; }

}  // namespace cgg
