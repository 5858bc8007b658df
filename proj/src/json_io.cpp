#include "hardclust/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hardclust::io {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InvalidInput(message), line_(line), column_(column) {}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write to '" + path + "' failed");
}

namespace {

void lineColumn(const std::string& text, std::size_t byte, std::size_t& line, std::size_t& col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

json parseText(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 0, col = 0;
    // byte is the 1-based position of the offending character.
    lineColumn(text, e.byte == 0 ? 0 : e.byte - 1, line, col);
    std::string what = e.what();
    const auto pos = what.find("parse error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what,
                     line, col);
  }
}

[[noreturn]] void schema(const std::string& source, const std::string& msg) {
  throw ParseError(source + ": " + msg, 0, 0);
}

const json& field(const json& j, const char* name, const std::string& source) {
  if (!j.is_object() || !j.contains(name)) schema(source, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t asIndex(const json& j, const std::string& source, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    schema(source, std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

double asNumber(const json& j, const std::string& source) {
  if (!j.is_number()) schema(source, "expected a number");
  return j.get<double>();
}

std::vector<IndexList> asIndexLists(const json& j, const std::string& source, const char* what) {
  if (!j.is_array()) schema(source, std::string(what) + " must be an array of arrays");
  std::vector<IndexList> out;
  for (const auto& row : j) {
    if (!row.is_array()) schema(source, std::string(what) + " must be an array of arrays");
    IndexList r;
    for (const auto& v : row) r.push_back(asIndex(v, source, "element"));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t optionalK(const json& j, const std::string& source) {
  return j.contains("k") ? asIndex(j.at("k"), source, "k") : 1;
}

OrientedGraph graphFrom(const json& j, const std::string& source) {
  const std::size_t n = asIndex(field(j, "n", source), source, "n");
  std::vector<Arc> arcs;
  for (const auto& e : asIndexLists(field(j, "edges", source), source, "edges")) {
    if (e.size() != 2) schema(source, "each edge must have two endpoints");
    arcs.emplace_back(e[0], e[1]);
  }
  // Arcs are taken as given (already oriented); plain edge lists from
  // generators are lexicographic.
  return OrientedGraph(n, std::move(arcs));
}

template <typename Fn>
auto wrap(const std::string& source, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    schema(source, e.what());
  } catch (const InvalidInput& e) {
    schema(source, e.what());
  }
}

}  // namespace

Document parseDocument(const std::string& text, const std::string& source) {
  const json j = parseText(text, source);
  return wrap(source, [&] {
    Document doc;
    const auto& kindField = field(j, "kind", source);
    if (!kindField.is_string()) schema(source, "\"kind\" must be a string");
    doc.kind = kindField.get<std::string>();
    if (doc.kind == "points") {
      const MetricTag metric = parseMetric(field(j, "metric", source).get<std::string>());
      const std::size_t dim = asIndex(field(j, "dim", source), source, "dim");
      std::vector<Vector> pts;
      for (const auto& row : field(j, "points", source)) {
        if (!row.is_array()) schema(source, "points must be an array of arrays");
        Vector p;
        for (const auto& v : row) p.push_back(asNumber(v, source));
        pts.push_back(std::move(p));
      }
      doc.points = PointsInstance{PointSet(dim, metric, pts), optionalK(j, source)};
      if (j.contains("graph")) {
        GadgetInstance g;
        g.graph = graphFrom(j.at("graph"), source);
        g.variant = parseVariant(j.value("variant", std::string("standard")));
        g.points = doc.points->points;
        if (j.contains("independent_sets")) {
          g.independentSets = asIndexLists(j.at("independent_sets"), source, "independent_sets");
        }
        const auto rebuilt = buildGadget(g.graph, g.variant);
        if (rebuilt.points.toVectors() != g.points.toVectors()) {
          schema(source, "points do not match the embedded graph");
        }
        doc.gadget = std::move(g);
      }
    } else if (doc.kind == "finite_metric") {
      const std::size_t n = asIndex(field(j, "n", source), source, "n");
      std::vector<double> dist;
      const auto& rows = field(j, "dist", source);
      if (!rows.is_array() || rows.size() != n) schema(source, "dist must have n rows");
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) schema(source, "dist must have n columns");
        for (const auto& v : row) dist.push_back(asNumber(v, source));
      }
      const bool twoValued = j.value("two_valued", false);
      doc.metric = MetricInstance{FiniteMetric(n, std::move(dist), twoValued), optionalK(j, source)};
    } else if (doc.kind == "setsystem") {
      const std::size_t n = asIndex(field(j, "n", source), source, "n");
      doc.setSystem = SetSystemInstance{SetSystem(n, asIndexLists(field(j, "sets", source), source, "sets")),
                                        optionalK(j, source)};
    } else if (doc.kind == "graph") {
      GraphInstance g{graphFrom(j, source), std::nullopt};
      if (j.contains("independent_sets")) {
        g.independentSets = asIndexLists(j.at("independent_sets"), source, "independent_sets");
      }
      doc.graph = std::move(g);
    } else if (doc.kind == "johnson") {
      JohnsonInstance inst;
      inst.n = asIndex(field(j, "n", source), source, "n");
      inst.z = asIndex(field(j, "z", source), source, "z");
      inst.sets = asIndexLists(field(j, "sets", source), source, "sets");
      inst.k = optionalK(j, source);
      inst.validate();
      doc.johnson = std::move(inst);
    } else {
      schema(source, "unknown kind \"" + doc.kind + "\"");
    }
    return doc;
  });
}

Document readDocument(const std::string& path) { return parseDocument(readFile(path), path); }

std::vector<IndexList> parseIndependentSets(const std::string& text, const std::string& source) {
  const json j = parseText(text, source);
  return wrap(source, [&] {
    if (j.is_array()) return asIndexLists(j, source, "sets");
    return asIndexLists(field(j, "sets", source), source, "sets");
  });
}

std::string formatNumber(double v) {
  char buf[40];
  if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 9007199254740992.0) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  }
  return buf;
}

namespace {

std::string indexRow(const IndexList& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(row[i]);
  }
  return s + "]";
}

std::string numberRow(std::span<const double> row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ",";
    s += formatNumber(row[i]);
  }
  return s + "]";
}

template <typename Rows, typename Fmt>
std::string block(const Rows& rows, Fmt&& fmt) {
  std::string s = "[";
  bool first = true;
  for (const auto& r : rows) {
    s += first ? "\n    " : ",\n    ";
    s += fmt(r);
    first = false;
  }
  return s + (first ? "]" : "\n  ]");
}

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

std::string graphBody(const OrientedGraph& graph) {
  std::vector<IndexList> edges;
  for (const auto& [u, v] : graph.arcs()) edges.push_back({u, v});
  return "\"n\": " + std::to_string(graph.vertexCount()) +
         ", \"edges\": " + block(edges, indexRow);
}

}  // namespace

std::string toJson(const PointSet& points, std::size_t k) {
  std::vector<Vector> rows = points.toVectors();
  return "{\n  \"kind\": \"points\",\n  \"metric\": " + quoted(metricName(points.metric())) +
         ",\n  \"dim\": " + std::to_string(points.dim()) + ",\n  \"k\": " + std::to_string(k) +
         ",\n  \"points\": " + block(rows, [](const Vector& r) { return numberRow(r); }) + "\n}\n";
}

std::string toJson(const FiniteMetric& metric, std::size_t k) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    rows.emplace_back(metric.matrix().begin() + static_cast<std::ptrdiff_t>(i * metric.size()),
                      metric.matrix().begin() + static_cast<std::ptrdiff_t>((i + 1) * metric.size()));
  }
  return "{\n  \"kind\": \"finite_metric\",\n  \"n\": " + std::to_string(metric.size()) +
         ",\n  \"two_valued\": " + (metric.twoValued() ? "true" : "false") +
         ",\n  \"k\": " + std::to_string(k) +
         ",\n  \"dist\": " + block(rows, [](const Vector& r) { return numberRow(r); }) + "\n}\n";
}

std::string toJson(const SetSystem& system, std::size_t k) {
  return "{\n  \"kind\": \"setsystem\",\n  \"n\": " + std::to_string(system.universeSize()) +
         ",\n  \"k\": " + std::to_string(k) + ",\n  \"sets\": " + block(system.sets(), indexRow) +
         "\n}\n";
}

std::string toJson(const OrientedGraph& graph,
                   const std::optional<std::vector<IndexList>>& independentSets) {
  std::string s = "{\n  \"kind\": \"graph\",\n  " + graphBody(graph);
  if (independentSets) s += ",\n  \"independent_sets\": " + block(*independentSets, indexRow);
  return s + "\n}\n";
}

std::string toJson(const JohnsonInstance& instance) {
  return "{\n  \"kind\": \"johnson\",\n  \"n\": " + std::to_string(instance.n) +
         ",\n  \"z\": " + std::to_string(instance.z) + ",\n  \"k\": " + std::to_string(instance.k) +
         ",\n  \"sets\": " + block(instance.sets, indexRow) + "\n}\n";
}

std::string toJson(const GadgetInstance& gadget, std::size_t k) {
  std::string s = toJson(gadget.points, k);
  s.resize(s.size() - 3);  // drop "\n}\n"
  s += ",\n  \"variant\": " + quoted(variantName(gadget.variant));
  s += ",\n  \"graph\": {" + graphBody(gadget.graph) + "}";
  if (gadget.independentSets) {
    s += ",\n  \"independent_sets\": " + block(*gadget.independentSets, indexRow);
  }
  return s + "\n}\n";
}

}  // namespace hardclust::io
