#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hardclust/error.hpp"
#include "hardclust/graph.hpp"
#include "hardclust/johnson.hpp"
#include "hardclust/linf_gadget.hpp"
#include "hardclust/metric.hpp"
#include "hardclust/set_system.hpp"

namespace hardclust::io {

/// Malformed JSON or a document that does not describe the expected
/// instance. line/column are 1-based and 0 when unknown.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& contents);

struct PointsInstance {
  PointSet points;
  std::size_t k = 1;
};

struct MetricInstance {
  FiniteMetric metric;
  std::size_t k = 1;
};

struct SetSystemInstance {
  SetSystem system;
  std::size_t k = 1;
};

struct GraphInstance {
  OrientedGraph graph;
  std::optional<std::vector<IndexList>> independentSets;
};

/// Any supported document, dispatched on "kind".
struct Document {
  std::string kind;
  std::optional<PointsInstance> points;
  std::optional<MetricInstance> metric;
  std::optional<SetSystemInstance> setSystem;
  std::optional<GraphInstance> graph;
  std::optional<JohnsonInstance> johnson;
  /// Present for points documents produced by `reduce linf`.
  std::optional<GadgetInstance> gadget;
};

/// Parses text; `source` prefixes error messages.
Document parseDocument(const std::string& text, const std::string& source = "<input>");
Document readDocument(const std::string& path);

/// Independent-set certificate: {"kind":"independent_sets","sets":[[...]]}
/// or a bare array of arrays.
std::vector<IndexList> parseIndependentSets(const std::string& text,
                                            const std::string& source = "<input>");

std::string toJson(const PointSet& points, std::size_t k);
std::string toJson(const FiniteMetric& metric, std::size_t k);
std::string toJson(const SetSystem& system, std::size_t k);
std::string toJson(const OrientedGraph& graph,
                   const std::optional<std::vector<IndexList>>& independentSets = std::nullopt);
std::string toJson(const JohnsonInstance& instance);
std::string toJson(const GadgetInstance& gadget, std::size_t k);

/// %.17g, with integral values below 2^53 printed without exponent.
std::string formatNumber(double v);

}  // namespace hardclust::io
