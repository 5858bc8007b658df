#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hardclust {

/// Tab-separated table with a header row, followed by "#key\tvalue"
/// metadata lines.
class TsvReport {
 public:
  explicit TsvReport(std::vector<std::string> header);

  /// Throws InvalidInput if the row width differs from the header.
  void addRow(std::vector<std::string> row);
  void setMeta(const std::string& key, const std::string& value);

  std::string str() const;
  std::size_t rowCount() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// %.17g; integral values print without a decimal point.
std::string num(double v);

}  // namespace hardclust
