#include "hardclust/report.hpp"

#include "hardclust/error.hpp"
#include "hardclust/json_io.hpp"

namespace hardclust {

TsvReport::TsvReport(std::vector<std::string> header) : header_(std::move(header)) {}

void TsvReport::addRow(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw InvalidInput("report row has " + std::to_string(row.size()) + " fields, expected " +
                       std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

void TsvReport::setMeta(const std::string& key, const std::string& value) {
  for (auto& [k, v] : meta_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  meta_.emplace_back(key, value);
}

namespace {

void appendLine(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += '\t';
    out += fields[i];
  }
  out += '\n';
}

}  // namespace

std::string TsvReport::str() const {
  std::string out;
  appendLine(out, header_);
  for (const auto& r : rows_) appendLine(out, r);
  for (const auto& [k, v] : meta_) out += "#" + k + "\t" + v + "\n";
  return out;
}

std::string num(double v) { return io::formatNumber(v); }

}  // namespace hardclust
