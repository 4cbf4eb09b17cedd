#include "bcodec/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bcodec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::InvalidRealization: return "InvalidRealization";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LengthLimit: return "LengthLimit";
    case ErrorCode::EntryMultisetMismatch: return "EntryMultisetMismatch";
    case ErrorCode::InvalidZ: return "InvalidZ";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::EmptyTableau: return "EmptyTableau";
    case ErrorCode::NonpositiveKappa: return "NonpositiveKappa";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OutsideDiagram: return "OutsideDiagram";
    case ErrorCode::CellCountMismatch: return "CellCountMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_young_diagram(std::span<const int> rows) noexcept {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  if (!is_young_diagram(rows_)) {
    throw Error(ErrorCode::InvalidDiagram, "row lengths must be positive and weakly decreasing");
  }
}

int YoungDiagram::row_length(int row) const noexcept {
  if (row < 1 || row > num_rows()) return 0;
  return rows_[row - 1];
}

int YoungDiagram::col_length(int col) const noexcept {
  if (col < 1) return 0;
  // rows_ is decreasing, so the rows reaching column col form a prefix
  auto it = std::partition_point(rows_.begin(), rows_.end(), [col](int len) { return len >= col; });
  return static_cast<int>(it - rows_.begin());
}

std::size_t YoungDiagram::cell_count() const noexcept {
  std::size_t n = 0;
  for (int r : rows_) n += static_cast<std::size_t>(r);
  return n;
}

bool YoungDiagram::contains(Cell c) const noexcept {
  return c.row >= 1 && c.col >= 1 && c.row <= num_rows() && c.col <= rows_[c.row - 1];
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols;
  if (!rows_.empty()) {
    cols.reserve(static_cast<std::size_t>(rows_.front()));
    for (int c = 1; c <= rows_.front(); ++c) cols.push_back(col_length(c));
  }
  return YoungDiagram(std::move(cols));
}

std::size_t cell_count(const YoungDiagram& d) noexcept { return d.cell_count(); }

namespace {

template <class Entry>
bool has_young_shape(const std::vector<std::vector<Entry>>& rows) noexcept {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
  }
  return true;
}

template <class Entry>
bool strictly_increasing(const std::vector<std::vector<Entry>>& rows) noexcept {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j + 1 < rows[i].size() && !(rows[i][j] < rows[i][j + 1])) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && !(rows[i][j] < rows[i + 1][j])) {
        return false;
      }
    }
  }
  return true;
}

template <class Entry>
std::vector<std::vector<Entry>> transpose_rows(const std::vector<std::vector<Entry>>& rows) {
  std::vector<std::vector<Entry>> out;
  if (rows.empty()) return out;
  out.resize(rows.front().size());
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out[j].push_back(r[j]);
  }
  return out;
}

}  // namespace

bool validate_standard(const std::vector<std::vector<int>>& rows) noexcept {
  if (!has_young_shape(rows)) return false;
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& r : rows) {
    for (int v : r) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) return false;
      seen[v] = true;
    }
  }
  return strictly_increasing(rows);
}

bool validate_real(const std::vector<std::vector<double>>& rows) noexcept {
  if (!has_young_shape(rows)) return false;
  std::vector<double> all;
  for (const auto& r : rows) {
    for (double v : r) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) return false;
      all.push_back(v);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  return strictly_increasing(rows);
}

StandardTableau::StandardTableau(Rows rows) : Tableau(std::move(rows)) {
  if (!validate_standard(rows_)) {
    throw Error(ErrorCode::InvalidTableau, "not a standard Young tableau");
  }
}

RealTableau::RealTableau(Rows rows) : Tableau(std::move(rows)) {
  if (!validate_real(rows_)) {
    throw Error(ErrorCode::InvalidTableau,
                "entries must be distinct reals in [0,1] increasing along rows and columns");
  }
}

StandardTableau transpose(const StandardTableau& t) {
  return StandardTableau(unchecked, transpose_rows(t.rows()));
}

RealTableau transpose(const RealTableau& t) {
  return RealTableau(unchecked, transpose_rows(t.rows()));
}

Realization::Realization(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::InvalidRealization, "values must lie in [0,1], got " + std::to_string(v));
    }
  }
  std::vector<double> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw Error(ErrorCode::DuplicateValue, "repeated value " + std::to_string(*it));
  }
}

Realization Realization::drop_first() const {
  if (values_.empty()) return {};
  return Realization(unchecked, std::vector<double>(values_.begin() + 1, values_.end()));
}

Realization Realization::prefix(std::size_t k) const {
  k = std::min(k, values_.size());
  return Realization(unchecked, std::vector<double>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Realization from_permutation(std::span<const int> perm) {
  const double denom = static_cast<double>(perm.size()) + 1.0;
  std::vector<double> values;
  values.reserve(perm.size());
  for (int v : perm) values.push_back(static_cast<double>(v) / denom);
  return Realization(std::move(values));
}

}  // namespace bcodec
