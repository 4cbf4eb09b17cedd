#ifndef BCODEC_TABLEAU_HPP_
#define BCODEC_TABLEAU_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bcodec/error.hpp"

namespace bcodec {

// Lattice cell, 1-based: (1,1) is the top-left corner.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A Young diagram given by its weakly decreasing positive row lengths.
// The empty diagram is a legal value.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const noexcept { return rows_; }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  // Zero past the last row.
  int row_length(int row) const noexcept;
  int col_length(int col) const noexcept;
  std::size_t cell_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  bool contains(Cell c) const noexcept;
  YoungDiagram conjugate() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

std::size_t cell_count(const YoungDiagram& d) noexcept;
bool is_young_diagram(std::span<const int> rows) noexcept;

struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

// Rows of entries listed top-down. Shared storage for the two tableau kinds;
// the derived classes own the validation rules.
template <class Entry>
class Tableau {
 public:
  using Rows = std::vector<std::vector<Entry>>;

  const Rows& rows() const noexcept { return rows_; }
  YoungDiagram shape() const;
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool empty() const noexcept { return rows_.empty(); }
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.row <= num_rows() &&
           c.col <= static_cast<int>(rows_[c.row - 1].size());
  }
  // Precondition: contains(c).
  const Entry& at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 protected:
  Tableau() = default;
  explicit Tableau(Rows rows) : rows_(std::move(rows)) {}

  Rows rows_;
};

// Entries 1..n placed bijectively, strictly increasing along rows and columns.
class StandardTableau : public Tableau<int> {
 public:
  StandardTableau() = default;
  // Throws Error(InvalidTableau) unless validate_standard(rows).
  explicit StandardTableau(Rows rows);
  StandardTableau(std::initializer_list<std::vector<int>> rows) : StandardTableau(Rows(rows)) {}
  StandardTableau(unchecked_t, Rows rows) : Tableau(std::move(rows)) {}

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

// Distinct reals in [0,1], strictly increasing along rows and columns.
class RealTableau : public Tableau<double> {
 public:
  RealTableau() = default;
  explicit RealTableau(Rows rows);
  RealTableau(std::initializer_list<std::vector<double>> rows) : RealTableau(Rows(rows)) {}
  RealTableau(unchecked_t, Rows rows) : Tableau(std::move(rows)) {}

  friend bool operator==(const RealTableau&, const RealTableau&) = default;
};

bool validate_standard(const std::vector<std::vector<int>>& rows) noexcept;
bool validate_real(const std::vector<std::vector<double>>& rows) noexcept;

// (i,j) -> (j,i); the result has the conjugate shape.
StandardTableau transpose(const StandardTableau& t);
RealTableau transpose(const RealTableau& t);

// A finite prefix of a realization of the Bernoulli scheme: distinct finite
// values in [0,1].
class Realization {
 public:
  Realization() = default;
  explicit Realization(std::vector<double> values);
  Realization(unchecked_t, std::vector<double> values) : values_(std::move(values)) {}

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  // x_2..x_n
  Realization drop_first() const;
  Realization prefix(std::size_t k) const;

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  std::vector<double> values_;
};

// Realization of a permutation given in one-line notation (values 1..n):
// entries sigma(k)/(n+1).
Realization from_permutation(std::span<const int> perm);

// ----------------------------------------------------------------------------

template <class Entry>
YoungDiagram Tableau<Entry>::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

}  // namespace bcodec

#endif  // BCODEC_TABLEAU_HPP_
