#ifndef BCODEC_RSK_HPP_
#define BCODEC_RSK_HPP_

#include <cstddef>
#include <vector>

#include "bcodec/tableau.hpp"

namespace bcodec {

// Insertion tableau P and recording tableau Q of a word.
struct RskPair {
  RealTableau p;
  StandardTableau q;

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

struct Insertion {
  RealTableau tableau;
  Cell created;
};

// Schensted row insertion: v displaces the smallest entry greater than v in
// row 1, the displaced entry is inserted into row 2, and so on.
// Throws Error(DuplicateValue) if v is already an entry of p.
Insertion row_insert(const RealTableau& p, double v);

// Incremental RSK engine. Holds P and Q in mutable row storage so a long
// realization can be fed one value at a time without copying.
class RowInserter {
 public:
  RowInserter() = default;

  // Inserts v (which must differ from every current entry) and returns the
  // newly created cell. When bump_path is given it receives, for every row
  // visited, the cell where the travelling value came to rest; the last
  // element is the created cell.
  Cell insert(double v, std::vector<Cell>* bump_path = nullptr);

  std::size_t size() const noexcept { return steps_; }
  const std::vector<std::vector<double>>& p_rows() const noexcept { return p_; }
  const std::vector<std::vector<int>>& q_rows() const noexcept { return q_; }

  RealTableau p() const { return RealTableau(unchecked, p_); }
  StandardTableau q() const { return StandardTableau(unchecked, q_); }
  RskPair pair() const { return {p(), q()}; }
  YoungDiagram shape() const;

 private:
  std::vector<std::vector<double>> p_;
  std::vector<std::vector<int>> q_;
  std::size_t steps_ = 0;
};

RskPair rsk(const Realization& x);

// Reverse bumping in decreasing order of Q's entries.
// Throws ShapeMismatch when the shapes differ and InvalidTableau when either
// tableau fails validation.
Realization inverse_rsk(const RealTableau& p, const StandardTableau& q);
Realization inverse_rsk(const RskPair& pair);

// ---- Knuth equivalence ------------------------------------------------------

// Words reachable by one elementary move on three adjacent positions:
// bac <-> bca and acb <-> cab for a < b < c.
std::vector<Realization> knuth_neighbors(const Realization& w);

// Equality of insertion tableaux. Throws LengthMismatch or
// EntryMultisetMismatch when the words cannot be equivalent for trivial reasons.
bool knuth_equivalent(const Realization& w1, const Realization& w2);

// Equality of recording tableaux. Throws LengthMismatch.
bool dual_knuth_equivalent(const Realization& w1, const Realization& w2);

inline constexpr std::size_t kMaxBfsLength = 10;

// Reachability by breadth-first search over knuth_neighbors. Exponential;
// words longer than kMaxBfsLength raise Error(LengthLimit).
bool knuth_reachable(const Realization& w1, const Realization& w2);

// The full Knuth class of w, sorted lexicographically.
std::vector<Realization> knuth_class(const Realization& w);

// Word -> permutation of 1..n in one-line notation (rank of each entry).
std::vector<int> rank_pattern(const Realization& w);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace bcodec

#endif  // BCODEC_RSK_HPP_
