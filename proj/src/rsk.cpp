#include "bcodec/rsk.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace bcodec {

Cell RowInserter::insert(double v, std::vector<Cell>* bump_path) {
  if (bump_path != nullptr) bump_path->clear();
  ++steps_;
  const int stamp = static_cast<int>(steps_);
  double travelling = v;
  for (std::size_t r = 0;; ++r) {
    if (r == p_.size()) {
      p_.push_back({travelling});
      q_.push_back({stamp});
      const Cell created{static_cast<int>(r) + 1, 1};
      if (bump_path != nullptr) bump_path->push_back(created);
      return created;
    }
    auto& row = p_[r];
    auto it = std::upper_bound(row.begin(), row.end(), travelling);
    const int col = static_cast<int>(it - row.begin()) + 1;
    if (bump_path != nullptr) bump_path->push_back({static_cast<int>(r) + 1, col});
    if (it == row.end()) {
      row.push_back(travelling);
      q_[r].push_back(stamp);
      return {static_cast<int>(r) + 1, col};
    }
    std::swap(*it, travelling);
  }
}

YoungDiagram RowInserter::shape() const {
  std::vector<int> lens;
  lens.reserve(p_.size());
  for (const auto& r : p_) lens.push_back(static_cast<int>(r.size()));
  return YoungDiagram(std::move(lens));
}

Insertion row_insert(const RealTableau& p, double v) {
  for (const auto& row : p.rows()) {
    if (std::find(row.begin(), row.end(), v) != row.end()) {
      throw Error(ErrorCode::DuplicateValue, "value already present in tableau");
    }
  }
  auto rows = p.rows();
  double travelling = v;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({travelling});
      return {RealTableau(unchecked, std::move(rows)), Cell{static_cast<int>(r) + 1, 1}};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), travelling);
    if (it == row.end()) {
      row.push_back(travelling);
      const int col = static_cast<int>(row.size());
      return {RealTableau(unchecked, std::move(rows)), Cell{static_cast<int>(r) + 1, col}};
    }
    std::swap(*it, travelling);
  }
}

RskPair rsk(const Realization& x) {
  RowInserter ins;
  for (double v : x.values()) ins.insert(v);
  return ins.pair();
}

Realization inverse_rsk(const RealTableau& p, const StandardTableau& q) {
  if (p.shape() != q.shape()) {
    throw Error(ErrorCode::ShapeMismatch, "P and Q must have the same shape");
  }
  if (!validate_real(p.rows()) || !validate_standard(q.rows())) {
    throw Error(ErrorCode::InvalidTableau, "inverse_rsk needs a valid P and a standard Q");
  }
  const std::size_t n = q.size();
  // locate each recording stamp
  std::vector<Cell> where(n + 1);
  for (std::size_t i = 0; i < q.rows().size(); ++i) {
    for (std::size_t j = 0; j < q.rows()[i].size(); ++j) {
      where[static_cast<std::size_t>(q.rows()[i][j])] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  }
  auto rows = p.rows();
  std::vector<double> word(n);
  for (std::size_t k = n; k >= 1; --k) {
    // Stamp k sits at an outer corner of the current shape.
    const Cell c = where[k];
    auto r = static_cast<std::size_t>(c.row - 1);
    double travelling = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    while (r-- > 0) {
      auto& row = rows[r];
      // largest entry smaller than the travelling value
      auto it = std::lower_bound(row.begin(), row.end(), travelling);
      --it;
      std::swap(*it, travelling);
    }
    word[k - 1] = travelling;
  }
  return Realization(unchecked, std::move(word));
}

Realization inverse_rsk(const RskPair& pair) { return inverse_rsk(pair.p, pair.q); }

std::vector<Realization> knuth_neighbors(const Realization& w) {
  std::vector<Realization> out;
  const auto& v = w.values();
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    const double x = v[i], y = v[i + 1], z = v[i + 2];
    auto swapped = [&](std::size_t a, std::size_t b) {
      auto copy = v;
      std::swap(copy[a], copy[b]);
      out.emplace_back(unchecked, std::move(copy));
    };
    // bac <-> bca: the first letter is the middle value, swap the last two
    if ((y < x && x < z) || (z < x && x < y)) swapped(i + 1, i + 2);
    // acb <-> cab: the last letter is the middle value, swap the first two
    if ((x < z && z < y) || (y < z && z < x)) swapped(i, i + 1);
  }
  return out;
}

namespace {

void require_same_length(const Realization& w1, const Realization& w2) {
  if (w1.size() != w2.size()) {
    throw Error(ErrorCode::LengthMismatch, "words have different lengths");
  }
}

void require_same_entries(const Realization& w1, const Realization& w2) {
  require_same_length(w1, w2);
  auto a = w1.values();
  auto b = w2.values();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorCode::EntryMultisetMismatch, "words use different entries");
}

}  // namespace

bool knuth_equivalent(const Realization& w1, const Realization& w2) {
  require_same_entries(w1, w2);
  return rsk(w1).p == rsk(w2).p;
}

bool dual_knuth_equivalent(const Realization& w1, const Realization& w2) {
  require_same_length(w1, w2);
  return rsk(w1).q == rsk(w2).q;
}

std::vector<Realization> knuth_class(const Realization& w) {
  if (w.size() > kMaxBfsLength) {
    throw Error(ErrorCode::LengthLimit, "breadth-first Knuth closure limited to short words");
  }
  std::set<std::vector<double>> seen{w.values()};
  std::deque<Realization> frontier{w};
  while (!frontier.empty()) {
    const Realization cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& nb : knuth_neighbors(cur)) {
      if (seen.insert(nb.values()).second) frontier.push_back(std::move(nb));
    }
  }
  std::vector<Realization> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.emplace_back(unchecked, v);
  return out;
}

bool knuth_reachable(const Realization& w1, const Realization& w2) {
  require_same_entries(w1, w2);
  const auto cls = knuth_class(w1);
  return std::binary_search(cls.begin(), cls.end(), w2, [](const Realization& a, const Realization& b) {
    return a.values() < b.values();
  });
}

std::vector<int> rank_pattern(const Realization& w) {
  const auto& v = w.values();
  std::vector<int> order(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return v[a] < v[b]; });
  std::vector<int> rank(v.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;
  return rank;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

}  // namespace bcodec
