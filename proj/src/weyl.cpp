#include "bcodec/weyl.hpp"

#include <algorithm>
#include <bit>

namespace bcodec {

namespace {

// Binary indexed tree over positions 1..n holding counts.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t pos, std::int64_t delta) {
    for (; pos < tree_.size(); pos += pos & (~pos + 1)) tree_[pos] += delta;
  }

  std::int64_t prefix(std::size_t pos) const {
    std::int64_t s = 0;
    for (; pos > 0; pos -= pos & (~pos + 1)) s += tree_[pos];
    return s;
  }

  // Smallest position whose prefix sum reaches k (k >= 1, counts nonnegative).
  std::size_t find_kth(std::int64_t k) const {
    std::size_t pos = 0;
    for (std::size_t step = std::bit_floor(tree_.size() - 1); step > 0; step >>= 1) {
      if (pos + step < tree_.size() && tree_[pos + step] < k) {
        pos += step;
        k -= tree_[pos];
      }
    }
    return pos + 1;
  }

 private:
  std::vector<std::int64_t> tree_;
};

}  // namespace

bool is_valid_z(const std::vector<std::int64_t>& z) noexcept {
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] < 1 || z[k] > static_cast<std::int64_t>(k + 1)) return false;
  }
  return true;
}

ZSequence::ZSequence(std::vector<std::int64_t> z) : z_(std::move(z)) {
  if (!is_valid_z(z_)) throw Error(ErrorCode::InvalidZ, "z_k must lie in {1..k}");
}

ZSequence encode_weyl(const Realization& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r + 1;

  Fenwick seen(n);
  std::vector<std::int64_t> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    seen.add(rank[k], 1);
    z[k] = seen.prefix(rank[k]);
  }
  return ZSequence(unchecked, std::move(z));
}

std::vector<std::int64_t> ranking_from_z(const ZSequence& z) {
  const std::size_t n = z.size();
  // Walk backwards: x_n holds rank z_n among all n, x_{n-1} takes the
  // z_{n-1}-th smallest of the ranks still free, and so on.
  Fenwick free_ranks(n);
  for (std::size_t r = 1; r <= n; ++r) free_ranks.add(r, 1);
  std::vector<std::int64_t> ranks(n);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t r = free_ranks.find_kth(z[k]);
    ranks[k] = static_cast<std::int64_t>(r);
    free_ranks.add(r, -1);
  }
  return ranks;
}

ZSequence shift_w(const ZSequence& z) {
  if (z.size() < 2) throw Error(ErrorCode::TooShort, "shift needs at least two coordinates");
  const auto ranks = ranking_from_z(z);
  std::vector<std::int64_t> out(z.size() - 1);
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const bool first_above = ranks[0] > ranks[k + 1];
    out[k] = first_above ? z[k + 1] : z[k + 1] - 1;
  }
  return ZSequence(unchecked, std::move(out));
}

std::int64_t d_stat(const ZSequence& z) {
  const std::size_t n = z.size();
  if (n < 2) return 0;
  const auto ranks = ranking_from_z(z);
  // values below x_1 among x_2..x_n, minus x_n itself when it is one of them
  std::int64_t d = ranks[0] - 1;
  if (ranks[n - 1] < ranks[0]) --d;
  return d;
}

double decode_first_weyl(const ZSequence& z) {
  if (z.size() == 0) return 0.0;
  return static_cast<double>(d_stat(z)) / static_cast<double>(z.size());
}

}  // namespace bcodec
