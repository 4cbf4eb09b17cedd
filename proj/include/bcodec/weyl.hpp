#ifndef BCODEC_WEYL_HPP_
#define BCODEC_WEYL_HPP_

#include <cstdint>
#include <vector>

#include "bcodec/tableau.hpp"

namespace bcodec {

// A point of the triangular compactum truncated at n: z[k-1] in {1..k}.
class ZSequence {
 public:
  ZSequence() = default;
  // Throws Error(InvalidZ) when some entry leaves {1..k}.
  explicit ZSequence(std::vector<std::int64_t> z);
  ZSequence(unchecked_t, std::vector<std::int64_t> z) : z_(std::move(z)) {}

  const std::vector<std::int64_t>& values() const noexcept { return z_; }
  std::size_t size() const noexcept { return z_.size(); }
  std::int64_t operator[](std::size_t i) const { return z_[i]; }

  friend bool operator==(const ZSequence&, const ZSequence&) = default;

 private:
  std::vector<std::int64_t> z_;
};

bool is_valid_z(const std::vector<std::int64_t>& z) noexcept;

// z_k = #{i <= k : x_i <= x_k}, the rank of x_k among the first k values.
ZSequence encode_weyl(const Realization& x);

// Final ranks r[k] of x_k among x_1..x_n for any x encoding to z.
std::vector<std::int64_t> ranking_from_z(const ZSequence& z);

// The image of the one-sided shift under the rank encoding.
// Throws Error(TooShort) for n < 2.
ZSequence shift_w(const ZSequence& z);

// #{i < n : x_1 > x_i}
std::int64_t d_stat(const ZSequence& z);

// d_n / n, the finite-n estimate of x_1. Zero for the empty sequence.
double decode_first_weyl(const ZSequence& z);

}  // namespace bcodec

#endif  // BCODEC_WEYL_HPP_
