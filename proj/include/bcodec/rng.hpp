#ifndef BCODEC_RNG_HPP_
#define BCODEC_RNG_HPP_

#include <cstdint>
#include <limits>

namespace bcodec {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Key of an independent substream, e.g. (master seed, trial index).
constexpr std::uint64_t derive_key(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(mix64(master ^ 0x6a09e667f3bcc909ULL) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Counter-based stream: draw i is a pure function of (key, i), so any
// trial can be regenerated without replaying the others.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterStream(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr std::uint64_t at(std::uint64_t counter) const noexcept {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * (counter + 1));
  }

  result_type operator()() noexcept { return at(counter_++); }

  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t position() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bcodec

#endif  // BCODEC_RNG_HPP_
