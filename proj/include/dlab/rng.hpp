#pragma once

// Counter-based deterministic random streams. A stream is keyed by
// (master seed, domain, index); the word sequence is a pure function of
// the key, so per-n and per-trial choices are independent, lazily
// materializable, and identical across runs and thread counts.

#include <cstdint>
#include <stdexcept>

namespace dlab {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Steele, Lea, Flood).
inline constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Domains partition the key space so that distinct uses of the same
// master seed never share a word sequence.
enum class StreamDomain : uint64_t {
  SubsetChoice = 1,   // P_n for one denominator n
  CoinSubset = 2,     // uniform-subset model
  Trial = 3,          // per-trial master keys in experiments
  MonteCarlo = 4,     // sample points for membership oracles
  Generic = 5,
};

inline constexpr uint64_t stream_key(uint64_t master, StreamDomain domain,
                                     uint64_t index) {
  uint64_t k = mix64(master + kGolden * static_cast<uint64_t>(domain));
  return mix64(k + kGolden * index);
}

class Stream {
 public:
  Stream(uint64_t master, StreamDomain domain, uint64_t index)
      : key_(stream_key(master, domain, index)) {}

  explicit Stream(uint64_t raw_key) : key_(raw_key) {}

  uint64_t word() { return mix64(key_ + kGolden * ++counter_); }

  // Uniform integer in [0, n), unbiased via rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::domain_error("below(0)");
    if ((n & (n - 1)) == 0) return word() & (n - 1);
    const uint64_t cut = (0 - n) % n;  // 2^64 mod n
    uint64_t r;
    do {
      r = word();
    } while (r < cut);
    return r % n;
  }

  bool bit() {
    if (bits_left_ == 0) {
      buffer_ = word();
      bits_left_ = 64;
    }
    bool b = buffer_ & 1;
    buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
  uint64_t buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace dlab
