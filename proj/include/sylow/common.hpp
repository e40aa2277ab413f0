#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylow {

// Thrown for malformed requests (bad arguments, unknown ids, mismatched fields).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for unsupported (p, n) / family combinations and bad configuration values.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computation exceeds a configured resource cap.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::uint64_t group_enum = 531441;     // largest group order enumerated whole
  std::uint64_t aut_order = 1'000'000;   // largest automorphism group enumerated
  std::uint64_t aut_nodes = 100'000'000; // backtracking node budget
  int threads = 0;                       // 0 = hardware concurrency
  std::uint64_t seed = 0;                // seed for sampled property checks
};

// Dense bit set indexed by element index.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  // Calls fn(index) for every set bit, ascending.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        fn(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::size_t first_set() const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return wi * 64 + static_cast<unsigned>(__builtin_ctzll(w_[wi]));
    return n_;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

} // namespace sylow
