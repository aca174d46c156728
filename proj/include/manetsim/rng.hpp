#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace manet {

/// Deterministic random stream. All distribution mapping is done by hand so
/// draws are identical across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : m_gen(seed) {}

  std::uint64_t nextU64() { return m_gen(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniformInt(std::uint64_t bound) {
    // Multiply-shift mapping; bias is negligible for simulation bounds.
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((u128(nextU64()) * u128(bound)) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniformInt(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 m_gen;
};

/// Derives independent named streams from one master seed. The same
/// (seed, label) pair always yields the same sequence, so adding a new
/// consumer under a fresh label cannot perturb existing draws.
class RngProvider {
 public:
  explicit RngProvider(std::uint64_t masterSeed) : m_master(masterSeed) {}

  RngStream stream(std::string_view label) const;

  std::uint64_t masterSeed() const { return m_master; }

 private:
  std::uint64_t m_master;
};

}  // namespace manet
