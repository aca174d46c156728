#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace manet {

/// Simulation clock value. Fixed-point microseconds so that identical
/// scenarios replay bit-identically on every platform.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime fromMicros(std::int64_t us) { return SimTime(us); }

  static SimTime fromSeconds(double s) {
    return SimTime(static_cast<std::int64_t>(std::llround(s * 1e6)));
  }

  static constexpr SimTime max() {
    return SimTime(std::numeric_limits<std::int64_t>::max());
  }

  constexpr std::int64_t micros() const { return m_us; }
  double seconds() const { return static_cast<double>(m_us) * 1e-6; }

  constexpr bool isNegative() const { return m_us < 0; }

  friend constexpr auto operator<=>(SimTime, SimTime) = default;

  constexpr SimTime operator+(SimTime o) const { return SimTime(m_us + o.m_us); }
  constexpr SimTime operator-(SimTime o) const { return SimTime(m_us - o.m_us); }
  constexpr SimTime operator*(std::int64_t n) const { return SimTime(m_us * n); }
  SimTime& operator+=(SimTime o) { m_us += o.m_us; return *this; }

 private:
  explicit constexpr SimTime(std::int64_t us) : m_us(us) {}
  std::int64_t m_us = 0;
};

inline std::ostream& operator<<(std::ostream& os, SimTime t) {
  return os << t.micros();
}

}  // namespace manet
