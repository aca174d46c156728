#include "manetsim/rng.hpp"

#include <stdexcept>

namespace manet {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

RngStream RngProvider::stream(std::string_view label) const {
  if (label.empty()) {
    throw std::invalid_argument("rng stream label must be non-empty");
  }
  return RngStream(splitmix64(m_master ^ fnv1a64(label)));
}

}  // namespace manet
