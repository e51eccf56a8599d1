#pragma once

#include <cstdint>

namespace pcs {

// splitmix64 finalizer; decorrelates derived seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t a) { return mix64(base ^ mix64(a)); }

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b) {
  return mix64(derive_seed(base, a) ^ mix64(b + 1));
}

inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b, uint64_t c) {
  return mix64(derive_seed(base, a, b) ^ mix64(c + 2));
}

}  // namespace pcs
