#ifndef RIBBONS_ENUMERATE_HPP
#define RIBBONS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ribbons {

// Deterministic partitioned reduction: [0, total) is split into contiguous
// chunks, workers reduce their own chunk, partial results merge in chunk
// order. The outcome is independent of the schedule and the thread count.

inline uint64_t chunked_count(uint64_t total, unsigned threads,
                              const std::function<uint64_t(uint64_t, uint64_t)>& count_range) {
  if (threads <= 1 || total < 2048) return count_range(0, total);
  const unsigned nt = static_cast<unsigned>(std::min<uint64_t>(threads, total));
  std::vector<uint64_t> partial(nt, 0);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned k = 0; k < nt; ++k) {
    const uint64_t lo = total / nt * k + std::min<uint64_t>(k, total % nt);
    const uint64_t hi = lo + total / nt + (k < total % nt ? 1 : 0);
    pool.emplace_back([&partial, k, lo, hi, &count_range] { partial[k] = count_range(lo, hi); });
  }
  for (auto& t : pool) t.join();
  uint64_t sum = 0;
  for (uint64_t v : partial) sum += v;
  return sum;
}

inline constexpr uint64_t kNotFound = ~0ull;

// First index in [0, total) accepted by the scan, or kNotFound. Each worker
// reports the first hit inside its chunk; the minimum is schedule-free.
inline uint64_t chunked_find(uint64_t total, unsigned threads,
                             const std::function<uint64_t(uint64_t, uint64_t)>& find_in_range) {
  if (threads <= 1 || total < 2048) return find_in_range(0, total);
  const unsigned nt = static_cast<unsigned>(std::min<uint64_t>(threads, total));
  std::vector<uint64_t> partial(nt, kNotFound);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned k = 0; k < nt; ++k) {
    const uint64_t lo = total / nt * k + std::min<uint64_t>(k, total % nt);
    const uint64_t hi = lo + total / nt + (k < total % nt ? 1 : 0);
    pool.emplace_back([&partial, k, lo, hi, &find_in_range] { partial[k] = find_in_range(lo, hi); });
  }
  for (auto& t : pool) t.join();
  uint64_t best = kNotFound;
  for (uint64_t v : partial) best = std::min(best, v);
  return best;
}

// little-endian base-p digits of idx
inline void decode_base(uint64_t idx, uint64_t p, int count, uint64_t* out) {
  for (int k = 0; k < count; ++k) {
    out[k] = idx % p;
    idx /= p;
  }
}

// p^e with an overflow guard; anything above cap saturates to cap+1
inline uint64_t checked_pow(uint64_t p, int e, uint64_t cap) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

}  // namespace ribbons

#endif
