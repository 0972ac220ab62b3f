#pragma once

// Seeded random streams and a deterministic chunked parallel loop.
//
// Every stochastic routine splits its work into fixed-size chunks; chunk k
// draws from its own stream seeded by substream_seed(master, k). Results are
// therefore bit-identical for a given seed regardless of thread count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace halfball {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    double u;
    do u = uniform();
    while (u == 0.0);
    return u;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
  }
  /// Standard normal via Box-Muller (portable across standard libraries).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * 3.14159265358979323846 * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Runs body(i) for i in [0, count) across hardware threads. body must only
/// write to per-index output slots.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Pairwise (cascade) summation; order-independent of how the input was produced.
inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

inline constexpr std::int64_t kChunkSize = 1 << 15;

/// Counts the draws for which trial(rng) is true, over `samples` draws split
/// into fixed chunks with independent substreams.
template <class Trial>
std::int64_t chunked_hits(std::int64_t samples, std::uint64_t seed, Trial&& trial) {
  if (samples <= 0) return 0;
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunkSize - 1) / kChunkSize);
  std::vector<std::int64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng(substream_seed(seed, c));
    const std::int64_t begin = static_cast<std::int64_t>(c) * kChunkSize;
    const std::int64_t end = std::min(samples, begin + kChunkSize);
    std::int64_t local = 0;
    for (std::int64_t i = begin; i < end; ++i) local += trial(rng) ? 1 : 0;
    hits[c] = local;
  });
  std::int64_t total = 0;
  for (auto h : hits) total += h;
  return total;
}

/// Draws `count` values, draw(rng) per item, in deterministic chunk order.
template <class T, class Draw>
std::vector<T> chunked_draws(std::int64_t count, std::uint64_t seed, Draw&& draw) {
  std::vector<std::vector<T>> parts(count > 0 ? static_cast<std::size_t>((count + kChunkSize - 1) / kChunkSize) : 0);
  parallel_for(parts.size(), [&](std::size_t c) {
    Rng rng(substream_seed(seed, c));
    const std::int64_t begin = static_cast<std::int64_t>(c) * kChunkSize;
    const std::int64_t end = std::min(count, begin + kChunkSize);
    parts[c].reserve(static_cast<std::size_t>(end - begin));
    for (std::int64_t i = begin; i < end; ++i) parts[c].push_back(draw(rng));
  });
  std::vector<T> out;
  out.reserve(count > 0 ? static_cast<std::size_t>(count) : 0);
  for (auto& p : parts) {
    for (auto& v : p) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace halfball
