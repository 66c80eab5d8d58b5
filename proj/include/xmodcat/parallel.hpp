#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "report.hpp"

namespace xmodcat {

/// Worker count: XMODCAT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("XMODCAT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

/// Runs `body(begin, end, report)` over [0, n) in fixed-size chunks and
/// merges the per-chunk reports in chunk order. Chunk boundaries do not
/// depend on the thread count, so the merged report is the same for any
/// number of workers.
template <class Body>
Report parallel_check(std::uint64_t n, std::size_t cap, Body&& body, std::uint64_t chunk = 4096) {
  if (n == 0) return Report(cap);
  const std::uint64_t chunks = (n + chunk - 1) / chunk;
  std::vector<Report> parts(chunks, Report(cap));
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), chunks));

  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t b = c * chunk;
    body(b, std::min(n, b + chunk), parts[c]);
  };

  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  Report out(cap);
  for (const auto& p : parts) out.merge(p);
  return out;
}

/// How a verification suite covers its quantifier space.
struct VerifyOptions {
  enum class Mode { Auto, Exhaustive, Sampled };
  Mode mode = Mode::Auto;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  /// Auto mode enumerates when the instance count is at most this.
  std::uint64_t exhaustive_limit = 10'000'000;
  std::size_t cap = Report::kDefaultCap;

  bool exhaustive_for(std::uint64_t instances) const {
    switch (mode) {
      case Mode::Exhaustive: return true;
      case Mode::Sampled: return false;
      case Mode::Auto: return instances <= exhaustive_limit;
    }
    return true;
  }
};

/// splitmix64: a stateless mixer so sample i is a pure function of (seed, i).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-sample stream, independent of thread scheduling.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t sample) : state_(mix64(seed ^ mix64(sample + 0x51ed2701ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace xmodcat
