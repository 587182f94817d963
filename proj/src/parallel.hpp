#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace dakc::detail {

// Scans indices [0, count) and returns the smallest index whose probe yields
// a value. Work is handed out in contiguous chunks in increasing order, so
// the answer does not depend on the thread count.
template <typename Probe>
auto first_hit(std::uint64_t count, int threads, Probe&& probe)
    -> std::optional<std::pair<std::uint64_t, typename std::invoke_result_t<Probe&, std::uint64_t>::value_type>> {
  using Value = typename std::invoke_result_t<Probe&, std::uint64_t>::value_type;
  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  std::mutex mutex;
  std::optional<Value> best_value;

  auto worker = [&] {
    while (true) {
      const std::uint64_t chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      const std::uint64_t begin = chunk * kChunk;
      if (begin >= best.load()) return;
      const std::uint64_t end = std::min(count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i >= best.load()) return;
        if (auto value = probe(i)) {
          std::lock_guard lock(mutex);
          if (i < best.load()) {
            best.store(i);
            best_value = std::move(value);
          }
          return;
        }
      }
    }
  };

  const auto workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, std::max<std::uint64_t>(chunks, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (!best_value) return std::nullopt;
  return std::make_pair(best.load(), std::move(*best_value));
}

}  // namespace dakc::detail
