#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace semind {

// Worker-pool width used by the internally parallel operations. Results are
// required to be independent of this value.
int worker_count();
void set_worker_count(int k);

// Splits [0, count) into contiguous chunks, applies fn(begin, end) to each
// (possibly concurrently) and returns the per-chunk results in chunk order,
// so any fold over them is deterministic.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::size_t count, Fn fn) {
  int workers = std::max(1, worker_count());
  std::size_t chunk = std::max<std::size_t>(1, (count + workers - 1) / workers);
  std::vector<std::future<Result>> futs;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    std::size_t end = std::min(count, begin + chunk);
    futs.push_back(std::async(std::launch::async,
                              [fn, begin, end] { return fn(begin, end); }));
  }
  std::vector<Result> out;
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace semind
