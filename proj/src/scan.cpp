#include "qring/scan.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "qring/errors.hpp"

namespace qring {

std::size_t worker_count() {
  const char* env = std::getenv("QRING_WORKERS");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 64)
      fail(errc::rejected_input, "QRING_WORKERS must be an integer in [1, 64], got \"" +
                                     std::string(env) + "\"");
    return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<std::size_t>(hw);
}

std::vector<std::pair<std::size_t, std::size_t>> split_range(std::size_t n, std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  if (n == 0 || k == 0) return chunks;
  if (k > n) k = n;
  std::size_t base = n / k, extra = n % k, begin = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    chunks.emplace_back(begin, begin + len);
    begin += len;
  }
  return chunks;
}

void run_chunked(std::size_t n,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  auto chunks = split_range(n, worker_count());
  if (chunks.size() <= 1) {
    if (!chunks.empty()) body(0, chunks[0].first, chunks[0].second);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks.size());
  auto guarded = [&](std::size_t c) {
    try {
      body(c, chunks[c].first, chunks[c].second);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(chunks.size() - 1);
  for (std::size_t c = 1; c < chunks.size(); ++c) pool.emplace_back(guarded, c);
  guarded(0);
  for (auto& t : pool) t.join();
  // Lowest chunk's failure wins so error identity is worker-count independent.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace qring
