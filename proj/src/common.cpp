#include "lcoarea/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lcoarea {

std::uint64_t Rng::integer(std::uint64_t n) {
  if (n == 0) throw InputError("integer(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % n;
}

std::size_t Rng::poisson(double mean) {
  if (!(mean >= 0.0)) throw InputError("poisson mean must be nonnegative");
  std::size_t count = 0;
  // Poisson(a + b) = Poisson(a) + Poisson(b); keep each chunk small enough
  // for exp(-chunk) to stay away from underflow in the inversion product.
  while (mean > 0.0) {
    const double chunk = mean > 30.0 ? 30.0 : mean;
    mean -= chunk;
    const double limit = std::exp(-chunk);
    double prod = uniform();
    while (prod > limit) {
      ++count;
      prod *= uniform();
    }
  }
  return count;
}

int thread_cap() {
  if (const char* env = std::getenv("LCOAREA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
}

void parallel_for(int n, const std::function<void(int)>& f) {
  const int workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lcoarea
