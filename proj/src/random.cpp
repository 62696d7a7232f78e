#include "qam/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qam/error.hpp"

namespace qam {

Rng make_stream(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ index); }

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

UnitState random_unit_vector(std::size_t dim, Field field, Rng& rng) {
  if (dim == 0) throw PreconditionError("random_unit_vector needs dim >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  double sum_sq = 0.0;
  // A vanishing Gaussian draw has probability zero; redraw if it happens.
  while (sum_sq == 0.0) {
    for (Complex& a : amps) {
      const double re = gauss(rng);
      const double im = field == Field::kComplex ? gauss(rng) : 0.0;
      a = Complex(re, im);
      sum_sq += re * re + im * im;
    }
  }
  const double n = std::sqrt(sum_sq);
  for (Complex& a : amps) a /= n;
  return UnitState(StateVector(std::move(amps)));
}

void run_chunks(std::size_t chunks, unsigned threads,
                const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(chunks, 1));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t c = next++; c < chunks; c = next++) fn(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = chunks;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qam
