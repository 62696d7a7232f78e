#ifndef QAM_RANDOM_HPP
#define QAM_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "qam/state.hpp"

namespace qam {

using Rng = std::mt19937_64;

/// Generator for sub-stream `index` of a master seed: seeded with
/// seed XOR index, so stream 0 is the master stream itself.
Rng make_stream(std::uint64_t seed, std::uint64_t index = 0);

/// Uniform draw in [0, 1).
double uniform01(Rng& rng);

/// Uniform point on the unit sphere of R^dim or C^dim: i.i.d. standard
/// normal components (real and imaginary parts in COMPLEX mode), normalized.
UnitState random_unit_vector(std::size_t dim, Field field, Rng& rng);

/// Number of trials per sub-stream for chunked Monte Carlo loops. Fixed, so
/// the assignment of trials to streams never depends on the thread count.
inline constexpr std::size_t kTrialsPerStream = 4096;

inline std::size_t stream_count(std::size_t trials) {
  return (trials + kTrialsPerStream - 1) / kTrialsPerStream;
}

/// Runs fn(c) for c in [0, chunks) on up to `threads` workers. Callers keep
/// one result slot per chunk and reduce in chunk order afterwards.
void run_chunks(std::size_t chunks, unsigned threads,
                const std::function<void(std::size_t)>& fn);

}  // namespace qam

#endif  // QAM_RANDOM_HPP
