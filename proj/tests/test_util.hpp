#ifndef MODRAD_TESTS_TEST_UTIL_HPP
#define MODRAD_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "modrad/exactlin.hpp"

namespace modrad::testutil {

// Deterministic RNG for the hand-rolled property tests. mt19937_64 output is
// fixed by the standard, so seeds reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

inline exactlin::IntMatrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                         std::int64_t magnitude) {
  exactlin::IntMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = Int(rng.uniform(-magnitude, magnitude));
    }
  }
  return m;
}

inline exactlin::IntVector make_vector(std::vector<std::int64_t> entries) {
  exactlin::IntVector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = Int(entries[i]);
  return v;
}

inline exactlin::IntMatrix make_matrix(Eigen::Index rows, Eigen::Index cols,
                                       std::vector<std::int64_t> row_major) {
  exactlin::IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Int(row_major[static_cast<std::size_t>(i * cols + j)]);
    }
  }
  return m;
}

}  // namespace modrad::testutil

#endif  // MODRAD_TESTS_TEST_UTIL_HPP
