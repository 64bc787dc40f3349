#pragma once

#include <cstdint>

#include "minkq/matrix.hpp"

namespace minkq {

// Deterministic sampler (splitmix64 core). Not std::mt19937 + distributions,
// whose outputs are implementation-defined; reports that record a seed must
// be byte-identical across platforms.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], unbiased via rejection
  int next_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  Rat next_rat(int max_num = 9, int max_den = 3) {
    return Rat(next_int(-max_num, max_num), next_int(1, max_den));
  }

  Rat next_nonzero_rat(int max_num = 9, int max_den = 3) {
    Rat r;
    do {
      r = next_rat(max_num, max_den);
    } while (r.is_zero());
    return r;
  }

  // nonzero rational combination of the columns of `basis`
  Mat next_vector_in_span(const Mat& basis) {
    Mat v(basis.rows(), 1);
    do {
      Mat c(basis.cols(), 1);
      for (int i = 0; i < basis.cols(); ++i) c.at(i, 0) = next_rat();
      v = basis * c;
    } while (v.is_zero());
    return v;
  }

  Mat next_matrix(int rows, int cols, int max_num = 9, int max_den = 3) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = next_rat(max_num, max_den);
    return m;
  }

  Mat next_symmetric(int n, int max_num = 9, int max_den = 3) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = next_rat(max_num, max_den);
    return m;
  }

  Mat next_invertible(int n, int max_num = 4, int max_den = 2) {
    while (true) {
      Mat m = next_matrix(n, n, max_num, max_den);
      if (!det(m).is_zero()) return m;
    }
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x6d696e6b71ULL;  // "minkq"

}  // namespace minkq
