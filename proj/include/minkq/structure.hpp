#pragma once

#include <memory>

#include "minkq/iwasawa.hpp"
#include "minkq/lie_algebra.hpp"
#include "minkq/root_system.hpp"

namespace minkq {

// Cached structural data for the so(1,n) / so(2,n) families. The decomposition
// work is deterministic, so sharing it across check suites is safe; everything
// here is immutable after construction.
struct SoData {
  std::shared_ptr<const LieAlg> g;
  IwasawaData iw;
  RootDecomp roots;
  Mat killing;
};

std::shared_ptr<const SoData> so_data(int p, int q);

}  // namespace minkq
