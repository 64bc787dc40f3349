#include "minkq/structure.hpp"

#include <map>
#include <mutex>

namespace minkq {

std::shared_ptr<const SoData> so_data(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const SoData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto data = std::make_shared<SoData>();
  data->g = std::make_shared<const LieAlg>(make_so(p, q));
  data->iw = iwasawa(*data->g);
  data->roots = root_decomposition(*data->g, data->iw.a_basis);
  data->killing = killing_form(*data->g);
  std::shared_ptr<const SoData> shared = data;
  cache.emplace(key, shared);
  return shared;
}

}  // namespace minkq
