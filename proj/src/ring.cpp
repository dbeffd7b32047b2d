#include "tsgcd/ring.hpp"

namespace tsgcd {

std::vector<std::uint64_t> MulCostModel::partial_products() const {
  std::vector<std::uint64_t> delta{1};
  for (auto d : degrees) delta.push_back(delta.back() * d);
  return delta;
}

std::uint64_t mul_cost_bound(const MulCostModel& model) {
  const auto delta = model.partial_products();
  std::uint64_t D = 0;
  for (std::size_t k = 1; k < delta.size(); ++k) {
    const std::uint64_t d = model.degrees[k - 1];
    D = (2 * d - 1) * D + d * (d - 1) * delta[k - 1] * delta[k - 1];
  }
  return delta.back() * delta.back() + D;
}

}  // namespace tsgcd
