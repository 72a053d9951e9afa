#include "arbor/limbs.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace arbor {

LimbProfile limb_profile(const Tree& t) {
  int n = t.order();
  LimbProfile lp;
  if (n < 2) return lp;
  lp.ell.assign(n - 1, 0);
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : t.neighbors(order[i]))
      if (y != parent[order[i]]) {
        parent[y] = order[i];
        order.push_back(y);
      }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  // Each edge {p, c} yields the limb T_{p,c} of order size[c] and T_{c,p} of order n - size[c].
  for (Vertex c = 0; c < n; ++c) {
    if (parent[c] < 0) continue;
    ++lp.ell[size[c] - 1];
    ++lp.ell[n - size[c] - 1];
  }
  return lp;
}

int spider_limb_formula(std::span<const int> legs, int k) {
  if (legs.size() < 3) throw TreeError(TreeErrc::InvalidSpider, "a spider needs at least 3 legs");
  int n = 1 + std::accumulate(legs.begin(), legs.end(), 0);
  if (k < 1 || k > n - 1) throw std::out_of_range("limb index " + std::to_string(k) + " not in 1.." + std::to_string(n - 1));
  int total = 0;
  for (int len : legs) total += (k <= len ? 1 : 0) + (k >= n - len ? 1 : 0);
  return total;
}

}  // namespace arbor
