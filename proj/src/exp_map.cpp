#include "t3dt/exp_map.hpp"

#include <algorithm>
#include <map>

namespace t3dt {

bool exp_equal(const LieEigenvalue& x, const LieEigenvalue& y) {
  return x.a == y.a && is_integer(x.s - y.s);
}

bool is_etale(const EigenList& e) {
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j) {
      // lambda_i - lambda_j = 2 pi i k with k != 0
      if (e[i].a == e[j].a && e[i].s != e[j].s && is_integer(e[i].s - e[j].s)) return false;
    }
  return true;
}

namespace {

template <class Eq>
Partition partition_by(const EigenList& e, Eq eq) {
  std::vector<int> counts;
  std::vector<size_t> reps;
  for (size_t i = 0; i < e.size(); ++i) {
    bool placed = false;
    for (size_t r = 0; r < reps.size(); ++r)
      if (eq(e[i], e[reps[r]])) {
        counts[r]++;
        placed = true;
        break;
      }
    if (!placed) {
      reps.push_back(i);
      counts.push_back(1);
    }
  }
  if (counts.empty()) return Partition();
  return Partition(counts);
}

}  // namespace

Partition eig_partition(const EigenList& e) {
  return partition_by(e, [](const LieEigenvalue& x, const LieEigenvalue& y) { return x == y; });
}

Partition exp_class_partition(const EigenList& e) {
  return partition_by(e, [](const LieEigenvalue& x, const LieEigenvalue& y) {
    return exp_equal(x, y);
  });
}

bool check_stabiliser_preservation(const EigenList& e) {
  return eig_partition(e) == exp_class_partition(e);
}

LieEigenvalue unit_log(const TorusElem& t) {
  if (t.r != 1) throw std::domain_error("unit_log is defined on unit-magnitude elements only");
  return {GaussianRational(0), t.theta};
}

TorusElem exp_to_torus(const LieEigenvalue& v) {
  if (!(v.a == GaussianRational(0)))
    throw std::domain_error("exp_to_torus: only 2 pi i s eigenvalues stay on the exact lattice");
  return TorusElem(1, v.s);
}

}  // namespace t3dt
