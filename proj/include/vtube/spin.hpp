#pragma once

#include <algorithm>
#include <utility>

#include "vtube/gauss_code.hpp"
#include "vtube/group.hpp"

namespace vtube {

// Spinning raises the intrinsic dimension and keeps the group. Only the
// dimension bookkeeping changes; n grows just enough to keep n >= 2m.
inline std::pair<GroupPresentation, DimensionMeta> spin(const GroupPresentation& p, const DimensionMeta& meta) {
  p.validate();
  const int m = meta.m + 1;
  return {p, DimensionMeta(m, std::max(meta.n, 2 * m))};
}

}  // namespace vtube
