#pragma once

#include <utility>
#include <vector>

#include "vtube/containment.hpp"
#include "vtube/errors.hpp"
#include "vtube/gauss_code.hpp"

namespace vtube {

// K together with its vertical mirror K* pushed off to the right of K's
// orientation and placed underneath. K* keeps K's orientation.
//
// Crossing c (sign e, index i in label order) becomes c = 4i+1 on K,
// c* = 4i+2 on K* (sign -e), x = 4i+3 where K's over-strand passes over
// K*'s copy of the under-strand (sign e), and y = 4i+4 where K's
// under-strand passes over K*'s copy of the over-strand (sign -e). Along
// each strand the two new passages are ordered as the push-off meets them.
inline std::pair<GaussCode, StackPairing> vertical_double(const GaussCode& code) {
  if (!code.all_closed()) throw DomainError("vertical double needs closed components");
  const int nc = code.component_count();
  std::vector<int> index_of(static_cast<std::size_t>(code.max_label()) + 1, -1);
  for (std::size_t i = 0; i < code.crossings().size(); ++i) index_of[static_cast<std::size_t>(code.crossings()[i].label)] = static_cast<int>(i);

  std::vector<Component> comps(static_cast<std::size_t>(2 * nc));
  StackPairing pairing;
  for (int j = 0; j < nc; ++j) pairing.components.emplace_back(j, nc + j);
  for (std::size_t i = 0; i < code.crossings().size(); ++i) {
    const int b = 4 * static_cast<int>(i);
    pairing.crossings.emplace_back(b + 1, b + 2);
    pairing.witnesses.emplace_back(b + 3, b + 4);
  }

  for (int j = 0; j < nc; ++j) {
    auto& up = comps[static_cast<std::size_t>(j)].passages;
    auto& down = comps[static_cast<std::size_t>(nc + j)].passages;
    for (const Passage& p : code.component(j).passages) {
      const int e = p.sign;
      const int b = 4 * index_of[static_cast<std::size_t>(p.crossing)];
      const int c = b + 1, cs = b + 2, x = b + 3, y = b + 4;
      Passage own_up, cross_up, own_down, cross_down;
      bool up_first = false, down_first = false;
      if (p.role == Role::Over) {
        own_up = {c, Role::Over, e};
        cross_up = {x, Role::Over, e};
        up_first = e > 0;
        own_down = {cs, Role::Under, -e};
        cross_down = {y, Role::Under, -e};
        down_first = e < 0;
      } else {
        own_up = {c, Role::Under, e};
        cross_up = {y, Role::Over, -e};
        up_first = e < 0;
        own_down = {cs, Role::Over, -e};
        cross_down = {x, Role::Under, e};
        down_first = e > 0;
      }
      const PassageRef own_up_ref{j, static_cast<int>(up.size()) + (up_first ? 0 : 1)};
      const PassageRef own_down_ref{nc + j, static_cast<int>(down.size()) + (down_first ? 0 : 1)};
      pairing.passages.emplace_back(own_up_ref, own_down_ref);
      if (up_first) {
        up.push_back(own_up);
        up.push_back(cross_up);
      } else {
        up.push_back(cross_up);
        up.push_back(own_up);
      }
      if (down_first) {
        down.push_back(own_down);
        down.push_back(cross_down);
      } else {
        down.push_back(cross_down);
        down.push_back(own_down);
      }
    }
  }
  return {GaussCode(std::move(comps)), std::move(pairing)};
}

}  // namespace vtube
