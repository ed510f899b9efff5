#pragma once

#include <vector>

namespace moonfill {

// Calls fn(parts) for every weak composition of `total` into `parts_count`
// nonnegative parts, in lexicographic order of the part vector descending
// from (total, 0, ..., 0). Nothing is visited when parts_count == 0 unless
// total == 0, in which case the single empty composition is visited.
template <class Fn>
void for_each_weak_composition(int total, int parts_count, Fn&& fn) {
  if (total < 0 || parts_count < 0) return;
  if (parts_count == 0) {
    if (total == 0) {
      std::vector<int> empty;
      fn(empty);
    }
    return;
  }
  std::vector<int> parts(parts_count, 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == parts_count - 1) {
      parts[idx] = remaining;
      fn(parts);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[idx] = v;
      self(self, idx + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace moonfill
