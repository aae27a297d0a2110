#include "onefact/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace onefact {

Factor translate_factor(const IndexedGroup& group, const Factor& f, Index g) {
  Factor out;
  out.reserve(f.size());
  for (const IndexEdge& e : f) {
    const Index a = group.add(e.u, g);
    const Index b = group.add(e.v, g);
    out.push_back(a < b ? IndexEdge{a, b} : IndexEdge{b, a});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void sort_unique(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

}  // namespace

std::vector<Index> all_shifts(const IndexedGroup& group) {
  std::vector<Index> out(group.order());
  for (Index g = 0; g < group.order(); ++g) out[g] = g;
  return out;
}

std::vector<Factor> expand_translates_serial(const IndexedGroup& group, std::span<const Factor> base,
                                             std::span<const std::vector<Index>> shifts) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (Index g : shifts[i]) out.push_back(translate_factor(group, base[i], g));
  }
  sort_unique(out);
  return out;
}

std::vector<Factor> expand_translates_parallel(const IndexedGroup& group, std::span<const Factor> base,
                                               std::span<const std::vector<Index>> shifts) {
  // Flatten (base, shift) pairs so the loop balances across sets of any size.
  std::vector<std::size_t> offset(base.size() + 1, 0);
  for (std::size_t i = 0; i < base.size(); ++i) offset[i + 1] = offset[i] + shifts[i].size();
  const std::size_t total = offset.back();
  std::vector<Factor> out(total);
#pragma omp parallel for schedule(static)
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t i = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), k) - offset.begin()) - 1;
    out[k] = translate_factor(group, base[i], shifts[i][k - offset[i]]);
  }
  sort_unique(out);
  return out;
}

bool translation_closed_serial(const IndexedGroup& group, std::span<const Factor> factors,
                               std::span<const Index> generators) {
  for (const Factor& f : factors) {
    for (Index g : generators) {
      if (!std::binary_search(factors.begin(), factors.end(), translate_factor(group, f, g))) return false;
    }
  }
  return true;
}

bool translation_closed_parallel(const IndexedGroup& group, std::span<const Factor> factors,
                                 std::span<const Index> generators) {
  std::atomic<bool> closed{true};
  const std::size_t count = factors.size();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < count; ++i) {
    if (!closed.load(std::memory_order_relaxed)) continue;
    for (Index g : generators) {
      if (!std::binary_search(factors.begin(), factors.end(), translate_factor(group, factors[i], g))) {
        closed.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return closed.load();
}

}  // namespace onefact
