#include "vexkit/bruhat.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace vexkit {

std::vector<Reflection> reflections(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(Reflection::T(i, j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) out.push_back(Reflection::S(i, j));
  }
  return out;
}

namespace {

// Down-sets of the whole rank-n group as dense bitsets.
struct OrderTable {
  std::vector<SignedPermutation> elements;
  std::map<SignedPermutation, std::uint32_t> index;
  std::size_t words = 0;
  std::vector<std::uint64_t> below;  // elements.size() rows of `words` each

  bool leq(std::uint32_t u, std::uint32_t w) const {
    return (below[w * words + u / 64] >> (u % 64)) & 1;
  }
};

OrderTable build_table(int n) {
  OrderTable table;
  const GroupEnumeration group(n);
  table.elements.reserve(group.size());
  for (std::uint64_t i = 0; i < group.size(); ++i) {
    table.elements.push_back(group.at(i));
  }
  for (std::uint32_t i = 0; i < table.elements.size(); ++i) {
    table.index.emplace(table.elements[i], i);
  }
  const std::size_t count = table.elements.size();
  table.words = (count + 63) / 64;
  table.below.assign(count * table.words, 0);

  std::vector<std::uint32_t> by_length(count);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return table.elements[a].length() < table.elements[b].length();
                   });

  const std::vector<Reflection> refs = reflections(n);
  for (std::uint32_t idx : by_length) {
    const SignedPermutation& w = table.elements[idx];
    const int len = w.length();
    std::uint64_t* row = &table.below[idx * table.words];
    row[idx / 64] |= 1ull << (idx % 64);
    for (const Reflection& r : refs) {
      const SignedPermutation u = w.times(r);
      if (u.length() != len - 1) continue;
      const std::uint32_t uidx = table.index.at(u);
      const std::uint64_t* urow = &table.below[uidx * table.words];
      for (std::size_t t = 0; t < table.words; ++t) row[t] |= urow[t];
    }
  }
  return table;
}

const OrderTable& table_for(int n) {
  static std::mutex mutex;
  static std::map<int, OrderTable> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build_table(n)).first;
  return it->second;
}

}  // namespace

bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& w) {
  const int n = std::max(u.size(), w.size());
  if (n > 5) {
    throw std::invalid_argument(
        "order comparison is supported up to rank 5 (dense tables)");
  }
  const OrderTable& table = table_for(n);
  return table.leq(table.index.at(u), table.index.at(w));
}

}  // namespace vexkit
