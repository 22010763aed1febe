#pragma once

// Character tables written out by hand from the standard presentations.
// Columns carry (element order, class size) labels; matching allows any row
// order and any column order that preserves labels.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "girr/char_table.hpp"

namespace girr::reference {

using girr::CyclotomicNumber;

struct HandTable {
  std::string name;
  std::vector<std::pair<std::int64_t, std::int64_t>> labels;
  std::vector<std::vector<CyclotomicNumber>> rows;
};

inline CyclotomicNumber z(std::int64_t e, std::int64_t k = 1) { return CyclotomicNumber::zeta(e, k); }

inline HandTable s3_table() {
  return {"S3", {{1, 1}, {2, 3}, {3, 2}}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}};
}

inline HandTable c6_table() {
  // Columns g^0, g^3, g^2, g^4, g^1, g^5.
  const std::vector<std::int64_t> powers{0, 3, 2, 4, 1, 5};
  HandTable t{"C6", {{1, 1}, {2, 1}, {3, 1}, {3, 1}, {6, 1}, {6, 1}}, {}};
  for (std::int64_t j = 0; j < 6; ++j) {
    std::vector<CyclotomicNumber> row;
    for (std::int64_t k : powers) row.push_back(z(6, j * k % 6));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline HandTable d8_table() {
  return {"D8",
          {{1, 1}, {2, 1}, {2, 2}, {2, 2}, {4, 2}},
          {{1, 1, 1, 1, 1}, {1, 1, -1, -1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {2, -2, 0, 0, 0}}};
}

inline HandTable q8_table() {
  return {"Q8",
          {{1, 1}, {2, 1}, {4, 2}, {4, 2}, {4, 2}},
          {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}}};
}

inline HandTable d10_table() {
  const auto a = z(5) + z(5, 4), b = z(5, 2) + z(5, 3);
  return {"D10", {{1, 1}, {2, 5}, {5, 2}, {5, 2}}, {{1, 1, 1, 1}, {1, -1, 1, 1}, {2, 0, a, b}, {2, 0, b, a}}};
}

inline HandTable a4_table() {
  const auto w = z(3), w2 = z(3, 2);
  return {"A4", {{1, 1}, {2, 3}, {3, 4}, {3, 4}}, {{1, 1, 1, 1}, {1, 1, w, w2}, {1, 1, w2, w}, {3, -1, 0, 0}}};
}

inline HandTable sl23_table() {
  const auto w = z(3), w2 = z(3, 2);
  return {"SL(2,3)",
          {{1, 1}, {2, 1}, {4, 6}, {3, 4}, {3, 4}, {6, 4}, {6, 4}},
          {{1, 1, 1, 1, 1, 1, 1},
           {1, 1, 1, w, w2, w, w2},
           {1, 1, 1, w2, w, w2, w},
           {2, -2, 0, -1, -1, 1, 1},
           {2, -2, 0, -w, -w2, w, w2},
           {2, -2, 0, -w2, -w, w2, w},
           {3, 3, -1, 0, 0, 0, 0}}};
}

/// True iff some label-preserving column bijection makes the row sets equal.
inline bool matches_hand(const girr::CharacterTable& t, const HandTable& hand) {
  const std::size_t r = hand.labels.size();
  if (t.size() != r) return false;
  const auto& cs = t.classes();
  // Candidate computed columns for each hand column, grouped by label.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> computed, wanted;
  for (std::size_t k = 0; k < r; ++k) {
    computed[{cs.classes[k].element_order, cs.classes[k].size}].push_back(k);
    wanted[hand.labels[k]].push_back(k);
  }
  for (const auto& [label, cols] : wanted) {
    if (computed[label].size() != cols.size()) return false;
  }
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& [label, cols] : wanted) perms.push_back(computed[label]);
  const auto try_mapping = [&]() {
    std::vector<std::size_t> column(r);
    std::size_t g = 0;
    for (const auto& [label, cols] : wanted) {
      for (std::size_t i = 0; i < cols.size(); ++i) column[cols[i]] = perms[g][i];
      ++g;
    }
    std::vector<bool> used(r, false);
    for (const auto& row : hand.rows) {
      bool found = false;
      for (std::size_t i = 0; i < r && !found; ++i) {
        if (used[i]) continue;
        bool same = true;
        for (std::size_t k = 0; k < r && same; ++k) same = t.value(i, column[k]) == row[k];
        if (same) used[i] = found = true;
      }
      if (!found) return false;
    }
    return true;
  };
  // Odometer over the per-label permutations.
  while (true) {
    if (try_mapping()) return true;
    std::size_t g = 0;
    while (g < perms.size() && !std::next_permutation(perms[g].begin(), perms[g].end())) ++g;
    if (g == perms.size()) return false;
  }
}

}  // namespace girr::reference
