#include "vexkit/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace vexkit {

std::string RankCondition::to_string() const {
  return "(" + std::to_string(k) + "," + std::to_string(p) + "," +
         std::to_string(q) + ")";
}

std::set<Box> wp_diagram(const WindowPermutation& v) {
  std::set<Box> out;
  for (int b : v.positions()) {
    for (int a : v.positions()) {
      if (v(b) > a && v.inverse_at(a) > b) out.insert({a, b});
    }
  }
  return out;
}

std::vector<Box> wp_se_corners(const WindowPermutation& v) {
  std::vector<Box> out;
  for (int b : v.positions()) {
    for (int a : v.positions()) {
      if (v(b) > a && a >= v(b + 1) && v.inverse_at(a) > b &&
          b >= v.inverse_at(a + 1)) {
        out.push_back({a, b});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Box& x, const Box& y) {
    return x.col != y.col ? x.col < y.col : x.row > y.row;
  });
  return out;
}

int wp_rank(const WindowPermutation& v, int p, int q) {
  int count = 0;
  long long block_in_range = 0;
  for (int i : v.positions()) {
    if (i <= -p && v(i) >= q) ++count;
    if (i >= q && i <= -p) ++block_in_range;
  }
  // Fixed points outside the block contribute exactly the i in [q, -p]
  // not already covered by block positions.
  long long ident = std::max(0LL, static_cast<long long>(-p) - q + 1);
  return count + static_cast<int>(ident - block_in_range);
}

std::set<RankCondition> wp_essential_set(const WindowPermutation& v) {
  std::set<RankCondition> out;
  for (const Box& c : wp_se_corners(v)) {
    const int p = -c.col;
    const int q = c.row + 1;
    out.insert({wp_rank(v, p, q), p, q});
  }
  return out;
}

SignedDiagram signed_diagram(const SignedPermutation& w, int min_rank) {
  SignedDiagram d;
  d.n = std::max(w.size(), min_rank);
  const int n = d.n;
  // One dot per column -i and per row -w(i); record both lookups.
  std::map<int, int> dot_row_of_col;
  std::map<int, int> dot_col_of_row;
  for (int i = 1; i <= n; ++i) {
    const int r = -w(i);
    const int c = -i;
    d.dots.insert({r, c});
    dot_row_of_col[c] = r;
    dot_col_of_row[r] = c;
    for (int t = -i; t <= -1; ++t) d.crosses.insert({w(i), t});
  }
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= -1; ++b) {
      // shadowed by the column's dot (weakly south) or a row dot to the west
      if (dot_row_of_col[b] <= a) continue;
      auto it = dot_col_of_row.find(a);
      if (it != dot_col_of_row.end() && it->second <= b) continue;
      d.extended.insert({a, b});
      if (!d.crosses.count({a, b})) d.boxes.insert({a, b});
    }
  }
  return d;
}

int sp_rank(const SignedPermutation& w, int p, int q) {
  const int n = w.size();
  int count = 0;
  for (int i = p; i <= n; ++i) {
    if (w(i) <= -q) ++count;
  }
  if (-q > n) count += std::max(0, -q - std::max(p - 1, n));
  return count;
}

std::vector<Box> sp_extended_corners(const SignedPermutation& w, int min_rank) {
  const SignedDiagram d = signed_diagram(w, min_rank);
  std::vector<Box> out;
  for (const Box& cell : d.extended) {
    if (d.extended.count({cell.row + 1, cell.col})) continue;
    if (cell.col + 1 <= -1 && d.extended.count({cell.row, cell.col + 1})) continue;
    out.push_back(cell);
  }
  std::sort(out.begin(), out.end(), [](const Box& x, const Box& y) {
    return x.col != y.col ? x.col < y.col : x.row > y.row;
  });
  return out;
}

std::set<RankCondition> sp_essential_set(const SignedPermutation& w) {
  const std::vector<Box> corners = sp_extended_corners(w);
  const std::set<Box> corner_set(corners.begin(), corners.end());
  std::set<RankCondition> out;
  for (const Box& c : corners) {
    const int p = -c.col;
    const int q = c.row + 1;
    if (p == 1 && q < 0) continue;  // forced by the column's rank already
    const int k = sp_rank(w, p, q);
    if (p > 1 && q > 0 && corner_set.count({-q, -p}) &&
        k == sp_rank(w, p, -q + 1) - q + 1) {
      continue;  // follows from the mirror corner's condition
    }
    out.insert({k, p, q});
  }
  return out;
}

std::string render_signed_diagram(const SignedPermutation& w, int min_rank) {
  const SignedDiagram d = signed_diagram(w, min_rank);
  const int n = d.n;
  if (n == 0) return "(empty)\n";

  std::map<Box, int> annotation;
  for (const RankCondition& e : sp_essential_set(w)) {
    annotation[{e.q - 1, -e.p}] = e.k;
  }

  char buf[16];
  std::string out;
  out += "    ";
  for (int b = -n; b <= -1; ++b) {
    std::snprintf(buf, sizeof buf, "%4d", b);
    out += buf;
  }
  out += "\n";
  for (int a = -n; a <= n; ++a) {
    std::snprintf(buf, sizeof buf, "%4d", a);
    out += buf;
    for (int b = -n; b <= -1; ++b) {
      const Box cell{a, b};
      auto it = annotation.find(cell);
      if (it != annotation.end()) {
        std::snprintf(buf, sizeof buf, "%3d", it->second);
        out += buf;
      } else {
        out += "   ";
      }
      if (d.dots.count(cell)) {
        out += "●";  // dot
      } else if (d.crosses.count(cell)) {
        out += "×";  // cross
      } else if (d.extended.count(cell)) {
        out += "□";  // box kept by the diagram
      } else {
        out += "·";  // shadowed by a dot
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace vexkit
