#include "vexkit/lyd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vexkit {

std::vector<int> corner_rows(const StrictPartition& shape) {
  const int s = static_cast<int>(shape.size());
  std::vector<int> rows;
  for (int r = 1; r <= s; ++r) {
    if (r == s || shape[r - 1] - shape[r] >= 2) rows.push_back(r);
  }
  return rows;
}

LabelledYoungDiagram LabelledYoungDiagram::of(StrictPartition shape,
                                              std::vector<int> labels) {
  if (!is_strict_partition(shape)) {
    throw std::invalid_argument("shape must be a strict partition");
  }
  std::vector<int> rows = corner_rows(shape);
  if (labels.size() != rows.size()) {
    throw std::invalid_argument("need exactly one label per corner row (" +
                                std::to_string(rows.size()) + " here)");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= shape[rows[i] - 1]) {
      throw std::invalid_argument("label " + std::to_string(labels[i]) +
                                  " out of range for row " +
                                  std::to_string(rows[i]));
    }
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (labels[i] < labels[i + 1]) {
      throw std::invalid_argument("labels must be weakly decreasing");
    }
    if (labels[i] - labels[i + 1] > shape[rows[i] - 1] - shape[rows[i + 1] - 1]) {
      throw std::invalid_argument(
          "label drop exceeds row-length drop between rows " +
          std::to_string(rows[i]) + " and " + std::to_string(rows[i + 1]));
    }
  }
  LabelledYoungDiagram y;
  y.shape_ = std::move(shape);
  y.labels_ = std::move(labels);
  y.rows_ = std::move(rows);
  return y;
}

LabelledYoungDiagram LabelledYoungDiagram::staircase(int n) {
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  StrictPartition shape;
  std::vector<int> labels;
  for (int r = 1; r <= n; ++r) {
    shape.push_back(2 * (n - r) + 1);
    labels.push_back(n - r);
  }
  return of(std::move(shape), std::move(labels));
}

LabelledYoungDiagram lyd_from_triple(const Triple& t) {
  if (!t.essential()) {
    throw std::invalid_argument("triple must be essential (reduce it first)");
  }
  StrictPartition shape = triple_shape(t);
  if (corner_rows(shape) != t.k()) {
    throw std::logic_error("corner rows of " + partition_to_string(shape) +
                           " do not match " + t.to_string());
  }
  std::vector<int> labels;
  for (int part : t.p()) labels.push_back(part - 1);
  return LabelledYoungDiagram::of(std::move(shape), std::move(labels));
}

Triple lyd_to_triple(const LabelledYoungDiagram& y) {
  std::vector<int> k = y.rows();
  std::vector<int> p, q;
  for (std::size_t i = 0; i < k.size(); ++i) {
    p.push_back(y.labels()[i] + 1);
    q.push_back(y.shape()[k[i] - 1] - y.labels()[i]);
  }
  Triple t = Triple::of(std::move(k), std::move(p), std::move(q));
  if (!t.essential()) {
    throw std::logic_error("diagram decoded to a non-essential triple: " +
                           t.to_string());
  }
  return t;
}

LabelledYoungDiagram lyd_dual(const LabelledYoungDiagram& y) {
  std::vector<int> labels;
  for (std::size_t i = 0; i < y.rows().size(); ++i) {
    labels.push_back(y.shape()[y.rows()[i] - 1] - y.labels()[i] - 1);
  }
  return LabelledYoungDiagram::of(y.shape(), std::move(labels));
}

int lyd_min_rank(const LabelledYoungDiagram& y) {
  const LabelledYoungDiagram dual = lyd_dual(y);
  int n = 0;
  for (std::size_t i = 0; i < y.rows().size(); ++i) {
    n = std::max(n, std::max(y.labels()[i], dual.labels()[i]) + y.rows()[i]);
  }
  return n;
}

LabelledYoungDiagram lyd_of(const SignedPermutation& w) {
  return lyd_from_triple(perm_to_triple(w));
}

std::vector<int> removable_labels(const LabelledYoungDiagram& y) {
  std::vector<int> out;
  const auto& labels = y.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int m = labels[i];
    if (std::count(labels.begin(), labels.end(), m) != 1) continue;
    if (m == 0 && y.shape()[y.rows()[i] - 1] != 1) continue;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabelledYoungDiagram remove_label(const LabelledYoungDiagram& y, int m) {
  const std::vector<int> ok = removable_labels(y);
  if (!std::binary_search(ok.begin(), ok.end(), m)) {
    throw std::invalid_argument("label " + std::to_string(m) +
                                " is not removable here");
  }
  const auto& rows = y.rows();
  const auto& labels = y.labels();
  const std::size_t i =
      std::find(labels.begin(), labels.end(), m) - labels.begin();
  const int r = rows[i];

  StrictPartition shape = y.shape();
  shape[r - 1] -= 1;
  if (shape[r - 1] == 0) shape.pop_back();  // a vanishing row is always last

  std::map<int, int> old_label;
  for (std::size_t t = 0; t < rows.size(); ++t) old_label[rows[t]] = labels[t];

  std::vector<int> new_labels;
  for (int nr : corner_rows(shape)) {
    if (nr == r) {
      new_labels.push_back(m - 1);  // same row, one box shorter
    } else if (nr == r - 1 && !old_label.count(nr)) {
      new_labels.push_back(m + 1);  // the row above became exposed
    } else {
      new_labels.push_back(old_label.at(nr));
    }
  }
  return LabelledYoungDiagram::of(std::move(shape), std::move(new_labels));
}

namespace {

// The space between adjacent corner rows (or above the first / below the
// last): candidate home for an inserted box in row k_up + 1.
struct Gap {
  bool top = false;                    // nothing above
  int m_up = 0, k_up = 0, len_up = 0;  // corner above, when !top
  int m_lo = 0, k_lo = 0, len_lo = 0;  // corner below, or (-1, last+1, 0)
};

std::vector<Gap> gaps_of(const LabelledYoungDiagram& y) {
  const auto& rows = y.rows();
  const auto& labels = y.labels();
  const auto& shape = y.shape();
  const int s = static_cast<int>(rows.size());
  std::vector<Gap> out;
  for (int j = 0; j <= s; ++j) {
    Gap g;
    g.top = (j == 0);
    if (!g.top) {
      g.m_up = labels[j - 1];
      g.k_up = rows[j - 1];
      g.len_up = shape[rows[j - 1] - 1];
    }
    if (j < s) {
      g.m_lo = labels[j];
      g.k_lo = rows[j];
      g.len_lo = shape[rows[j] - 1];
    } else {
      g.m_lo = -1;
      g.k_lo = (s ? rows.back() : 0) + 1;
      g.len_lo = 0;
    }
    out.push_back(g);
  }
  return out;
}

bool gap_accepts(const Gap& g, int m) {
  if (m <= g.m_lo) return false;
  const int dk = g.k_lo - g.k_up;
  if (g.top) return m - g.m_lo <= dk;  // no bound from above
  if (m >= g.m_up || g.m_up - g.m_lo <= 1) return false;
  const int dl = g.len_up - g.len_lo;
  if (dk > 1 && dl > dk + 1) return m - g.m_lo <= dk && g.m_up - m <= dl - dk;
  if (dk == 1 && dl > 2) return m == g.m_lo + 1;
  if (dk > 1 && dl == dk + 1) return m == g.m_up - 1;
  if (dk == 1 && dl == 2) return g.m_up - g.m_lo == 2 && m == g.m_up - 1;
  return false;
}

}  // namespace

std::vector<int> insertable_labels(const LabelledYoungDiagram& y) {
  std::set<int> out;
  for (const Gap& g : gaps_of(y)) {
    const int hi = g.top ? g.m_lo + (g.k_lo - g.k_up) : g.m_up - 1;
    for (int m = g.m_lo + 1; m <= hi; ++m) {
      if (gap_accepts(g, m)) out.insert(m);
    }
  }
  return {out.begin(), out.end()};
}

LabelledYoungDiagram insert_label(const LabelledYoungDiagram& y, int m) {
  for (const Gap& g : gaps_of(y)) {
    if (!gap_accepts(g, m)) continue;
    const int row = g.k_up + 1;
    StrictPartition shape = y.shape();
    if (row <= static_cast<int>(shape.size())) {
      shape[row - 1] += 1;
    } else {
      shape.push_back(1);
    }
    std::map<int, int> old_label;
    for (std::size_t t = 0; t < y.rows().size(); ++t) {
      old_label[y.rows()[t]] = y.labels()[t];
    }
    std::vector<int> labels;
    for (int nr : corner_rows(shape)) {
      if (nr == row) {
        labels.push_back(m);
      } else {
        auto it = old_label.find(nr);
        if (it == old_label.end()) {
          throw std::logic_error("insertion exposed an unexpected row");
        }
        labels.push_back(it->second);
      }
    }
    return LabelledYoungDiagram::of(std::move(shape), std::move(labels));
  }
  throw std::invalid_argument("label " + std::to_string(m) +
                              " is not insertable here");
}

namespace {

std::vector<SignedPermutation> chain_right(const LabelledYoungDiagram& start,
                                           int n) {
  LabelledYoungDiagram cur = start;
  std::vector<SignedPermutation> seq = {triple_to_perm(lyd_to_triple(cur))};
  const LabelledYoungDiagram target = LabelledYoungDiagram::staircase(n);
  int guard = n * n - partition_weight(cur.shape());
  while (!(cur == target)) {
    if (guard-- <= 0) throw std::logic_error("chain did not reach the top");
    int best = -1;
    for (int m : insertable_labels(cur)) {
      if (m <= n - 1) best = m;
    }
    if (best < 0) throw std::logic_error("no insertable label below the rank");
    cur = insert_label(cur, best);
    seq.push_back(triple_to_perm(lyd_to_triple(cur)));
  }
  return seq;
}

}  // namespace

std::vector<SignedPermutation> chain_to_longest(const LabelledYoungDiagram& y,
                                                int n, Side side) {
  if (n < lyd_min_rank(y)) {
    throw std::invalid_argument("rank " + std::to_string(n) +
                                " is below the diagram's minimum rank " +
                                std::to_string(lyd_min_rank(y)));
  }
  if (side == Side::right) return chain_right(y, n);
  std::vector<SignedPermutation> seq = chain_right(lyd_dual(y), n);
  for (SignedPermutation& w : seq) w = w.inverse();
  return seq;
}

std::string render_lyd(const LabelledYoungDiagram& y) {
  if (y.empty()) return "(empty)\n";
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  };
  std::string out = "shape: " + join(y.shape()) + "\n";
  out += "labels: " + join(y.labels()) + "\n";
  std::map<int, int> label_of_row;
  for (std::size_t i = 0; i < y.rows().size(); ++i) {
    label_of_row[y.rows()[i]] = y.labels()[i];
  }
  for (std::size_t r = 1; r <= y.shape().size(); ++r) {
    std::string line(3 * (r - 1), ' ');
    const int len = y.shape()[r - 1];
    for (int c = 1; c <= len; ++c) {
      auto it = label_of_row.find(static_cast<int>(r));
      if (c == len && it != label_of_row.end()) {
        std::string text = std::to_string(it->second);
        line += text + std::string(text.size() < 3 ? 3 - text.size() : 1, ' ');
      } else {
        line += "□  ";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace vexkit
