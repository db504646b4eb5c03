#include "ztilt/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ztilt::young {

bool is_partition(const Partition &p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0)
      return false;
    if (i && p[i] > p[i - 1])
      return false;
  }
  return true;
}

int weight(const std::vector<int> &parts) {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::size_t length(const Partition &p) { return p.size(); }

Partition conjugate(const Partition &p) {
  if (p.empty())
    return {};
  Partition c(p[0]);
  for (int j = 0; j < p[0]; ++j)
    c[j] = static_cast<int>(
        std::count_if(p.begin(), p.end(), [&](int x) { return x >= j + 1; }));
  return c;
}

std::string partition_str(const Partition &p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i)
    os << (i ? "," : "") << p[i];
  return os.str();
}

Partition parse_partition(const std::string &s) {
  Partition p;
  if (s.empty())
    return p;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ','))
    p.push_back(std::stoi(tok));
  if (!is_partition(p))
    throw std::invalid_argument("parse_partition: not weakly decreasing");
  return p;
}

namespace {

void enumerate_box(int m, int n, Partition &cur, std::vector<Partition> &out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == n)
    return;
  int cap = cur.empty() ? m : cur.back();
  for (int part = 1; part <= cap; ++part) {
    cur.push_back(part);
    enumerate_box(m, n, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> box_partitions(int m, int n, int d) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("box_partitions: negative box");
  std::vector<Partition> all;
  Partition cur;
  enumerate_box(m, n, cur, all);
  if (d >= 0) {
    std::vector<Partition> filtered;
    for (auto &p : all)
      if (weight(p) == d)
        filtered.push_back(p);
    all = std::move(filtered);
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Partition &a, const Partition &b) {
                     int wa = weight(a), wb = weight(b);
                     if (wa != wb)
                       return wa < wb;
                     return std::lexicographical_compare(
                         b.begin(), b.end(), a.begin(), a.end());
                   });
  return all;
}

bool dominance_leq(const Partition &lo, const Partition &hi) {
  if (weight(lo) != weight(hi))
    return false;
  int slo = 0, shi = 0;
  std::size_t len = std::max(lo.size(), hi.size());
  for (std::size_t i = 0; i < len; ++i) {
    slo += i < lo.size() ? lo[i] : 0;
    shi += i < hi.size() ? hi[i] : 0;
    if (slo > shi)
      return false;
  }
  return true;
}

std::vector<std::size_t> sigma_permutation(const Partition &p) {
  if (!is_partition(p))
    throw std::invalid_argument("sigma_permutation: invalid partition");
  Partition c = conjugate(p);
  std::vector<int> row_start(p.size() + 1, 0), col_start(c.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    row_start[i + 1] = row_start[i] + p[i];
  for (std::size_t j = 0; j < c.size(); ++j)
    col_start[j + 1] = col_start[j] + c[j];
  std::vector<std::size_t> sigma(weight(p));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      sigma[row_start[i] + j] = col_start[j] + i;
  return sigma;
}

namespace {

struct LrState {
  std::vector<std::vector<int>> cell;  // value per box, 0 for unset/frozen
  std::vector<int> remaining;          // per letter of mu
  std::vector<int> placed;             // per letter, prefix counts
  const Partition *lambda;
  long count = 0;
};

// Fill in reading order: rows top to bottom, within a row right to left.
void lr_fill(LrState &st, const Partition &nu, std::size_t r, int c) {
  if (r == nu.size()) {
    ++st.count;
    return;
  }
  int inner = r < st.lambda->size() ? (*st.lambda)[r] : 0;
  if (c < inner) {
    lr_fill(st, nu, r + 1, r + 1 < nu.size() ? nu[r + 1] - 1 : 0);
    return;
  }
  for (int v = 1; v <= static_cast<int>(st.remaining.size()); ++v) {
    if (st.remaining[v - 1] == 0)
      continue;
    // lattice word: after placing v, count(v) <= count(v-1)
    if (v > 1 && st.placed[v - 1] + 1 > st.placed[v - 2])
      continue;
    // row weakly increasing: cell to the right (already placed)
    if (c + 1 < nu[r] && st.cell[r][c + 1] < v)
      continue;
    // column strictly increasing: cell above (already placed when outside
    // the inner shape; inner cells impose no constraint)
    if (r > 0) {
      int above_cols = nu[r - 1];
      int above_inner = r - 1 < st.lambda->size() ? (*st.lambda)[r - 1] : 0;
      if (c < above_cols && c >= above_inner && st.cell[r - 1][c] >= v)
        continue;
    }
    st.cell[r][c] = v;
    --st.remaining[v - 1];
    ++st.placed[v - 1];
    if (c > inner)
      lr_fill(st, nu, r, c - 1);
    else
      lr_fill(st, nu, r + 1, r + 1 < nu.size() ? nu[r + 1] - 1 : 0);
    st.cell[r][c] = 0;
    ++st.remaining[v - 1];
    --st.placed[v - 1];
  }
}

} // namespace

long lr_coefficient(const Partition &lambda, const Partition &mu,
                    const Partition &nu) {
  if (!is_partition(lambda) || !is_partition(mu) || !is_partition(nu))
    throw std::invalid_argument("lr_coefficient: invalid partition");
  if (weight(lambda) + weight(mu) != weight(nu))
    return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (i >= nu.size() || lambda[i] > nu[i])
      return 0;
  if (mu.empty())
    return 1;
  LrState st;
  st.lambda = &lambda;
  st.remaining.assign(mu.begin(), mu.end());
  st.placed.assign(mu.size(), 0);
  st.cell.resize(nu.size());
  for (std::size_t r = 0; r < nu.size(); ++r)
    st.cell[r].assign(nu[r], 0);
  if (nu.empty())
    return weight(mu) == 0 ? 1 : 0;
  lr_fill(st, nu, 0, nu[0] - 1);
  return st.count;
}

namespace {

long ssyt_fill(const Partition &p, std::vector<std::vector<int>> &cell,
               std::size_t r, int c, int n, const Composition *content,
               std::vector<int> &used) {
  if (r == p.size())
    return 1;
  if (c == p[r])
    return ssyt_fill(p, cell, r + 1, 0, n, content, used);
  int lo = 1;
  if (c > 0)
    lo = std::max(lo, cell[r][c - 1]);
  if (r > 0)
    lo = std::max(lo, cell[r - 1][c] + 1);
  long total = 0;
  for (int v = lo; v <= n; ++v) {
    if (content) {
      int cap = v <= static_cast<int>(content->size()) ? (*content)[v - 1] : 0;
      if (used[v - 1] == cap)
        continue;
    }
    cell[r][c] = v;
    ++used[v - 1];
    total += ssyt_fill(p, cell, r, c + 1, n, content, used);
    --used[v - 1];
  }
  cell[r][c] = 0;
  return total;
}

} // namespace

long ssyt_count(const Partition &p, int n) {
  if (!is_partition(p))
    throw std::invalid_argument("ssyt_count: invalid partition");
  if (n < 0)
    throw std::invalid_argument("ssyt_count: negative alphabet");
  if (p.empty())
    return 1;
  if (n == 0)
    return 0;
  std::vector<std::vector<int>> cell(p.size());
  for (std::size_t r = 0; r < p.size(); ++r)
    cell[r].assign(p[r], 0);
  std::vector<int> used(n, 0);
  return ssyt_fill(p, cell, 0, 0, n, nullptr, used);
}

long ssyt_count(const Partition &p, const Composition &mu) {
  if (!is_partition(p))
    throw std::invalid_argument("ssyt_count: invalid partition");
  if (weight(p) != weight(mu))
    return 0;
  if (p.empty())
    return 1;
  int n = static_cast<int>(mu.size());
  if (n == 0)
    return 0;
  std::vector<std::vector<int>> cell(p.size());
  for (std::size_t r = 0; r < p.size(); ++r)
    cell[r].assign(p[r], 0);
  std::vector<int> used(n, 0);
  return ssyt_fill(p, cell, 0, 0, n, &mu, used);
}

std::vector<Composition> compositions(int d, int n) {
  std::vector<Composition> out;
  if (n == 0) {
    if (d == 0)
      out.push_back({});
    return out;
  }
  Composition cur(n, 0);
  // lexicographically largest first
  auto rec = [&](auto &&self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

} // namespace ztilt::young
