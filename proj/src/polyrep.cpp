#include "ztilt/polyrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace ztilt::polyrep {

using young::Partition;

namespace {

Int binom(long n, long k) {
  if (k < 0)
    return 0;
  if (k == 0)
    return 1;
  if (n < 0 || k > n)
    return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1); // exact: r is C(n, i+1) times i+1 after the multiply
  }
  return r;
}

bool is_zero_vec(const std::vector<Int> &v) {
  for (const Int &x : v)
    if (x != 0)
      return false;
  return true;
}

} // namespace

// ---------------------------------------------------------------------------
// TensorSpace

std::size_t TensorSpace::dim() const {
  std::size_t r = 1;
  for (int s = 0; s < d; ++s)
    r *= static_cast<std::size_t>(n);
  return r;
}

std::size_t TensorSpace::pos(const std::vector<int> &idx) const {
  std::size_t p = 0;
  for (int s = 0; s < d; ++s)
    p = p * n + idx[s];
  return p;
}

std::vector<int> TensorSpace::at(std::size_t p) const {
  std::vector<int> idx(d);
  for (int s = d - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(p % n);
    p /= n;
  }
  return idx;
}

std::vector<int> TensorSpace::content(std::size_t p) const {
  std::vector<int> c(n, 0);
  for (int s = d - 1; s >= 0; --s) {
    ++c[p % n];
    p /= n;
  }
  return c;
}

// ---------------------------------------------------------------------------
// SchurAlgebraZ

SchurAlgebraZ::SchurAlgebraZ(int n, int d) : n_(n), d_(d), space_{n, d} {
  if (n < 0 || d < 0)
    throw std::invalid_argument("schur algebra parameters must be nonnegative");
  if (n == 0 && d > 0)
    throw std::invalid_argument("schur algebra needs letters in positive degree");
  const std::size_t dim = space_.dim();

  // positions after swapping adjacent slots t, t+1
  std::vector<std::vector<std::uint32_t>> swap_tab;
  for (int t = 0; t + 1 < d; ++t) {
    std::vector<std::uint32_t> tab(dim);
    for (std::size_t p = 0; p < dim; ++p) {
      std::vector<int> idx = space_.at(p);
      std::swap(idx[t], idx[t + 1]);
      tab[p] = static_cast<std::uint32_t>(space_.pos(idx));
    }
    swap_tab.push_back(std::move(tab));
  }

  const std::uint32_t none = 0xffffffffu;
  orbit_of_.assign(dim * dim, none);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      if (orbit_of_[p * dim + q] != none)
        continue;
      std::uint32_t id = static_cast<std::uint32_t>(orbits_.size());
      std::vector<std::pair<std::uint32_t, std::uint32_t>> members;
      std::vector<std::size_t> stack{p * dim + q};
      orbit_of_[p * dim + q] = id;
      while (!stack.empty()) {
        std::size_t pq = stack.back();
        stack.pop_back();
        std::uint32_t pp = static_cast<std::uint32_t>(pq / dim);
        std::uint32_t qq = static_cast<std::uint32_t>(pq % dim);
        members.emplace_back(pp, qq);
        for (const auto &tab : swap_tab) {
          std::size_t npq =
              static_cast<std::size_t>(tab[pp]) * dim + tab[qq];
          if (orbit_of_[npq] == none) {
            orbit_of_[npq] = id;
            stack.push_back(npq);
          }
        }
      }
      std::sort(members.begin(), members.end());
      orbits_.push_back(std::move(members));
    }

  contents_ = young::compositions(d, n);
  for (std::size_t i = 0; i < contents_.size(); ++i)
    content_index_[contents_[i]] = i;
  row_content_.resize(orbits_.size());
  col_content_.resize(orbits_.size());
  unit_.assign(orbits_.size(), 0);
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    auto [p, q] = orbits_[o].front();
    row_content_[o] = static_cast<int>(content_index(space_.content(p)));
    col_content_[o] = static_cast<int>(content_index(space_.content(q)));
    if (p == q)
      unit_[o] = 1;
  }
}

std::size_t SchurAlgebraZ::orbit_index(std::size_t row, std::size_t col) const {
  return orbit_of_[row * space_.dim() + col];
}

std::size_t SchurAlgebraZ::content_index(const std::vector<int> &c) const {
  auto it = content_index_.find(c);
  if (it == content_index_.end())
    throw std::invalid_argument("not a content of this schur algebra");
  return it->second;
}

qha::SparseVec SchurAlgebraZ::product(std::size_t i, std::size_t j) const {
  qha::SparseVec out;
  if (col_content_[i] != row_content_[j])
    return out;
  const auto &oi = orbits_[i];
  const auto &oj = orbits_[j];
  const std::size_t dim = space_.dim();
  std::map<std::size_t, long> acc; // pair index -> matrix entry
  for (auto [p, q] : oi) {
    auto lo = std::lower_bound(oj.begin(), oj.end(),
                               std::make_pair(q, std::uint32_t(0)));
    for (auto it = lo; it != oj.end() && it->first == q; ++it)
      acc[static_cast<std::size_t>(p) * dim + it->second] += 1;
  }
  // certify closure: entries constant on each orbit, support filling it
  std::map<std::size_t, std::pair<long, std::size_t>> per_orbit;
  for (const auto &[pq, c] : acc) {
    std::size_t o = orbit_of_[pq];
    auto [it, fresh] = per_orbit.try_emplace(o, c, std::size_t(0));
    if (!fresh && it->second.first != c)
      throw std::runtime_error("schur product not constant on an orbit");
    it->second.second += 1;
  }
  for (const auto &[o, cc] : per_orbit) {
    if (cc.second != orbits_[o].size())
      throw std::runtime_error("schur product support misses orbit pairs");
    out.emplace_back(o, Int(cc.first));
  }
  return out;
}

IntegerMatrix SchurAlgebraZ::basis_matrix(std::size_t o) const {
  IntegerMatrix x(space_.dim(), space_.dim());
  for (auto [p, q] : orbits_[o])
    x.at(p, q) = 1;
  return x;
}

std::string SchurAlgebraZ::basis_label(std::size_t o) const {
  auto [p, q] = orbits_[o].front();
  auto fmt = [&](std::size_t x) {
    std::string s;
    for (int v : space_.at(x))
      s += std::to_string(v + 1);
    return s;
  };
  return "x[" + fmt(p) + "|" + fmt(q) + "]";
}

SchurPtr schur_algebra(int n, int d) {
  return std::make_shared<const SchurAlgebraZ>(n, d);
}

// ---------------------------------------------------------------------------
// ambient bookkeeping

namespace {

struct AmbientIndex {
  std::size_t dim = 0, amb = 0;
  std::vector<int> wt_of;          // ambient coord -> weight
  std::vector<std::size_t> pos_of; // ambient coord -> slot in its weight list
  std::vector<std::vector<std::size_t>> coords; // per weight, ascending
};

AmbientIndex make_ambient_index(const SchurAlgebraZ &alg, int colors) {
  AmbientIndex ix;
  ix.dim = alg.space().dim();
  ix.amb = static_cast<std::size_t>(colors) * ix.dim;
  std::vector<int> wp(ix.dim);
  for (std::size_t p = 0; p < ix.dim; ++p)
    wp[p] = static_cast<int>(alg.content_index(alg.space().content(p)));
  ix.wt_of.resize(ix.amb);
  ix.pos_of.resize(ix.amb);
  ix.coords.resize(alg.contents().size());
  for (int c = 0; c < colors; ++c)
    for (std::size_t p = 0; p < ix.dim; ++p) {
      std::size_t g = static_cast<std::size_t>(c) * ix.dim + p;
      int w = wp[p];
      ix.wt_of[g] = w;
      ix.pos_of[g] = ix.coords[w].size();
      ix.coords[w].push_back(g);
    }
  return ix;
}

// weight of a row, -1 when zero; throws when mixed
int row_weight(const IntegerMatrix &rows, std::size_t r, const AmbientIndex &ix,
               const std::string &name) {
  int w = -1;
  for (std::size_t c = 0; c < rows.cols(); ++c) {
    if (rows.at(r, c) == 0)
      continue;
    int wc = ix.wt_of[c];
    if (w == -1)
      w = wc;
    else if (w != wc)
      throw std::logic_error(name + ": generator row not weight homogeneous");
  }
  return w;
}

std::vector<Int> compress_row(const IntegerMatrix &rows, std::size_t r,
                              const AmbientIndex &ix, int w) {
  const auto &cs = ix.coords[w];
  std::vector<Int> out(cs.size());
  for (std::size_t l = 0; l < cs.size(); ++l)
    out[l] = rows.at(r, cs[l]);
  return out;
}

IntegerMatrix rows_matrix(const std::vector<std::vector<Int>> &rows,
                          std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = rows[i][j];
  return m;
}

// solve v = z * stack through the stored HNF; z has one entry per stack row
std::vector<Int> solve_stack(const RepModule::WeightSolver &ws,
                             std::vector<Int> vec, const char *what) {
  std::size_t rows = ws.h.rows();
  std::vector<Int> y(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const Int &piv = ws.h.at(r, ws.pivots[r]);
    Int &val = vec[ws.pivots[r]];
    if (val == 0)
      continue;
    if (val % piv != 0)
      throw std::runtime_error(std::string(what) + ": vector outside lattice");
    Int q = val / piv;
    y[r] = q;
    for (std::size_t c = ws.pivots[r]; c < vec.size(); ++c)
      vec[c] -= q * ws.h.at(r, c);
  }
  if (!is_zero_vec(vec))
    throw std::runtime_error(std::string(what) + ": vector outside lattice");
  std::vector<Int> z(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (y[r] == 0)
      continue;
    for (std::size_t c = 0; c < rows; ++c)
      z[c] += y[r] * ws.u.at(r, c);
  }
  return z;
}

// image of a compressed weight-w1 row under the right action of orbit b
std::vector<Int> orbit_image(const SchurAlgebraZ &alg, const AmbientIndex &ix,
                             int w1, const std::vector<Int> &row,
                             std::size_t b) {
  int w2 = alg.col_content(b);
  std::vector<Int> out(ix.coords[w2].size(), 0);
  if (alg.row_content(b) != w1)
    return out;
  const auto &orb = alg.orbit(b);
  const std::size_t dim = ix.dim;
  for (std::size_t l = 0; l < row.size(); ++l) {
    if (row[l] == 0)
      continue;
    std::size_t g = ix.coords[w1][l];
    std::size_t c = g / dim;
    std::uint32_t p = static_cast<std::uint32_t>(g % dim);
    auto lo = std::lower_bound(orb.begin(), orb.end(),
                               std::make_pair(p, std::uint32_t(0)));
    for (auto it = lo; it != orb.end() && it->first == p; ++it)
      out[ix.pos_of[c * dim + it->second]] += row[l];
  }
  return out;
}

Lattice assemble_lattice(const std::vector<Lattice> &per_w,
                         const AmbientIndex &ix) {
  std::vector<std::pair<std::size_t, std::vector<Int>>> rows;
  for (std::size_t w = 0; w < per_w.size(); ++w) {
    const IntegerMatrix &b = per_w[w].basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::vector<Int> g(ix.amb, 0);
      std::size_t pivot = ix.amb;
      for (std::size_t l = 0; l < b.cols(); ++l) {
        if (b.at(r, l) == 0)
          continue;
        std::size_t gc = ix.coords[w][l];
        g[gc] = b.at(r, l);
        if (pivot == ix.amb)
          pivot = gc; // HNF rows lead with their pivot
      }
      rows.emplace_back(pivot, std::move(g));
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  IntegerMatrix g(rows.size(), ix.amb);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ix.amb; ++j)
      g.at(i, j) = rows[i].second[j];
  return Lattice::from_generators(g);
}

struct BuildInput {
  SchurPtr alg;
  int colors = 1;
  std::string name;
  bool a_full = false;
  IntegerMatrix a_gens{0, 0};
  IntegerMatrix b_gens{0, 0};
  const IntegerMatrix *chosen = nullptr; // optional basis lifts, row order kept
};

RepModule build_module(BuildInput in) {
  const SchurAlgebraZ &alg = *in.alg;
  AmbientIndex ix = make_ambient_index(alg, in.colors);
  const std::size_t nw = alg.contents().size();

  RepModule m;
  m.algebra = in.alg;
  m.colors = in.colors;
  m.name = std::move(in.name);
  m.weight_members.resize(nw);

  // per-weight sublattices of the presentation
  std::vector<std::vector<std::vector<Int>>> a_rows(nw), b_rows(nw);
  auto split = [&](const IntegerMatrix &rows,
                   std::vector<std::vector<std::vector<Int>>> &out) {
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      int w = row_weight(rows, r, ix, m.name);
      if (w >= 0)
        out[w].push_back(compress_row(rows, r, ix, w));
    }
  };
  if (!in.a_full)
    split(in.a_gens, a_rows);
  split(in.b_gens, b_rows);

  std::vector<Lattice> la(nw), lb(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t len = ix.coords[w].size();
    lb[w] = b_rows[w].empty()
                ? Lattice::zero(len)
                : Lattice::from_generators(rows_matrix(b_rows[w], len));
    la[w] = in.a_full
                ? Lattice::full(len)
                : (a_rows[w].empty()
                       ? Lattice::zero(len)
                       : Lattice::from_generators(rows_matrix(a_rows[w], len)));
  }

  // choose the basis lifts
  std::vector<std::vector<std::vector<Int>>> lift_w(nw);
  std::vector<std::vector<Int>> global_rows;
  if (in.chosen) {
    const IntegerMatrix &ch = *in.chosen;
    for (std::size_t r = 0; r < ch.rows(); ++r) {
      int w = row_weight(ch, r, ix, m.name);
      if (w < 0)
        throw std::runtime_error(m.name + ": chosen basis row is zero");
      m.weight_members[w].push_back(global_rows.size());
      m.weight.push_back(w);
      lift_w[w].push_back(compress_row(ch, r, ix, w));
      global_rows.push_back(ch.row_vec(r));
    }
  } else {
    for (std::size_t w = 0; w < nw; ++w) {
      auto qr = exactlin::lattice_quotient(la[w], lb[w]);
      if (!qr.torsion.empty())
        throw std::runtime_error(m.name + ": torsion in the quotient");
      for (std::size_t r = 0; r < qr.lift.rows(); ++r) {
        m.weight_members[w].push_back(global_rows.size());
        m.weight.push_back(static_cast<int>(w));
        lift_w[w].push_back(qr.lift.row_vec(r));
        std::vector<Int> g(ix.amb, 0);
        for (std::size_t l = 0; l < ix.coords[w].size(); ++l)
          g[ix.coords[w][l]] = qr.lift.at(r, l);
        global_rows.push_back(std::move(g));
      }
    }
  }

  m.lift = IntegerMatrix(global_rows.size(), ix.amb);
  m.color.resize(global_rows.size(), 0);
  for (std::size_t r = 0; r < global_rows.size(); ++r) {
    for (std::size_t c = 0; c < ix.amb; ++c)
      m.lift.at(r, c) = global_rows[r][c];
    for (std::size_t c = 0; c < ix.amb; ++c)
      if (global_rows[r][c] != 0) {
        m.color[r] = static_cast<int>(c / ix.dim);
        break;
      }
  }

  // per-weight solvers over [basis lifts; B basis]; in the same stroke this
  // certifies that the chosen lifts really are a basis of a free quotient
  m.solver.resize(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    std::size_t len = ix.coords[w].size();
    std::vector<std::vector<Int>> stack_rows = lift_w[w];
    const IntegerMatrix &bb = lb[w].basis();
    for (std::size_t r = 0; r < bb.rows(); ++r)
      stack_rows.push_back(bb.row_vec(r));
    IntegerMatrix stack = rows_matrix(stack_rows, len);
    auto hr = exactlin::hnf(stack, true);
    if (hr.rank != stack.rows())
      throw std::runtime_error(m.name + ": dependent basis lifts");
    if (in.chosen) {
      Lattice span = Lattice::from_generators(hr.h);
      if (!(span == la[w]))
        throw std::runtime_error(m.name + ": chosen lifts do not span");
    }
    m.solver[w] = {ix.coords[w], std::move(hr.h), std::move(hr.u),
                   std::move(hr.pivot_cols), lift_w[w].size()};
  }

  // actions, certifying en route that the sublattice is stable
  m.action.resize(alg.rank());
  for (std::size_t b = 0; b < alg.rank(); ++b) {
    int w1 = alg.row_content(b), w2 = alg.col_content(b);
    IntegerMatrix blk(m.weight_members[w1].size(),
                      m.weight_members[w2].size());
    for (std::size_t i = 0; i < lift_w[w1].size(); ++i) {
      std::vector<Int> img = orbit_image(alg, ix, w1, lift_w[w1][i], b);
      std::vector<Int> z = solve_stack(m.solver[w2], std::move(img),
                                       m.name.c_str());
      for (std::size_t t = 0; t < m.solver[w2].nbasis; ++t)
        blk.at(i, t) = z[t];
    }
    m.action[b] = std::move(blk);
  }

  // the quotient lattice must be stable as well
  for (std::size_t b = 0; b < alg.rank(); ++b) {
    int w1 = alg.row_content(b), w2 = alg.col_content(b);
    const IntegerMatrix &bb = lb[w1].basis();
    for (std::size_t r = 0; r < bb.rows(); ++r) {
      std::vector<Int> img =
          orbit_image(alg, ix, w1, bb.row_vec(r), b);
      if (!lb[w2].contains(IntegerMatrix::from_row(img)))
        throw std::runtime_error(m.name + ": quotient lattice not stable");
    }
  }

  m.pres_a = in.a_full ? Lattice::full(ix.amb) : assemble_lattice(la, ix);
  m.pres_b = assemble_lattice(lb, ix);
  return m;
}

Partition normalize_parts(std::vector<int> lambda, const SchurAlgebraZ &alg,
                          const char *what) {
  for (int x : lambda)
    if (x < 0)
      throw std::invalid_argument(std::string(what) + ": negative part");
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  while (!lambda.empty() && lambda.back() == 0)
    lambda.pop_back();
  if (young::weight(lambda) != alg.d())
    throw std::invalid_argument(std::string(what) +
                                ": parts must sum to the degree");
  return lambda;
}

std::vector<int> block_offsets(const std::vector<int> &parts) {
  std::vector<int> off(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    off[i + 1] = off[i] + parts[i];
  return off;
}

// rows e_I - e_{I.t} for adjacent transpositions t inside the given blocks,
// at the given color offset
void symmetrizer_rows(const SchurAlgebraZ &alg, const std::vector<int> &parts,
                      std::size_t color,
                      std::vector<std::vector<Int>> &out, std::size_t amb) {
  const TensorSpace &sp = alg.space();
  std::size_t dim = sp.dim();
  auto off = block_offsets(parts);
  for (std::size_t p = 0; p < dim; ++p) {
    std::vector<int> idx = sp.at(p);
    for (std::size_t bl = 0; bl < parts.size(); ++bl)
      for (int t = off[bl]; t + 1 < off[bl + 1]; ++t) {
        if (idx[t] >= idx[t + 1])
          continue; // one orientation per pair
        std::vector<int> jdx = idx;
        std::swap(jdx[t], jdx[t + 1]);
        std::vector<Int> row(amb, 0);
        row[color * dim + p] = 1;
        row[color * dim + sp.pos(jdx)] = -1;
        out.push_back(std::move(row));
      }
  }
}

// all tuples over [0, n) of length len that are weakly (strict = false) or
// strictly (strict = true) increasing
std::vector<std::vector<int>> increasing_tuples(int n, int len, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, strict ? v + 1 : v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int inversions(const std::vector<int> &idx) {
  int inv = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j])
        ++inv;
  return inv;
}

// all rearrangements of a tuple with parity signs (distinct rearrangements
// when signless)
std::vector<std::pair<std::vector<int>, int>>
arrangements(const std::vector<int> &tuple, bool with_sign) {
  std::vector<std::pair<std::vector<int>, int>> out;
  if (tuple.empty()) {
    out.push_back({{}, 1});
    return out;
  }
  if (!with_sign) {
    std::vector<int> t = tuple;
    std::sort(t.begin(), t.end());
    do
      out.push_back({t, 1});
    while (std::next_permutation(t.begin(), t.end()));
    return out;
  }
  std::vector<int> perm(tuple.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  do {
    std::vector<int> arr(tuple.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      arr[i] = tuple[perm[i]];
    out.push_back({std::move(arr), inversions(perm) % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// generators of a product of per-block antisymmetrized or orbit-summed
// tuples; each generator is one choice of tuple per block
std::vector<std::vector<Int>>
block_product_rows(const SchurAlgebraZ &alg, const std::vector<int> &parts,
                   bool exterior) {
  const TensorSpace &sp = alg.space();
  std::size_t amb = sp.dim();
  std::vector<std::vector<std::vector<std::pair<std::vector<int>, int>>>>
      per_block; // block -> choice -> expansion
  for (int a : parts) {
    std::vector<std::vector<std::pair<std::vector<int>, int>>> choices;
    for (const auto &t : increasing_tuples(alg.n(), a, exterior))
      choices.push_back(arrangements(t, exterior));
    per_block.push_back(std::move(choices));
  }
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pick(parts.size(), 0);
  auto emit = [&]() {
    std::vector<Int> row(amb, 0);
    // expand the product of the picked expansions
    auto add = [&](auto &&self, std::size_t bl, std::vector<int> &acc,
                   int sign) -> void {
      if (bl == parts.size()) {
        row[sp.pos(acc)] += sign;
        return;
      }
      for (const auto &[arr, s] : per_block[bl][pick[bl]]) {
        std::size_t base = acc.size();
        acc.insert(acc.end(), arr.begin(), arr.end());
        self(self, bl + 1, acc, sign * s);
        acc.resize(base);
      }
    };
    std::vector<int> acc;
    add(add, 0, acc, 1);
    rows.push_back(std::move(row));
  };
  // odometer over choices; an empty parts list yields the single empty pick
  bool any_empty = false;
  for (const auto &c : per_block)
    if (c.empty())
      any_empty = true;
  if (!any_empty) {
    while (true) {
      emit();
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < per_block[i].size())
          break;
        pick[i] = 0;
      }
      if (i == pick.size())
        break;
    }
  }
  return rows;
}

} // namespace

// ---------------------------------------------------------------------------
// RepModule

std::size_t RepModule::ambient_dim() const {
  return static_cast<std::size_t>(colors) * algebra->space().dim();
}

std::size_t RepModule::amb_index(int c, std::size_t p) const {
  return static_cast<std::size_t>(c) * algebra->space().dim() + p;
}

IntegerMatrix RepModule::dense_action(std::size_t b) const {
  IntegerMatrix out(rank(), rank());
  const auto &rows = weight_members[algebra->row_content(b)];
  const auto &cols = weight_members[algebra->col_content(b)];
  const IntegerMatrix &blk = action[b];
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(rows[i], cols[j]) = blk.at(i, j);
  return out;
}

std::vector<Int> RepModule::coordinates(const std::vector<Int> &v) const {
  if (v.size() != ambient_dim())
    throw std::invalid_argument("coordinates: ambient size mismatch");
  std::vector<Int> out(rank(), 0);
  for (std::size_t w = 0; w < solver.size(); ++w) {
    const WeightSolver &ws = solver[w];
    std::vector<Int> vec(ws.amb.size());
    bool flat = true;
    for (std::size_t l = 0; l < ws.amb.size(); ++l) {
      vec[l] = v[ws.amb[l]];
      if (vec[l] != 0)
        flat = false;
    }
    if (flat)
      continue;
    std::vector<Int> z = solve_stack(ws, std::move(vec), name.c_str());
    for (std::size_t t = 0; t < ws.nbasis; ++t)
      out[weight_members[w][t]] = z[t];
  }
  return out;
}

std::vector<long> RepModule::character() const {
  std::vector<long> out(weight_members.size(), 0);
  for (std::size_t w = 0; w < weight_members.size(); ++w)
    out[w] = static_cast<long>(weight_members[w].size());
  return out;
}

// ---------------------------------------------------------------------------
// constructors

RepModule divided_power_module(const SchurPtr &alg, std::vector<int> lambda) {
  Partition lam = normalize_parts(std::move(lambda), *alg, "divided power");
  BuildInput in;
  in.alg = alg;
  in.name = "Gamma[" + young::partition_str(lam) + "]";
  auto rows = block_product_rows(*alg, lam, false);
  in.a_gens = rows_matrix(rows, alg->space().dim());
  RepModule m = build_module(std::move(in));
  Int expected = 1;
  for (int a : lam)
    expected *= binom(alg->n() + a - 1, a);
  if (Int(static_cast<long>(m.rank())) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the formula");
  return m;
}

RepModule exterior_module(const SchurPtr &alg, std::vector<int> lambda) {
  Partition lam = normalize_parts(std::move(lambda), *alg, "exterior power");
  BuildInput in;
  in.alg = alg;
  in.name = "Lambda[" + young::partition_str(lam) + "]";
  auto rows = block_product_rows(*alg, lam, true);
  in.a_gens = rows_matrix(rows, alg->space().dim());
  RepModule m = build_module(std::move(in));
  Int expected = 1;
  for (int a : lam)
    expected *= binom(alg->n(), a);
  if (Int(static_cast<long>(m.rank())) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the formula");
  return m;
}

RepModule symmetric_module(const SchurPtr &alg, std::vector<int> lambda) {
  Partition lam = normalize_parts(std::move(lambda), *alg, "symmetric power");
  BuildInput in;
  in.alg = alg;
  in.name = "Sym[" + young::partition_str(lam) + "]";
  in.a_full = true;
  std::vector<std::vector<Int>> rows;
  symmetrizer_rows(*alg, lam, 0, rows, alg->space().dim());
  in.b_gens = rows_matrix(rows, alg->space().dim());
  RepModule m = build_module(std::move(in));
  Int expected = 1;
  for (int a : lam)
    expected *= binom(alg->n() + a - 1, a);
  if (Int(static_cast<long>(m.rank())) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the formula");
  return m;
}

namespace {

// position map of the slot shuffle J[s] = I[sigma[s]]
std::vector<std::size_t> shuffle_positions(const TensorSpace &sp,
                                           const std::vector<std::size_t> &sigma) {
  std::vector<std::size_t> pmap(sp.dim());
  for (std::size_t p = 0; p < sp.dim(); ++p) {
    std::vector<int> idx = sp.at(p);
    std::vector<int> jdx(sp.d);
    for (int s = 0; s < sp.d; ++s)
      jdx[s] = idx[sigma[s]];
    pmap[p] = sp.pos(jdx);
  }
  return pmap;
}

IntegerMatrix permute_columns(const IntegerMatrix &rows,
                              const std::vector<std::size_t> &pmap) {
  IntegerMatrix out(rows.rows(), rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r)
    for (std::size_t p = 0; p < rows.cols(); ++p)
      out.at(r, pmap[p]) = rows.at(r, p);
  return out;
}

// exterior relation rows for the given column blocks: e_I with an equal
// adjacent pair, and e_I + e_{I.t}
std::vector<std::vector<Int>> alternator_rows(const SchurAlgebraZ &alg,
                                              const std::vector<int> &blocks) {
  const TensorSpace &sp = alg.space();
  std::size_t dim = sp.dim();
  auto off = block_offsets(blocks);
  std::vector<std::vector<Int>> out;
  for (std::size_t p = 0; p < dim; ++p) {
    std::vector<int> idx = sp.at(p);
    for (std::size_t bl = 0; bl < blocks.size(); ++bl)
      for (int t = off[bl]; t + 1 < off[bl + 1]; ++t) {
        if (idx[t] == idx[t + 1]) {
          std::vector<Int> row(dim, 0);
          row[p] = 1;
          out.push_back(std::move(row));
        } else if (idx[t] < idx[t + 1]) {
          std::vector<int> jdx = idx;
          std::swap(jdx[t], jdx[t + 1]);
          std::vector<Int> row(dim, 0);
          row[p] = 1;
          row[sp.pos(jdx)] += 1;
          out.push_back(std::move(row));
        }
      }
  }
  return out;
}

} // namespace

RepModule schur_module(const SchurPtr &alg, std::vector<int> lambda) {
  Partition lam = normalize_parts(std::move(lambda), *alg, "schur module");
  Partition lamc = young::conjugate(lam);
  RepModule ext = exterior_module(alg, lamc);
  auto pmap = shuffle_positions(alg->space(), young::sigma_permutation(lam));
  IntegerMatrix mapped = permute_columns(ext.lift, pmap);
  std::vector<std::vector<Int>> srows;
  symmetrizer_rows(*alg, lam, 0, srows, alg->space().dim());
  IntegerMatrix b = rows_matrix(srows, alg->space().dim());
  BuildInput in;
  in.alg = alg;
  in.name = "S[" + young::partition_str(lam) + "]";
  in.a_gens = IntegerMatrix::vstack(mapped, b);
  in.b_gens = b;
  RepModule m = build_module(std::move(in));
  long expected = young::ssyt_count(lam, alg->n());
  if (static_cast<long>(m.rank()) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the tableau count");
  return m;
}

RepModule weyl_module(const SchurPtr &alg, std::vector<int> lambda) {
  Partition lam = normalize_parts(std::move(lambda), *alg, "weyl module");
  Partition lamc = young::conjugate(lam);
  RepModule gam = divided_power_module(alg, lam);
  auto pmap = shuffle_positions(alg->space(), young::sigma_permutation(lamc));
  IntegerMatrix mapped = permute_columns(gam.lift, pmap);
  IntegerMatrix b =
      rows_matrix(alternator_rows(*alg, lamc), alg->space().dim());
  BuildInput in;
  in.alg = alg;
  in.name = "W[" + young::partition_str(lam) + "]";
  in.a_gens = IntegerMatrix::vstack(mapped, b);
  in.b_gens = b;
  RepModule m = build_module(std::move(in));
  long expected = young::ssyt_count(lam, alg->n());
  if (static_cast<long>(m.rank()) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the tableau count");
  return m;
}

RepModule dual_module(const RepModule &m) {
  std::size_t amb = m.ambient_dim();
  Lattice ann_b = m.pres_b.rank() == 0
                      ? Lattice::full(amb)
                      : exactlin::kernel_basis(m.pres_b.basis());
  Lattice ann_a;
  if (m.pres_a.rank() == 0)
    ann_a = Lattice::full(amb);
  else if (m.pres_a.rank() == amb)
    ann_a = Lattice::zero(amb);
  else
    ann_a = exactlin::kernel_basis(m.pres_a.basis());
  BuildInput in;
  in.alg = m.algebra;
  in.colors = m.colors;
  in.name = "dual(" + m.name + ")";
  in.a_gens = ann_b.basis();
  in.b_gens = ann_a.basis();
  RepModule d = build_module(std::move(in));
  if (d.rank() != m.rank())
    throw std::runtime_error(d.name + ": rank differs from the source");
  return d;
}

namespace {

void check_same_algebra(const RepModule &m, const RepModule &n,
                        const char *what) {
  if (m.algebra->n() != n.algebra->n() || m.algebra->d() != n.algebra->d())
    throw std::invalid_argument(std::string(what) +
                                ": modules over different algebras");
}

} // namespace

RepModule direct_sum_modules(const RepModule &m, const RepModule &n) {
  check_same_algebra(m, n, "direct sum");
  std::size_t dim = m.algebra->space().dim();
  std::size_t offs = static_cast<std::size_t>(m.colors) * dim;
  std::size_t amb = offs + static_cast<std::size_t>(n.colors) * dim;
  auto scatter = [&](const IntegerMatrix &rows, std::size_t shift) {
    IntegerMatrix out(rows.rows(), amb);
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t c = 0; c < rows.cols(); ++c)
        out.at(r, c + shift) = rows.at(r, c);
    return out;
  };
  IntegerMatrix chosen = IntegerMatrix::vstack(scatter(m.lift, 0),
                                               scatter(n.lift, offs));
  BuildInput in;
  in.alg = m.algebra;
  in.colors = m.colors + n.colors;
  in.name = m.name + " (+) " + n.name;
  in.a_gens = IntegerMatrix::vstack(scatter(m.pres_a.basis(), 0),
                                    scatter(n.pres_a.basis(), offs));
  in.b_gens = IntegerMatrix::vstack(scatter(m.pres_b.basis(), 0),
                                    scatter(n.pres_b.basis(), offs));
  in.chosen = &chosen;
  return build_module(std::move(in));
}

namespace {

// rows of the product of two row families under the slot concatenation
// (c1, p1) x (c2, p2) -> ((c1 * C2 + c2), p1 * dim2 + p2)
IntegerMatrix tensor_rows(const IntegerMatrix &a, std::size_t colors_a,
                          std::size_t dim_a, const IntegerMatrix &b,
                          std::size_t colors_b, std::size_t dim_b) {
  std::size_t dim_t = dim_a * dim_b;
  std::size_t amb = colors_a * colors_b * dim_t;
  IntegerMatrix out(a.rows() * b.rows(), amb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      std::size_t r = i * b.rows() + j;
      for (std::size_t g1 = 0; g1 < a.cols(); ++g1) {
        if (a.at(i, g1) == 0)
          continue;
        std::size_t c1 = g1 / dim_a, p1 = g1 % dim_a;
        for (std::size_t g2 = 0; g2 < b.cols(); ++g2) {
          if (b.at(j, g2) == 0)
            continue;
          std::size_t c2 = g2 / dim_b, p2 = g2 % dim_b;
          out.at(r, (c1 * colors_b + c2) * dim_t + p1 * dim_b + p2) =
              a.at(i, g1) * b.at(j, g2);
        }
      }
    }
  return out;
}

} // namespace

RepModule tensor_modules(const SchurPtr &alg, const RepModule &m,
                         const RepModule &n) {
  if (m.algebra->n() != alg->n() || n.algebra->n() != alg->n())
    throw std::invalid_argument("tensor: letter counts differ");
  if (m.algebra->d() + n.algebra->d() != alg->d())
    throw std::invalid_argument("tensor: degrees do not add up");
  std::size_t dm = m.algebra->space().dim();
  std::size_t dn = n.algebra->space().dim();
  std::size_t cm = static_cast<std::size_t>(m.colors);
  std::size_t cn = static_cast<std::size_t>(n.colors);
  IntegerMatrix chosen = tensor_rows(m.lift, cm, dm, n.lift, cn, dn);
  bool full_m = m.pres_a.rank() == m.ambient_dim();
  bool full_n = n.pres_a.rank() == n.ambient_dim();
  BuildInput in;
  in.alg = alg;
  in.colors = static_cast<int>(cm * cn);
  in.name = "(" + m.name + ")(x)(" + n.name + ")";
  in.a_full = full_m && full_n;
  if (!in.a_full)
    in.a_gens = tensor_rows(m.pres_a.basis(), cm, dm, n.pres_a.basis(), cn, dn);
  in.b_gens = IntegerMatrix::vstack(
      tensor_rows(m.pres_b.basis(), cm, dm, n.pres_a.basis(), cn, dn),
      tensor_rows(m.pres_a.basis(), cm, dm, n.pres_b.basis(), cn, dn));
  in.chosen = &chosen;
  return build_module(std::move(in));
}

RepModule sym_power_of_sum(const SchurPtr &alg, int n_copies) {
  if (n_copies < 0)
    throw std::invalid_argument("sym power of sum: negative copy count");
  int mdeg = alg->d();
  auto comps = young::compositions(mdeg, n_copies);
  BuildInput in;
  in.alg = alg;
  in.colors = static_cast<int>(comps.size());
  in.name = "SymSum[" + std::to_string(mdeg) + "," +
            std::to_string(n_copies) + "]";
  in.a_full = true;
  std::size_t amb = comps.size() * alg->space().dim();
  std::vector<std::vector<Int>> rows;
  for (std::size_t c = 0; c < comps.size(); ++c)
    symmetrizer_rows(*alg, comps[c], c, rows, amb);
  in.b_gens = rows_matrix(rows, amb);
  RepModule m = build_module(std::move(in));
  Int expected = binom(static_cast<long>(alg->n()) * n_copies + mdeg - 1, mdeg);
  if (Int(static_cast<long>(m.rank())) != expected)
    throw std::runtime_error(m.name + ": rank disagrees with the formula");
  return m;
}

// ---------------------------------------------------------------------------
// homs and induced maps

std::vector<IntegerMatrix> rep_hom(const RepModule &m, const RepModule &n) {
  check_same_algebra(m, n, "hom");
  const SchurAlgebraZ &alg = *m.algebra;
  std::size_t nw = alg.contents().size();
  std::vector<std::size_t> var_off(nw + 1, 0);
  for (std::size_t w = 0; w < nw; ++w)
    var_off[w + 1] = var_off[w] +
                     m.weight_members[w].size() * n.weight_members[w].size();
  std::size_t vars = var_off[nw];
  if (vars == 0)
    return {};

  IntegerMatrix k = IntegerMatrix::identity(vars);
  for (std::size_t b = 0; b < alg.rank() && k.rows() > 0; ++b) {
    int w1 = alg.row_content(b), w2 = alg.col_content(b);
    std::size_t rm1 = m.weight_members[w1].size();
    std::size_t rm2 = m.weight_members[w2].size();
    std::size_t rn1 = n.weight_members[w1].size();
    std::size_t rn2 = n.weight_members[w2].size();
    std::size_t cols = rm1 * rn2;
    if (cols == 0)
      continue;
    // rho_m(b) F = F rho_n(b) on the (w1, w2) block, as sparse triples
    std::vector<std::tuple<std::size_t, std::size_t, const Int *>> triples;
    std::vector<Int> negs;
    negs.reserve(n.action[b].rows() * n.action[b].cols());
    for (std::size_t s = 0; s < rm1; ++s)
      for (std::size_t u = 0; u < rm2; ++u) {
        const Int &a = m.action[b].at(s, u);
        if (a == 0)
          continue;
        for (std::size_t t = 0; t < rn2; ++t)
          triples.emplace_back(var_off[w2] + u * rn2 + t, s * rn2 + t, &a);
      }
    for (std::size_t v = 0; v < rn1; ++v)
      for (std::size_t t = 0; t < rn2; ++t) {
        const Int &a = n.action[b].at(v, t);
        if (a == 0)
          continue;
        negs.push_back(-a);
        for (std::size_t s = 0; s < rm1; ++s)
          triples.emplace_back(var_off[w1] + s * rn1 + v, s * rn2 + t,
                               &negs.back());
      }
    if (triples.empty())
      continue;
    IntegerMatrix ke(k.rows(), cols);
    for (const auto &[vr, col, val] : triples)
      for (std::size_t i = 0; i < k.rows(); ++i) {
        const Int &kv = k.at(i, vr);
        if (kv != 0)
          ke.at(i, col) += kv * *val;
      }
    if (ke.is_zero())
      continue;
    IntegerMatrix ker = exactlin::left_kernel(ke);
    k = ker.mul(k);
  }

  // canonical form over the full vectorization
  std::size_t rm = m.rank(), rn = n.rank();
  IntegerMatrix full(k.rows(), rm * rn);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t w = 0; w < nw; ++w) {
      std::size_t a = m.weight_members[w].size();
      std::size_t bsz = n.weight_members[w].size();
      for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < bsz; ++v)
          full.at(i, m.weight_members[w][u] * rn + n.weight_members[w][v]) =
              k.at(i, var_off[w] + u * bsz + v);
    }
  auto hr = exactlin::hnf(full, false);
  std::vector<IntegerMatrix> out;
  for (std::size_t r = 0; r < hr.rank; ++r) {
    IntegerMatrix f(rm, rn);
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rn; ++j)
        f.at(i, j) = hr.h.at(r, i * rn + j);
    out.push_back(std::move(f));
  }
  return out;
}

RepMap induced_map(const RepModule &src, const RepModule &tgt,
                   const AmbientMap &map) {
  check_same_algebra(src, tgt, "induced map");
  if (map.size() != src.ambient_dim())
    throw std::invalid_argument("induced map: ambient size mismatch");
  const SchurAlgebraZ &alg = *src.algebra;
  AmbientIndex six = make_ambient_index(alg, src.colors);
  AmbientIndex tix = make_ambient_index(alg, tgt.colors);
  const std::size_t dim = six.dim;

  for (std::size_t g = 0; g < map.size(); ++g)
    for (const auto &[h, v] : map[g]) {
      if (h >= tix.amb)
        throw std::invalid_argument("induced map: target index out of range");
      if (v != 0 && tix.wt_of[h] != six.wt_of[g])
        throw std::runtime_error("induced map: not weight preserving");
    }

  // ambient equivariance against every basis orbit
  for (std::size_t b = 0; b < alg.rank(); ++b) {
    const auto &orb = alg.orbit(b);
    for (std::size_t g = 0; g < map.size(); ++g) {
      std::map<std::size_t, Int> lhs, rhs;
      std::size_t c = g / dim;
      std::uint32_t p = static_cast<std::uint32_t>(g % dim);
      auto lo = std::lower_bound(orb.begin(), orb.end(),
                                 std::make_pair(p, std::uint32_t(0)));
      for (auto it = lo; it != orb.end() && it->first == p; ++it) {
        std::size_t gp = c * dim + it->second;
        for (const auto &[h, v] : map[gp])
          lhs[h] += v;
      }
      for (const auto &[h, v] : map[g]) {
        std::size_t ct = h / dim;
        std::uint32_t pt = static_cast<std::uint32_t>(h % dim);
        auto lot = std::lower_bound(orb.begin(), orb.end(),
                                    std::make_pair(pt, std::uint32_t(0)));
        for (auto it = lot; it != orb.end() && it->first == pt; ++it)
          rhs[ct * dim + it->second] += v;
      }
      for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second == 0 ? lhs.erase(it) : std::next(it);
      for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second == 0 ? rhs.erase(it) : std::next(it);
      if (lhs != rhs)
        throw std::runtime_error("induced map: ambient map not equivariant");
    }
  }

  auto push = [&](const IntegerMatrix &rows, std::size_t r, int w) {
    std::vector<Int> vec(tix.coords[w].size(), 0);
    for (std::size_t c2 = 0; c2 < rows.cols(); ++c2) {
      if (rows.at(r, c2) == 0)
        continue;
      for (const auto &[h, v] : map[c2])
        vec[tix.pos_of[h]] += rows.at(r, c2) * v;
    }
    return vec;
  };

  // the presentation kernel must land in the target's kernel
  const IntegerMatrix &bb = src.pres_b.basis();
  for (std::size_t r = 0; r < bb.rows(); ++r) {
    int w = row_weight(bb, r, six, src.name);
    if (w < 0)
      continue;
    std::vector<Int> vec = push(bb, r, w);
    std::vector<Int> z = solve_stack(tgt.solver[w], std::move(vec),
                                     "induced map");
    for (std::size_t t = 0; t < tgt.solver[w].nbasis; ++t)
      if (z[t] != 0)
        throw std::runtime_error(
            "induced map: relations do not map into relations");
  }

  RepMap f;
  f.source = src.name;
  f.target = tgt.name;
  f.matrix = IntegerMatrix(src.rank(), tgt.rank());
  for (std::size_t r = 0; r < src.rank(); ++r) {
    int w = src.weight[r];
    std::vector<Int> vec = push(src.lift, r, w);
    std::vector<Int> z = solve_stack(tgt.solver[w], std::move(vec),
                                     "induced map");
    for (std::size_t t = 0; t < tgt.solver[w].nbasis; ++t)
      f.matrix.at(r, tgt.weight_members[w][t]) = z[t];
  }
  return f;
}

AmbientMap sym_mult_ambient(int a, int b, int k, int n_copies) {
  if (a < 0 || b < 0 || k < 0 || n_copies < 0)
    throw std::invalid_argument("sym multiplication: negative parameter");
  auto comps_a = young::compositions(a, n_copies);
  auto comps_b = young::compositions(b, n_copies);
  auto comps_t = young::compositions(a + b, n_copies);
  std::map<std::vector<int>, std::size_t> tindex;
  for (std::size_t i = 0; i < comps_t.size(); ++i)
    tindex[comps_t[i]] = i;
  TensorSpace sp1{k, a}, sp2{k, b}, spt{k, a + b};
  std::size_t dim1 = sp1.dim(), dim2 = sp2.dim(), dimt = spt.dim();
  AmbientMap u(comps_a.size() * comps_b.size() * dimt);
  for (std::size_t ca = 0; ca < comps_a.size(); ++ca)
    for (std::size_t cb = 0; cb < comps_b.size(); ++cb) {
      const auto &alpha = comps_a[ca];
      const auto &beta = comps_b[cb];
      std::vector<int> gamma(n_copies);
      for (int i = 0; i < n_copies; ++i)
        gamma[i] = alpha[i] + beta[i];
      std::size_t ct = tindex.at(gamma);
      // target slot s comes from source one or two at the listed slot
      std::vector<std::pair<int, int>> slot; // (which, index)
      {
        int o1 = 0, o2 = 0;
        for (int i = 0; i < n_copies; ++i) {
          for (int s = 0; s < alpha[i]; ++s)
            slot.emplace_back(1, o1++);
          for (int s = 0; s < beta[i]; ++s)
            slot.emplace_back(2, o2++);
        }
      }
      for (std::size_t p1 = 0; p1 < dim1; ++p1) {
        std::vector<int> i1 = sp1.at(p1);
        for (std::size_t p2 = 0; p2 < dim2; ++p2) {
          std::vector<int> i2 = sp2.at(p2);
          std::vector<int> j(a + b);
          for (int s = 0; s < a + b; ++s)
            j[s] = slot[s].first == 1 ? i1[slot[s].second]
                                      : i2[slot[s].second];
          std::size_t src_idx = (ca * comps_b.size() + cb) * dimt +
                                p1 * dim2 + p2;
          u[src_idx].emplace_back(ct * dimt + spt.pos(j), Int(1));
        }
      }
    }
  return u;
}

// ---------------------------------------------------------------------------
// export into the finite-algebra toolkit

qha::AlgebraPtr as_fin_algebra(const SchurPtr &alg) {
  std::size_t r = alg->rank();
  std::vector<std::string> labels(r);
  std::vector<std::vector<qha::SparseVec>> table(r,
                                                 std::vector<qha::SparseVec>(r));
  for (std::size_t i = 0; i < r; ++i) {
    labels[i] = alg->basis_label(i);
    for (std::size_t j = 0; j < r; ++j)
      table[i][j] = alg->product(i, j);
  }
  qha::FinAlgebra a(std::move(labels), std::move(table), alg->unit());
  std::size_t nw = alg->contents().size();
  std::vector<std::vector<Int>> idems(nw, std::vector<Int>(r, 0));
  for (std::size_t o = 0; o < r; ++o)
    if (alg->unit()[o] == 1)
      idems[alg->row_content(o)][o] = 1;
  std::vector<int> rowb(r), colb(r);
  for (std::size_t o = 0; o < r; ++o) {
    rowb[o] = alg->row_content(o);
    colb[o] = alg->col_content(o);
  }
  a.set_peirce_system(std::move(idems), std::move(rowb), std::move(colb));
  a.verify();
  return std::make_shared<const qha::FinAlgebra>(std::move(a));
}

qha::AlgModule as_alg_module(const RepModule &m, const qha::AlgebraPtr &a) {
  if (a->rank() != m.algebra->rank())
    throw std::invalid_argument("module export: algebra rank mismatch");
  qha::AlgModule out;
  out.algebra = a;
  out.rank = m.rank();
  out.name = m.name;
  out.action.reserve(a->rank());
  for (std::size_t b = 0; b < a->rank(); ++b)
    out.action.push_back(m.dense_action(b));
  out.coord_block = m.weight;
  return out;
}

} // namespace ztilt::polyrep
