#include "ztilt/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ztilt::grassmann {

using exactlin::hnf;
using polyrep::RepModule;
using polyrep::SchurPtr;
using qha::AlgebraPtr;
using qha::AlgModule;
using qha::Bimodule;
using qha::ExtResult;
using qha::SparseVec;
using qha::Verdict;

namespace {

std::string pstr(const Partition &p) { return young::partition_str(p); }

// table labels: the empty partition prints as "0"
std::string disp(const Partition &p) {
  std::string s = pstr(p);
  return s.empty() ? std::string("0") : s;
}

IntegerMatrix stack_vectorized(const std::vector<IntegerMatrix> &basis,
                               std::size_t rm, std::size_t rn) {
  IntegerMatrix out(basis.size(), rm * rn);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (basis[t].rows() != rm || basis[t].cols() != rn)
      throw std::logic_error("hom basis has mismatched shapes");
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rn; ++j)
        out.at(t, i * rn + j) = basis[t].at(i, j);
  }
  return out;
}

SparseVec sparse_of(const std::vector<Int> &v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      s.emplace_back(i, v[i]);
  return s;
}

} // namespace

std::size_t GrassmannConfig::count() const {
  std::size_t c = 0;
  for (const auto &g : by_degree)
    c += g.size();
  return c;
}

GrassmannConfig grassmann_config(int k, int n) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("grassmann: need 0 <= k <= n");
  GrassmannConfig cfg;
  cfg.k = k;
  cfg.n = n;
  cfg.d_max = k * (n - k);
  cfg.by_degree.resize(cfg.d_max + 1);
  for (int d = 0; d <= cfg.d_max; ++d)
    cfg.by_degree[d] = young::box_partitions(n - k, k, d);
  mpz_class expect;
  mpz_bin_uiui(expect.get_mpz_t(), n, k);
  if (mpz_class(static_cast<long>(cfg.count())) != expect)
    throw std::runtime_error("grassmann: partition census misses C(n, k)");
  return cfg;
}

HomBasis hom_basis(std::vector<IntegerMatrix> basis, std::size_t src_rank,
                   std::size_t tgt_rank) {
  HomBasis hb;
  hb.basis = std::move(basis);
  hb.src_rank = src_rank;
  hb.tgt_rank = tgt_rank;
  IntegerMatrix stacked = stack_vectorized(hb.basis, src_rank, tgt_rank);
  exactlin::HermiteResult hr = hnf(stacked, true);
  if (hr.rank != hb.basis.size())
    throw std::logic_error("hom basis rows are dependent");
  hb.h = std::move(hr.h);
  hb.u = std::move(hr.u);
  hb.pivots = std::move(hr.pivot_cols);
  return hb;
}

std::vector<Int> HomBasis::coords(const IntegerMatrix &f) const {
  if (f.rows() != src_rank || f.cols() != tgt_rank)
    throw std::invalid_argument("coords: shape mismatch");
  std::vector<Int> y(src_rank * tgt_rank);
  for (std::size_t i = 0; i < src_rank; ++i)
    for (std::size_t j = 0; j < tgt_rank; ++j)
      y[i * tgt_rank + j] = f.at(i, j);
  std::vector<Int> x(basis.size());
  for (std::size_t t = 0; t < pivots.size(); ++t) {
    std::size_t p = pivots[t];
    if (y[p] == 0)
      continue;
    Int q = y[p] / h.at(t, p);
    if (q * h.at(t, p) != y[p])
      throw std::runtime_error("hom outside the basis lattice");
    x[t] = q;
    for (std::size_t j = p; j < y.size(); ++j)
      if (h.at(t, j) != 0)
        y[j] -= q * h.at(t, j);
  }
  for (const Int &v : y)
    if (v != 0)
      throw std::runtime_error("hom outside the basis lattice");
  std::vector<Int> c(basis.size());
  for (std::size_t t = 0; t < pivots.size(); ++t)
    if (x[t] != 0)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (u.at(t, j) != 0)
          c[j] += x[t] * u.at(t, j);
  return c;
}

const PairData &TiltingData::pair_at(int d1, int d2) const {
  auto it = pair.find({d1, d2});
  if (it == pair.end())
    throw std::logic_error("missing bimodule block");
  return it->second;
}

IntegerMatrix sym_composite(const TiltingData &t, int a, int b,
                            const IntegerMatrix &f, const IntegerMatrix &g,
                            std::size_t x_rank) {
  std::size_t ra = t.sym[a].rank(), rb = t.sym[b].rank();
  std::size_t rab = t.sym[a + b].rank();
  std::size_t mid = g.rows();
  if (f.cols() != ra * mid || g.cols() != rb * x_rank)
    throw std::logic_error("sym composite: shape mismatch");
  const IntegerMatrix &mult = t.sym_mult.at({a, b});
  std::size_t src = f.rows(), rbx = rb * x_rank;
  // h = f * (id_a (x) g), columns (s, u, x)
  IntegerMatrix hm(src, ra * rbx);
  for (std::size_t i = 0; i < src; ++i)
    for (std::size_t s = 0; s < ra; ++s)
      for (std::size_t m = 0; m < mid; ++m) {
        const Int &c = f.at(i, s * mid + m);
        if (c == 0)
          continue;
        for (std::size_t q = 0; q < rbx; ++q)
          if (g.at(m, q) != 0)
            hm.at(i, s * rbx + q) += c * g.at(m, q);
      }
  // out = h * (mult (x) id_x)
  IntegerMatrix out(src, rab * x_rank);
  for (std::size_t p = 0; p < ra * rb; ++p)
    for (std::size_t m2 = 0; m2 < rab; ++m2) {
      const Int &c = mult.at(p, m2);
      if (c == 0)
        continue;
      for (std::size_t i = 0; i < src; ++i)
        for (std::size_t x = 0; x < x_rank; ++x)
          if (hm.at(i, p * x_rank + x) != 0)
            out.at(i, m2 * x_rank + x) += c * hm.at(i, p * x_rank + x);
    }
  return out;
}

namespace {

// unique summand of the nonzero rows resp. columns of a hom matrix
int row_summand(const IntegerMatrix &f, const std::vector<int> &of_row) {
  int s = -1;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (f.at(i, j) != 0) {
        if (s >= 0 && s != of_row[i])
          throw std::logic_error("hom mixes source summands");
        s = of_row[i];
        break;
      }
  return s < 0 ? 0 : s;
}

int col_summand(const IntegerMatrix &f, const std::vector<int> &of_col) {
  int s = -1;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    bool nz = false;
    for (std::size_t i = 0; i < f.rows(); ++i)
      if (f.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) {
      if (s >= 0 && s != of_col[j])
        throw std::logic_error("hom mixes target summands");
      s = of_col[j];
    }
  }
  return s < 0 ? 0 : s;
}

DegreeData build_degree(const GrassmannConfig &cfg, const SchurPtr &alg,
                        int d) {
  DegreeData dd;
  dd.schur = alg;
  const auto &parts = cfg.by_degree[d];
  dd.offset.assign(1, 0);
  for (std::size_t l = 0; l < parts.size(); ++l) {
    RepModule e = polyrep::exterior_module(alg, young::conjugate(parts[l]));
    dd.nmod = l == 0 ? std::move(e) : polyrep::direct_sum_modules(dd.nmod, e);
    dd.offset.push_back(dd.nmod.rank());
  }
  dd.nmod.name = "N_" + std::to_string(d);
  dd.summand_of_row.resize(dd.nmod.rank());
  for (std::size_t l = 0; l < parts.size(); ++l)
    for (std::size_t r = dd.offset[l]; r < dd.offset[l + 1]; ++r)
      dd.summand_of_row[r] = static_cast<int>(l);

  std::size_t rn = dd.nmod.rank();
  dd.end = hom_basis(polyrep::rep_hom(dd.nmod, dd.nmod), rn, rn);
  std::size_t ra = dd.end.rank();

  // fine algebra with the summand Peirce system; product a*b = apply b first
  std::vector<std::string> labels(ra);
  std::vector<int> rowb(ra), colb(ra);
  std::map<std::pair<int, int>, int> counter;
  for (std::size_t tb = 0; tb < ra; ++tb) {
    int src = row_summand(dd.end.basis[tb], dd.summand_of_row);
    int tgt = col_summand(dd.end.basis[tb], dd.summand_of_row);
    rowb[tb] = tgt;
    colb[tb] = src;
    int idx = counter[{tgt, src}]++;
    labels[tb] = "A_" + std::to_string(d) + "[" + pstr(parts[tgt]) + ":" +
                 pstr(parts[src]) + ":" + std::to_string(idx) + "]";
  }
  std::vector<std::vector<SparseVec>> table(ra, std::vector<SparseVec>(ra));
  for (std::size_t s = 0; s < ra; ++s)
    for (std::size_t tb = 0; tb < ra; ++tb)
      table[s][tb] =
          sparse_of(dd.end.coords(dd.end.basis[tb].mul(dd.end.basis[s])));
  std::vector<Int> unit = dd.end.coords(IntegerMatrix::identity(rn));
  std::vector<std::vector<Int>> idems;
  for (std::size_t l = 0; l < parts.size(); ++l) {
    IntegerMatrix pi(rn, rn);
    for (std::size_t r = dd.offset[l]; r < dd.offset[l + 1]; ++r)
      pi.at(r, r) = 1;
    idems.push_back(dd.end.coords(pi));
  }
  qha::FinAlgebra fa(labels, std::move(table), std::move(unit));
  fa.set_peirce_system(std::move(idems), rowb, colb);
  fa.verify();
  dd.alg = std::make_shared<const qha::FinAlgebra>(std::move(fa));

  // highest weight data of the degree block
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const Partition &lam = parts[l];
    dd.weight_labels.push_back(disp(lam));

    RepModule smod = polyrep::schur_module(alg, lam);
    HomBasis sd = hom_basis(polyrep::rep_hom(dd.nmod, smod), rn, smod.rank());
    AlgModule delta;
    delta.algebra = dd.alg;
    delta.rank = sd.rank();
    delta.name = "Delta[" + disp(lam) + "]@" + std::to_string(d);
    delta.action.resize(ra);
    for (std::size_t b = 0; b < ra; ++b) {
      IntegerMatrix m(sd.rank(), sd.rank());
      for (std::size_t i = 0; i < sd.rank(); ++i)
        m.set_row(i, sd.coords(dd.end.basis[b].mul(sd.basis[i])));
      delta.action[b] = std::move(m);
    }
    for (std::size_t i = 0; i < sd.rank(); ++i)
      delta.coord_block.push_back(
          row_summand(sd.basis[i], dd.summand_of_row));
    delta.verify();
    dd.standards.push_back(std::move(delta));

    RepModule wmod = polyrep::weyl_module(alg, lam);
    HomBasis hw = hom_basis(polyrep::rep_hom(wmod, dd.nmod), wmod.rank(), rn);
    AlgModule nabla;
    nabla.algebra = dd.alg;
    nabla.rank = hw.rank();
    nabla.name = "Nabla[" + disp(lam) + "]@" + std::to_string(d);
    nabla.action.resize(ra);
    for (std::size_t b = 0; b < ra; ++b) {
      IntegerMatrix lm(hw.rank(), hw.rank());
      for (std::size_t i = 0; i < hw.rank(); ++i)
        lm.set_row(i, hw.coords(hw.basis[i].mul(dd.end.basis[b])));
      nabla.action[b] = lm.transpose();
    }
    for (std::size_t i = 0; i < hw.rank(); ++i)
      nabla.coord_block.push_back(
          col_summand(hw.basis[i], dd.summand_of_row));
    nabla.verify();
    dd.costandards.push_back(std::move(nabla));
  }
  dd.leq.assign(parts.size(), std::vector<bool>(parts.size(), false));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      dd.leq[i][j] = young::dominance_leq(parts[i], parts[j]);
  return dd;
}

// right multiplication by kron(id, f) on the Sym (x) N_{d2} coordinates
IntegerMatrix post_compose(const IntegerMatrix &m, const IntegerMatrix &f,
                           std::size_t ra) {
  std::size_t rn2 = f.rows();
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t s = 0; s < ra; ++s)
      for (std::size_t u = 0; u < rn2; ++u) {
        const Int &c = m.at(i, s * rn2 + u);
        if (c == 0)
          continue;
        for (std::size_t v = 0; v < f.cols(); ++v)
          if (f.at(u, v) != 0)
            out.at(i, s * rn2 + v) += c * f.at(u, v);
      }
  return out;
}

Bimodule make_bimodule(const TiltingData &t, int d1, int d2) {
  const DegreeData &hi = t.deg[d1], &lo = t.deg[d2];
  const PairData &pd = t.pair_at(d1, d2);
  std::size_t ra = t.sym[d1 - d2].rank();
  std::size_t rank = pd.homs.rank();

  Bimodule bm;
  bm.right_alg = hi.alg;
  bm.left_alg = lo.alg;
  bm.rank = rank;
  bm.name = "M_{" + std::to_string(d1) + "," + std::to_string(d2) + "}";
  bm.right_action.resize(hi.alg->rank());
  for (std::size_t b = 0; b < hi.alg->rank(); ++b) {
    IntegerMatrix m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      m.set_row(i, pd.homs.coords(hi.end.basis[b].mul(pd.homs.basis[i])));
    bm.right_action[b] = std::move(m);
  }
  bm.left_action.resize(lo.alg->rank());
  for (std::size_t b = 0; b < lo.alg->rank(); ++b) {
    IntegerMatrix m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      m.set_row(i, pd.homs.coords(
                       post_compose(pd.homs.basis[i], lo.end.basis[b], ra)));
    bm.left_action[b] = std::move(m);
  }
  std::size_t rn2 = lo.nmod.rank();
  std::vector<int> tgt_of_col(pd.tmod.rank());
  for (std::size_t j = 0; j < pd.tmod.rank(); ++j)
    tgt_of_col[j] = lo.summand_of_row[j % rn2];
  const auto &p1 = t.cfg.by_degree[d1], &p2 = t.cfg.by_degree[d2];
  std::map<std::pair<int, int>, int> counter;
  for (std::size_t i = 0; i < rank; ++i) {
    int src = row_summand(pd.homs.basis[i], hi.summand_of_row);
    int tgt = col_summand(pd.homs.basis[i], tgt_of_col);
    bm.right_block.push_back(src);
    bm.left_block.push_back(tgt);
    int idx = counter[{tgt, src}]++;
    bm.labels.push_back(bm.name + "[" + pstr(p2[tgt]) + ":" + pstr(p1[src]) +
                        ":" + std::to_string(idx) + "]");
  }
  bm.verify();
  return bm;
}

ExtResult zero_ext(int max_ext) {
  ExtResult z;
  z.free_rank.assign(max_ext + 1, 0);
  z.cochain_dim.assign(max_ext + 1, 0);
  z.torsion.assign(max_ext + 1, {});
  z.coboundary.assign(max_ext + 1, IntegerMatrix());
  z.terminated = true;
  z.max_degree = max_ext;
  return z;
}

} // namespace

TiltingData build_tilting(int k, int n) {
  TiltingData t;
  t.cfg = grassmann_config(k, n);
  int dm = t.cfg.d_max;

  std::vector<SchurPtr> sa(dm + 1);
  for (int d = 0; d <= dm; ++d)
    sa[d] = polyrep::schur_algebra(k, d);
  for (int m = 0; m <= dm; ++m)
    t.sym.push_back(polyrep::sym_power_of_sum(sa[m], n));
  for (int a = 1; a <= dm; ++a)
    for (int b = 0; a + b <= dm; ++b) {
      RepModule tt = polyrep::tensor_modules(sa[a + b], t.sym[a], t.sym[b]);
      polyrep::RepMap mp = polyrep::induced_map(
          tt, t.sym[a + b], polyrep::sym_mult_ambient(a, b, k, n));
      t.sym_mult.emplace(std::make_pair(a, b), std::move(mp.matrix));
    }

  for (int d = 0; d <= dm; ++d)
    t.deg.push_back(build_degree(t.cfg, sa[d], d));
  for (int d1 = 1; d1 <= dm; ++d1)
    for (int d2 = 0; d2 < d1; ++d2) {
      PairData pd;
      pd.tmod =
          polyrep::tensor_modules(sa[d1], t.sym[d1 - d2], t.deg[d2].nmod);
      pd.homs = hom_basis(polyrep::rep_hom(t.deg[d1].nmod, pd.tmod),
                          t.deg[d1].nmod.rank(), pd.tmod.rank());
      t.pair.emplace(std::make_pair(d1, d2), std::move(pd));
    }

  for (int c = 0; c <= dm; ++c)
    t.datum.algebras.push_back(t.deg[t.cfg.degree(c)].alg);
  for (int d1 = 1; d1 <= dm; ++d1)
    for (int d2 = 0; d2 < d1; ++d2)
      t.datum.bimodules.emplace(
          std::make_pair(t.cfg.component(d1), t.cfg.component(d2)),
          make_bimodule(t, d1, d2));
  for (int d1 = 2; d1 <= dm; ++d1)
    for (int d2 = 1; d2 < d1; ++d2)
      for (int d3 = 0; d3 < d2; ++d3) {
        const PairData &pij = t.pair_at(d1, d2); // components i < j
        const PairData &pjk = t.pair_at(d2, d3);
        const PairData &pik = t.pair_at(d1, d3);
        IntegerMatrix mm(pjk.homs.rank() * pij.homs.rank(), pik.homs.rank());
        for (std::size_t s = 0; s < pjk.homs.rank(); ++s)
          for (std::size_t tt = 0; tt < pij.homs.rank(); ++tt) {
            IntegerMatrix comp =
                sym_composite(t, d1 - d2, d2 - d3, pij.homs.basis[tt],
                              pjk.homs.basis[s], t.deg[d3].nmod.rank());
            mm.set_row(s * pij.homs.rank() + tt, pik.homs.coords(comp));
          }
        // multiplication maps are stored on the balanced tensor basis
        int ci = t.cfg.component(d1), cj = t.cfg.component(d2),
            ck = t.cfg.component(d3);
        qha::BalancedTensor bt = qha::balanced_tensor(
            t.datum.bimodule(cj, ck).as_right_module(),
            t.datum.bimodule(ci, cj));
        t.datum.m_maps.emplace(std::make_tuple(ci, cj, ck),
                               bt.lift.mul(mm));
      }
  t.datum.verify();
  t.b = qha::glue(t.datum);
  t.layout = qha::glued_layout(t.datum);
  t.b->verify();

  std::size_t sum = 0;
  for (const auto &dd : t.deg)
    sum += dd.alg->rank();
  for (const auto &pr : t.datum.bimodules)
    sum += pr.second.rank;
  if (sum != t.b->rank())
    throw std::runtime_error("glued rank misses the block sum");
  t.schur_fin.resize(dm + 1);
  return t;
}

qha::ExtResult geometric_rhom(TiltingData &t, const RepModule &e1, int d1,
                              const RepModule &e2, int d2, int max_ext) {
  int me = max_ext >= 0 ? max_ext : t.default_max_ext();
  if (d1 < 0 || d2 < 0 || d1 > t.cfg.d_max || d2 > t.cfg.d_max)
    throw std::invalid_argument("rhom: degree out of range");
  if (e1.algebra->n() != t.cfg.k || e1.algebra->d() != d1 ||
      e2.algebra->n() != t.cfg.k || e2.algebra->d() != d2)
    throw std::invalid_argument("rhom: modules in the wrong degrees");
  if (d1 < d2)
    return zero_ext(me);
  if (!t.schur_fin[d1])
    t.schur_fin[d1] = polyrep::as_fin_algebra(t.deg[d1].schur);
  const AlgebraPtr &afin = t.schur_fin[d1];
  auto key = std::make_pair(d1, e1.name);
  auto it = t.res_cache.find(key);
  if (it == t.res_cache.end() ||
      (!it->second.terminated &&
       it->second.length() < static_cast<std::size_t>(me) + 1)) {
    AlgModule am1 = polyrep::as_alg_module(e1, afin);
    it = t.res_cache.insert_or_assign(key, qha::resolve(am1, me + 1)).first;
  }
  RepModule tgt =
      polyrep::tensor_modules(t.deg[d1].schur, t.sym[d1 - d2], e2);
  AlgModule am2 = polyrep::as_alg_module(tgt, afin);
  return qha::ext_from_resolution(it->second, am2, me);
}

std::vector<AlgModule> standard_family_1(const TiltingData &t) {
  std::vector<AlgModule> out;
  int dm = t.cfg.d_max;
  for (int c = 0; c <= dm; ++c) {
    int w = t.cfg.degree(c);
    const auto &parts = t.cfg.by_degree[w];
    for (const Partition &lam : parts) {
      RepModule smod = polyrep::schur_module(t.deg[w].schur, lam);
      std::size_t rs = smod.rank();
      // pieces in component order: degree d_max down to w
      std::map<int, HomBasis> piece;
      std::map<int, std::size_t> off;
      std::size_t total = 0;
      for (int c2 = 0; c2 <= t.cfg.component(w); ++c2) {
        int d = t.cfg.degree(c2);
        RepModule tgt = polyrep::tensor_modules(t.deg[d].schur,
                                                t.sym[d - w], smod);
        HomBasis hb = hom_basis(polyrep::rep_hom(t.deg[d].nmod, tgt),
                                t.deg[d].nmod.rank(), tgt.rank());
        off[d] = total;
        total += hb.rank();
        piece.emplace(d, std::move(hb));
      }
      AlgModule mod;
      mod.algebra = t.b;
      mod.rank = total;
      mod.name = "Sigma[" + disp(lam) + "]";
      mod.action.assign(t.b->rank(), IntegerMatrix(total, total));
      for (int c2 = 0; c2 <= dm; ++c2) {
        int d = t.cfg.degree(c2);
        if (d < w)
          continue;
        const HomBasis &pb = piece.at(d);
        const DegreeData &dd = t.deg[d];
        for (std::size_t b = 0; b < dd.alg->rank(); ++b) {
          std::size_t g = t.layout.alg_offset[c2] + b;
          for (std::size_t i = 0; i < pb.rank(); ++i) {
            std::vector<Int> row =
                pb.coords(dd.end.basis[b].mul(pb.basis[i]));
            for (std::size_t j = 0; j < row.size(); ++j)
              if (row[j] != 0)
                mod.action[g].at(off.at(d) + i, off.at(d) + j) = row[j];
          }
        }
      }
      for (const auto &pr : t.datum.bimodules) {
        auto [c1, c2] = pr.first;
        int d1 = t.cfg.degree(c1), d2 = t.cfg.degree(c2);
        if (d2 < w)
          continue;
        const PairData &pd = t.pair_at(d1, d2);
        const HomBasis &plo = piece.at(d2), &phi = piece.at(d1);
        std::size_t base = t.layout.bim_offset.at(pr.first);
        for (std::size_t m = 0; m < pr.second.rank; ++m) {
          std::size_t g = base + m;
          for (std::size_t i = 0; i < plo.rank(); ++i) {
            IntegerMatrix comp = sym_composite(
                t, d1 - d2, d2 - w, pd.homs.basis[m], plo.basis[i], rs);
            std::vector<Int> row = phi.coords(comp);
            for (std::size_t j = 0; j < row.size(); ++j)
              if (row[j] != 0)
                mod.action[g].at(off.at(d2) + i, off.at(d1) + j) = row[j];
          }
        }
      }
      for (int c2 = 0; c2 <= t.cfg.component(w); ++c2) {
        int d = t.cfg.degree(c2);
        const HomBasis &pb = piece.at(d);
        for (std::size_t i = 0; i < pb.rank(); ++i)
          mod.coord_block.push_back(
              static_cast<int>(t.layout.peirce_offset[c2]) +
              row_summand(pb.basis[i], t.deg[d].summand_of_row));
      }
      mod.verify();
      out.push_back(std::move(mod));
    }
  }
  return out;
}

Verdict HwReport::overall() const {
  Verdict v = qha::combine(glued.star_verdict(), family_match);
  v = qha::combine(v, glued.first.overall());
  return qha::combine(v, glued.second.overall());
}

HwReport hw_structures_on_b(TiltingData &t, int max_ext) {
  int me = max_ext >= 0 ? max_ext : t.default_max_ext();
  std::vector<qha::FactorHW> factors;
  for (int c = 0; c <= t.cfg.d_max; ++c) {
    const DegreeData &dd = t.deg[t.cfg.degree(c)];
    factors.push_back(
        {dd.standards, dd.costandards, dd.weight_labels, dd.leq});
  }
  HwReport hr;
  hr.glued = qha::glued_hw_structures(t.datum, t.b, factors, me);
  hr.family1 = standard_family_1(t);

  std::size_t nw = hr.family1.size();
  hr.family_grid.resize(nw);
  bool ok = true, open = false;
  for (std::size_t i = 0; i < nw; ++i) {
    qha::Resolution res = qha::resolve(hr.family1[i], me + 1);
    if (!res.terminated)
      open = true;
    for (std::size_t j = 0; j < nw; ++j)
      hr.family_grid[i].push_back(qha::ext_from_resolution(
          res, hr.glued.first.costandards[j], me));
    if (hr.family1[i].rank != hr.glued.first.standards[i].rank)
      ok = false;
  }
  for (std::size_t i = 0; i < nw && ok; ++i)
    for (std::size_t j = 0; j < nw; ++j) {
      const ExtResult &a = hr.family_grid[i][j];
      const ExtResult &b = hr.glued.first.ext_grid[i][j];
      if (a.free_rank != b.free_rank || a.any_torsion() ||
          b.any_torsion()) {
        ok = false;
        break;
      }
    }
  hr.family_match =
      !ok ? Verdict::fail : (open ? Verdict::inconclusive : Verdict::pass);
  return hr;
}

Verdict CollectionTables::overall() const {
  Verdict v = qha::combine(schur_directed, weyl_directed);
  v = qha::combine(v, pairing_delta);
  return qha::combine(v, tilting_concentrated);
}

namespace {

bool ext_is_zero(const ExtResult &e) {
  for (long r : e.free_rank)
    if (r != 0)
      return false;
  return !e.any_torsion();
}

// Same-degree off-diagonal cell (i, j) that the exceptional order leaves
// unconstrained: col strictly below row for the costandard (Schur) family,
// row strictly below col for the standard (Weyl) family.
bool order_allows(const std::vector<Partition> &flat, std::size_t i,
                  std::size_t j, bool costandard) {
  return costandard ? young::dominance_leq(flat[j], flat[i])
                    : young::dominance_leq(flat[i], flat[j]);
}

// one family as a partially ordered exceptional collection
Verdict grid_verdict(const RankTable &tab, const std::vector<int> &degs,
                     const std::vector<Partition> &flat, bool costandard) {
  Verdict v = Verdict::pass;
  for (std::size_t i = 0; i < tab.ext.size(); ++i)
    for (std::size_t j = 0; j < tab.ext[i].size(); ++j) {
      const ExtResult &e = tab.ext[i][j];
      if (!e.terminated)
        v = qha::combine(v, Verdict::inconclusive);
      if (i == j) {
        if (e.hom_rank() != 1 || !e.positive_degrees_vanish() ||
            e.any_torsion())
          return Verdict::fail;
        continue;
      }
      if (degs[i] < degs[j] ||
          (degs[i] == degs[j] && !order_allows(flat, i, j, costandard))) {
        if (!ext_is_zero(e))
          return Verdict::fail;
        continue;
      }
      // forward cells across degrees stay torsion free; forward cells
      // within a degree are recorded, not constrained
      if (degs[i] > degs[j] && e.any_torsion())
        return Verdict::fail;
    }
  return v;
}

} // namespace

CollectionTables collection_tables(TiltingData &t, int max_ext) {
  int me = max_ext >= 0 ? max_ext : t.default_max_ext();
  CollectionTables ct;

  std::vector<Partition> flat;
  std::vector<int> fdeg;
  for (int d = 0; d <= t.cfg.d_max; ++d)
    for (const Partition &p : t.cfg.by_degree[d]) {
      flat.push_back(p);
      fdeg.push_back(d);
    }
  std::vector<std::string> labels;
  for (const Partition &p : flat)
    labels.push_back(disp(p));

  auto fill = [&](RankTable &tab, const char *nm,
                  const std::vector<RepModule> &rows,
                  const std::vector<RepModule> &cols) {
    tab.name = nm;
    tab.rows = labels;
    tab.cols = labels;
    tab.ext.resize(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i)
      for (std::size_t j = 0; j < flat.size(); ++j)
        tab.ext[i].push_back(
            geometric_rhom(t, rows[i], fdeg[i], cols[j], fdeg[j], me));
  };

  std::vector<RepModule> smods, wmods, emods;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    RepModule s = polyrep::schur_module(t.deg[fdeg[i]].schur, flat[i]);
    s.name = "S[" + disp(flat[i]) + "]";
    smods.push_back(std::move(s));
    RepModule w = polyrep::weyl_module(t.deg[fdeg[i]].schur, flat[i]);
    w.name = "W[" + disp(flat[i]) + "]";
    wmods.push_back(std::move(w));
    RepModule e = polyrep::exterior_module(t.deg[fdeg[i]].schur,
                                           young::conjugate(flat[i]));
    e.name = "E[" + disp(flat[i]) + "]";
    emods.push_back(std::move(e));
  }

  fill(ct.schur_table, "schur-directedness", smods, smods);
  ct.schur_directed = grid_verdict(ct.schur_table, fdeg, flat, true);
  fill(ct.weyl_table, "weyl-directedness", wmods, wmods);
  ct.weyl_directed = grid_verdict(ct.weyl_table, fdeg, flat, false);

  ct.pairing_delta = Verdict::pass;
  for (int d = 0; d <= t.cfg.d_max; ++d) {
    const auto &parts = t.cfg.by_degree[d];
    RankTable tab;
    tab.name = "dual-pairing@" + std::to_string(d);
    for (const Partition &p : parts) {
      tab.rows.push_back(disp(p));
      tab.cols.push_back(disp(p));
    }
    tab.ext.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        std::size_t gi = 0;
        while (flat[gi] != parts[i] || fdeg[gi] != d)
          ++gi;
        std::size_t gj = 0;
        while (flat[gj] != parts[j] || fdeg[gj] != d)
          ++gj;
        ExtResult e = geometric_rhom(t, wmods[gi], d, smods[gj], d, me);
        bool diag = i == j;
        if (e.any_torsion() ||
            e.hom_rank() != (diag ? 1 : 0) ||
            !e.positive_degrees_vanish())
          ct.pairing_delta = Verdict::fail;
        else if (!e.terminated)
          ct.pairing_delta =
              qha::combine(ct.pairing_delta, Verdict::inconclusive);
        tab.ext[i].push_back(std::move(e));
      }
    ct.dual_pairing.push_back(std::move(tab));
  }

  fill(ct.tilting, "tilting-concentration", emods, emods);
  ct.tilting_concentrated = Verdict::pass;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = 0; j < flat.size(); ++j) {
      const ExtResult &e = ct.tilting.ext[i][j];
      if (e.any_torsion() || !e.positive_degrees_vanish())
        ct.tilting_concentrated = Verdict::fail;
      else if (!e.terminated)
        ct.tilting_concentrated =
            qha::combine(ct.tilting_concentrated, Verdict::inconclusive);
    }
  return ct;
}

namespace {

void check_cell(const ExtResult &e, const std::string &where,
                const std::vector<std::uint32_t> &primes, long &cells,
                Verdict &v, std::vector<std::string> &failures) {
  ++cells;
  if (e.any_torsion()) {
    v = Verdict::fail;
    failures.push_back(where + ": torsion");
    return;
  }
  if (!e.terminated)
    v = qha::combine(v, Verdict::inconclusive);
  for (std::uint32_t p : primes) {
    std::vector<long> dims = qha::ext_dims_mod_p(e, p);
    if (dims != e.free_rank) {
      v = Verdict::fail;
      failures.push_back(where + ": rank jumps mod " + std::to_string(p));
    }
  }
}

void check_table(const RankTable &tab,
                 const std::vector<std::uint32_t> &primes, long &cells,
                 Verdict &v, std::vector<std::string> &failures,
                 const std::vector<std::pair<std::size_t, std::size_t>>
                     &skip = {}) {
  for (std::size_t i = 0; i < tab.ext.size(); ++i)
    for (std::size_t j = 0; j < tab.ext[i].size(); ++j) {
      bool skipped = false;
      for (const auto &s : skip)
        if (s.first == i && s.second == j)
          skipped = true;
      if (skipped)
        continue;
      check_cell(tab.ext[i][j],
                 tab.name + "[" + tab.rows[i] + "][" + tab.cols[j] + "]",
                 primes, cells, v, failures);
    }
}

} // namespace

BaseChangeReport base_change_check(const GrassmannReport &r,
                                   const std::vector<std::uint32_t> &primes) {
  BaseChangeReport bc;
  bc.primes = primes;
  bc.verdict = Verdict::pass;
  // same-degree cells sitting above the dominance order carry no claim
  std::vector<Partition> flat;
  std::vector<int> fdeg;
  for (int d = 0; d <= r.cfg.d_max; ++d)
    for (const Partition &p : r.cfg.by_degree[d]) {
      flat.push_back(p);
      fdeg.push_back(d);
    }
  std::vector<std::pair<std::size_t, std::size_t>> skip_s, skip_w;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = 0; j < flat.size(); ++j) {
      if (i == j || fdeg[i] != fdeg[j])
        continue;
      if (order_allows(flat, i, j, true))
        skip_s.emplace_back(i, j);
      if (order_allows(flat, i, j, false))
        skip_w.emplace_back(i, j);
    }
  check_table(r.tables.schur_table, primes, bc.cells, bc.verdict,
              bc.failures, skip_s);
  check_table(r.tables.weyl_table, primes, bc.cells, bc.verdict, bc.failures,
              skip_w);
  for (const RankTable &tab : r.tables.dual_pairing)
    check_table(tab, primes, bc.cells, bc.verdict, bc.failures);
  check_table(r.tables.tilting, primes, bc.cells, bc.verdict, bc.failures);
  const auto &labels = r.hw.glued.first.weight_labels;
  auto grid = [&](const std::vector<std::vector<ExtResult>> &g,
                  const char *nm) {
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g[i].size(); ++j)
        check_cell(g[i][j],
                   std::string(nm) + "[" + labels[i] + "][" + labels[j] + "]",
                   primes, bc.cells, bc.verdict, bc.failures);
  };
  grid(r.hw.glued.first.ext_grid, "structure1");
  grid(r.hw.glued.second.ext_grid, "structure2");
  grid(r.hw.family_grid, "family1");
  return bc;
}

Verdict GrassmannReport::overall() const {
  Verdict v = qha::combine(algebra_verdict, hw.overall());
  v = qha::combine(v, tables.overall());
  return qha::combine(v, base_change.verdict);
}

GrassmannReport verify_grassmannian(int k, int n,
                                    std::vector<std::uint32_t> primes,
                                    int max_ext) {
  TiltingData t = build_tilting(k, n);
  GrassmannReport r;
  r.cfg = t.cfg;
  r.b_rank = t.b->rank();
  for (const auto &dd : t.deg)
    r.a_rank.push_back(dd.alg->rank());
  for (const auto &pr : t.datum.bimodules) {
    int d1 = t.cfg.degree(pr.first.first), d2 = t.cfg.degree(pr.first.second);
    r.m_rank.emplace(std::make_pair(d1, d2), pr.second.rank);
  }
  std::size_t sum = 0;
  for (std::size_t a : r.a_rank)
    sum += a;
  for (const auto &pr : r.m_rank)
    sum += pr.second;
  r.algebra_verdict = sum == r.b_rank ? Verdict::pass : Verdict::fail;
  r.hw = hw_structures_on_b(t, max_ext);
  r.tables = collection_tables(t, max_ext);
  r.base_change = base_change_check(r, primes);
  return r;
}

// ---------------------------------------------------------------------------
// report emitters

namespace {

std::string cell_str(const ExtResult &e) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < e.free_rank.size(); ++i)
    if (e.free_rank[i] != 0)
      last = i + 1;
  std::string s;
  if (last == 0)
    s = ".";
  else
    for (std::size_t i = 0; i < last; ++i)
      s += (i ? "," : "") + std::to_string(e.free_rank[i]);
  if (e.any_torsion())
    s += "+t";
  if (!e.terminated)
    s += "?";
  return s;
}

void md_table(std::ostringstream &os, const RankTable &tab) {
  os << "### " << tab.name << "\n\n|  |";
  for (const auto &c : tab.cols)
    os << " " << c << " |";
  os << "\n|--|";
  for (std::size_t j = 0; j < tab.cols.size(); ++j)
    os << "--|";
  os << "\n";
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    os << "| " << tab.rows[i] << " |";
    for (std::size_t j = 0; j < tab.cols.size(); ++j)
      os << " " << cell_str(tab.ext[i][j]) << " |";
    os << "\n";
  }
  os << "\n";
}

std::string json_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

void json_table(std::ostringstream &os, const RankTable &tab) {
  os << "{\"name\":\"" << json_escape(tab.name) << "\",\"rows\":[";
  for (std::size_t i = 0; i < tab.rows.size(); ++i)
    os << (i ? "," : "") << "\"" << json_escape(tab.rows[i]) << "\"";
  os << "],\"cols\":[";
  for (std::size_t j = 0; j < tab.cols.size(); ++j)
    os << (j ? "," : "") << "\"" << json_escape(tab.cols[j]) << "\"";
  os << "],\"cells\":[";
  for (std::size_t i = 0; i < tab.ext.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < tab.ext[i].size(); ++j) {
      const ExtResult &e = tab.ext[i][j];
      std::size_t last = 0;
      for (std::size_t d = 0; d < e.free_rank.size(); ++d)
        if (e.free_rank[d] != 0)
          last = d + 1;
      os << (j ? "," : "") << "{\"ranks\":[";
      for (std::size_t d = 0; d < last; ++d)
        os << (d ? "," : "") << e.free_rank[d];
      os << "],\"torsion\":" << (e.any_torsion() ? "true" : "false") << "}";
    }
    os << "]";
  }
  os << "]}";
}

void collect_torsion(const RankTable &tab, std::vector<std::string> &out) {
  for (std::size_t i = 0; i < tab.ext.size(); ++i)
    for (std::size_t j = 0; j < tab.ext[i].size(); ++j)
      if (tab.ext[i][j].any_torsion())
        out.push_back(tab.name + "[" + tab.rows[i] + "][" + tab.cols[j] +
                      "]");
}

const char *vs(Verdict v) { return qha::verdict_str(v); }

} // namespace

std::string rank_table_markdown(const RankTable &tab) {
  std::ostringstream os;
  md_table(os, tab);
  return os.str();
}

std::string rank_table_json(const RankTable &tab) {
  std::ostringstream os;
  json_table(os, tab);
  return os.str();
}

std::string GrassmannReport::to_markdown() const {
  std::ostringstream os;
  os << "# Gr(" << cfg.k << ", " << cfg.n << ") tilting algebra report\n\n";
  os << "Summands: " << cfg.count() << " partitions in the " << (cfg.n - cfg.k)
     << " x " << cfg.k << " box, top degree " << cfg.d_max << ".\n\n";
  os << "RHom convention: for summands in degrees d1 >= d2, RHom is computed "
        "as Ext over the degree-d1 Schur algebra of V_" << cfg.k
     << " against Sym^(d1-d2) tensor (second summand); it is zero when "
        "d1 < d2. Every table below uses this definition.\n\n";
  os << "## Endomorphism algebra\n\n";
  os << "rank B = " << b_rank;
  if (cfg.k == 1 && cfg.n == 2)
    os << " (the Kronecker algebra)";
  os << ", block sum check: " << vs(algebra_verdict) << "\n\n";
  os << "| degree | rank A_d |\n|--|--|\n";
  for (std::size_t d = 0; d < a_rank.size(); ++d)
    os << "| " << d << " | " << a_rank[d] << " |\n";
  os << "\n| block | rank |\n|--|--|\n";
  for (const auto &pr : m_rank)
    os << "| M_{" << pr.first.first << "," << pr.first.second << "} | "
       << pr.second << " |\n";
  os << "\n## Highest weight structures\n\n";
  os << "- bimodule filtration condition: " << vs(hw.glued.star_verdict())
     << "\n";
  const qha::HighestWeightData &h1 = hw.glued.first, &h2 = hw.glued.second;
  os << "- structure 1 (standard side glued up): " << vs(h1.overall())
     << "\n";
  os << "- structure 2 (costandard side glued down): " << vs(h2.overall())
     << "\n";
  os << "- directly built standard family matches structure 1: "
     << vs(hw.family_match) << "\n\n";
  os << "| weight | rank Delta_1 | rank Nabla_1 | rank Delta_2 | rank "
        "Nabla_2 |\n|--|--|--|--|--|\n";
  for (std::size_t i = 0; i < h1.weight_labels.size(); ++i)
    os << "| " << h1.weight_labels[i] << " | " << h1.standards[i].rank
       << " | " << h1.costandards[i].rank << " | " << h2.standards[i].rank
       << " | " << h2.costandards[i].rank << " |\n";
  os << "\n## Collection tables\n\n";
  os << "- Schur family directed: " << vs(tables.schur_directed) << "\n";
  os << "- Weyl family directed: " << vs(tables.weyl_directed) << "\n";
  os << "- dual pairing is the identity per degree: "
     << vs(tables.pairing_delta) << "\n";
  os << "- tilting pairs concentrated in degree zero: "
     << vs(tables.tilting_concentrated) << "\n\n";
  md_table(os, tables.schur_table);
  md_table(os, tables.weyl_table);
  for (const RankTable &tab : tables.dual_pairing)
    md_table(os, tab);
  md_table(os, tables.tilting);
  os << "## Base change\n\n";
  os << "primes:";
  if (base_change.primes.empty())
    os << " none";
  for (std::uint32_t p : base_change.primes)
    os << " " << p;
  os << ", cells: " << base_change.cells << ", verdict: "
     << vs(base_change.verdict) << "\n";
  for (const std::string &f : base_change.failures)
    os << "- " << f << "\n";
  os << "\n## Overall: " << vs(overall()) << "\n";
  return os.str();
}

std::string GrassmannReport::to_json() const {
  std::ostringstream os;
  os << "{\"config\":{\"k\":" << cfg.k << ",\"n\":" << cfg.n
     << ",\"d_max\":" << cfg.d_max
     << ",\"rhom\":\"Ext over the degree-d1 Schur algebra against "
        "Sym^(d1-d2) tensor (second summand) when d1 >= d2; zero when "
        "d1 < d2\",\"partitions\":[";
  for (int d = 0; d <= cfg.d_max; ++d) {
    os << (d ? "," : "") << "[";
    for (std::size_t l = 0; l < cfg.by_degree[d].size(); ++l)
      os << (l ? "," : "") << "\"" << json_escape(disp(cfg.by_degree[d][l]))
         << "\"";
    os << "]";
  }
  os << "]},\"sections\":[";

  os << "{\"theorem\":\"endomorphism-algebra\",\"verdict\":\""
     << vs(algebra_verdict) << "\",\"tables\":{\"b_rank\":" << b_rank
     << ",\"a_rank\":[";
  for (std::size_t d = 0; d < a_rank.size(); ++d)
    os << (d ? "," : "") << a_rank[d];
  os << "],\"m_rank\":[";
  bool first = true;
  for (const auto &pr : m_rank) {
    os << (first ? "" : ",") << "{\"d1\":" << pr.first.first
       << ",\"d2\":" << pr.first.second << ",\"rank\":" << pr.second << "}";
    first = false;
  }
  os << "]";
  if (cfg.k == 1 && cfg.n == 2)
    os << ",\"kronecker\":true";
  os << "},\"torsion\":[]},";

  const qha::HighestWeightData &h1 = hw.glued.first, &h2 = hw.glued.second;
  auto hw_json = [&](const qha::HighestWeightData &h) {
    os << "{\"verdict\":\"" << vs(h.overall()) << "\",\"end\":\""
       << vs(h.end_check) << "\",\"directed\":\"" << vs(h.directed_check)
       << "\",\"pairing\":\"" << vs(h.pairing_check)
       << "\",\"filtration\":\"" << vs(h.filtration_check)
       << "\",\"rank\":\"" << vs(h.rank_check) << "\",\"delta_rank\":[";
    for (std::size_t i = 0; i < h.standards.size(); ++i)
      os << (i ? "," : "") << h.standards[i].rank;
    os << "],\"nabla_rank\":[";
    for (std::size_t i = 0; i < h.costandards.size(); ++i)
      os << (i ? "," : "") << h.costandards[i].rank;
    os << "]}";
  };
  os << "{\"theorem\":\"two-highest-weight-structures\",\"verdict\":\""
     << vs(hw.overall()) << "\",\"tables\":{\"star\":\""
     << vs(hw.glued.star_verdict()) << "\",\"structure1\":";
  hw_json(h1);
  os << ",\"structure2\":";
  hw_json(h2);
  os << ",\"family_match\":\"" << vs(hw.family_match)
     << "\",\"weights\":[";
  for (std::size_t i = 0; i < h1.weight_labels.size(); ++i)
    os << (i ? "," : "") << "\"" << json_escape(h1.weight_labels[i]) << "\"";
  os << "]},\"torsion\":[]},";

  std::vector<std::string> tors;
  collect_torsion(tables.schur_table, tors);
  collect_torsion(tables.weyl_table, tors);
  for (const RankTable &tab : tables.dual_pairing)
    collect_torsion(tab, tors);
  collect_torsion(tables.tilting, tors);
  os << "{\"theorem\":\"exceptional-collections\",\"verdict\":\""
     << vs(tables.overall()) << "\",\"tables\":{\"schur\":";
  json_table(os, tables.schur_table);
  os << ",\"weyl\":";
  json_table(os, tables.weyl_table);
  os << ",\"dual_pairing\":[";
  for (std::size_t d = 0; d < tables.dual_pairing.size(); ++d) {
    if (d)
      os << ",";
    json_table(os, tables.dual_pairing[d]);
  }
  os << "],\"tilting\":";
  json_table(os, tables.tilting);
  os << "},\"torsion\":[";
  for (std::size_t i = 0; i < tors.size(); ++i)
    os << (i ? "," : "") << "\"" << json_escape(tors[i]) << "\"";
  os << "]},";

  os << "{\"theorem\":\"base-change\",\"verdict\":\""
     << vs(base_change.verdict) << "\",\"tables\":{\"primes\":[";
  for (std::size_t i = 0; i < base_change.primes.size(); ++i)
    os << (i ? "," : "") << base_change.primes[i];
  os << "],\"cells\":" << base_change.cells << ",\"failures\":[";
  for (std::size_t i = 0; i < base_change.failures.size(); ++i)
    os << (i ? "," : "") << "\"" << json_escape(base_change.failures[i])
       << "\"";
  os << "]},\"torsion\":[]}";

  os << "],\"overall\":\"" << vs(overall()) << "\"}";
  return os.str();
}

} // namespace ztilt::grassmann
