#include "ztilt/qha.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ztilt::qha {

using exactlin::lattice_quotient;
using exactlin::QuotientResult;

namespace {

std::vector<Int> vec_of(const IntegerMatrix &m) {
  std::vector<Int> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v.push_back(m.at(i, j));
  return v;
}

// component Peirce size, counting a trivial system as one block
std::size_t comp_blocks(const AlgebraPtr &a) {
  return a->has_peirce() ? a->peirce_size() : 1;
}

} // namespace

// ---------------------------------------------------------------------------
// Gluing datum

const Bimodule &GluingDatum::bimodule(int i, int j) const {
  auto it = bimodules.find({i, j});
  if (it == bimodules.end())
    throw std::out_of_range("missing bimodule (" + std::to_string(i + 1) +
                            ", " + std::to_string(j + 1) + ")");
  return it->second;
}

IntegerMatrix GluingDatum::composite(int i, int j, int k) const {
  auto it = m_maps.find({i, j, k});
  if (it == m_maps.end())
    throw std::out_of_range("missing multiplication map (" +
                            std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ", " +
                            std::to_string(k + 1) + ")");
  BalancedTensor bt =
      balanced_tensor(bimodule(j, k).as_right_module(), bimodule(i, j));
  if (it->second.rows() != bt.rank ||
      it->second.cols() != bimodule(i, k).rank)
    throw std::runtime_error("multiplication map has wrong shape");
  return bt.proj.mul(it->second);
}

void GluingDatum::verify() const {
  int m = static_cast<int>(algebras.size());
  if (m == 0)
    throw std::runtime_error("empty gluing datum");
  for (const auto &a : algebras)
    if (!a)
      throw std::runtime_error("null algebra in gluing datum");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Bimodule &b = bimodule(i, j);
      if (b.right_alg != algebras[i] || b.left_alg != algebras[j])
        throw std::runtime_error("bimodule is attached to the wrong algebras");
      b.verify();
    }
  std::map<std::tuple<int, int, int>, IntegerMatrix> comp;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        comp.emplace(std::make_tuple(i, j, k), composite(i, j, k));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const IntegerMatrix &c = comp.at({i, j, k});
        const Bimodule &mjk = bimodule(j, k);
        const Bimodule &mij = bimodule(i, j);
        const Bimodule &mik = bimodule(i, k);
        IntegerMatrix id_ij = IntegerMatrix::identity(mij.rank);
        IntegerMatrix id_jk = IntegerMatrix::identity(mjk.rank);
        for (std::size_t b = 0; b < algebras[k]->rank(); ++b)
          if (mjk.left_action[b].kron(id_ij).mul(c) !=
              c.mul(mik.left_action[b]))
            throw std::runtime_error(
                "multiplication map is not left equivariant");
        for (std::size_t a = 0; a < algebras[i]->rank(); ++a)
          if (id_jk.kron(mij.right_action[a]).mul(c) !=
              c.mul(mik.right_action[a]))
            throw std::runtime_error(
                "multiplication map is not right equivariant");
      }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          IntegerMatrix lhs =
              IntegerMatrix::identity(bimodule(k, l).rank)
                  .kron(comp.at({i, j, k}))
                  .mul(comp.at({i, k, l}));
          IntegerMatrix rhs =
              comp.at({j, k, l})
                  .kron(IntegerMatrix::identity(bimodule(i, j).rank))
                  .mul(comp.at({i, j, l}));
          if (lhs != rhs)
            throw std::runtime_error("multiplication maps are not associative");
        }
}

GluedLayout glued_layout(const GluingDatum &d) {
  GluedLayout lay;
  int m = static_cast<int>(d.algebras.size());
  std::size_t at = 0;
  for (int i = 0; i < m; ++i) {
    lay.alg_offset.push_back(at);
    at += d.algebras[i]->rank();
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      lay.bim_offset[{i, j}] = at;
      at += d.bimodule(i, j).rank;
    }
  lay.rank = at;
  std::size_t pb = 0;
  for (int i = 0; i < m; ++i) {
    lay.peirce_offset.push_back(pb);
    pb += comp_blocks(d.algebras[i]);
  }
  return lay;
}

AlgebraPtr glue(const GluingDatum &d) {
  int m = static_cast<int>(d.algebras.size());
  GluedLayout lay = glued_layout(d);
  std::size_t r = lay.rank;

  std::vector<std::string> labels(r);
  for (int i = 0; i < m; ++i)
    for (std::size_t b = 0; b < d.algebras[i]->rank(); ++b)
      labels[lay.alg_offset[i] + b] = d.algebras[i]->label(b);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Bimodule &bm = d.bimodule(i, j);
      for (std::size_t t = 0; t < bm.rank; ++t) {
        std::string l = t < bm.labels.size() ? bm.labels[t] : "";
        if (l.empty())
          l = "M" + std::to_string(i + 1) + std::to_string(j + 1) + "[" +
              std::to_string(t) + "]";
        labels[lay.bim_offset.at({i, j}) + t] = l;
      }
    }
  {
    std::map<std::string, int> seen;
    for (auto &l : labels) {
      int n = seen[l]++;
      if (n > 0)
        l += "#" + std::to_string(n);
    }
  }

  std::vector<std::vector<SparseVec>> table(r, std::vector<SparseVec>(r));
  auto put_row = [&](std::size_t x, std::size_t y, const IntegerMatrix &mat,
                     std::size_t row, std::size_t tgt_off) {
    SparseVec sv;
    for (std::size_t c = 0; c < mat.cols(); ++c)
      if (mat.at(row, c) != 0)
        sv.emplace_back(tgt_off + c, mat.at(row, c));
    table[x][y] = std::move(sv);
  };
  // components
  for (int i = 0; i < m; ++i) {
    const FinAlgebra &a = *d.algebras[i];
    std::size_t off = lay.alg_offset[i];
    for (std::size_t x = 0; x < a.rank(); ++x)
      for (std::size_t y = 0; y < a.rank(); ++y) {
        SparseVec sv;
        for (const auto &[k, c] : a.product(x, y))
          sv.emplace_back(off + k, c);
        table[off + x][off + y] = std::move(sv);
      }
  }
  // A_j * M_ij and M_ij * A_i
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Bimodule &bm = d.bimodule(i, j);
      std::size_t moff = lay.bim_offset.at({i, j});
      for (std::size_t a = 0; a < d.algebras[j]->rank(); ++a)
        for (std::size_t x = 0; x < bm.rank; ++x)
          put_row(lay.alg_offset[j] + a, moff + x, bm.left_action[a], x, moff);
      for (std::size_t a = 0; a < d.algebras[i]->rank(); ++a)
        for (std::size_t x = 0; x < bm.rank; ++x)
          put_row(moff + x, lay.alg_offset[i] + a, bm.right_action[a], x, moff);
    }
  // M_jk * M_ij through the multiplication maps
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const Bimodule &mjk = d.bimodule(j, k);
        const Bimodule &mij = d.bimodule(i, j);
        if (mjk.rank == 0 || mij.rank == 0)
          continue;
        IntegerMatrix c = d.composite(i, j, k);
        std::size_t xoff = lay.bim_offset.at({j, k});
        std::size_t yoff = lay.bim_offset.at({i, j});
        std::size_t toff = lay.bim_offset.at({i, k});
        for (std::size_t x = 0; x < mjk.rank; ++x)
          for (std::size_t y = 0; y < mij.rank; ++y)
            put_row(xoff + x, yoff + y, c, x * mij.rank + y, toff);
      }

  std::vector<Int> unit(r);
  for (int i = 0; i < m; ++i)
    for (std::size_t b = 0; b < d.algebras[i]->rank(); ++b)
      unit[lay.alg_offset[i] + b] = d.algebras[i]->unit()[b];

  FinAlgebra glued(std::move(labels), std::move(table), std::move(unit));

  // Peirce system: union of the component systems
  std::vector<std::vector<Int>> idems;
  std::vector<int> rowb(r), colb(r);
  for (int i = 0; i < m; ++i) {
    const FinAlgebra &a = *d.algebras[i];
    std::size_t off = lay.alg_offset[i];
    for (std::size_t w = 0; w < comp_blocks(d.algebras[i]); ++w) {
      std::vector<Int> e(r);
      const std::vector<Int> &src = a.has_peirce() ? a.idempotent(w) : a.unit();
      for (std::size_t b = 0; b < a.rank(); ++b)
        e[off + b] = src[b];
      idems.push_back(std::move(e));
    }
    for (std::size_t b = 0; b < a.rank(); ++b) {
      rowb[off + b] = static_cast<int>(lay.peirce_offset[i]) +
                      (a.has_peirce() ? a.row_block(b) : 0);
      colb[off + b] = static_cast<int>(lay.peirce_offset[i]) +
                      (a.has_peirce() ? a.col_block(b) : 0);
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Bimodule &bm = d.bimodule(i, j);
      std::size_t moff = lay.bim_offset.at({i, j});
      bool ti = d.algebras[i]->has_peirce(), tj = d.algebras[j]->has_peirce();
      if ((ti && bm.right_block.empty() && bm.rank > 0) ||
          (tj && bm.left_block.empty() && bm.rank > 0))
        throw std::runtime_error("bimodule lacks Peirce tags for gluing");
      for (std::size_t x = 0; x < bm.rank; ++x) {
        rowb[moff + x] = static_cast<int>(lay.peirce_offset[j]) +
                         (tj ? bm.left_block[x] : 0);
        colb[moff + x] = static_cast<int>(lay.peirce_offset[i]) +
                         (ti ? bm.right_block[x] : 0);
      }
    }
  glued.set_peirce_system(std::move(idems), std::move(rowb), std::move(colb));
  glued.verify();
  return std::make_shared<const FinAlgebra>(std::move(glued));
}

GluingDatum opposite_datum(const GluingDatum &d) {
  int m = static_cast<int>(d.algebras.size());
  auto mu = [m](int l) { return m - 1 - l; };
  GluingDatum out;
  out.algebras.reserve(m);
  for (int l = 0; l < m; ++l)
    out.algebras.push_back(
        std::make_shared<const FinAlgebra>(d.algebras[mu(l)]->opposite()));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Bimodule &src = d.bimodule(mu(j), mu(i));
      Bimodule b;
      b.right_alg = out.algebras[i];
      b.left_alg = out.algebras[j];
      b.rank = src.rank;
      b.right_action = src.left_action;
      b.left_action = src.right_action;
      b.labels = src.labels;
      b.right_block = src.left_block;
      b.left_block = src.right_block;
      b.name = src.name;
      out.bimodules.emplace(std::make_pair(i, j), std::move(b));
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        // the new product of x (x) y is the old product of y (x) x
        int oi = mu(k), oj = mu(j), ok = mu(i);
        IntegerMatrix c = d.composite(oi, oj, ok);
        std::size_t r1 = d.bimodule(oi, oj).rank; // new first factor M'_{jk}
        std::size_t r2 = d.bimodule(oj, ok).rank; // new second factor M'_{ij}
        IntegerMatrix cnew(r1 * r2, c.cols());
        for (std::size_t x = 0; x < r1; ++x)
          for (std::size_t y = 0; y < r2; ++y)
            for (std::size_t col = 0; col < c.cols(); ++col)
              cnew.at(x * r2 + y, col) = c.at(y * r1 + x, col);
        BalancedTensor bt = balanced_tensor(
            out.bimodule(j, k).as_right_module(), out.bimodule(i, j));
        out.m_maps.emplace(std::make_tuple(i, j, k), bt.lift.mul(cnew));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Functors between component representations and glued representations

AlgModule functor_F(const GluingDatum &d, const AlgebraPtr &glued, int i,
                    const AlgModule &n) {
  if (n.algebra != d.algebras[i])
    throw std::invalid_argument("module lives over the wrong component");
  GluedLayout lay = glued_layout(d);
  AlgModule out;
  out.algebra = glued;
  out.rank = n.rank;
  out.name = "F" + std::to_string(i + 1) + "(" + n.name + ")";
  out.action.assign(glued->rank(), IntegerMatrix(n.rank, n.rank));
  for (std::size_t b = 0; b < d.algebras[i]->rank(); ++b)
    out.action[lay.alg_offset[i] + b] = n.action[b];
  if (!n.coord_block.empty() || !d.algebras[i]->has_peirce()) {
    out.coord_block.resize(n.rank);
    for (std::size_t c = 0; c < n.rank; ++c)
      out.coord_block[c] =
          static_cast<int>(lay.peirce_offset[i]) +
          (n.coord_block.empty() ? 0 : n.coord_block[c]);
  }
  return out;
}

AlgModule functor_G_star(const GluingDatum &d, const AlgebraPtr &glued, int i,
                         const AlgModule &n) {
  if (n.algebra != d.algebras[i])
    throw std::invalid_argument("module lives over the wrong component");
  GluedLayout lay = glued_layout(d);
  // summand at vertex i is n itself; vertex j < i carries n (x)_{A_i} M_ji
  std::map<int, BalancedTensor> tens;
  std::map<int, std::size_t> off;
  std::size_t total = n.rank;
  off[i] = 0;
  for (int j = 0; j < i; ++j) {
    BalancedTensor bt = balanced_tensor(n, d.bimodule(j, i));
    if (!bt.torsion.empty())
      throw std::runtime_error(
          "balanced tensor has torsion; input violates the flat/filtered "
          "hypothesis");
    off[j] = total;
    total += bt.rank;
    tens.emplace(j, std::move(bt));
  }

  std::map<std::tuple<int, int, int>, IntegerMatrix> comp;
  auto composite_of = [&](int a, int b, int c) -> const IntegerMatrix & {
    auto key = std::make_tuple(a, b, c);
    auto it = comp.find(key);
    if (it == comp.end())
      it = comp.emplace(key, d.composite(a, b, c)).first;
    return it->second;
  };

  AlgModule out;
  out.algebra = glued;
  out.rank = total;
  out.name = "G*" + std::to_string(i + 1) + "(" + n.name + ")";
  out.action.assign(glued->rank(), IntegerMatrix(total, total));

  auto add_block = [&](std::size_t g, std::size_t src_off,
                       std::size_t dst_off, const IntegerMatrix &m) {
    for (std::size_t x = 0; x < m.rows(); ++x)
      for (std::size_t y = 0; y < m.cols(); ++y)
        if (m.at(x, y) != 0)
          out.action[g].at(src_off + x, dst_off + y) = m.at(x, y);
  };

  // diagonal component actions
  for (std::size_t b = 0; b < d.algebras[i]->rank(); ++b)
    add_block(lay.alg_offset[i] + b, 0, 0, n.action[b]);
  for (int j = 0; j < i; ++j) {
    const Bimodule &mji = d.bimodule(j, i);
    const BalancedTensor &bt = tens.at(j);
    for (std::size_t b = 0; b < d.algebras[j]->rank(); ++b) {
      IntegerMatrix full =
          IntegerMatrix::identity(n.rank).kron(mji.right_action[b]);
      add_block(lay.alg_offset[j] + b, off[j], off[j],
                bt.lift.mul(full).mul(bt.proj));
    }
  }
  // bimodule blocks: M_ab sends the vertex-b summand to the vertex-a summand
  for (int a = 0; a < i; ++a)
    for (int b = a + 1; b <= i; ++b) {
      const Bimodule &mab = d.bimodule(a, b);
      std::size_t moff = lay.bim_offset.at({a, b});
      const BalancedTensor &bta = tens.at(a);
      if (b == i) {
        // n row s goes to the class of e_s (x) e_x in n (x) M_ai
        for (std::size_t x = 0; x < mab.rank; ++x) {
          IntegerMatrix blk(n.rank, bta.rank);
          for (std::size_t s = 0; s < n.rank; ++s)
            for (std::size_t c = 0; c < bta.rank; ++c)
              blk.at(s, c) = bta.proj.at(s * mab.rank + x, c);
          add_block(moff + x, 0, off[a], blk);
        }
      } else {
        const Bimodule &mbi = d.bimodule(b, i);
        const BalancedTensor &btb = tens.at(b);
        const IntegerMatrix &c = composite_of(a, b, i);
        for (std::size_t x = 0; x < mab.rank; ++x) {
          IntegerMatrix phi(mbi.rank, d.bimodule(a, i).rank);
          for (std::size_t u = 0; u < mbi.rank; ++u)
            for (std::size_t col = 0; col < phi.cols(); ++col)
              phi.at(u, col) = c.at(u * mab.rank + x, col);
          IntegerMatrix blk = btb.lift
                                  .mul(IntegerMatrix::identity(n.rank).kron(phi))
                                  .mul(bta.proj);
          add_block(moff + x, off[b], off[a], blk);
        }
      }
    }
  return out;
}

AlgModule functor_G_shriek(const GluingDatum &d, const AlgebraPtr &glued, int i,
                           const AlgModule &n) {
  if (n.algebra != d.algebras[i])
    throw std::invalid_argument("module lives over the wrong component");
  int m = static_cast<int>(d.algebras.size());
  GluedLayout lay = glued_layout(d);
  // summand at vertex i is n; vertex j > i carries Hom_{A_i}(M_ij, n)
  std::map<int, std::vector<IntegerMatrix>> homs;
  std::map<int, Lattice> lat;
  std::map<int, std::size_t> off;
  std::size_t total = n.rank;
  off[i] = 0;
  for (int j = i + 1; j < m; ++j) {
    std::vector<IntegerMatrix> h =
        hom_space(d.bimodule(i, j).as_right_module(), n);
    std::size_t cols = d.bimodule(i, j).rank * n.rank;
    IntegerMatrix gen(h.size(), cols);
    for (std::size_t s = 0; s < h.size(); ++s) {
      std::vector<Int> v = vec_of(h[s]);
      for (std::size_t c = 0; c < cols; ++c)
        gen.at(s, c) = v[c];
    }
    off[j] = total;
    total += h.size();
    lat.emplace(j, Lattice::from_generators(gen));
    homs.emplace(j, std::move(h));
  }

  std::map<std::tuple<int, int, int>, IntegerMatrix> comp;
  auto composite_of = [&](int a, int b, int c) -> const IntegerMatrix & {
    auto key = std::make_tuple(a, b, c);
    auto it = comp.find(key);
    if (it == comp.end())
      it = comp.emplace(key, d.composite(a, b, c)).first;
    return it->second;
  };

  AlgModule out;
  out.algebra = glued;
  out.rank = total;
  out.name = "G!" + std::to_string(i + 1) + "(" + n.name + ")";
  out.action.assign(glued->rank(), IntegerMatrix(total, total));

  auto add_block = [&](std::size_t g, std::size_t src_off,
                       std::size_t dst_off, const IntegerMatrix &mat) {
    for (std::size_t x = 0; x < mat.rows(); ++x)
      for (std::size_t y = 0; y < mat.cols(); ++y)
        if (mat.at(x, y) != 0)
          out.action[g].at(src_off + x, dst_off + y) = mat.at(x, y);
  };
  auto hom_coords = [&](int j, const IntegerMatrix &f) -> std::vector<Int> {
    IntegerMatrix row(1, f.rows() * f.cols());
    std::vector<Int> v = vec_of(f);
    for (std::size_t c = 0; c < v.size(); ++c)
      row.at(0, c) = v[c];
    auto c = lat.at(j).coordinates(row);
    if (!c)
      throw std::runtime_error("hom image leaves the hom lattice");
    return c->row_vec(0);
  };

  for (std::size_t b = 0; b < d.algebras[i]->rank(); ++b)
    add_block(lay.alg_offset[i] + b, 0, 0, n.action[b]);
  for (int j = i + 1; j < m; ++j) {
    const Bimodule &mij = d.bimodule(i, j);
    const auto &hj = homs.at(j);
    for (std::size_t b = 0; b < d.algebras[j]->rank(); ++b) {
      IntegerMatrix blk(hj.size(), hj.size());
      for (std::size_t s = 0; s < hj.size(); ++s) {
        std::vector<Int> coords =
            hom_coords(j, mij.left_action[b].mul(hj[s]));
        for (std::size_t c = 0; c < hj.size(); ++c)
          blk.at(s, c) = coords[c];
      }
      add_block(lay.alg_offset[j] + b, off[j], off[j], blk);
    }
  }
  // bimodule blocks: M_ab sends the vertex-b summand to the vertex-a summand
  for (int a = i; a < m; ++a)
    for (int b = std::max(a + 1, i + 1); b < m; ++b) {
      const Bimodule &mab = d.bimodule(a, b);
      std::size_t moff = lay.bim_offset.at({a, b});
      const auto &hb = homs.at(b);
      if (a == i) {
        // evaluation: f goes to f(x)
        for (std::size_t x = 0; x < mab.rank; ++x) {
          IntegerMatrix blk(hb.size(), n.rank);
          for (std::size_t s = 0; s < hb.size(); ++s)
            for (std::size_t c = 0; c < n.rank; ++c)
              blk.at(s, c) = hb[s].at(x, c);
          add_block(moff + x, off[b], 0, blk);
        }
      } else {
        const auto &ha = homs.at(a);
        const IntegerMatrix &c = composite_of(i, a, b);
        const Bimodule &mia = d.bimodule(i, a);
        for (std::size_t x = 0; x < mab.rank; ++x) {
          // (f * x)(u) = f(x * u) through the multiplication map
          IntegerMatrix phi(mia.rank, d.bimodule(i, b).rank);
          for (std::size_t u = 0; u < mia.rank; ++u)
            for (std::size_t col = 0; col < phi.cols(); ++col)
              phi.at(u, col) = c.at(x * mia.rank + u, col);
          IntegerMatrix blk(hb.size(), ha.size());
          for (std::size_t s = 0; s < hb.size(); ++s) {
            std::vector<Int> coords = hom_coords(a, phi.mul(hb[s]));
            for (std::size_t cc = 0; cc < ha.size(); ++cc)
              blk.at(s, cc) = coords[cc];
          }
          add_block(moff + x, off[b], off[a], blk);
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Highest weight verification

FiltrationReport standardly_filtered(const AlgModule &x,
                                     const std::vector<AlgModule> &costandards,
                                     int max_ext) {
  FiltrationReport rep;
  std::ostringstream detail;
  Resolution res = resolve(x, static_cast<std::size_t>(max_ext) + 1);
  bool failed = false;
  for (std::size_t l = 0; l < costandards.size(); ++l) {
    ExtResult ext = ext_from_resolution(res, costandards[l], max_ext);
    rep.multiplicities.push_back(ext.hom_rank());
    if (!ext.torsion[0].empty()) {
      failed = true;
      detail << "Hom(" << x.name << ", " << costandards[l].name
             << ") has torsion; ";
    }
    for (std::size_t t = 1; t < ext.free_rank.size(); ++t)
      if (ext.free_rank[t] != 0 || !ext.torsion[t].empty()) {
        failed = true;
        detail << "Ext^" << t << "(" << x.name << ", " << costandards[l].name
               << ") is nonzero; ";
        break;
      }
  }
  if (failed)
    rep.verdict = Verdict::fail;
  else if (!res.terminated) {
    rep.verdict = Verdict::inconclusive;
    detail << "resolution of " << x.name << " still open after "
           << (max_ext + 1) << " steps; ";
  } else {
    rep.verdict = Verdict::pass;
  }
  rep.detail = detail.str();
  return rep;
}

Verdict HighestWeightData::overall() const {
  Verdict v = end_check;
  v = combine(v, directed_check);
  v = combine(v, pairing_check);
  v = combine(v, filtration_check);
  v = combine(v, rank_check);
  return v;
}

HighestWeightData verify_highest_weight(const AlgebraPtr &a,
                                        std::vector<AlgModule> standards,
                                        std::vector<AlgModule> costandards,
                                        std::vector<std::string> weight_labels,
                                        std::vector<std::vector<bool>> leq,
                                        int max_ext) {
  std::size_t n = standards.size();
  if (costandards.size() != n || weight_labels.size() != n || leq.size() != n)
    throw std::invalid_argument("weight family sizes do not match");
  for (const auto &row : leq)
    if (row.size() != n)
      throw std::invalid_argument("order table has wrong shape");
  HighestWeightData h;
  h.algebra = a;
  h.standards = std::move(standards);
  h.costandards = std::move(costandards);
  h.weight_labels = std::move(weight_labels);
  h.leq = std::move(leq);
  h.max_ext = max_ext >= 0 ? max_ext : static_cast<int>(2 * n);
  for (std::size_t l = 0; l < n; ++l) {
    if (h.standards[l].name.empty())
      h.standards[l].name = "Delta(" + h.weight_labels[l] + ")";
    if (h.costandards[l].name.empty())
      h.costandards[l].name = "nabla(" + h.weight_labels[l] + ")";
  }

  // (a) endomorphism rings are Z
  h.end_check = Verdict::pass;
  for (std::size_t l = 0; l < n; ++l) {
    long rd = hom_rank(h.standards[l], h.standards[l]);
    long rn = hom_rank(h.costandards[l], h.costandards[l]);
    if (rd != 1) {
      h.end_check = Verdict::fail;
      h.failures.push_back("(a) End(" + h.standards[l].name + ") has rank " +
                           std::to_string(rd));
    }
    if (rn != 1) {
      h.end_check = Verdict::fail;
      h.failures.push_back("(a) End(" + h.costandards[l].name + ") has rank " +
                           std::to_string(rn));
    }
  }

  // (b) homs are directed along the order
  h.directed_check = Verdict::pass;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      if (l == m)
        continue;
      if (hom_rank(h.standards[l], h.standards[m]) > 0 && !h.leq[l][m]) {
        h.directed_check = Verdict::fail;
        h.failures.push_back("(b) Hom(" + h.standards[l].name + ", " +
                             h.standards[m].name +
                             ") is nonzero against the order");
      }
      if (hom_rank(h.costandards[l], h.costandards[m]) > 0 && !h.leq[m][l]) {
        h.directed_check = Verdict::fail;
        h.failures.push_back("(b) Hom(" + h.costandards[l].name + ", " +
                             h.costandards[m].name +
                             ") is nonzero against the order");
      }
    }

  // (c) Ext pairing grid
  h.pairing_check = Verdict::pass;
  bool open = false;
  h.hom_pairing.assign(n, std::vector<long>(n));
  for (std::size_t l = 0; l < n; ++l) {
    Resolution res =
        resolve(h.standards[l], static_cast<std::size_t>(h.max_ext) + 1);
    std::vector<ExtResult> row;
    for (std::size_t m = 0; m < n; ++m) {
      ExtResult ext = ext_from_resolution(res, h.costandards[m], h.max_ext);
      h.hom_pairing[l][m] = ext.hom_rank();
      long expect = (l == m) ? 1 : 0;
      if (ext.hom_rank() != expect)
        h.failures.push_back("(c) Hom(" + h.standards[l].name + ", " +
                             h.costandards[m].name + ") has rank " +
                             std::to_string(ext.hom_rank()) + ", expected " +
                             std::to_string(expect));
      if (ext.any_torsion())
        h.failures.push_back("(c) Ext(" + h.standards[l].name + ", " +
                             h.costandards[m].name + ") has torsion");
      if (!ext.positive_degrees_vanish())
        h.failures.push_back("(c) Ext^{>0}(" + h.standards[l].name + ", " +
                             h.costandards[m].name + ") is nonzero");
      if (ext.hom_rank() != expect || ext.any_torsion() ||
          !ext.positive_degrees_vanish())
        h.pairing_check = Verdict::fail;
      if (!ext.terminated)
        open = true;
      row.push_back(std::move(ext));
    }
    h.ext_grid.push_back(std::move(row));
  }
  if (h.pairing_check == Verdict::pass && open)
    h.pairing_check = Verdict::inconclusive;

  // (d) the regular module is standardly filtered
  FiltrationReport reg =
      standardly_filtered(regular_module(a), h.costandards, h.max_ext);
  h.filtration_check = reg.verdict;
  h.regular_multiplicities = reg.multiplicities;
  if (reg.verdict == Verdict::fail)
    h.failures.push_back("(d) regular module: " + reg.detail);

  // (e) rank of the algebra against the standard/costandard ranks
  Int total = 0;
  for (std::size_t l = 0; l < n; ++l)
    total += Int(h.standards[l].rank) * Int(h.costandards[l].rank);
  if (total == Int(a->rank())) {
    h.rank_check = Verdict::pass;
  } else {
    h.rank_check = Verdict::fail;
    h.failures.push_back("(e) rank " + std::to_string(a->rank()) +
                         " does not match the standard/costandard sum " +
                         total.get_str());
  }
  return h;
}

Verdict GluedStructures::star_verdict() const {
  Verdict v = Verdict::pass;
  for (const auto &[k, rep] : star_condition)
    v = combine(v, rep.verdict);
  return v;
}

GluedStructures glued_hw_structures(const GluingDatum &d,
                                    const AlgebraPtr &glued,
                                    const std::vector<FactorHW> &factors,
                                    int max_ext) {
  int m = static_cast<int>(d.algebras.size());
  if (factors.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("one weight family per component is required");
  GluedStructures out;

  // the filtration condition on every bimodule
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      AlgebraPtr opj =
          std::make_shared<const FinAlgebra>(d.algebras[j]->opposite());
      AlgebraPtr t = tensor_algebra(d.algebras[i], opj);
      AlgModule x = bimodule_as_tensor_module(t, d.bimodule(i, j));
      std::vector<AlgModule> costd;
      for (std::size_t li = 0; li < factors[i].costandards.size(); ++li)
        for (std::size_t lj = 0; lj < factors[j].standards.size(); ++lj) {
          AlgModule c = tensor_product_module(
              t, factors[i].costandards[li],
              dual_module(opj, factors[j].standards[lj]));
          c.name = "nabla(" + factors[i].weight_labels[li] + ")(x)Delta(" +
                   factors[j].weight_labels[lj] + ")^*";
          costd.push_back(std::move(c));
        }
      int me = max_ext >= 0 ? max_ext : static_cast<int>(2 * costd.size());
      out.star_condition.emplace(std::make_pair(i, j),
                                 standardly_filtered(x, costd, me));
    }

  // both glued weight families
  std::vector<AlgModule> std1, costd1, std2, costd2;
  std::vector<std::string> labels;
  std::vector<std::pair<int, std::size_t>> idx;
  for (int i = 0; i < m; ++i)
    for (std::size_t l = 0; l < factors[i].standards.size(); ++l) {
      idx.emplace_back(i, l);
      labels.push_back(std::to_string(i + 1) + ":" +
                       factors[i].weight_labels[l]);
      std1.push_back(functor_G_star(d, glued, i, factors[i].standards[l]));
      costd1.push_back(functor_F(d, glued, i, factors[i].costandards[l]));
      std2.push_back(functor_F(d, glued, i, factors[i].standards[l]));
      costd2.push_back(
          functor_G_shriek(d, glued, i, factors[i].costandards[l]));
    }
  std::size_t n = idx.size();
  std::vector<std::vector<bool>> leq1(n, std::vector<bool>(n)),
      leq2(n, std::vector<bool>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [i, l] = idx[p];
      auto [j, mm] = idx[q];
      bool same = i == j && factors[i].leq[l][mm];
      leq1[p][q] = i < j || same;
      leq2[p][q] = i > j || same;
    }
  out.first =
      verify_highest_weight(glued, std1, costd1, labels, leq1, max_ext);
  out.second =
      verify_highest_weight(glued, std2, costd2, labels, leq2, max_ext);
  return out;
}

} // namespace ztilt::qha
