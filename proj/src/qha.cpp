#include "ztilt/qha.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace ztilt::qha {

using exactlin::hnf;
using exactlin::kernel_basis;
using exactlin::lattice_quotient;
using exactlin::left_kernel;
using exactlin::QuotientResult;
using exactlin::rank_mod;
using exactlin::unimodular_inverse;

namespace {

std::vector<Int> basis_vec(std::size_t rank, std::size_t i) {
  std::vector<Int> v(rank);
  v[i] = 1;
  return v;
}

std::vector<Int> matrix_vec(const IntegerMatrix &m) {
  std::vector<Int> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      v.push_back(m.at(i, j));
  return v;
}

IntegerMatrix vec_to_matrix(const std::vector<Int> &v, std::size_t rows,
                            std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = v[i * cols + j];
  return m;
}

bool is_zero_vec(const std::vector<Int> &v) {
  for (const auto &x : v)
    if (x != 0)
      return false;
  return true;
}

// Incremental row echelon over Z, pivot column -> reduced row. Supports
// membership tests; the rows always span the lattice inserted so far.
class Echelon {
public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<Int> r) {
    std::vector<std::vector<Int>> work;
    work.push_back(std::move(r));
    bool grew = false;
    while (!work.empty()) {
      std::vector<Int> v = std::move(work.back());
      work.pop_back();
      while (true) {
        std::size_t j = 0;
        while (j < cols_ && v[j] == 0)
          ++j;
        if (j == cols_)
          break;
        auto it = rows_.find(j);
        if (it == rows_.end()) {
          if (v[j] < 0)
            for (auto &x : v)
              x = -x;
          rows_.emplace(j, std::move(v));
          grew = true;
          break;
        }
        std::vector<Int> &p = it->second;
        if (v[j] % p[j] == 0) {
          Int q = v[j] / p[j];
          for (std::size_t c = j; c < cols_; ++c)
            v[c] -= q * p[c];
          continue;
        }
        Int g, a, b;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(),
                   p[j].get_mpz_t(), v[j].get_mpz_t());
        std::vector<Int> np(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
          np[c] = a * p[c] + b * v[c];
        Int qp = p[j] / g, qv = v[j] / g;
        std::vector<Int> rem(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
          rem[c] = qp * v[c] - qv * p[c];
        p = std::move(np);
        grew = true;
        work.push_back(std::move(rem));
        v.assign(cols_, 0);
        break;
      }
    }
    return grew;
  }

  bool contains(std::vector<Int> v) const {
    while (true) {
      std::size_t j = 0;
      while (j < cols_ && v[j] == 0)
        ++j;
      if (j == cols_)
        return true;
      auto it = rows_.find(j);
      if (it == rows_.end())
        return false;
      const std::vector<Int> &p = it->second;
      if (v[j] % p[j] != 0)
        return false;
      Int q = v[j] / p[j];
      for (std::size_t c = j; c < cols_; ++c)
        v[c] -= q * p[c];
    }
  }

private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Int>> rows_;
};

} // namespace

// ---------------------------------------------------------------------------
// FinAlgebra

FinAlgebra::FinAlgebra(std::vector<std::string> labels,
                       std::vector<std::vector<SparseVec>> table,
                       std::vector<Int> unit)
    : labels_(std::move(labels)), table_(std::move(table)),
      unit_(std::move(unit)) {
  std::size_t r = labels_.size();
  if (table_.size() != r)
    throw std::invalid_argument("structure constant table has wrong size");
  for (const auto &row : table_) {
    if (row.size() != r)
      throw std::invalid_argument("structure constant table has wrong size");
    for (const auto &sv : row)
      for (const auto &[k, c] : sv) {
        if (k >= r)
          throw std::invalid_argument("structure constant index out of range");
        if (c == 0)
          throw std::invalid_argument("structure constant entry is zero");
      }
  }
  if (unit_.size() != r)
    throw std::invalid_argument("unit has wrong length");
}

std::vector<Int> FinAlgebra::mult(const std::vector<Int> &x,
                                  const std::vector<Int> &y) const {
  std::size_t r = rank();
  if (x.size() != r || y.size() != r)
    throw std::invalid_argument("element has wrong length");
  std::vector<Int> z(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0)
        continue;
      for (const auto &[k, c] : table_[i][j])
        z[k] += x[i] * y[j] * c;
    }
  }
  return z;
}

IntegerMatrix FinAlgebra::right_mult_matrix(const std::vector<Int> &y) const {
  std::size_t r = rank();
  IntegerMatrix m(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0)
        continue;
      for (const auto &[k, c] : table_[a][j])
        m.at(a, k) += y[j] * c;
    }
  return m;
}

IntegerMatrix FinAlgebra::left_mult_matrix(const std::vector<Int> &y) const {
  std::size_t r = rank();
  IntegerMatrix m(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < r; ++i) {
      if (y[i] == 0)
        continue;
      for (const auto &[k, c] : table_[i][a])
        m.at(a, k) += y[i] * c;
    }
  return m;
}

void FinAlgebra::set_peirce_system(std::vector<std::vector<Int>> idempotents,
                                   std::vector<int> row_block,
                                   std::vector<int> col_block) {
  std::size_t r = rank();
  std::size_t t = idempotents.size();
  if (t == 0)
    throw std::invalid_argument("empty idempotent system");
  if (row_block.size() != r || col_block.size() != r)
    throw std::invalid_argument("block assignment has wrong length");
  std::vector<Int> total(r);
  for (std::size_t w = 0; w < t; ++w) {
    const auto &e = idempotents[w];
    if (e.size() != r)
      throw std::invalid_argument("idempotent has wrong length");
    if (mult(e, e) != e)
      throw std::invalid_argument("element of the system is not idempotent");
    for (std::size_t v = 0; v < w; ++v) {
      if (!is_zero_vec(mult(e, idempotents[v])) ||
          !is_zero_vec(mult(idempotents[v], e)))
        throw std::invalid_argument("idempotent system is not orthogonal");
    }
    for (std::size_t i = 0; i < r; ++i)
      total[i] += e[i];
  }
  if (total != unit_)
    throw std::invalid_argument("idempotent system does not sum to the unit");
  for (std::size_t b = 0; b < r; ++b) {
    if (row_block[b] < 0 || row_block[b] >= static_cast<int>(t) ||
        col_block[b] < 0 || col_block[b] >= static_cast<int>(t))
      throw std::invalid_argument("block index out of range");
    std::vector<Int> eb = basis_vec(r, b);
    if (mult(idempotents[row_block[b]], eb) != eb ||
        mult(eb, idempotents[col_block[b]]) != eb)
      throw std::invalid_argument("basis element is not block homogeneous");
  }
  idempotents_ = std::move(idempotents);
  row_block_ = std::move(row_block);
  col_block_ = std::move(col_block);
  row_members_.assign(t, {});
  for (std::size_t b = 0; b < r; ++b)
    row_members_[row_block_[b]].push_back(b);
}

void FinAlgebra::verify(std::size_t exhaustive_limit,
                        std::size_t samples) const {
  std::size_t r = rank();
  // unit laws
  for (std::size_t b = 0; b < r; ++b) {
    std::vector<Int> eb = basis_vec(r, b);
    if (mult(unit_, eb) != eb || mult(eb, unit_) != eb)
      throw std::runtime_error("unit law fails at basis element " + labels_[b]);
  }
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::vector<Int> lhs(r), rhs(r);
    for (const auto &[l, c] : table_[i][j])
      for (const auto &[m, c2] : table_[l][k])
        lhs[m] += c * c2;
    for (const auto &[l, c] : table_[j][k])
      for (const auto &[m, c2] : table_[i][l])
        rhs[m] += c * c2;
    if (lhs != rhs)
      throw std::runtime_error("associativity fails on (" + labels_[i] + ", " +
                               labels_[j] + ", " + labels_[k] + ")");
  };
  if (has_peirce()) {
    // products vanish across mismatched blocks, so only chained triples
    // can be nonzero on either side; verify those exhaustively when small
    std::vector<std::vector<std::size_t>> by_row(peirce_size());
    for (std::size_t b = 0; b < r; ++b)
      by_row[row_block_[b]].push_back(b);
    std::size_t count = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j : by_row[col_block_[i]])
        count += by_row[col_block_[j]].size();
    if (count <= exhaustive_limit * exhaustive_limit * exhaustive_limit) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j : by_row[col_block_[i]])
          for (std::size_t k : by_row[col_block_[j]])
            check_triple(i, j, k);
      return;
    }
  } else if (r <= exhaustive_limit) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
          check_triple(i, j, k);
    return;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, r - 1);
  for (std::size_t s = 0; s < samples; ++s)
    check_triple(pick(rng), pick(rng), pick(rng));
}

FinAlgebra FinAlgebra::opposite() const {
  std::size_t r = rank();
  std::vector<std::vector<SparseVec>> table(r, std::vector<SparseVec>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      table[i][j] = table_[j][i];
  std::vector<std::string> labels = labels_;
  FinAlgebra op(std::move(labels), std::move(table), unit_);
  if (has_peirce())
    op.set_peirce_system(idempotents_, col_block_, row_block_);
  return op;
}

AlgebraPtr make_algebra(std::vector<std::string> labels,
                        std::vector<std::vector<SparseVec>> table,
                        std::vector<Int> unit) {
  FinAlgebra a(std::move(labels), std::move(table), std::move(unit));
  a.verify();
  return std::make_shared<const FinAlgebra>(std::move(a));
}

AlgebraPtr tensor_algebra(const AlgebraPtr &a, const AlgebraPtr &b) {
  std::size_t ra = a->rank(), rb = b->rank(), r = ra * rb;
  std::vector<std::string> labels;
  labels.reserve(r);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      labels.push_back(a->label(i) + "|" + b->label(j));
  std::vector<std::vector<SparseVec>> table(r, std::vector<SparseVec>(r));
  for (std::size_t i1 = 0; i1 < ra; ++i1)
    for (std::size_t i2 = 0; i2 < rb; ++i2)
      for (std::size_t j1 = 0; j1 < ra; ++j1)
        for (std::size_t j2 = 0; j2 < rb; ++j2) {
          SparseVec out;
          for (const auto &[k1, c1] : a->product(i1, j1))
            for (const auto &[k2, c2] : b->product(i2, j2))
              out.emplace_back(k1 * rb + k2, c1 * c2);
          table[i1 * rb + i2][j1 * rb + j2] = std::move(out);
        }
  std::vector<Int> unit(r);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j)
      unit[i * rb + j] = a->unit()[i] * b->unit()[j];
  FinAlgebra t(std::move(labels), std::move(table), std::move(unit));
  if (a->has_peirce() && b->has_peirce()) {
    std::size_t ta = a->peirce_size(), tb = b->peirce_size();
    std::vector<std::vector<Int>> idems;
    idems.reserve(ta * tb);
    for (std::size_t w1 = 0; w1 < ta; ++w1)
      for (std::size_t w2 = 0; w2 < tb; ++w2) {
        std::vector<Int> e(r);
        for (std::size_t i = 0; i < ra; ++i)
          for (std::size_t j = 0; j < rb; ++j)
            e[i * rb + j] = a->idempotent(w1)[i] * b->idempotent(w2)[j];
        idems.push_back(std::move(e));
      }
    std::vector<int> rowb(r), colb(r);
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < rb; ++j) {
        rowb[i * rb + j] = a->row_block(i) * static_cast<int>(tb) + b->row_block(j);
        colb[i * rb + j] = a->col_block(i) * static_cast<int>(tb) + b->col_block(j);
      }
    t.set_peirce_system(std::move(idems), std::move(rowb), std::move(colb));
  }
  t.verify();
  return std::make_shared<const FinAlgebra>(std::move(t));
}

// ---------------------------------------------------------------------------
// AlgModule

IntegerMatrix AlgModule::act(const std::vector<Int> &x) const {
  IntegerMatrix m(rank, rank);
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b] == 0)
      continue;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        m.at(i, j) += x[b] * action[b].at(i, j);
  }
  return m;
}

IntegerMatrix AlgModule::act_sparse(const SparseVec &x) const {
  IntegerMatrix m(rank, rank);
  for (const auto &[b, c] : x)
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        m.at(i, j) += c * action[b].at(i, j);
  return m;
}

void AlgModule::verify(std::size_t budget) const {
  const FinAlgebra &alg = *algebra;
  std::size_t r = alg.rank();
  if (action.size() != r)
    throw std::runtime_error("module action table has wrong size");
  for (const auto &m : action)
    if (m.rows() != rank || m.cols() != rank)
      throw std::runtime_error("module action matrix has wrong shape");
  if (act(alg.unit()) != IntegerMatrix::identity(rank))
    throw std::runtime_error("module unit law fails for " + name);
  if (!coord_block.empty()) {
    if (!alg.has_peirce() || coord_block.size() != rank)
      throw std::runtime_error("coordinate block data is inconsistent");
    for (std::size_t w = 0; w < alg.peirce_size(); ++w) {
      IntegerMatrix e = act(alg.idempotent(w));
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
          Int expect = (i == j && coord_block[i] == static_cast<int>(w)) ? 1 : 0;
          if (e.at(i, j) != expect)
            throw std::runtime_error(
                "coordinate blocks do not diagonalize the idempotents in " +
                name);
        }
    }
  }
  auto check_pair = [&](std::size_t i, std::size_t j) {
    IntegerMatrix lhs = action[i].mul(action[j]);
    IntegerMatrix rhs(rank, rank);
    for (const auto &[k, c] : alg.product(i, j))
      for (std::size_t s = 0; s < rank; ++s)
        for (std::size_t t = 0; t < rank; ++t)
          rhs.at(s, t) += c * action[k].at(s, t);
    if (lhs != rhs)
      throw std::runtime_error("module law fails on (" + alg.label(i) + ", " +
                               alg.label(j) + ") in " + name);
  };
  std::size_t cube = rank ? rank * rank * rank : 1;
  if (alg.has_peirce()) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j : alg.row_block_members(alg.col_block(i)))
        pairs.emplace_back(i, j);
    if (pairs.size() * cube <= budget) {
      for (auto [i, j] : pairs)
        check_pair(i, j);
    } else {
      std::mt19937 rng(54321);
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      for (std::size_t s = 0; s < std::max<std::size_t>(budget / cube, 16); ++s) {
        auto [i, j] = pairs[pick(rng)];
        check_pair(i, j);
      }
    }
    // mismatched blocks must act by zero in products
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    for (std::size_t s = 0; s < std::min<std::size_t>(64, r * r); ++s) {
      std::size_t i = pick(rng), j = pick(rng);
      if (alg.col_block(i) == alg.row_block(j))
        continue;
      if (!action[i].mul(action[j]).is_zero())
        throw std::runtime_error("module law fails on mismatched blocks in " +
                                 name);
    }
  } else if (r * r * cube <= budget) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        check_pair(i, j);
  } else {
    std::mt19937 rng(54321);
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    for (std::size_t s = 0; s < std::max<std::size_t>(budget / cube, 16); ++s)
      check_pair(pick(rng), pick(rng));
  }
}

AlgModule regular_module(const AlgebraPtr &a) {
  AlgModule m;
  m.algebra = a;
  m.rank = a->rank();
  m.name = "regular";
  m.action.reserve(a->rank());
  for (std::size_t b = 0; b < a->rank(); ++b) {
    IntegerMatrix mat(m.rank, m.rank);
    for (std::size_t i = 0; i < m.rank; ++i)
      for (const auto &[k, c] : a->product(i, b))
        mat.at(i, k) += c;
    m.action.push_back(std::move(mat));
  }
  if (a->has_peirce()) {
    m.coord_block.resize(m.rank);
    for (std::size_t i = 0; i < m.rank; ++i)
      m.coord_block[i] = a->col_block(i);
  }
  return m;
}

AlgModule zero_module(const AlgebraPtr &a) {
  AlgModule m;
  m.algebra = a;
  m.rank = 0;
  m.name = "0";
  m.action.assign(a->rank(), IntegerMatrix(0, 0));
  return m;
}

AlgModule direct_sum(const AlgModule &m, const AlgModule &n) {
  if (m.algebra != n.algebra)
    throw std::invalid_argument("direct sum of modules over different algebras");
  AlgModule s;
  s.algebra = m.algebra;
  s.rank = m.rank + n.rank;
  s.name = m.name + "+" + n.name;
  s.action.reserve(m.action.size());
  for (std::size_t b = 0; b < m.action.size(); ++b) {
    IntegerMatrix mat(s.rank, s.rank);
    for (std::size_t i = 0; i < m.rank; ++i)
      for (std::size_t j = 0; j < m.rank; ++j)
        mat.at(i, j) = m.action[b].at(i, j);
    for (std::size_t i = 0; i < n.rank; ++i)
      for (std::size_t j = 0; j < n.rank; ++j)
        mat.at(m.rank + i, m.rank + j) = n.action[b].at(i, j);
    s.action.push_back(std::move(mat));
  }
  if (!m.coord_block.empty() && !n.coord_block.empty()) {
    s.coord_block = m.coord_block;
    s.coord_block.insert(s.coord_block.end(), n.coord_block.begin(),
                         n.coord_block.end());
  }
  return s;
}

AlgModule dual_module(const AlgebraPtr &opposite_alg, const AlgModule &m) {
  if (opposite_alg->rank() != m.algebra->rank())
    throw std::invalid_argument("dual: algebra ranks do not match");
  AlgModule d;
  d.algebra = opposite_alg;
  d.rank = m.rank;
  d.name = "(" + m.name + ")^*";
  d.action.reserve(m.action.size());
  for (const auto &mat : m.action)
    d.action.push_back(mat.transpose());
  d.coord_block = m.coord_block;
  return d;
}

AlgModule tensor_product_module(const AlgebraPtr &tensor_alg,
                                const AlgModule &m, const AlgModule &n) {
  if (tensor_alg->rank() != m.algebra->rank() * n.algebra->rank())
    throw std::invalid_argument("tensor: algebra ranks do not match");
  AlgModule t;
  t.algebra = tensor_alg;
  t.rank = m.rank * n.rank;
  t.name = m.name + "(x)" + n.name;
  std::size_t rb = n.algebra->rank();
  t.action.reserve(tensor_alg->rank());
  for (std::size_t a = 0; a < m.algebra->rank(); ++a)
    for (std::size_t b = 0; b < rb; ++b)
      t.action.push_back(m.action[a].kron(n.action[b]));
  if (!m.coord_block.empty() && !n.coord_block.empty() &&
      tensor_alg->has_peirce() && m.algebra->has_peirce() &&
      n.algebra->has_peirce()) {
    std::size_t tb = n.algebra->peirce_size();
    t.coord_block.resize(t.rank);
    for (std::size_t i = 0; i < m.rank; ++i)
      for (std::size_t j = 0; j < n.rank; ++j)
        t.coord_block[i * n.rank + j] =
            m.coord_block[i] * static_cast<int>(tb) + n.coord_block[j];
  }
  return t;
}

AlgModule left_as_right_over_opposite(const AlgebraPtr &opposite_alg,
                                      const std::vector<IntegerMatrix> &left_action,
                                      std::size_t rank) {
  if (left_action.size() != opposite_alg->rank())
    throw std::invalid_argument("left action table has wrong size");
  AlgModule m;
  m.algebra = opposite_alg;
  m.rank = rank;
  m.action = left_action;
  return m;
}

// ---------------------------------------------------------------------------
// Hom

namespace {

// Peirce data of a module: per block, an HNF basis of the image lattice of
// the idempotent. For the trivial system there is one full block.
struct PeirceImages {
  std::vector<Lattice> im;
  std::vector<std::size_t> rk;
};

PeirceImages peirce_images(const AlgModule &m) {
  PeirceImages p;
  const FinAlgebra &alg = *m.algebra;
  std::size_t w_count = alg.has_peirce() ? alg.peirce_size() : 1;
  p.im.reserve(w_count);
  std::size_t total = 0;
  for (std::size_t w = 0; w < w_count; ++w) {
    Lattice l = alg.has_peirce()
                    ? Lattice::from_generators(m.act(alg.idempotent(w)))
                    : Lattice::full(m.rank);
    total += l.rank();
    p.rk.push_back(l.rank());
    p.im.push_back(std::move(l));
  }
  if (total != m.rank)
    throw std::runtime_error("Peirce images do not decompose the module " +
                             m.name);
  return p;
}

} // namespace

std::vector<IntegerMatrix> hom_space(const AlgModule &m, const AlgModule &n) {
  if (m.algebra != n.algebra)
    throw std::invalid_argument("hom between modules over different algebras");
  const FinAlgebra &alg = *m.algebra;
  if (m.rank == 0 || n.rank == 0)
    return {};
  bool peirce = alg.has_peirce();
  std::size_t w_count = peirce ? alg.peirce_size() : 1;
  PeirceImages pm = peirce_images(m);
  PeirceImages pn = peirce_images(n);
  // unknown layout: per block w a pm.rk[w] x pn.rk[w] matrix of coordinates
  std::vector<std::size_t> off(w_count + 1);
  for (std::size_t w = 0; w < w_count; ++w)
    off[w + 1] = off[w] + pm.rk[w] * pn.rk[w];
  std::size_t unknowns = off[w_count];
  if (unknowns == 0)
    return {};

  IntegerMatrix basis = IntegerMatrix::identity(unknowns);
  for (std::size_t b = 0; b < alg.rank() && basis.rows() > 0; ++b) {
    std::size_t w1 = peirce ? alg.row_block(b) : 0;
    std::size_t w2 = peirce ? alg.col_block(b) : 0;
    std::size_t m1 = pm.rk[w1], m2 = pm.rk[w2];
    std::size_t n1 = pn.rk[w1], n2 = pn.rk[w2];
    if (m1 == 0 || n2 == 0)
      continue;
    // the commutation constraint in block coordinates:
    // Chat * c^{(w2)} = c^{(w1)} * Dhat
    auto chat_opt =
        pm.im[w2].coordinates(pm.im[w1].basis().mul(m.action[b]));
    auto dhat_opt =
        pn.im[w2].coordinates(pn.im[w1].basis().mul(n.action[b]));
    if (!chat_opt || !dhat_opt)
      throw std::runtime_error("module action leaves its Peirce block");
    const IntegerMatrix &chat = *chat_opt;
    const IntegerMatrix &dhat = *dhat_opt;
    std::size_t q = m1 * n2;
    IntegerMatrix d(basis.rows(), q);
    for (std::size_t row = 0; row < basis.rows(); ++row)
      for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
          Int acc = 0;
          for (std::size_t s = 0; s < m2; ++s) {
            const Int &coef = chat.at(i, s);
            if (coef != 0)
              acc += coef * basis.at(row, off[w2] + s * n2 + j);
          }
          for (std::size_t t = 0; t < n1; ++t) {
            const Int &coef = dhat.at(t, j);
            if (coef != 0)
              acc -= coef * basis.at(row, off[w1] + i * n1 + t);
          }
          d.at(row, i * n2 + j) = acc;
        }
    if (d.is_zero())
      continue;
    IntegerMatrix y = left_kernel(d);
    if (y.rows() == basis.rows())
      continue;
    basis = y.mul(basis);
  }
  if (basis.rows() == 0)
    return {};

  // reconstruct matrices: F = sum_w P^{-1}-columns(w) * c^{(w)} * V_w
  IntegerMatrix p(m.rank, m.rank);
  {
    std::size_t at = 0;
    for (std::size_t w = 0; w < w_count; ++w)
      for (std::size_t i = 0; i < pm.rk[w]; ++i, ++at)
        for (std::size_t j = 0; j < m.rank; ++j)
          p.at(at, j) = pm.im[w].basis().at(i, j);
  }
  IntegerMatrix pinv = unimodular_inverse(p);
  IntegerMatrix vecs(basis.rows(), m.rank * n.rank);
  for (std::size_t row = 0; row < basis.rows(); ++row) {
    IntegerMatrix f(m.rank, n.rank);
    std::size_t at = 0;
    for (std::size_t w = 0; w < w_count; ++w) {
      for (std::size_t i = 0; i < pm.rk[w]; ++i, ++at) {
        for (std::size_t t = 0; t < pn.rk[w]; ++t) {
          const Int &coef = basis.at(row, off[w] + i * pn.rk[w] + t);
          if (coef == 0)
            continue;
          for (std::size_t a = 0; a < m.rank; ++a) {
            const Int &pc = pinv.at(a, at);
            if (pc == 0)
              continue;
            for (std::size_t c = 0; c < n.rank; ++c)
              f.at(a, c) += coef * pc * pn.im[w].basis().at(t, c);
          }
        }
      }
    }
    std::vector<Int> v = matrix_vec(f);
    for (std::size_t c = 0; c < v.size(); ++c)
      vecs.at(row, c) = v[c];
  }
  IntegerMatrix h = hnf(vecs, false).h;
  std::vector<IntegerMatrix> out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero)
      break;
    out.push_back(vec_to_matrix(h.row_vec(i), m.rank, n.rank));
  }
  return out;
}

long hom_rank(const AlgModule &m, const AlgModule &n) {
  return static_cast<long>(hom_space(m, n).size());
}

// ---------------------------------------------------------------------------
// Resolutions and Ext

namespace {

struct CoverData {
  std::vector<int> weights;             // Peirce block of each summand
  std::vector<std::vector<Int>> gens;   // generator rows in parent coords
};

// Greedy homogeneous generators of the lattice spanned by the pooled rows.
// pool[w] holds rows lying in the w component; act(row, b) is the parent
// action. The chosen generators' spans exhaust the pooled lattice.
CoverData select_generators(
    const std::vector<IntegerMatrix> &pool, std::size_t width,
    const std::vector<std::vector<std::size_t>> &members,
    const std::function<std::vector<Int>(const std::vector<Int> &, std::size_t)>
        &act) {
  CoverData cover;
  Echelon span(width);
  for (std::size_t w = 0; w < pool.size(); ++w) {
    for (std::size_t i = 0; i < pool[w].rows(); ++i) {
      std::vector<Int> g = pool[w].row_vec(i);
      if (is_zero_vec(g) || span.contains(g))
        continue;
      cover.weights.push_back(static_cast<int>(w));
      cover.gens.push_back(g);
      for (std::size_t b : members[w])
        span.insert(act(g, b));
    }
  }
  return cover;
}

} // namespace

Resolution resolve(const AlgModule &m, std::size_t steps) {
  const FinAlgebra &alg = *m.algebra;
  std::size_t r = alg.rank();
  bool peirce = alg.has_peirce();
  std::size_t w_count = peirce ? alg.peirce_size() : 1;
  std::vector<std::vector<std::size_t>> members(w_count);
  if (peirce) {
    for (std::size_t w = 0; w < w_count; ++w)
      members[w] = alg.row_block_members(w);
  } else {
    members[0].resize(r);
    for (std::size_t b = 0; b < r; ++b)
      members[0][b] = b;
  }

  Resolution res;
  res.algebra = m.algebra;
  res.module_rank = m.rank;

  // step 0: cover the module itself
  std::vector<IntegerMatrix> pool(w_count);
  for (std::size_t w = 0; w < w_count; ++w) {
    IntegerMatrix im = peirce ? m.act(alg.idempotent(w))
                              : IntegerMatrix::identity(m.rank);
    pool[w] = hnf(im, false).h;
  }
  auto act_module = [&](const std::vector<Int> &g,
                        std::size_t b) -> std::vector<Int> {
    std::vector<Int> out(m.rank);
    for (std::size_t i = 0; i < m.rank; ++i) {
      if (g[i] == 0)
        continue;
      for (std::size_t j = 0; j < m.rank; ++j)
        out[j] += g[i] * m.action[b].at(i, j);
    }
    return out;
  };

  CoverData cover = select_generators(pool, m.rank, members, act_module);
  std::vector<std::size_t> prev_colblock; // col block of each parent coord
  {
    std::size_t dim = 0;
    for (int w : cover.weights)
      dim += members[w].size();
    res.weights.push_back(cover.weights);
    res.dims.push_back(dim);
    IntegerMatrix d(dim, m.rank);
    std::size_t at = 0;
    for (std::size_t s = 0; s < cover.gens.size(); ++s)
      for (std::size_t b : members[cover.weights[s]]) {
        std::vector<Int> row = act_module(cover.gens[s], b);
        d.set_row(at++, row);
      }
    res.diff.push_back(std::move(d));
  }

  for (std::size_t step = 1; step <= steps; ++step) {
    const IntegerMatrix &d = res.diff.back();
    const std::vector<int> &pw = res.weights.back();
    std::size_t pdim = res.dims.back();
    // column blocks of the current cover's coordinates
    std::vector<std::size_t> colblock(pdim);
    {
      std::size_t at = 0;
      for (int w : pw)
        for (std::size_t b : members[w])
          colblock[at++] = peirce ? alg.col_block(b) : 0;
    }
    // kernel of d, split by the column block of the target coordinates
    std::vector<IntegerMatrix> kernel_pool(w_count);
    std::size_t kernel_rank = 0;
    if (step == 1 && m.coord_block.empty() && peirce) {
      IntegerMatrix k = left_kernel(d);
      for (std::size_t w = 0; w < w_count; ++w) {
        IntegerMatrix kw(k.rows(), pdim);
        for (std::size_t i = 0; i < k.rows(); ++i)
          for (std::size_t c = 0; c < pdim; ++c)
            if (colblock[c] == w)
              kw.at(i, c) = k.at(i, c);
        kernel_pool[w] = hnf(kw, false).h;
        std::size_t rk = 0;
        while (rk < kernel_pool[w].rows() &&
               !is_zero_vec(kernel_pool[w].row_vec(rk)))
          ++rk;
        kernel_pool[w] = kernel_pool[w].rows_slice(0, rk);
        kernel_rank += rk;
      }
      if (kernel_rank != k.rows())
        throw std::runtime_error("kernel does not split along Peirce blocks");
    } else {
      // the differential respects column blocks, so the kernel splits
      std::vector<std::size_t> tgt_block(d.cols());
      if (step == 1) {
        for (std::size_t c = 0; c < d.cols(); ++c)
          tgt_block[c] = m.coord_block.empty() ? 0 : m.coord_block[c];
      } else {
        std::size_t at = 0;
        for (int w : res.weights[res.weights.size() - 2])
          for (std::size_t b : members[w])
            tgt_block[at++] = peirce ? alg.col_block(b) : 0;
      }
      for (std::size_t w = 0; w < w_count; ++w) {
        std::vector<std::size_t> rows_w, cols_w;
        for (std::size_t c = 0; c < pdim; ++c)
          if (colblock[c] == w)
            rows_w.push_back(c);
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (tgt_block[c] == w)
            cols_w.push_back(c);
        if (rows_w.empty()) {
          kernel_pool[w] = IntegerMatrix(0, pdim);
          continue;
        }
        IntegerMatrix sub(rows_w.size(), cols_w.size());
        for (std::size_t i = 0; i < rows_w.size(); ++i)
          for (std::size_t j = 0; j < cols_w.size(); ++j)
            sub.at(i, j) = d.at(rows_w[i], cols_w[j]);
        IntegerMatrix k = left_kernel(sub);
        IntegerMatrix kw(k.rows(), pdim);
        for (std::size_t i = 0; i < k.rows(); ++i)
          for (std::size_t j = 0; j < rows_w.size(); ++j)
            kw.at(i, rows_w[j]) = k.at(i, j);
        kernel_pool[w] = std::move(kw);
        kernel_rank += k.rows();
      }
      // entries crossing blocks must vanish
      for (std::size_t i = 0; i < pdim; ++i)
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (colblock[i] != tgt_block[c] && d.at(i, c) != 0)
            throw std::runtime_error(
                "differential does not respect Peirce blocks");
    }
    if (kernel_rank == 0) {
      res.terminated = true;
      return res;
    }
    auto act_cover = [&](const std::vector<Int> &g,
                         std::size_t b) -> std::vector<Int> {
      std::vector<Int> out(pdim);
      std::size_t at = 0;
      for (int w : pw) {
        std::size_t base = at;
        const auto &mem = members[w];
        for (std::size_t idx = 0; idx < mem.size(); ++idx) {
          const Int &coef = g[base + idx];
          if (coef != 0)
            for (const auto &[k2, c2] : alg.product(mem[idx], b)) {
              // locate k2 inside this summand's coordinates
              std::size_t pos =
                  std::lower_bound(mem.begin(), mem.end(), k2) - mem.begin();
              out[base + pos] += coef * c2;
            }
        }
        at += mem.size();
      }
      return out;
    };
    CoverData next = select_generators(kernel_pool, pdim, members, act_cover);
    std::size_t dim = 0;
    for (int w : next.weights)
      dim += members[w].size();
    IntegerMatrix nd(dim, pdim);
    std::size_t at = 0;
    for (std::size_t s = 0; s < next.gens.size(); ++s)
      for (std::size_t b : members[next.weights[s]])
        nd.set_row(at++, act_cover(next.gens[s], b));
    res.weights.push_back(next.weights);
    res.dims.push_back(dim);
    res.diff.push_back(std::move(nd));
  }
  return res;
}

ExtResult ext_from_resolution(const Resolution &res, const AlgModule &n,
                              int max_degree) {
  if (res.algebra != n.algebra)
    throw std::invalid_argument("resolution and module algebras differ");
  if (!res.terminated &&
      res.length() < static_cast<std::size_t>(max_degree) + 2)
    throw std::invalid_argument("resolution too short for requested degree");
  const FinAlgebra &alg = *res.algebra;
  bool peirce = alg.has_peirce();
  std::size_t w_count = peirce ? alg.peirce_size() : 1;
  std::vector<std::vector<std::size_t>> members(w_count);
  if (peirce) {
    for (std::size_t w = 0; w < w_count; ++w)
      members[w] = alg.row_block_members(w);
  } else {
    members[0].resize(alg.rank());
    for (std::size_t b = 0; b < alg.rank(); ++b)
      members[0][b] = b;
  }
  PeirceImages pn = peirce_images(n);

  ExtResult out;
  out.max_degree = max_degree;
  out.terminated = res.terminated;

  std::size_t levels = static_cast<std::size_t>(max_degree) + 1;
  // cochain dimensions
  std::vector<std::vector<std::size_t>> coff(levels + 1); // block offsets
  for (std::size_t t = 0; t <= levels; ++t) {
    std::size_t dim = 0;
    coff[t].push_back(0);
    if (t < res.length())
      for (int w : res.weights[t]) {
        dim += pn.rk[w];
        coff[t].push_back(dim);
      }
    if (t < levels)
      out.cochain_dim.push_back(static_cast<long>(dim));
  }

  // coboundary t: C^t -> C^{t+1} from diff[t+1]
  for (std::size_t t = 0; t < levels; ++t) {
    std::size_t rows = coff[t].back();
    std::size_t cols = coff[t + 1].back();
    IntegerMatrix mt(rows, cols);
    if (rows > 0 && cols > 0 && t + 1 < res.length()) {
      const IntegerMatrix &d = res.diff[t + 1];
      const std::vector<int> &tw = res.weights[t];
      const std::vector<int> &uw = res.weights[t + 1];
      // coordinate offsets of the covers
      std::vector<std::size_t> poff_t(tw.size() + 1), poff_u(uw.size() + 1);
      for (std::size_t s = 0; s < tw.size(); ++s)
        poff_t[s + 1] = poff_t[s] + members[tw[s]].size();
      for (std::size_t u = 0; u < uw.size(); ++u)
        poff_u[u + 1] = poff_u[u] + members[uw[u]].size();
      for (std::size_t u = 0; u < uw.size(); ++u) {
        // image of the summand generator e_w under the differential
        std::size_t wu = uw[u];
        std::vector<Int> z(res.dims[t]);
        const auto &mem_u = members[wu];
        const std::vector<Int> &idem =
            peirce ? alg.idempotent(wu) : alg.unit();
        for (std::size_t idx = 0; idx < mem_u.size(); ++idx) {
          const Int &coef = idem[mem_u[idx]];
          if (coef == 0)
            continue;
          for (std::size_t c = 0; c < res.dims[t]; ++c)
            z[c] += coef * d.at(poff_u[u] + idx, c);
        }
        for (std::size_t s = 0; s < tw.size(); ++s) {
          std::size_t ws = tw[s];
          if (pn.rk[ws] == 0 || pn.rk[wu] == 0)
            continue;
          // embed the block-s component back into algebra coordinates
          std::vector<Int> x(alg.rank());
          bool nonzero = false;
          const auto &mem_s = members[ws];
          for (std::size_t idx = 0; idx < mem_s.size(); ++idx) {
            x[mem_s[idx]] = z[poff_t[s] + idx];
            if (x[mem_s[idx]] != 0)
              nonzero = true;
          }
          if (!nonzero)
            continue;
          IntegerMatrix val = pn.im[ws].basis().mul(n.act(x));
          auto coords = pn.im[wu].coordinates(val);
          if (!coords)
            throw std::runtime_error("cochain value leaves its Peirce block");
          for (std::size_t i = 0; i < pn.rk[ws]; ++i)
            for (std::size_t j = 0; j < pn.rk[wu]; ++j)
              mt.at(coff[t][s] + i, coff[t + 1][u] + j) = coords->at(i, j);
        }
      }
    }
    out.coboundary.push_back(std::move(mt));
  }
  for (std::size_t t = 0; t + 1 < levels; ++t)
    if (out.coboundary[t].rows() > 0 && out.coboundary[t + 1].cols() > 0 &&
        !out.coboundary[t].mul(out.coboundary[t + 1]).is_zero())
      throw std::runtime_error("coboundaries do not compose to zero");

  for (std::size_t t = 0; t < levels; ++t) {
    std::size_t dim = coff[t].back();
    if (dim == 0) {
      out.free_rank.push_back(0);
      out.torsion.emplace_back();
      continue;
    }
    IntegerMatrix ker = left_kernel(out.coboundary[t]);
    Lattice kl = Lattice::from_generators(ker);
    Lattice il = (t == 0) ? Lattice::zero(dim)
                          : Lattice::from_generators(out.coboundary[t - 1]);
    QuotientResult q = lattice_quotient(kl, il);
    out.free_rank.push_back(static_cast<long>(q.free_rank));
    out.torsion.push_back(q.torsion);
  }
  return out;
}

ExtResult ext_space(const AlgModule &m, const AlgModule &n, int max_degree) {
  Resolution res = resolve(m, static_cast<std::size_t>(max_degree) + 1);
  return ext_from_resolution(res, n, max_degree);
}

bool ExtResult::positive_degrees_vanish() const {
  for (std::size_t t = 1; t < free_rank.size(); ++t)
    if (free_rank[t] != 0 || !torsion[t].empty())
      return false;
  return true;
}

bool ExtResult::any_torsion() const {
  for (const auto &t : torsion)
    if (!t.empty())
      return true;
  return false;
}

std::vector<long> ext_dims_mod_p(const ExtResult &r, std::uint32_t p) {
  std::vector<long> dims;
  for (std::size_t t = 0; t < r.free_rank.size(); ++t) {
    long d = r.cochain_dim[t];
    if (d == 0) {
      dims.push_back(0);
      continue;
    }
    d -= static_cast<long>(rank_mod(r.coboundary[t], p));
    if (t > 0)
      d -= static_cast<long>(rank_mod(r.coboundary[t - 1], p));
    dims.push_back(d);
  }
  return dims;
}

// ---------------------------------------------------------------------------
// Bimodules and balanced tensor products

void Bimodule::verify() const {
  const FinAlgebra &ra = *right_alg;
  const FinAlgebra &la = *left_alg;
  if (right_action.size() != ra.rank() || left_action.size() != la.rank())
    throw std::runtime_error("bimodule action tables have wrong size");
  as_right_module().verify();
  // left action: anti-multiplicative, unital
  IntegerMatrix lu(rank, rank);
  for (std::size_t b = 0; b < la.rank(); ++b) {
    if (left_action[b].rows() != rank || left_action[b].cols() != rank)
      throw std::runtime_error("left action matrix has wrong shape");
    if (la.unit()[b] == 0)
      continue;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        lu.at(i, j) += la.unit()[b] * left_action[b].at(i, j);
  }
  if (lu != IntegerMatrix::identity(rank))
    throw std::runtime_error("left unit law fails in bimodule " + name);
  for (std::size_t i = 0; i < la.rank(); ++i)
    for (std::size_t j = 0; j < la.rank(); ++j) {
      IntegerMatrix expect(rank, rank);
      for (const auto &[k, c] : la.product(i, j))
        for (std::size_t s = 0; s < rank; ++s)
          for (std::size_t t = 0; t < rank; ++t)
            expect.at(s, t) += c * left_action[k].at(s, t);
      if (left_action[j].mul(left_action[i]) != expect)
        throw std::runtime_error("left action is not anti-multiplicative in " +
                                 name);
    }
  for (std::size_t a = 0; a < ra.rank(); ++a)
    for (std::size_t b = 0; b < la.rank(); ++b)
      if (right_action[a].mul(left_action[b]) !=
          left_action[b].mul(right_action[a]))
        throw std::runtime_error("left and right actions do not commute in " +
                                 name);
  if (!right_block.empty() || !left_block.empty()) {
    if (right_block.size() != rank || left_block.size() != rank)
      throw std::runtime_error("bimodule block tags have wrong length");
    for (std::size_t x = 0; x < rank; ++x) {
      std::vector<Int> ex = basis_vec(rank, x);
      const std::vector<Int> &ri = ra.has_peirce()
                                       ? ra.idempotent(right_block[x])
                                       : ra.unit();
      const std::vector<Int> &li = la.has_peirce()
                                       ? la.idempotent(left_block[x])
                                       : la.unit();
      std::vector<Int> vr(rank), vl(rank);
      for (std::size_t b = 0; b < ri.size(); ++b)
        if (ri[b] != 0)
          for (std::size_t j = 0; j < rank; ++j)
            vr[j] += ri[b] * right_action[b].at(x, j);
      for (std::size_t b = 0; b < li.size(); ++b)
        if (li[b] != 0)
          for (std::size_t j = 0; j < rank; ++j)
            vl[j] += li[b] * left_action[b].at(x, j);
      if (vr != ex || vl != ex)
        throw std::runtime_error("bimodule block tags are wrong in " + name);
    }
  }
}

AlgModule Bimodule::as_right_module() const {
  AlgModule m;
  m.algebra = right_alg;
  m.rank = rank;
  m.action = right_action;
  m.name = name.empty() ? "bimodule" : name;
  return m;
}

Bimodule regular_bimodule(const AlgebraPtr &a) {
  Bimodule b;
  b.right_alg = a;
  b.left_alg = a;
  b.rank = a->rank();
  b.name = "regular";
  b.labels = a->labels();
  for (std::size_t i = 0; i < a->rank(); ++i) {
    b.right_action.push_back(
        a->right_mult_matrix(basis_vec(a->rank(), i)));
    b.left_action.push_back(a->left_mult_matrix(basis_vec(a->rank(), i)));
  }
  if (a->has_peirce()) {
    b.right_block.resize(b.rank);
    b.left_block.resize(b.rank);
    for (std::size_t x = 0; x < b.rank; ++x) {
      b.right_block[x] = a->col_block(x);
      b.left_block[x] = a->row_block(x);
    }
  }
  return b;
}

AlgModule bimodule_as_tensor_module(const AlgebraPtr &tensor_alg,
                                    const Bimodule &m) {
  if (tensor_alg->rank() != m.right_alg->rank() * m.left_alg->rank())
    throw std::invalid_argument("tensor algebra rank does not match bimodule");
  AlgModule t;
  t.algebra = tensor_alg;
  t.rank = m.rank;
  t.name = (m.name.empty() ? "bimodule" : m.name) + "#tensor";
  std::size_t rb = m.left_alg->rank();
  t.action.reserve(tensor_alg->rank());
  for (std::size_t a = 0; a < m.right_alg->rank(); ++a)
    for (std::size_t b = 0; b < rb; ++b)
      t.action.push_back(m.right_action[a].mul(m.left_action[b]));
  return t;
}

BalancedTensor balanced_tensor(const AlgModule &n, const Bimodule &m) {
  if (n.algebra != m.left_alg)
    throw std::invalid_argument(
        "balanced tensor: module algebra is not the bimodule's left algebra");
  const FinAlgebra &alg = *n.algebra;
  std::size_t full = n.rank * m.rank;
  BalancedTensor out;
  if (full == 0) {
    out.rank = 0;
    out.lift = IntegerMatrix(0, 0);
    out.proj = IntegerMatrix(0, 0);
    return out;
  }
  IntegerMatrix rel(n.rank * alg.rank() * m.rank, full);
  std::size_t at = 0;
  for (std::size_t s = 0; s < n.rank; ++s)
    for (std::size_t a = 0; a < alg.rank(); ++a)
      for (std::size_t t = 0; t < m.rank; ++t, ++at) {
        for (std::size_t s2 = 0; s2 < n.rank; ++s2) {
          const Int &c = n.action[a].at(s, s2);
          if (c != 0)
            rel.at(at, s2 * m.rank + t) += c;
        }
        for (std::size_t t2 = 0; t2 < m.rank; ++t2) {
          const Int &c = m.left_action[a].at(t, t2);
          if (c != 0)
            rel.at(at, s * m.rank + t2) -= c;
        }
      }
  QuotientResult q =
      lattice_quotient(Lattice::full(full), Lattice::from_generators(rel));
  out.rank = q.free_rank;
  out.torsion = q.torsion;
  out.lift = q.lift;
  out.proj = q.proj;
  return out;
}

AlgModule tensor_over_algebra(const AlgModule &n, const Bimodule &m) {
  BalancedTensor bt = balanced_tensor(n, m);
  if (!bt.torsion.empty())
    throw std::runtime_error(
        "balanced tensor has torsion; input violates the flat/filtered "
        "hypothesis");
  AlgModule out;
  out.algebra = m.right_alg;
  out.rank = bt.rank;
  out.name = n.name + "(x)" + (m.name.empty() ? "bimodule" : m.name);
  const FinAlgebra &c = *m.right_alg;
  out.action.reserve(c.rank());
  for (std::size_t b = 0; b < c.rank(); ++b) {
    IntegerMatrix full_act =
        IntegerMatrix::identity(n.rank).kron(m.right_action[b]);
    out.action.push_back(bt.lift.mul(full_act).mul(bt.proj));
  }
  return out;
}

const char *verdict_str(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  default:
    return "inconclusive";
  }
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail)
    return Verdict::fail;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive)
    return Verdict::inconclusive;
  return Verdict::pass;
}

} // namespace ztilt::qha
