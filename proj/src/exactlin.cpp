#include "ztilt/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ztilt::exactlin {

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> data) {
  rows_ = data.size();
  cols_ = rows_ ? data.begin()->size() : 0;
  e_.resize(rows_ * cols_);
  std::size_t i = 0;
  for (const auto &r : data) {
    if (r.size() != cols_)
      throw std::invalid_argument("ragged initializer");
    std::size_t j = 0;
    for (long v : r)
      e_[i * cols_ + j++] = v;
    ++i;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_row(const std::vector<Int> &v) {
  IntegerMatrix m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    m.at(0, j) = v[j];
  return m;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix &a,
                                    const IntegerMatrix &b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("vstack: column mismatch");
  std::size_t cols = a.rows() ? a.cols() : b.cols();
  IntegerMatrix m(a.rows() + b.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix &a,
                                    const IntegerMatrix &b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack: row mismatch");
  IntegerMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix &other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("mul: dimension mismatch");
  IntegerMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int &a = at(i, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Int &b = other.at(k, j);
        if (sgn(b) != 0)
          mpz_addmul(r.at(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  return r;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.at(j, i) = at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::add(const IntegerMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("add: shape mismatch");
  IntegerMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = e_[i] + other.e_[i];
  return r;
}

IntegerMatrix IntegerMatrix::sub(const IntegerMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("sub: shape mismatch");
  IntegerMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = e_[i] - other.e_[i];
  return r;
}

IntegerMatrix IntegerMatrix::scaled(const Int &c) const {
  IntegerMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = e_[i] * c;
  return r;
}

IntegerMatrix IntegerMatrix::kron(const IntegerMatrix &other) const {
  IntegerMatrix r(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int &a = at(i, j);
      if (sgn(a) == 0)
        continue;
      for (std::size_t p = 0; p < other.rows_; ++p)
        for (std::size_t q = 0; q < other.cols_; ++q)
          r.at(i * other.rows_ + p, j * other.cols_ + q) = a * other.at(p, q);
    }
  return r;
}

IntegerMatrix IntegerMatrix::row(std::size_t i) const {
  IntegerMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    r.at(0, j) = at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::rows_slice(std::size_t begin,
                                        std::size_t end) const {
  IntegerMatrix r(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.at(i - begin, j) = at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::cols_slice(std::size_t begin,
                                        std::size_t end) const {
  IntegerMatrix r(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j)
      r.at(i, j - begin) = at(i, j);
  return r;
}

std::vector<Int> IntegerMatrix::row_vec(std::size_t i) const {
  return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntegerMatrix::set_row(std::size_t i, const std::vector<Int> &v) {
  if (v.size() != cols_)
    throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j)
    at(i, j) = v[j];
}

bool IntegerMatrix::is_zero() const {
  for (const auto &x : e_)
    if (sgn(x) != 0)
      return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    mpz_swap(at(i, c).get_mpz_t(), at(j, c).get_mpz_t());
}

void IntegerMatrix::row_submul(std::size_t i, std::size_t j, const Int &q) {
  if (sgn(q) == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Int &src = at(j, c);
    if (sgn(src) != 0)
      mpz_submul(at(i, c).get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
  }
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c)
    mpz_neg(at(i, c).get_mpz_t(), at(i, c).get_mpz_t());
}

HermiteResult hnf(const IntegerMatrix &a, bool with_transform) {
  HermiteResult res;
  res.h = a;
  IntegerMatrix &h = res.h;
  IntegerMatrix u;
  if (with_transform)
    u = IntegerMatrix::identity(a.rows());
  std::size_t r = 0;
  Int q;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // gather rows >= r with nonzero entry in column c
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (sgn(h.at(i, c)) == 0)
          continue;
        if (best == a.rows() ||
            mpz_cmpabs(h.at(i, c).get_mpz_t(), h.at(best, c).get_mpz_t()) < 0)
          best = i;
      }
      if (best == a.rows())
        break; // column clear below r
      h.swap_rows(r, best);
      if (with_transform)
        u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (sgn(h.at(i, c)) == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(),
                   h.at(r, c).get_mpz_t());
        h.row_submul(i, r, q);
        if (with_transform)
          u.row_submul(i, r, q);
        if (sgn(h.at(i, c)) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (sgn(h.at(r, c)) == 0)
      continue;
    if (sgn(h.at(r, c)) < 0) {
      h.negate_row(r);
      if (with_transform)
        u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h.at(i, c)) == 0)
        continue;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
      h.row_submul(i, r, q);
      if (with_transform)
        u.row_submul(i, r, q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  if (with_transform)
    res.u = std::move(u);
  return res;
}

namespace {

// Solve x * H = v for H in HNF with known pivot columns. Returns the
// coefficient vector over the nonzero rows, or nullopt.
std::optional<std::vector<Int>> hnf_solve(const IntegerMatrix &h,
                                          const std::vector<std::size_t> &pivots,
                                          std::vector<Int> v) {
  std::vector<Int> coeff(pivots.size());
  Int q, r;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Int &p = h.at(i, pivots[i]);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[pivots[i]].get_mpz_t(),
                p.get_mpz_t());
    if (sgn(r) != 0)
      return std::nullopt;
    coeff[i] = q;
    if (sgn(q) != 0)
      for (std::size_t j = 0; j < h.cols(); ++j)
        if (sgn(h.at(i, j)) != 0)
          mpz_submul(v[j].get_mpz_t(), q.get_mpz_t(), h.at(i, j).get_mpz_t());
  }
  for (const auto &x : v)
    if (sgn(x) != 0)
      return std::nullopt;
  return coeff;
}

} // namespace

SmithDecomposition snf(const IntegerMatrix &a) {
  SmithDecomposition res;
  res.diag = a;
  IntegerMatrix &d = res.diag;
  res.left = IntegerMatrix::identity(a.rows());
  res.right = IntegerMatrix::identity(a.cols());
  std::size_t n = std::min(a.rows(), a.cols());
  Int q;
  auto col_submul = [&](IntegerMatrix &m, std::size_t i, std::size_t j,
                        const Int &f) {
    if (sgn(f) == 0)
      return;
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
      const Int &src = m.at(r2, j);
      if (sgn(src) != 0)
        mpz_submul(m.at(r2, i).get_mpz_t(), f.get_mpz_t(), src.get_mpz_t());
    }
  };
  auto col_swap = [&](IntegerMatrix &m, std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
      mpz_swap(m.at(r2, i).get_mpz_t(), m.at(r2, j).get_mpz_t());
  };
  auto col_negate = [&](IntegerMatrix &m, std::size_t i) {
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
      mpz_neg(m.at(r2, i).get_mpz_t(), m.at(r2, i).get_mpz_t());
  };
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // locate minimal-abs nonzero entry in the remaining block
      std::size_t pi = a.rows(), pj = a.cols();
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (sgn(d.at(i, j)) == 0)
            continue;
          if (pi == a.rows() || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == a.rows())
        goto done; // remaining block zero
      d.swap_rows(t, pi);
      res.left.swap_rows(t, pi);
      col_swap(d, t, pj);
      col_swap(res.right, t, pj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(d.at(i, t)) == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.row_submul(i, t, q);
        res.left.row_submul(i, t, q);
        if (sgn(d.at(i, t)) != 0)
          dirty = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(d.at(t, j)) == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        col_submul(d, j, t, q);
        col_submul(res.right, j, t, q);
        if (sgn(d.at(t, j)) != 0)
          dirty = true;
      }
      if (dirty)
        continue;
      // row and column t are clear; enforce divisibility of the rest
      bool fixed = false;
      for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols() && !fixed; ++j) {
          if (sgn(d.at(i, j)) != 0 &&
              !mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            // fold row i into row t, recreating a smaller pivot
            for (std::size_t c = 0; c < a.cols(); ++c)
              d.at(t, c) += d.at(i, c);
            for (std::size_t c = 0; c < a.rows(); ++c)
              res.left.at(t, c) += res.left.at(i, c);
            fixed = true;
          }
        }
      if (!fixed)
        break;
    }
    if (sgn(d.at(t, t)) < 0) {
      d.negate_row(t);
      res.left.negate_row(t);
    }
  }
done:
  for (std::size_t t = 0; t < n; ++t) {
    if (sgn(d.at(t, t)) < 0) {
      d.negate_row(t);
      res.left.negate_row(t);
    }
    if (sgn(d.at(t, t)) != 0)
      res.invariants.push_back(d.at(t, t));
  }
  return res;
}

IntegerMatrix left_kernel(const IntegerMatrix &a) {
  if (a.rows() == 0)
    return IntegerMatrix(0, 0);
  HermiteResult hr = hnf(a, true);
  IntegerMatrix gens = hr.u.rows_slice(hr.rank, a.rows());
  HermiteResult canon = hnf(gens, false);
  return canon.h.rows_slice(0, canon.rank);
}

Lattice Lattice::from_generators(const IntegerMatrix &gens) {
  Lattice l;
  l.ambient_ = gens.cols();
  HermiteResult hr = hnf(gens, false);
  l.basis_ = hr.h.rows_slice(0, hr.rank);
  return l;
}

Lattice Lattice::zero(std::size_t ambient) {
  Lattice l;
  l.ambient_ = ambient;
  l.basis_ = IntegerMatrix(0, ambient);
  return l;
}

Lattice Lattice::full(std::size_t ambient) {
  Lattice l;
  l.ambient_ = ambient;
  l.basis_ = IntegerMatrix::identity(ambient);
  return l;
}

bool Lattice::contains(const IntegerMatrix &rows) const {
  return coordinates(rows).has_value();
}

std::optional<IntegerMatrix> Lattice::coordinates(
    const IntegerMatrix &rows) const {
  if (rows.cols() != ambient_)
    throw std::invalid_argument("coordinates: ambient mismatch");
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (j < ambient_ && sgn(basis_.at(i, j)) == 0)
      ++j;
    pivots.push_back(j);
  }
  IntegerMatrix coords(rows.rows(), basis_.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto c = hnf_solve(basis_, pivots, rows.row_vec(i));
    if (!c)
      return std::nullopt;
    coords.set_row(i, *c);
  }
  return coords;
}

Lattice Lattice::sum(const Lattice &other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("sum: ambient mismatch");
  return from_generators(IntegerMatrix::vstack(basis_, other.basis_));
}

Lattice kernel_basis(const IntegerMatrix &a) {
  if (a.cols() == 0)
    return Lattice::zero(0);
  if (a.rows() == 0)
    return Lattice::full(a.cols());
  IntegerMatrix k = left_kernel(a.transpose());
  IntegerMatrix gens = k.rows() ? k : IntegerMatrix(0, a.cols());
  Lattice l = Lattice::from_generators(gens);
  return l;
}

SolveResult solve_integral(const IntegerMatrix &a, const std::vector<Int> &b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_integral: rhs length mismatch");
  SolveResult res;
  SmithDecomposition s = snf(a);
  // A x = b  <=>  D z = left b, x = right z
  std::vector<Int> lb(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j)
      if (sgn(s.left.at(i, j)) != 0)
        mpz_addmul(lb[i].get_mpz_t(), s.left.at(i, j).get_mpz_t(),
                   b[j].get_mpz_t());
  std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Int> z(a.cols());
  Int q, r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int d = i < n ? s.diag.at(i, i) : Int(0);
    if (sgn(d) == 0) {
      if (sgn(lb[i]) != 0) {
        res.status = SolveStatus::no_rational_solution;
        return res;
      }
      continue;
    }
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lb[i].get_mpz_t(), d.get_mpz_t());
    if (sgn(r) != 0) {
      res.status = SolveStatus::no_integral_solution;
      return res;
    }
    z[i] = q;
  }
  res.x.assign(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(s.right.at(i, j)) != 0 && sgn(z[j]) != 0)
        mpz_addmul(res.x[i].get_mpz_t(), s.right.at(i, j).get_mpz_t(),
                   z[j].get_mpz_t());
  res.status = SolveStatus::ok;
  return res;
}

QuotientResult lattice_quotient(const Lattice &a, const Lattice &b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("lattice_quotient: ambient mismatch");
  auto coords = a.coordinates(b.basis());
  if (!coords)
    throw std::invalid_argument("lattice_quotient: B is not contained in A");
  QuotientResult res;
  std::size_t ra = a.rank(), rb = b.rank();
  res.free_rank = ra - rb;
  if (rb == 0) {
    res.lift = a.basis();
    res.proj = IntegerMatrix::identity(ra);
    return res;
  }
  SmithDecomposition s = snf(*coords);
  if (s.invariants.size() != rb)
    throw std::logic_error("lattice_quotient: dependent sublattice basis");
  for (const auto &d : s.invariants)
    if (d > 1)
      res.torsion.push_back(d);
  IntegerMatrix vinv = unimodular_inverse(s.right);
  // rows rb..ra of right^{-1} give A-basis coordinates of the free lift;
  // columns rb..ra of right give the projection onto free coordinates.
  res.lift = vinv.rows_slice(rb, ra).mul(a.basis());
  res.proj = s.right.cols_slice(rb, ra);
  return res;
}

Lattice saturate(const Lattice &l) {
  if (l.rank() == 0)
    return l;
  IntegerMatrix m = kernel_basis(l.basis()).basis();
  return kernel_basis(m);
}

Int det(const IntegerMatrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("det: matrix not square");
  std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntegerMatrix m = a;
  Int prev(1);
  int sign = 1;
  Int t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m.at(p, k)) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("unimodular_inverse: matrix not square");
  HermiteResult hr = hnf(m, true);
  if (hr.h != IntegerMatrix::identity(m.rows()))
    throw std::invalid_argument("unimodular_inverse: matrix not unimodular");
  return hr.u;
}

std::vector<std::vector<std::uint32_t>> reduce_mod(const IntegerMatrix &a,
                                                   std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> r(a.rows(),
                                            std::vector<std::uint32_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r[i][j] = static_cast<std::uint32_t>(
          mpz_fdiv_ui(a.at(i, j).get_mpz_t(), p));
  return r;
}

std::size_t rank_mod(const std::vector<std::vector<std::uint32_t>> &a,
                     std::uint32_t p) {
  if (a.empty())
    return 0;
  std::vector<std::vector<std::uint64_t>> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i].assign(a[i].begin(), a[i].end());
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (m[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    std::swap(m[rank], m[piv]);
    // normalize pivot to 1
    std::uint64_t inv = 1, base = m[rank][c] % p, e = p - 2;
    while (e) {
      if (e & 1)
        inv = (__uint128_t)inv * base % p;
      base = (__uint128_t)base * base % p;
      e >>= 1;
    }
    for (std::size_t j = c; j < cols; ++j)
      m[rank][j] = (__uint128_t)(m[rank][j] % p) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank)
        continue;
      std::uint64_t f = m[i][c] % p;
      if (!f)
        continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t sub = (__uint128_t)f * m[rank][j] % p;
        m[i][j] = (m[i][j] % p + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod(const IntegerMatrix &a, std::uint32_t p) {
  return rank_mod(reduce_mod(a, p), p);
}

} // namespace ztilt::exactlin
