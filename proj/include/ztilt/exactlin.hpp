#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

// Exact integer linear algebra: matrices over Z, Hermite and Smith normal
// forms, kernels, integral solving, lattices and lattice quotients.
// Row convention throughout: vectors are rows, lattices are row spans,
// maps act by right multiplication.

namespace ztilt::exactlin {

using Int = mpz_class;

class IntegerMatrix {
public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> data);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix zero(std::size_t rows, std::size_t cols) {
    return IntegerMatrix(rows, cols);
  }
  static IntegerMatrix from_row(const std::vector<Int> &v);
  static IntegerMatrix vstack(const IntegerMatrix &a, const IntegerMatrix &b);
  static IntegerMatrix hstack(const IntegerMatrix &a, const IntegerMatrix &b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntegerMatrix mul(const IntegerMatrix &other) const;
  IntegerMatrix transpose() const;
  IntegerMatrix add(const IntegerMatrix &other) const;
  IntegerMatrix sub(const IntegerMatrix &other) const;
  IntegerMatrix scaled(const Int &c) const;
  IntegerMatrix kron(const IntegerMatrix &other) const;
  IntegerMatrix row(std::size_t i) const;
  IntegerMatrix rows_slice(std::size_t begin, std::size_t end) const;
  IntegerMatrix cols_slice(std::size_t begin, std::size_t end) const;
  std::vector<Int> row_vec(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int> &v);

  bool is_zero() const;
  bool operator==(const IntegerMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
  }
  bool operator!=(const IntegerMatrix &other) const { return !(*this == other); }

  std::string to_string() const;

  void swap_rows(std::size_t i, std::size_t j);
  // row i -= q * row j
  void row_submul(std::size_t i, std::size_t j, const Int &q);
  void negate_row(std::size_t i);

private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// Row-style Hermite normal form: U * A = H with U unimodular, H with
// positive pivots moving strictly right as rows descend, entries above a
// pivot reduced into [0, pivot), zero rows at the bottom.
struct HermiteResult {
  IntegerMatrix h;
  IntegerMatrix u;                 // empty when transform not requested
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

HermiteResult hnf(const IntegerMatrix &a, bool with_transform = true);

// Smith normal form: left * A * right = diag, diagonal entries nonnegative
// with d1 | d2 | ... ; invariants lists the nonzero diagonal entries.
struct SmithDecomposition {
  IntegerMatrix left;
  IntegerMatrix diag;
  IntegerMatrix right;
  std::vector<Int> invariants;
};

SmithDecomposition snf(const IntegerMatrix &a);

// Basis (rows, in HNF) of {x in Z^rows(A) : x * A = 0}.
IntegerMatrix left_kernel(const IntegerMatrix &a);

class Lattice {
public:
  Lattice() : ambient_(0) {}
  static Lattice from_generators(const IntegerMatrix &gens);
  static Lattice zero(std::size_t ambient);
  static Lattice full(std::size_t ambient);

  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const IntegerMatrix &basis() const { return basis_; }

  bool contains(const IntegerMatrix &rows) const;
  // Solve X * basis = rows exactly over Z; nullopt when some row is outside.
  std::optional<IntegerMatrix> coordinates(const IntegerMatrix &rows) const;
  Lattice sum(const Lattice &other) const;
  bool operator==(const Lattice &other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

private:
  std::size_t ambient_;
  IntegerMatrix basis_; // HNF, no zero rows
};

// Basis of {x in Z^cols(A) : A x^T = 0}, returned as a lattice in Z^cols.
// The kernel of an integer matrix is automatically saturated.
Lattice kernel_basis(const IntegerMatrix &a);

enum class SolveStatus { ok, no_rational_solution, no_integral_solution };

struct SolveResult {
  SolveStatus status = SolveStatus::no_rational_solution;
  std::vector<Int> x; // meaningful when status == ok; A * x = b
};

// Solve A x = b (column convention: x has length cols(A), b length rows(A)).
SolveResult solve_integral(const IntegerMatrix &a, const std::vector<Int> &b);

// A/B for lattices B <= A in a common ambient. free_rank + torsion
// invariants (divisibility order, each > 1), lift rows spanning a free
// complement, proj mapping A-basis coordinates onto free-part coordinates.
struct QuotientResult {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  IntegerMatrix lift;  // free_rank x ambient
  IntegerMatrix proj;  // rank(A) x free_rank, kills B and torsion
};

QuotientResult lattice_quotient(const Lattice &a, const Lattice &b);

// Smallest saturated lattice containing L: (Q span of L) intersect Z^n.
Lattice saturate(const Lattice &l);

// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntegerMatrix &a);

// Inverse of a unimodular integer matrix (throws otherwise).
IntegerMatrix unimodular_inverse(const IntegerMatrix &m);

// Rank of A over the prime field F_p.
std::size_t rank_mod(const IntegerMatrix &a, std::uint32_t p);

// Entries of A reduced into [0, p) as machine integers.
std::vector<std::vector<std::uint32_t>> reduce_mod(const IntegerMatrix &a,
                                                   std::uint32_t p);
std::size_t rank_mod(const std::vector<std::vector<std::uint32_t>> &a,
                     std::uint32_t p);

} // namespace ztilt::exactlin
