#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ztilt/exactlin.hpp"
#include "ztilt/qha.hpp"
#include "ztilt/young.hpp"

// Degree-d polynomial representations of GL_n over Z. The Schur algebra is
// the commutant of the symmetric group permuting the d tensor slots of
// (Z^n)^{(x)d}; its basis is the set of orbit indicator matrices. Modules
// are kept as subquotient presentations B <= A of sublattices of the
// ambient space (Z^n)^{(x)d} (x) Z^colors (the color factor carries direct
// sum multiplicities, e.g. Sym^m of a repeated sum). Every stored basis is
// weight homogeneous, so actions, Homs and the export into the
// finite-algebra toolkit all cut along weight blocks.
//
// Ambient coordinate order is color major: index = color * n^d + position,
// positions lexicographic in the multi-index.

namespace ztilt::polyrep {

using exactlin::Int;
using exactlin::IntegerMatrix;
using exactlin::Lattice;

// Sparse ambient map, one row per source coordinate: list of
// (target coordinate, coefficient).
using AmbientMap = std::vector<std::vector<std::pair<std::size_t, Int>>>;

// Multi-indices (i_1..i_d) with entries in [0, n), lexicographic order.
struct TensorSpace {
  int n = 1;
  int d = 0;

  std::size_t dim() const;
  std::size_t pos(const std::vector<int> &idx) const;
  std::vector<int> at(std::size_t p) const;
  // entry counts, length n, summing to d
  std::vector<int> content(std::size_t p) const;
};

// The Schur algebra S(n, d) over Z with its orbit basis: basis element o is
// the 0/1 matrix supported on one orbit of index pairs (I, J) under the
// simultaneous slot action of the symmetric group. Orbits are numbered by
// first discovery when pairs are scanned in lexicographic order, so the
// basis order is canonical. Weight blocks are the contents, in the
// canonical composition order.
class SchurAlgebraZ {
public:
  SchurAlgebraZ(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  const TensorSpace &space() const { return space_; }
  std::size_t rank() const { return orbits_.size(); }

  // sorted pairs (row position, col position); front() is the representative
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> &
  orbit(std::size_t o) const {
    return orbits_[o];
  }
  std::size_t orbit_index(std::size_t row, std::size_t col) const;

  const std::vector<std::vector<int>> &contents() const { return contents_; }
  std::size_t content_index(const std::vector<int> &c) const;
  // indices into contents() of the row and column content of an orbit
  int row_content(std::size_t o) const { return row_content_[o]; }
  int col_content(std::size_t o) const { return col_content_[o]; }

  const std::vector<Int> &unit() const { return unit_; }
  // coordinates of the matrix product of two basis elements
  qha::SparseVec product(std::size_t i, std::size_t j) const;
  // dense n^d x n^d indicator matrix (small instances only)
  IntegerMatrix basis_matrix(std::size_t o) const;
  std::string basis_label(std::size_t o) const;

private:
  int n_, d_;
  TensorSpace space_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> orbits_;
  std::vector<std::uint32_t> orbit_of_; // dense pair index -> orbit
  std::vector<std::vector<int>> contents_;
  std::map<std::vector<int>, std::size_t> content_index_;
  std::vector<int> row_content_, col_content_;
  std::vector<Int> unit_;
};

using SchurPtr = std::shared_ptr<const SchurAlgebraZ>;

SchurPtr schur_algebra(int n, int d);

// A module in the degree-d polynomial category: subquotient A/B of the
// colored ambient space with a chosen weight homogeneous basis. The action
// of basis element b is stored as the block matrix between the weight
// blocks it connects; all other entries vanish.
struct RepModule {
  SchurPtr algebra;
  int colors = 1;
  std::string name;

  Lattice pres_a, pres_b; // presentation lattices, module = A/B
  IntegerMatrix lift;     // rank x ambient, weight homogeneous rows
  std::vector<int> weight; // per basis row, index into algebra->contents()
  std::vector<int> color;  // per basis row, color of the first nonzero
  // basis rows of each weight, in basis order
  std::vector<std::vector<std::size_t>> weight_members;
  // action[b]: weight_members[row_content(b)] x weight_members[col_content(b)]
  std::vector<IntegerMatrix> action;

  // per weight: HNF solver for coordinates in span(lift rows, B)
  struct WeightSolver {
    std::vector<std::size_t> amb; // ambient coordinates of this weight
    IntegerMatrix h, u;           // h = u * (lift rows stacked over B basis)
    std::vector<std::size_t> pivots;
    std::size_t nbasis = 0; // leading rows of the stack that are basis lifts
  };
  std::vector<WeightSolver> solver;

  std::size_t rank() const { return lift.rows(); }
  std::size_t ambient_dim() const;
  std::size_t amb_index(int c, std::size_t p) const;
  IntegerMatrix dense_action(std::size_t b) const;
  // quotient coordinates of an ambient row vector lying in A (throws outside)
  std::vector<Int> coordinates(const std::vector<Int> &v) const;
  // multiplicity of each weight in the chosen basis
  std::vector<long> character() const;
};

// A map of modules over the same algebra: v -> v * matrix on basis rows.
struct RepMap {
  std::string source, target;
  IntegerMatrix matrix;
};

// Divided power Gamma^lambda: the Young subgroup invariants in tensor
// space, B = 0. Accepts a composition; parts are sorted first.
RepModule divided_power_module(const SchurPtr &alg,
                               std::vector<int> lambda);
// Exterior power Lambda^lambda: signed block orbit sums, B = 0. Block
// order follows the given parts (sorted first, like the others).
RepModule exterior_module(const SchurPtr &alg, std::vector<int> lambda);
// Symmetric power Sym^lambda: quotient of the full ambient by adjacent
// transposition differences within each block.
RepModule symmetric_module(const SchurPtr &alg, std::vector<int> lambda);
// Schur module S_lambda: image of Lambda^{lambda'} inside Sym^lambda under
// the row-to-column shuffle. Rank is checked against the tableau count.
RepModule schur_module(const SchurPtr &alg, std::vector<int> lambda);
// Weyl module W_lambda: image of Gamma^lambda inside Lambda^{lambda'}
// under the inverse shuffle. Rank is checked against the tableau count.
RepModule weyl_module(const SchurPtr &alg, std::vector<int> lambda);
// Contravariant dual: ann(B)/ann(A) with the plain right action. Under the
// transpose pairing this realizes the dual twisted by the transposition
// anti-involution; weights are preserved.
RepModule dual_module(const RepModule &m);
// Direct sum: colors concatenate, presentations embed block diagonally.
RepModule direct_sum_modules(const RepModule &m, const RepModule &n);
// Tensor product over a target algebra of matching n and total degree; the
// basis is the pair basis (i major), lifts multiply by slot concatenation.
RepModule tensor_modules(const SchurPtr &alg, const RepModule &m,
                         const RepModule &n);
// Sym^m(V_k^{+n}) as the direct sum over length-n compositions alpha of m
// of Sym^alpha(V_k), one color per composition; alg must be S(k, m).
RepModule sym_power_of_sum(const SchurPtr &alg, int n_copies);

// Basis of the intertwiner lattice {F : rho_m(b) F = F rho_n(b) for all b},
// canonical HNF of the vectorized solutions, each F rank_m x rank_n.
std::vector<IntegerMatrix> rep_hom(const RepModule &m, const RepModule &n);

// Module map induced by a weight preserving ambient map that carries A to A
// and B to B; commutation with every algebra basis element is checked on
// the ambient and the induced matrix computed on basis lifts.
RepMap induced_map(const RepModule &src, const RepModule &tgt,
                   const AmbientMap &map);
// Ambient multiplication map from the tensor product of Sym^a(V_k^{+n})
// and Sym^b(V_k^{+n}) onto Sym^{a+b}(V_k^{+n}): slots interleave block by
// block, colors add.
AmbientMap sym_mult_ambient(int a, int b, int k, int n_copies);

// Export the algebra with its full structure constant table and the
// content Peirce system.
qha::AlgebraPtr as_fin_algebra(const SchurPtr &alg);
// Export a module as a right module over the exported algebra, with dense
// action matrices and weight coordinate blocks.
qha::AlgModule as_alg_module(const RepModule &m, const qha::AlgebraPtr &a);

} // namespace ztilt::polyrep
