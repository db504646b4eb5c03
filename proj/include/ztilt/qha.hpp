#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ztilt/exactlin.hpp"

// Finite free Z-algebras given by structure constants, their right modules,
// exact Hom and Ext over Z, bimodules, gluing of a list of algebras along
// bimodules, and the machinery that certifies a pair of standard/costandard
// families as a highest weight structure.
//
// Conventions. Modules are right modules; elements are coordinate rows.
// Action matrices are multiplicative: x acting then y acting equals xy
// acting, rho(xy) = rho(x) rho(y) with row vectors multiplied on the right.
// Left actions are stored as matrices too and are then anti-multiplicative:
// lambda(xy) = lambda(y) lambda(x).

namespace ztilt::qha {

using exactlin::Int;
using exactlin::IntegerMatrix;
using exactlin::Lattice;

// Sparse element: list of (basis index, coefficient), indices strictly
// increasing, coefficients nonzero.
using SparseVec = std::vector<std::pair<std::size_t, Int>>;

class FinAlgebra;
using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

class FinAlgebra {
public:
  FinAlgebra(std::vector<std::string> labels,
             std::vector<std::vector<SparseVec>> table, std::vector<Int> unit);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(std::size_t i) const { return labels_[i]; }
  const std::vector<Int> &unit() const { return unit_; }

  // product of basis elements e_i * e_j
  const SparseVec &product(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }
  std::vector<Int> mult(const std::vector<Int> &x,
                        const std::vector<Int> &y) const;
  // row a of the result is e_a * y resp. y * e_a
  IntegerMatrix right_mult_matrix(const std::vector<Int> &y) const;
  IntegerMatrix left_mult_matrix(const std::vector<Int> &y) const;

  // Orthogonal idempotents summing to the unit, together with a block
  // assignment of the basis: e_{row_block(b)} e_b = e_b = e_b e_{col_block(b)}.
  // Verified at installation. Used to cut Hom/Ext computations into Peirce
  // blocks; everything degenerates gracefully when absent.
  void set_peirce_system(std::vector<std::vector<Int>> idempotents,
                         std::vector<int> row_block, std::vector<int> col_block);
  bool has_peirce() const { return !idempotents_.empty(); }
  std::size_t peirce_size() const { return idempotents_.size(); }
  const std::vector<Int> &idempotent(std::size_t w) const {
    return idempotents_[w];
  }
  int row_block(std::size_t b) const { return row_block_[b]; }
  int col_block(std::size_t b) const { return col_block_[b]; }
  // basis indices with row_block == w (coordinate support of e_w A)
  const std::vector<std::size_t> &row_block_members(std::size_t w) const {
    return row_members_[w];
  }

  // Unit laws on every basis element; associativity on all basis triples
  // when rank <= exhaustive_limit, on a fixed-seed sample otherwise.
  void verify(std::size_t exhaustive_limit = 200,
              std::size_t samples = 20000) const;

  FinAlgebra opposite() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> table_;
  std::vector<Int> unit_;
  std::vector<std::vector<Int>> idempotents_;
  std::vector<int> row_block_, col_block_;
  std::vector<std::vector<std::size_t>> row_members_;
};

AlgebraPtr make_algebra(std::vector<std::string> labels,
                        std::vector<std::vector<SparseVec>> table,
                        std::vector<Int> unit);

// A x B: basis pairs (i,j) indexed i*rank(B)+j, componentwise products,
// Peirce system the product of the factors' systems when both have one.
AlgebraPtr tensor_algebra(const AlgebraPtr &a, const AlgebraPtr &b);

struct AlgModule {
  AlgebraPtr algebra;
  std::size_t rank = 0;
  std::vector<IntegerMatrix> action; // one rank x rank matrix per basis elt
  std::string name;
  // Optional: Peirce block of each coordinate. When set, rho(e_w) is the
  // 0/1 diagonal matrix supported on the block-w coordinates (verified).
  std::vector<int> coord_block;

  IntegerMatrix act(const std::vector<Int> &x) const;
  IntegerMatrix act_sparse(const SparseVec &x) const;
  // rho(unit) = id and rho(e_i e_j) = rho(e_i) rho(e_j), exhaustively while
  // rank(algebra)^2 * rank^3 stays under budget, sampled beyond.
  void verify(std::size_t budget = 200000000) const;
};

AlgModule regular_module(const AlgebraPtr &a);
AlgModule zero_module(const AlgebraPtr &a);
AlgModule direct_sum(const AlgModule &m, const AlgModule &n);
// Dual as a right module over the opposite algebra (transposed actions).
AlgModule dual_module(const AlgebraPtr &opposite_alg, const AlgModule &m);
// Outer tensor over tensor_algebra(A, B): coordinates are pairs, actions
// Kronecker products.
AlgModule tensor_product_module(const AlgebraPtr &tensor_alg,
                                const AlgModule &m, const AlgModule &n);
// Left module given by anti-multiplicative matrices, turned into a right
// module over the opposite algebra of `left_alg` (same matrices).
AlgModule left_as_right_over_opposite(const AlgebraPtr &opposite_alg,
                                      const std::vector<IntegerMatrix> &left_action,
                                      std::size_t rank);

// Basis of Hom_A(M, N) = {F : rho_M(x) F = F rho_N(x) for all x}, each F an
// M.rank x N.rank matrix acting by v -> v F. Canonical: the HNF basis of the
// saturated lattice of vectorized solutions.
std::vector<IntegerMatrix> hom_space(const AlgModule &m, const AlgModule &n);
long hom_rank(const AlgModule &m, const AlgModule &n);

// Projective resolution ... -> P_1 -> P_0 -> M -> 0 where each P_t is a
// direct sum of Peirce summands e_w A (free modules for the trivial system).
struct Resolution {
  AlgebraPtr algebra;
  std::size_t module_rank = 0;
  // weights[t][s] = Peirce block of summand s of P_t
  std::vector<std::vector<int>> weights;
  std::vector<std::size_t> dims; // coordinate dimension of each P_t
  // diff[0]: P_0 -> M, diff[t]: P_t -> P_{t-1}; rows are images of the
  // coordinate basis, so the map is x -> x * diff[t]
  std::vector<IntegerMatrix> diff;
  // true when the last computed kernel is zero: the resolution stops and
  // every higher Ext vanishes for any coefficient module
  bool terminated = false;
  std::size_t length() const { return weights.size(); }
};

Resolution resolve(const AlgModule &m, std::size_t steps);

struct ExtResult {
  std::vector<long> free_rank;             // degree 0 .. max_degree
  std::vector<std::vector<Int>> torsion;   // invariant factors per degree
  std::vector<long> cochain_dim;
  std::vector<IntegerMatrix> coboundary;   // map C^t -> C^{t+1}
  bool terminated = false;
  int max_degree = 0;

  long hom_rank() const { return free_rank.empty() ? 0 : free_rank[0]; }
  bool positive_degrees_vanish() const;
  bool any_torsion() const;
};

ExtResult ext_from_resolution(const Resolution &res, const AlgModule &n,
                              int max_degree);
ExtResult ext_space(const AlgModule &m, const AlgModule &n, int max_degree);
// Dimensions of Ext over F_p, reusing the stored integer coboundaries.
std::vector<long> ext_dims_mod_p(const ExtResult &r, std::uint32_t p);

// Bimodule: right module over right_alg, left module over left_alg, the two
// actions commuting.
struct Bimodule {
  AlgebraPtr right_alg;
  AlgebraPtr left_alg;
  std::size_t rank = 0;
  std::vector<IntegerMatrix> right_action; // multiplicative
  std::vector<IntegerMatrix> left_action;  // anti-multiplicative
  std::vector<std::string> labels;
  // Optional Peirce block tags relative to the adjacent algebras' systems.
  std::vector<int> right_block, left_block;
  std::string name;

  void verify() const;
  // The underlying right module over right_alg.
  AlgModule as_right_module() const;
};

Bimodule regular_bimodule(const AlgebraPtr &a);
// As a right module over tensor_algebra(right_alg, left_alg->opposite()):
// rho(a (x) b) = right_action(a) * left_action(b).
AlgModule bimodule_as_tensor_module(const AlgebraPtr &tensor_alg,
                                    const Bimodule &m);

// N (x)_A M for N a right A-module and M carrying a left A-action:
// quotient of the full tensor product by n a (x) m - n (x) a m.
struct BalancedTensor {
  std::size_t rank = 0;
  std::vector<Int> torsion;
  IntegerMatrix lift; // rank x (N.rank * M.rank)
  IntegerMatrix proj; // (N.rank * M.rank) x rank
};
BalancedTensor balanced_tensor(const AlgModule &n, const Bimodule &m);
// The balanced tensor as a right module over m.right_alg; throws when the
// balanced tensor has torsion (input violates the flat/filtered hypothesis).
AlgModule tensor_over_algebra(const AlgModule &n, const Bimodule &m);

// Gluing datum: algebras A_1..A_m (0-based in code), bimodules M_ij for
// i < j (right over A_i, left over A_j), multiplication maps on balanced
// products m_ijk : M_jk (x)_{A_j} M_ij -> M_ik.
struct GluingDatum {
  std::vector<AlgebraPtr> algebras;
  std::map<std::pair<int, int>, Bimodule> bimodules;
  std::map<std::tuple<int, int, int>, IntegerMatrix> m_maps;

  const Bimodule &bimodule(int i, int j) const;
  // Composite on the full tensor product: row (s * rank_ij + t) is the image
  // in M_ik of e_s (x) e_t, s over M_jk, t over M_ij.
  IntegerMatrix composite(int i, int j, int k) const;
  // Bimodule axioms, m-map balance and bimodule-map property, associativity
  // m_ikl (id (x) m_ijk) = m_ijl (m_jkl (x) id) on all i < j < k < l.
  void verify() const;
};

struct GluedLayout {
  std::size_t rank = 0;
  std::vector<std::size_t> alg_offset;                  // per component
  std::map<std::pair<int, int>, std::size_t> bim_offset;
  std::vector<std::size_t> peirce_offset;               // block id offsets
};
GluedLayout glued_layout(const GluingDatum &d);

// The glued algebra: components act within themselves, M_ij is a left
// A_j- right A_i-bimodule inside, products M_jk * M_ij multiply through
// m_ijk, everything else is zero. Peirce system: the union of the component
// systems (component units when a component has none).
AlgebraPtr glue(const GluingDatum &d);

GluingDatum opposite_datum(const GluingDatum &d);

// Inflation: N with every bimodule block acting by zero.
AlgModule functor_F(const GluingDatum &d, const AlgebraPtr &glued, int i,
                    const AlgModule &n);
// G_i^*(N) = N + sum_{j<i} N (x)_{A_i} M_ji, bimodule blocks acting through
// the m-maps. Left adjoint to the i-th restriction.
AlgModule functor_G_star(const GluingDatum &d, const AlgebraPtr &glued, int i,
                         const AlgModule &n);
// G_i^!(N) = N + sum_{j>i} Hom_{A_i}(M_ij, N), bimodule blocks acting by
// evaluation and the m-maps. Right adjoint to the i-th restriction.
AlgModule functor_G_shriek(const GluingDatum &d, const AlgebraPtr &glued, int i,
                           const AlgModule &n);

enum class Verdict { pass, fail, inconclusive };
const char *verdict_str(Verdict v);
Verdict combine(Verdict a, Verdict b);

// Is X filtered by the standard family dual to `costandards`? Pass iff for
// every lambda Ext^{>0}(X, nabla(lambda)) = 0 within the step bound and the
// resolution terminated (inconclusive when checks pass but a resolution is
// still open). Multiplicity of Delta(lambda) = rank Hom(X, nabla(lambda)).
struct FiltrationReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<long> multiplicities;
  std::string detail;
};
FiltrationReport standardly_filtered(const AlgModule &x,
                                     const std::vector<AlgModule> &costandards,
                                     int max_ext);

// Full certification of a highest weight structure on A:
//  (a) End(Delta) = End(nabla) = Z for every weight
//  (b) Hom(Delta(l), Delta(m)) != 0 forces l <= m, dually for costandards
//  (c) Ext^i(Delta(l), nabla(m)) = delta_{lm} delta_{i0} Z
//  (d) the regular module is Delta-filtered
//  (e) rank A = sum over weights of rank Delta * rank nabla
struct HighestWeightData {
  AlgebraPtr algebra;
  std::vector<AlgModule> standards;
  std::vector<AlgModule> costandards;
  std::vector<std::string> weight_labels;
  std::vector<std::vector<bool>> leq;
  int max_ext = 0;

  Verdict end_check = Verdict::inconclusive;
  Verdict directed_check = Verdict::inconclusive;
  Verdict pairing_check = Verdict::inconclusive;
  Verdict filtration_check = Verdict::inconclusive;
  Verdict rank_check = Verdict::inconclusive;
  std::vector<std::string> failures;

  std::vector<std::vector<long>> hom_pairing; // rank Hom(Delta_r, nabla_c)
  std::vector<std::vector<ExtResult>> ext_grid;
  std::vector<long> regular_multiplicities;

  Verdict overall() const;
};

HighestWeightData verify_highest_weight(
    const AlgebraPtr &a, std::vector<AlgModule> standards,
    std::vector<AlgModule> costandards, std::vector<std::string> weight_labels,
    std::vector<std::vector<bool>> leq, int max_ext = -1);

// Per-factor highest weight input for gluing.
struct FactorHW {
  std::vector<AlgModule> standards;
  std::vector<AlgModule> costandards;
  std::vector<std::string> weight_labels;
  std::vector<std::vector<bool>> leq;
};

// The two highest weight structures on a glued algebra:
//   structure 1: Delta = G_i^*(Delta_i), nabla = inflation of nabla_i,
//                weights of lower components strictly smaller
//   structure 2: Delta = inflation of Delta_i, nabla = G_i^!(nabla_i),
//                weights of lower components strictly larger
// Precondition (checked first): every M_ij is standardly filtered as a
// module over A_i x A_j^op with the product structure.
struct GluedStructures {
  std::map<std::pair<int, int>, FiltrationReport> star_condition;
  HighestWeightData first;
  HighestWeightData second;
  Verdict star_verdict() const;
};

GluedStructures glued_hw_structures(const GluingDatum &d,
                                    const AlgebraPtr &glued,
                                    const std::vector<FactorHW> &factors,
                                    int max_ext = -1);

} // namespace ztilt::qha
