#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ztilt/polyrep.hpp"

// The endomorphism algebra B(k, n) of the sum, over all partitions in the
// (n-k) x k box, of the exterior powers Lambda^{lambda'}(V_k), together
// with its gluing presentation and the verification suites that hang off
// it: the two highest weight structures, directedness and delta pairing
// tables of the Schur and Weyl families, degree zero concentration for the
// summand pairs, and mod p base change of every pairing grid.
//
// Degree bookkeeping: partitions are grouped by weight d in 0..k(n-k);
// gluing components are ordered by descending degree, so component c is
// degree d_max - c. All hom spaces Hom(N_d, X) are right modules over
// End(N_d) by precomposition; accordingly the product a*b in an
// endomorphism algebra is "apply b first", mat(a*b) = mat(b) * mat(a) in
// the row vector convention of the rest of the library.

namespace ztilt::grassmann {

using exactlin::Int;
using exactlin::IntegerMatrix;
using young::Partition;

struct GrassmannConfig {
  int k = 0;
  int n = 0;
  int d_max = 0; // k * (n - k)
  // partitions with at most k parts, each at most n - k, grouped by weight;
  // canonical order within a weight (dominant first)
  std::vector<std::vector<Partition>> by_degree;

  std::size_t count() const; // total number of partitions, C(n, k)
  int component(int d) const { return d_max - d; }
  int degree(int c) const { return d_max - c; }
};

GrassmannConfig grassmann_config(int k, int n);

// Canonical basis of a space of module maps with an exact coordinate
// solver: h = u * stack of vectorized basis matrices.
struct HomBasis {
  std::vector<IntegerMatrix> basis; // each src_rank x tgt_rank
  std::size_t src_rank = 0, tgt_rank = 0;
  IntegerMatrix h, u;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return basis.size(); }
  // coordinates of f in the basis; throws when f is outside the lattice
  std::vector<Int> coords(const IntegerMatrix &f) const;
};

HomBasis hom_basis(std::vector<IntegerMatrix> basis, std::size_t src_rank,
                   std::size_t tgt_rank);

// One degree block: N_d with its summand offsets, End(N_d) as a based
// algebra with the summand Peirce system, and the degree-d highest weight
// data (standards Hom(N_d, S_lambda) by precomposition, costandards the
// duals of Hom(W_lambda, N_d), dominance order).
struct DegreeData {
  polyrep::SchurPtr schur;
  polyrep::RepModule nmod;
  std::vector<std::size_t> offset;  // per summand start row, total at end
  std::vector<int> summand_of_row;
  HomBasis end;
  qha::AlgebraPtr alg;
  std::vector<qha::AlgModule> standards, costandards;
  std::vector<std::string> weight_labels;
  std::vector<std::vector<bool>> leq;
};

// Hom(N_{d1}, Sym^{d1-d2}(V_k (x) Z^n) (x) N_{d2}) for d1 > d2.
struct PairData {
  polyrep::RepModule tmod;
  HomBasis homs;
};

// Everything built for one pair (k, n): the per degree data, the gluing
// datum with its multiplication maps, and the glued algebra B itself.
// Carries lazy caches for the geometric RHom computations.
struct TiltingData {
  GrassmannConfig cfg;
  std::vector<polyrep::RepModule> sym; // Sym^m(V_k (x) Z^n), m = 0..d_max
  // (a, b) -> matrix of Sym^a (x) Sym^b -> Sym^{a+b} on chosen bases
  std::map<std::pair<int, int>, IntegerMatrix> sym_mult;
  std::vector<DegreeData> deg;         // indexed by degree
  std::map<std::pair<int, int>, PairData> pair; // keys (d1, d2), d1 > d2
  qha::GluingDatum datum;
  qha::AlgebraPtr b;
  qha::GluedLayout layout;

  // caches: exported Schur algebras per degree, resolutions by module name
  std::vector<qha::AlgebraPtr> schur_fin;
  std::map<std::pair<int, std::string>, qha::Resolution> res_cache;

  int default_max_ext() const { return 2 * cfg.d_max + 2; }
  const PairData &pair_at(int d1, int d2) const;
};

TiltingData build_tilting(int k, int n);

// f : N -> Sym^a (x) Y and g : Y -> Sym^b (x) X composed through the
// multiplication Sym^a (x) Sym^b -> Sym^{a+b}; result N -> Sym^{a+b} (x) X.
IntegerMatrix sym_composite(const TiltingData &t, int a, int b,
                            const IntegerMatrix &f, const IntegerMatrix &g,
                            std::size_t x_rank);

// RHom between summand representatives placed in degrees d1 and d2: zero
// when d1 < d2, otherwise Ext over the exported degree-d1 Schur algebra
// against Sym^{d1-d2}(V_k (x) Z^n) (x) e2. This finite computation is the
// definition of the geometric RHom used in every report table. max_ext < 0
// means the default bound 2 k (n - k) + 2. Results are cached by module
// name, so e1 names must be stable per degree.
qha::ExtResult geometric_rhom(TiltingData &t, const polyrep::RepModule &e1,
                              int d1, const polyrep::RepModule &e2, int d2,
                              int max_ext = -1);

// The standard modules of the first structure built directly on the B side:
// for each partition, the sum over degrees d >= |lambda| of
// Hom(N_d, Sym^{d-|lambda|} (x) S_lambda), bimodule parts acting by
// precomposition and Sym multiplication. Glued weight order (descending
// degree, canonical within a degree).
std::vector<qha::AlgModule> standard_family_1(const TiltingData &t);

struct HwReport {
  qha::GluedStructures glued;
  std::vector<qha::AlgModule> family1;
  // family1 rows against the structure 1 costandards
  std::vector<std::vector<qha::ExtResult>> family_grid;
  qha::Verdict family_match = qha::Verdict::inconclusive;

  qha::Verdict overall() const;
};

// Both glued highest weight structures plus the comparison of the
// structure 1 standards with the directly built family.
HwReport hw_structures_on_b(TiltingData &t, int max_ext = -1);

// A grid of Ext results with partition labels on both axes.
struct RankTable {
  std::string name;
  std::vector<std::string> rows, cols;
  std::vector<std::vector<qha::ExtResult>> ext;
};

// Standalone emitters for one table, shared with the command line front end.
std::string rank_table_markdown(const RankTable &tab);
std::string rank_table_json(const RankTable &tab);

struct CollectionTables {
  RankTable schur_table;                // geometric RHom on the S_lambda
  RankTable weyl_table;                 // same for the W_lambda
  std::vector<RankTable> dual_pairing;  // per degree, W row against S col
  RankTable tilting;                    // summand pairs Lambda^{lambda'}
  qha::Verdict schur_directed = qha::Verdict::inconclusive;
  qha::Verdict weyl_directed = qha::Verdict::inconclusive;
  qha::Verdict pairing_delta = qha::Verdict::inconclusive;
  qha::Verdict tilting_concentrated = qha::Verdict::inconclusive;

  qha::Verdict overall() const;
};

// Directedness certifies a partially ordered exceptional collection:
// rhom(row, col) vanishes when |row| < |col|, is Z in degree zero when
// row == col, and within one degree vanishes unless col <= row in
// dominance (for the Schur family; row <= col for the Weyl family).
// Cells between those vanishing claims are unconstrained and merely
// recorded; they can carry honest torsion, the smallest example being the
// Z/2 in Ext^1(Sym^2 V_2, Lambda^2 V_2) at degree 2. Different-degree
// nonvanishing cells must still be torsion free. Dual pairing: within
// each degree the Weyl against Schur grid is the identity in degree zero
// and zero above. Tilting: every summand pair is concentrated in degree
// zero, torsion free.
CollectionTables collection_tables(TiltingData &t, int max_ext = -1);

struct BaseChangeReport {
  std::vector<std::uint32_t> primes;
  long cells = 0; // pairing grid cells checked
  qha::Verdict verdict = qha::Verdict::inconclusive;
  std::vector<std::string> failures;
};

struct GrassmannReport {
  GrassmannConfig cfg;
  std::size_t b_rank = 0;
  std::vector<std::size_t> a_rank;               // per degree
  std::map<std::pair<int, int>, std::size_t> m_rank;
  qha::Verdict algebra_verdict = qha::Verdict::inconclusive;
  HwReport hw;
  CollectionTables tables;
  BaseChangeReport base_change;

  qha::Verdict overall() const;
  std::string to_markdown() const;
  std::string to_json() const;
};

// Every claimed cell of every integer Ext grid in the report reduced mod
// each prime: no torsion and the F_p ranks reproduce the integer rank
// tables. The same-degree directedness cells that sit above the dominance
// order are not claims and are skipped.
BaseChangeReport base_change_check(const GrassmannReport &r,
                                   const std::vector<std::uint32_t> &primes);

// Full pipeline: build, verify the gluing, certify both highest weight
// structures, compute the collection tables, then base change at the given
// primes. max_ext < 0 means the default bound.
GrassmannReport verify_grassmannian(int k, int n,
                                    std::vector<std::uint32_t> primes = {},
                                    int max_ext = -1);

} // namespace ztilt::grassmann
