#include <doctest.h>

#include "ztilt/qha.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

using namespace ztilt::qha;
using ztilt::exactlin::IntegerMatrix;
using ztilt::exactlin::Lattice;
using ztilt::exactlin::kernel_basis;
using ztilt::exactlin::det;

namespace {

// Z as an algebra with a single basis element.
AlgebraPtr ground() {
  return make_algebra({"e"}, {{SparseVec{{0, Int(1)}}}}, {Int(1)});
}

// Z x Z with its idempotents as a Peirce system.
AlgebraPtr two_points() {
  FinAlgebra a({"e1", "e2"},
               {{SparseVec{{0, Int(1)}}, SparseVec{}},
                {SparseVec{}, SparseVec{{1, Int(1)}}}},
               {Int(1), Int(1)});
  a.set_peirce_system({{Int(1), Int(0)}, {Int(0), Int(1)}}, {0, 1}, {0, 1});
  a.verify();
  return std::make_shared<const FinAlgebra>(std::move(a));
}

// Z[x]/(x^2), basis {e, x}.
AlgebraPtr dual_numbers() {
  return make_algebra({"e", "x"},
                      {{SparseVec{{0, Int(1)}}, SparseVec{{1, Int(1)}}},
                       {SparseVec{{1, Int(1)}}, SparseVec{}}},
                      {Int(1), Int(0)});
}

// Z[x]/(x^2 - 2x), basis {e, x}.  Not split over Z: the idempotent x/2 is
// rational only, which makes Ext groups pick up 2-torsion.
AlgebraPtr split_quadratic() {
  return make_algebra({"e", "x"},
                      {{SparseVec{{0, Int(1)}}, SparseVec{{1, Int(1)}}},
                       {SparseVec{{1, Int(1)}}, SparseVec{{1, Int(2)}}}},
                      {Int(1), Int(0)});
}

// Upper triangular 2x2 matrices, basis {E11, E22, E12}.
AlgebraPtr triangular2() {
  SparseVec z;
  std::vector<std::vector<SparseVec>> table(3, std::vector<SparseVec>(3, z));
  table[0][0] = {{0, Int(1)}};
  table[0][2] = {{2, Int(1)}};
  table[2][1] = {{2, Int(1)}};
  table[1][1] = {{1, Int(1)}};
  FinAlgebra a({"E11", "E22", "E12"}, table, {Int(1), Int(1), Int(0)});
  a.set_peirce_system({{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}},
                      {0, 1, 0}, {0, 1, 1});
  a.verify();
  return std::make_shared<const FinAlgebra>(std::move(a));
}

AlgModule module_of(const AlgebraPtr &a, size_t rank,
                    std::vector<IntegerMatrix> action, std::string name,
                    std::vector<int> blocks = {}) {
  AlgModule m;
  m.algebra = a;
  m.rank = rank;
  m.action = std::move(action);
  m.name = std::move(name);
  m.coord_block = std::move(blocks);
  m.verify();
  return m;
}

// Brute-force hom lattice: one linear constraint per (basis, entry) triple.
Lattice dense_hom_lattice(const AlgModule &m, const AlgModule &n) {
  size_t mn = m.rank * n.rank;
  IntegerMatrix big(m.algebra->rank() * mn, mn);
  for (size_t b = 0; b < m.algebra->rank(); ++b)
    for (size_t i = 0; i < m.rank; ++i)
      for (size_t j = 0; j < n.rank; ++j) {
        size_t r = (b * m.rank + i) * n.rank + j;
        for (size_t s = 0; s < m.rank; ++s)
          big.at(r, s * n.rank + j) += m.action[b].at(i, s);
        for (size_t t = 0; t < n.rank; ++t)
          big.at(r, i * n.rank + t) -= n.action[b].at(t, j);
      }
  return kernel_basis(big);
}

Lattice hom_vec_lattice(const std::vector<IntegerMatrix> &homs,
                        size_t rows, size_t cols) {
  IntegerMatrix stack(homs.size(), rows * cols);
  for (size_t h = 0; h < homs.size(); ++h)
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        stack.at(h, i * cols + j) = homs[h].at(i, j);
  return Lattice::from_generators(stack);
}

} // namespace

TEST_SUITE("qha") {

TEST_CASE("algebra construction and verify") {
  auto z = ground();
  CHECK(z->rank() == 1);
  CHECK(z->product(0, 0) == SparseVec{{0, Int(1)}});

  auto d = dual_numbers();
  CHECK(d->mult({Int(0), Int(1)}, {Int(0), Int(1)}) ==
        std::vector<Int>{Int(0), Int(0)});
  CHECK(d->right_mult_matrix({Int(0), Int(1)}) == IntegerMatrix{{0, 1}, {0, 0}});
  CHECK(d->left_mult_matrix({Int(0), Int(1)}) == IntegerMatrix{{0, 1}, {0, 0}});

  // unit law violation: 1 * t = u
  CHECK_THROWS_AS(make_algebra({"u", "t"},
                               {{SparseVec{{0, Int(1)}}, SparseVec{{0, Int(1)}}},
                                {SparseVec{{1, Int(1)}}, SparseVec{}}},
                               {Int(1), Int(0)}),
                  std::runtime_error);

  // associativity violation: ab=ba=b, ac=ca=c, bb=c, bc=a, cb=cc=0
  // gives (bb)c = cc = 0 but b(bc) = ba = b.
  CHECK_THROWS_AS(
      make_algebra({"a", "b", "c"},
                   {{SparseVec{{0, Int(1)}}, SparseVec{{1, Int(1)}},
                     SparseVec{{2, Int(1)}}},
                    {SparseVec{{1, Int(1)}}, SparseVec{{2, Int(1)}},
                     SparseVec{{0, Int(1)}}},
                    {SparseVec{{2, Int(1)}}, SparseVec{}, SparseVec{}}},
                   {Int(1), Int(0), Int(0)}),
      std::runtime_error);
}

TEST_CASE("peirce systems") {
  auto t2 = triangular2();
  CHECK(t2->has_peirce());
  CHECK(t2->peirce_size() == 2);
  CHECK(t2->row_block(2) == 0);
  CHECK(t2->col_block(2) == 1);
  CHECK(t2->row_block_members(0) == std::vector<size_t>{0, 2});
  CHECK(t2->row_block_members(1) == std::vector<size_t>{1});

  // wrong homogeneity tags must be rejected
  FinAlgebra bad({"e1", "e2"},
                 {{SparseVec{{0, Int(1)}}, SparseVec{}},
                  {SparseVec{}, SparseVec{{1, Int(1)}}}},
                 {Int(1), Int(1)});
  CHECK_THROWS_AS(bad.set_peirce_system(
                      {{Int(1), Int(0)}, {Int(0), Int(1)}}, {0, 0}, {0, 1}),
                  std::invalid_argument);

  // non-idempotent entries must be rejected
  FinAlgebra bad2({"e", "x"},
                  {{SparseVec{{0, Int(1)}}, SparseVec{{1, Int(1)}}},
                   {SparseVec{{1, Int(1)}}, SparseVec{}}},
                  {Int(1), Int(0)});
  CHECK_THROWS_AS(bad2.set_peirce_system({{Int(0), Int(1)}, {Int(1), Int(-1)}},
                                         {0, 1}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("opposite algebra") {
  auto t2 = triangular2();
  auto op = t2->opposite();
  CHECK(op.product(2, 0) == SparseVec{{2, Int(1)}}); // E12 *op E11 = E11 E12
  CHECK(op.product(0, 2).empty());
  CHECK(op.row_block(2) == 1);
  CHECK(op.col_block(2) == 0);
  op.verify();

  auto d = dual_numbers();
  auto dop = d->opposite();
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      CHECK(dop.product(i, j) == d->product(j, i));
}

TEST_CASE("tensor algebra") {
  auto zz = two_points();
  auto t = tensor_algebra(zz, zz);
  CHECK(t->rank() == 4);
  CHECK(t->has_peirce());
  CHECK(t->peirce_size() == 4);
  CHECK(t->product(1, 1) == SparseVec{{1, Int(1)}}); // (e1|e2)^2 = e1|e2
  CHECK(t->product(1, 2).empty());
  CHECK(t->label(1) == "e1|e2");

  auto d = dual_numbers();
  auto dz = tensor_algebra(d, ground());
  CHECK(dz->rank() == 2);
  CHECK(dz->product(1, 1).empty());
  CHECK(dz->product(0, 1) == SparseVec{{1, Int(1)}});
}

TEST_CASE("modules and verify") {
  auto d = dual_numbers();
  auto reg = regular_module(d);
  CHECK(reg.rank == 2);
  CHECK(reg.action[0] == IntegerMatrix::identity(2));
  CHECK(reg.action[1] == IntegerMatrix{{0, 1}, {0, 0}});

  // broken module law: rho(x)^2 = 1 but x^2 = 0
  AlgModule bad;
  bad.algebra = d;
  bad.rank = 1;
  bad.action = {IntegerMatrix{{1}}, IntegerMatrix{{1}}};
  CHECK_THROWS_AS(bad.verify(), std::runtime_error);

  auto zz = two_points();
  auto rzz = regular_module(zz);
  CHECK(rzz.coord_block == std::vector<int>{0, 1});
  rzz.verify();

  // coordinate tagged with the wrong Peirce block
  AlgModule tagged;
  tagged.algebra = zz;
  tagged.rank = 1;
  tagged.action = {IntegerMatrix{{1}}, IntegerMatrix{{0}}};
  tagged.coord_block = {1};
  CHECK_THROWS_AS(tagged.verify(), std::runtime_error);

  auto s1 = module_of(zz, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S1", {0});
  auto s2 = module_of(zz, 1, {IntegerMatrix{{0}}, IntegerMatrix{{1}}}, "S2", {1});
  auto sum = direct_sum(s1, s2);
  CHECK(sum.rank == 2);
  CHECK(sum.action[0] == IntegerMatrix{{1, 0}, {0, 0}});
  CHECK(sum.coord_block == std::vector<int>{0, 1});
  sum.verify();

  // the regular module of Z x Z is S1 + S2 on the nose
  CHECK(rzz.action == sum.action);
}

TEST_CASE("dual modules") {
  auto t2 = triangular2();
  auto opp = std::make_shared<const FinAlgebra>(t2->opposite());
  auto reg = regular_module(t2);
  auto dd = dual_module(t2, dual_module(opp, reg));
  CHECK(dd.action == reg.action);
  dual_module(opp, reg).verify();

  // left multiplication rows form a left module; as a right module over the
  // opposite it must satisfy the module law.
  std::vector<IntegerMatrix> left;
  for (size_t b = 0; b < 3; ++b) {
    std::vector<Int> e(3, Int(0));
    e[b] = 1;
    left.push_back(t2->left_mult_matrix(e));
  }
  auto lm = left_as_right_over_opposite(opp, left, 3);
  lm.verify();
}

TEST_CASE("hom spaces") {
  auto zz = two_points();
  auto s1 = module_of(zz, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S1", {0});
  auto s2 = module_of(zz, 1, {IntegerMatrix{{0}}, IntegerMatrix{{1}}}, "S2", {1});
  CHECK(hom_space(s1, s2).empty());
  CHECK(hom_space(s2, s1).empty());
  auto es = hom_space(s1, s1);
  REQUIRE(es.size() == 1);
  CHECK(es[0] == IntegerMatrix{{1}});

  // module with a non-diagonal projector action: rho(e1) is a projector onto
  // span{(1,1)} along span{(0,1)}.  The hom lattice is not spanned by
  // block-scaled outer products, so this pins the lattice bookkeeping.
  auto m = module_of(zz, 2,
                     {IntegerMatrix{{1, 1}, {0, 0}}, IntegerMatrix{{0, -1}, {0, 1}}},
                     "M");
  auto hm = hom_space(m, m);
  REQUIRE(hm.size() == 2);
  CHECK(hm[0] == IntegerMatrix::identity(2));
  CHECK(hm[1] == IntegerMatrix{{0, 1}, {0, -1}});
  for (auto &f : hm)
    for (size_t b = 0; b < 2; ++b)
      CHECK(m.action[b].mul(f) == f.mul(m.action[b]));
  CHECK(hom_vec_lattice(hm, 2, 2) == dense_hom_lattice(m, m));
}

TEST_CASE("hom spaces over the triangular algebra") {
  auto t2 = triangular2();
  // projectives: P1 = E11 A with basis {E11, E12}, P2 = E22 A with {E22}
  auto p1 = module_of(t2, 2,
                      {IntegerMatrix{{1, 0}, {0, 0}}, IntegerMatrix{{0, 0}, {0, 1}},
                       IntegerMatrix{{0, 1}, {0, 0}}},
                      "P1", {0, 1});
  auto p2 = module_of(t2, 1,
                      {IntegerMatrix{{0}}, IntegerMatrix{{1}}, IntegerMatrix{{0}}},
                      "P2", {1});
  CHECK(hom_rank(p1, p2) == 0); // E22 A E11 = 0
  CHECK(hom_rank(p2, p1) == 1); // E11 A E22 = Z E12
  CHECK(hom_rank(p1, p1) == 1);
  CHECK(hom_rank(p2, p2) == 1);
  auto f = hom_space(p2, p1);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == IntegerMatrix{{0, 1}});
  CHECK(hom_vec_lattice(hom_space(p1, p1), 2, 2) == dense_hom_lattice(p1, p1));

  auto d = dual_numbers();
  auto reg = regular_module(d);
  auto s = module_of(d, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  CHECK(hom_rank(s, reg) == 1); // only into the socle
  CHECK(hom_rank(reg, s) == 1);
  CHECK(hom_rank(reg, reg) == 2);
  CHECK(hom_vec_lattice(hom_space(s, reg), 1, 2) == dense_hom_lattice(s, reg));
}

TEST_CASE("resolutions terminate for projectives") {
  auto zz = two_points();
  auto s1 = module_of(zz, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S1", {0});
  auto res = resolve(s1, 5);
  CHECK(res.terminated);
  CHECK(res.length() == 1);
  CHECK(res.dims == std::vector<size_t>{1});
  CHECK(res.diff[0] == IntegerMatrix{{1}});
}

TEST_CASE("resolution of the simple over the dual numbers") {
  auto d = dual_numbers();
  auto s = module_of(d, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  auto res = resolve(s, 4);
  CHECK_FALSE(res.terminated);
  CHECK(res.dims == std::vector<size_t>{2, 2, 2, 2, 2});
  CHECK(res.diff[0] == IntegerMatrix{{1}, {0}});
  CHECK(res.diff[1] == IntegerMatrix{{0, 1}, {0, 0}});
  for (size_t t = 1; t + 1 < res.diff.size(); ++t) {
    auto z = res.diff[t + 1].mul(res.diff[t]);
    CHECK(z == IntegerMatrix(z.rows(), z.cols()));
  }
}

TEST_CASE("resolution over the non-split quadratic") {
  auto q = split_quadratic();
  auto s = module_of(q, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  auto res = resolve(s, 6);
  CHECK_FALSE(res.terminated);
  CHECK(res.diff[1] == IntegerMatrix{{0, 1}, {0, 2}});
  CHECK(res.diff[2] == IntegerMatrix{{2, -1}, {0, 0}});
  CHECK(res.diff[3] == IntegerMatrix{{0, 1}, {0, 2}});
  for (size_t t = 1; t + 1 < res.diff.size(); ++t) {
    auto z = res.diff[t + 1].mul(res.diff[t]);
    CHECK(z == IntegerMatrix(z.rows(), z.cols()));
  }
}

TEST_CASE("ext over a semisimple algebra") {
  auto zz = two_points();
  auto s1 = module_of(zz, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S1", {0});
  auto s2 = module_of(zz, 1, {IntegerMatrix{{0}}, IntegerMatrix{{1}}}, "S2", {1});
  auto e11 = ext_space(s1, s1, 3);
  CHECK(e11.terminated);
  CHECK(e11.free_rank == std::vector<long>{1, 0, 0, 0});
  for (auto &t : e11.torsion)
    CHECK(t.empty());
  auto e12 = ext_space(s1, s2, 3);
  CHECK(e12.free_rank == std::vector<long>{0, 0, 0, 0});
  CHECK(e11.positive_degrees_vanish());
  CHECK(e12.positive_degrees_vanish());
}

TEST_CASE("ext over the dual numbers") {
  auto d = dual_numbers();
  auto s = module_of(d, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  auto e = ext_space(s, s, 4);
  CHECK_FALSE(e.terminated);
  CHECK(e.free_rank == std::vector<long>{1, 1, 1, 1, 1});
  CHECK_FALSE(e.any_torsion());
  CHECK_FALSE(e.positive_degrees_vanish());
  CHECK(e.hom_rank() == 1);

  CHECK(ext_dims_mod_p(e, 2) == std::vector<long>{1, 1, 1, 1, 1});

  // Ext into the injective regular module vanishes in positive degrees
  auto reg = regular_module(d);
  auto ei = ext_space(s, reg, 4);
  CHECK(ei.free_rank == std::vector<long>{1, 0, 0, 0, 0});
  CHECK_FALSE(ei.terminated);
  CHECK(ei.positive_degrees_vanish());
}

TEST_CASE("ext torsion over the non-split quadratic") {
  auto q = split_quadratic();
  auto s = module_of(q, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  auto e = ext_space(s, s, 5);
  CHECK(e.free_rank == std::vector<long>{1, 0, 0, 0, 0, 0});
  REQUIRE(e.torsion.size() == 6);
  CHECK(e.torsion[0].empty());
  CHECK(e.torsion[1].empty());
  CHECK(e.torsion[2] == std::vector<Int>{Int(2)});
  CHECK(e.torsion[3].empty());
  CHECK(e.torsion[4] == std::vector<Int>{Int(2)});
  CHECK(e.torsion[5].empty());
  CHECK(e.any_torsion());

  // base change: over F_2 the algebra degenerates to the dual numbers,
  // over F_3 it splits.
  CHECK(ext_dims_mod_p(e, 2) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(ext_dims_mod_p(e, 3) == std::vector<long>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("ext over the triangular algebra") {
  auto t2 = triangular2();
  auto s1 = module_of(t2, 1,
                      {IntegerMatrix{{1}}, IntegerMatrix{{0}}, IntegerMatrix{{0}}},
                      "S1", {0});
  auto s2 = module_of(t2, 1,
                      {IntegerMatrix{{0}}, IntegerMatrix{{1}}, IntegerMatrix{{0}}},
                      "S2", {1});
  auto e = ext_space(s1, s2, 3);
  CHECK(e.terminated);
  CHECK(e.free_rank == std::vector<long>{0, 1, 0, 0});
  auto e21 = ext_space(s2, s1, 3);
  CHECK(e21.terminated);
  CHECK(e21.free_rank == std::vector<long>{0, 0, 0, 0});
  CHECK(ext_space(s1, s1, 3).free_rank == std::vector<long>{1, 0, 0, 0});

  // degree zero always agrees with the hom space
  CHECK(ext_space(s1, s2, 0).hom_rank() == hom_rank(s1, s2));
  auto reg = regular_module(t2);
  CHECK(ext_space(reg, reg, 0).hom_rank() == hom_rank(reg, reg));
}

TEST_CASE("bimodules") {
  auto t2 = triangular2();
  auto rb = regular_bimodule(t2);
  rb.verify();
  CHECK(rb.right_block == std::vector<int>{0, 1, 1});
  CHECK(rb.left_block == std::vector<int>{0, 1, 0});

  // a pair of actions that do not commute is rejected
  auto d = dual_numbers();
  Bimodule bad;
  bad.right_alg = d;
  bad.left_alg = d;
  bad.rank = 2;
  bad.right_action = {IntegerMatrix::identity(2), IntegerMatrix{{0, 1}, {0, 0}}};
  bad.left_action = {IntegerMatrix::identity(2), IntegerMatrix{{0, 0}, {1, 0}}};
  bad.labels = {"m0", "m1"};
  CHECK_THROWS_AS(bad.verify(), std::runtime_error);
}

TEST_CASE("bimodule as module over the tensor algebra") {
  auto d = dual_numbers();
  auto rb = regular_bimodule(d);
  auto t = tensor_algebra(d, std::make_shared<const FinAlgebra>(d->opposite()));
  auto m = bimodule_as_tensor_module(t, rb);
  CHECK(m.rank == 2);
  m.verify();
}

TEST_CASE("balanced tensor products") {
  // N (x)_A A = N for the regular bimodule
  auto d = dual_numbers();
  auto s = module_of(d, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S");
  auto rb = regular_bimodule(d);
  auto bt = balanced_tensor(s, rb);
  CHECK(bt.rank == 1);
  CHECK(bt.torsion.empty());
  auto ts = tensor_over_algebra(s, rb);
  CHECK(ts.rank == 1);
  CHECK(ts.action[0] == IntegerMatrix{{1}});
  CHECK(ts.action[1] == IntegerMatrix{{0}});

  // A (x)_A A = A via a -> a (x) 1; the quotient picks its own basis, so
  // compare through the canonical map instead of matrix equality.
  auto reg = regular_module(d);
  auto tr = tensor_over_algebra(reg, rb);
  CHECK(tr.rank == 2);
  tr.verify();
  auto bt2 = balanced_tensor(reg, rb);
  IntegerMatrix emb(2, 4);
  emb.at(0, 0) = 1; // e (x) e
  emb.at(1, 2) = 1; // x (x) e
  auto phi = emb.mul(bt2.proj);
  CHECK((det(phi) == 1 || det(phi) == -1));
  for (size_t b = 0; b < 2; ++b)
    CHECK(reg.action[b].mul(phi) == phi.mul(tr.action[b]));
}

TEST_CASE("balanced tensor torsion is detected") {
  // right module N over the dual numbers with rho(x) = [[0,2],[0,0]] against
  // the bimodule with trivial left x-action: the relations 2 e_{1t} = 0
  // produce Z/2 summands.
  auto d = dual_numbers();
  auto n = module_of(d, 2, {IntegerMatrix::identity(2), IntegerMatrix{{0, 2}, {0, 0}}},
                     "N");
  Bimodule m;
  m.right_alg = ground();
  m.left_alg = d;
  m.rank = 2;
  m.right_action = {IntegerMatrix::identity(2)};
  m.left_action = {IntegerMatrix::identity(2), IntegerMatrix(2, 2)};
  m.labels = {"m0", "m1"};
  m.verify();

  auto bt = balanced_tensor(n, m);
  CHECK(bt.rank == 2);
  CHECK(bt.torsion == std::vector<Int>{Int(2), Int(2)});
  CHECK_THROWS_WITH_AS(tensor_over_algebra(n, m),
                       doctest::Contains("flat/filtered"), std::runtime_error);
}

TEST_CASE("tensor product module over the tensor algebra") {
  auto zz = two_points();
  auto t = tensor_algebra(zz, zz);
  auto s1 = module_of(zz, 1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}}, "S1", {0});
  auto s2 = module_of(zz, 1, {IntegerMatrix{{0}}, IntegerMatrix{{1}}}, "S2", {1});
  auto tp = tensor_product_module(t, s1, s2);
  CHECK(tp.rank == 1);
  CHECK(tp.coord_block == std::vector<int>{0 * 2 + 1});
  tp.verify();

  auto reg = regular_module(zz);
  auto tr = tensor_product_module(t, reg, reg);
  CHECK(tr.rank == 4);
  tr.verify();
}

TEST_CASE("verdicts combine to the worst") {
  CHECK(combine(Verdict::pass, Verdict::pass) == Verdict::pass);
  CHECK(combine(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(combine(Verdict::inconclusive, Verdict::fail) == Verdict::fail);
  CHECK(combine(Verdict::fail, Verdict::pass) == Verdict::fail);
  CHECK(std::string(verdict_str(Verdict::pass)) == "pass");
  CHECK(std::string(verdict_str(Verdict::inconclusive)) == "inconclusive");
  CHECK(std::string(verdict_str(Verdict::fail)) == "fail");
}

} // TEST_SUITE
