#include <doctest.h>

#include "ztilt/qha.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <vector>

using namespace ztilt::qha;
using ztilt::exactlin::IntegerMatrix;

namespace {

AlgebraPtr ground() {
  return make_algebra({"e"}, {{SparseVec{{0, Int(1)}}}}, {Int(1)});
}

AlgebraPtr dual_numbers() {
  return make_algebra({"e", "x"},
                      {{SparseVec{{0, Int(1)}}, SparseVec{{1, Int(1)}}},
                       {SparseVec{{1, Int(1)}}, SparseVec{}}},
                      {Int(1), Int(0)});
}

// the unique rank 1 module over a rank 1 algebra
AlgModule triv(const AlgebraPtr &a) {
  AlgModule m;
  m.algebra = a;
  m.rank = 1;
  m.action.assign(a->rank(), IntegerMatrix{{1}});
  m.name = "Z";
  m.verify();
  return m;
}

std::vector<FactorHW> triv_factors(const GluingDatum &d) {
  std::vector<FactorHW> f(d.algebras.size());
  for (std::size_t i = 0; i < d.algebras.size(); ++i) {
    f[i].standards = {triv(d.algebras[i])};
    f[i].costandards = {triv(d.algebras[i])};
    f[i].weight_labels = {"*"};
    f[i].leq = {{true}};
  }
  return f;
}

// two copies of Z joined by a rank r bimodule (the r-arrow Kronecker quiver)
GluingDatum kronecker(std::size_t r) {
  GluingDatum d;
  d.algebras = {ground(), ground()};
  Bimodule m;
  m.right_alg = d.algebras[0];
  m.left_alg = d.algebras[1];
  m.rank = r;
  m.right_action = {IntegerMatrix::identity(r)};
  m.left_action = {IntegerMatrix::identity(r)};
  for (std::size_t t = 0; t < r; ++t)
    m.labels.push_back("m" + std::to_string(t));
  m.name = "M";
  d.bimodules.emplace(std::pair<int, int>(0, 1), m);
  return d;
}

// three copies of Z with M12 = M23 = Z^2, M13 = Z^3 and the polynomial
// multiplication map x^s (x) x^t -> x^{s+t}
GluingDatum chain3() {
  GluingDatum d;
  d.algebras = {ground(), ground(), ground()};
  auto bim = [&](int i, int j, std::size_t r) {
    Bimodule m;
    m.right_alg = d.algebras[i];
    m.left_alg = d.algebras[j];
    m.rank = r;
    m.right_action = {IntegerMatrix::identity(r)};
    m.left_action = {IntegerMatrix::identity(r)};
    for (std::size_t t = 0; t < r; ++t)
      m.labels.push_back("t" + std::to_string(t));
    d.bimodules.emplace(std::pair<int, int>(i, j), m);
  };
  bim(0, 1, 2);
  bim(0, 2, 3);
  bim(1, 2, 2);
  d.m_maps.emplace(std::tuple<int, int, int>(0, 1, 2),
                   IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  return d;
}

// glue(opposite datum) must agree with the opposite of glue(datum) after
// reshuffling the layout blocks
void check_opposite_glue(const GluingDatum &d) {
  auto g = glue(d);
  auto go = std::make_shared<const FinAlgebra>(g->opposite());
  auto od = opposite_datum(d);
  od.verify();
  auto god = glue(od);
  REQUIRE(god->rank() == go->rank());
  int m = (int)d.algebras.size();
  auto lo = glued_layout(od);
  auto lg = glued_layout(d);
  std::vector<std::size_t> perm(god->rank());
  for (int l = 0; l < m; ++l)
    for (std::size_t b = 0; b < od.algebras[l]->rank(); ++b)
      perm[lo.alg_offset[l] + b] = lg.alg_offset[m - 1 - l] + b;
  for (auto &kv : od.bimodules) {
    std::pair<int, int> back(m - 1 - kv.first.second, m - 1 - kv.first.first);
    for (std::size_t t = 0; t < kv.second.rank; ++t)
      perm[lo.bim_offset.at(kv.first) + t] = lg.bim_offset.at(back) + t;
  }
  for (std::size_t x = 0; x < god->rank(); ++x) {
    CHECK(god->unit()[x] == go->unit()[perm[x]]);
    for (std::size_t y = 0; y < god->rank(); ++y) {
      std::vector<Int> lhs(go->rank(), Int(0)), rhs(go->rank(), Int(0));
      for (auto &kc : god->product(x, y))
        lhs[perm[kc.first]] = kc.second;
      for (auto &kc : go->product(perm[x], perm[y]))
        rhs[kc.first] = kc.second;
      CHECK(lhs == rhs);
    }
  }
}

} // namespace

TEST_SUITE("qha_hw") {

TEST_CASE("gluing a single component") {
  GluingDatum d;
  d.algebras = {dual_numbers()};
  d.verify();
  auto g = glue(d);
  CHECK(g->rank() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(g->product(i, j) == d.algebras[0]->product(i, j));
  CHECK(g->has_peirce());
  CHECK(g->peirce_size() == 1);
}

TEST_CASE("gluing two points along one arrow") {
  // rank 1 bimodule: the glued algebra is upper triangular 2x2 in disguise
  auto d = kronecker(1);
  d.verify();
  auto g = glue(d);
  REQUIRE(g->rank() == 3);
  // basis order e1, e2, m; nonzero products besides the units:
  CHECK(g->product(1, 2) == SparseVec{{2, Int(1)}}); // e2 m = m
  CHECK(g->product(2, 0) == SparseVec{{2, Int(1)}}); // m e1 = m
  CHECK(g->product(0, 2).empty());
  CHECK(g->product(2, 1).empty());
  CHECK(g->product(2, 2).empty());
  CHECK(g->row_block(2) == 1);
  CHECK(g->col_block(2) == 0);

  auto s1 = functor_F(d, g, 0, triv(d.algebras[0]));
  auto s2 = functor_F(d, g, 1, triv(d.algebras[1]));
  s1.verify();
  s2.verify();
  auto e21 = ext_space(s2, s1, 3);
  CHECK(e21.terminated);
  CHECK(e21.free_rank == std::vector<long>{0, 1, 0, 0});
  auto e12 = ext_space(s1, s2, 3);
  CHECK(e12.terminated);
  CHECK(e12.free_rank == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("kronecker gluing") {
  auto d = kronecker(2);
  d.verify();
  auto g = glue(d);
  REQUIRE(g->rank() == 4);
  CHECK(g->label(2) == "m0");
  CHECK(g->product(1, 2) == SparseVec{{2, Int(1)}});
  CHECK(g->product(1, 3) == SparseVec{{3, Int(1)}});
  CHECK(g->product(2, 0) == SparseVec{{2, Int(1)}});
  CHECK(g->product(0, 2).empty());
  CHECK(g->product(2, 1).empty());
  CHECK(g->product(2, 3).empty());
  CHECK(g->peirce_size() == 2);

  auto s1 = functor_F(d, g, 0, triv(d.algebras[0]));
  auto s2 = functor_F(d, g, 1, triv(d.algebras[1]));
  auto e = ext_space(s2, s1, 3);
  CHECK(e.terminated);
  CHECK(e.free_rank == std::vector<long>{0, 2, 0, 0});
  CHECK(ext_space(s1, s2, 3).free_rank == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("kronecker functors") {
  auto d = kronecker(2);
  auto g = glue(d);
  auto s1 = functor_F(d, g, 0, triv(d.algebras[0]));
  auto s2 = functor_F(d, g, 1, triv(d.algebras[1]));

  auto p2 = functor_G_star(d, g, 1, triv(d.algebras[1]));
  p2.verify();
  CHECK(p2.rank == 3);
  CHECK(ext_space(p2, s1, 2).positive_degrees_vanish());
  CHECK(ext_space(p2, s2, 2).positive_degrees_vanish());
  CHECK(functor_G_star(d, g, 0, triv(d.algebras[0])).rank == 1);

  auto i1 = functor_G_shriek(d, g, 0, triv(d.algebras[0]));
  i1.verify();
  CHECK(i1.rank == 3);
  CHECK(ext_space(s1, i1, 2).positive_degrees_vanish());
  CHECK(ext_space(s2, i1, 2).positive_degrees_vanish());
  CHECK(functor_G_shriek(d, g, 1, triv(d.algebras[1])).rank == 1);

  CHECK(hom_rank(p2, s2) == 1);
  CHECK(hom_rank(p2, s1) == 0);
  CHECK(hom_rank(s1, i1) == 1);
  CHECK(hom_rank(s2, i1) == 0);
}

TEST_CASE("kronecker glued structures") {
  auto d = kronecker(2);
  auto g = glue(d);
  auto gs = glued_hw_structures(d, g, triv_factors(d));
  CHECK(gs.star_verdict() == Verdict::pass);
  REQUIRE(gs.first.standards.size() == 2);

  // first structure: standards are the projectives, costandards the simples
  CHECK(gs.first.overall() == Verdict::pass);
  CHECK(gs.first.standards[0].rank == 1);
  CHECK(gs.first.standards[1].rank == 3);
  CHECK(gs.first.costandards[0].rank == 1);
  CHECK(gs.first.costandards[1].rank == 1);
  CHECK(gs.first.regular_multiplicities == std::vector<long>{1, 1});

  // second structure: standards are the simples, costandards the injectives
  CHECK(gs.second.overall() == Verdict::pass);
  CHECK(gs.second.standards[0].rank == 1);
  CHECK(gs.second.standards[1].rank == 1);
  CHECK(gs.second.costandards[0].rank == 3);
  CHECK(gs.second.costandards[1].rank == 1);
  CHECK(gs.second.regular_multiplicities == std::vector<long>{3, 1});

  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(gs.first.hom_pairing[r][c] == (r == c ? 1 : 0));
      CHECK(gs.second.hom_pairing[r][c] == (r == c ? 1 : 0));
    }
}

TEST_CASE("three term chain") {
  auto d = chain3();
  d.verify();
  auto g = glue(d);
  REQUIRE(g->rank() == 10);

  auto lay = glued_layout(d);
  std::size_t o12 = lay.bim_offset.at({0, 1});
  std::size_t o13 = lay.bim_offset.at({0, 2});
  std::size_t o23 = lay.bim_offset.at({1, 2});
  // y_s x_t = z_{s+t}
  CHECK(g->product(o23 + 0, o12 + 0) == SparseVec{{o13 + 0, Int(1)}});
  CHECK(g->product(o23 + 0, o12 + 1) == SparseVec{{o13 + 1, Int(1)}});
  CHECK(g->product(o23 + 1, o12 + 0) == SparseVec{{o13 + 1, Int(1)}});
  CHECK(g->product(o23 + 1, o12 + 1) == SparseVec{{o13 + 2, Int(1)}});
  CHECK(g->product(o12 + 0, o23 + 0).empty());

  // functor images satisfy the module law and have the projective and
  // injective ranks 1, 3, 6 and 6, 3, 1
  std::vector<AlgModule> simples, projs, injs;
  for (int i = 0; i < 3; ++i) {
    simples.push_back(functor_F(d, g, i, triv(d.algebras[i])));
    projs.push_back(functor_G_star(d, g, i, triv(d.algebras[i])));
    injs.push_back(functor_G_shriek(d, g, i, triv(d.algebras[i])));
    simples[i].verify();
    projs[i].verify();
    injs[i].verify();
  }
  CHECK(projs[0].rank == 1);
  CHECK(projs[1].rank == 3);
  CHECK(projs[2].rank == 6);
  CHECK(injs[0].rank == 6);
  CHECK(injs[1].rank == 3);
  CHECK(injs[2].rank == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(ext_space(projs[i], simples[j], 2).positive_degrees_vanish());
      CHECK(ext_space(simples[j], injs[i], 2).positive_degrees_vanish());
    }

  auto gs = glued_hw_structures(d, g, triv_factors(d));
  CHECK(gs.star_verdict() == Verdict::pass);
  CHECK(gs.first.overall() == Verdict::pass);
  CHECK(gs.second.overall() == Verdict::pass);
  CHECK(gs.first.standards[0].rank == 1);
  CHECK(gs.first.standards[1].rank == 3);
  CHECK(gs.first.standards[2].rank == 6);
  CHECK(gs.second.costandards[0].rank == 6);
  CHECK(gs.second.costandards[1].rank == 3);
  CHECK(gs.second.costandards[2].rank == 1);
  CHECK(gs.first.regular_multiplicities == std::vector<long>{1, 1, 1});
  CHECK(gs.second.regular_multiplicities == std::vector<long>{6, 3, 1});
}

TEST_CASE("opposite datum") {
  check_opposite_glue(kronecker(1));
  check_opposite_glue(kronecker(2));
  check_opposite_glue(chain3());

  // the second structure of the datum has the rank table of the first
  // structure of the opposite datum with components reversed
  for (auto *make : {+[] { return kronecker(2); }, +[] { return chain3(); }}) {
    auto d = make();
    auto g = glue(d);
    auto od = opposite_datum(d);
    auto god = glue(od);
    auto gs = glued_hw_structures(d, g, triv_factors(d));
    auto gso = glued_hw_structures(od, god, triv_factors(od));
    int m = (int)d.algebras.size();
    for (int i = 0; i < m; ++i) {
      CHECK(gs.second.standards[i].rank ==
            gso.first.costandards[m - 1 - i].rank);
      CHECK(gs.second.costandards[i].rank ==
            gso.first.standards[m - 1 - i].rank);
    }
  }
}

TEST_CASE("filtration reports") {
  auto dn = dual_numbers();
  AlgModule s;
  s.algebra = dn;
  s.rank = 1;
  s.action = {IntegerMatrix{{1}}, IntegerMatrix{{0}}};
  s.name = "S";
  auto reg = regular_module(dn);

  // Ext^1(S, S) != 0: not filtered, decided despite the open resolution
  auto fs = standardly_filtered(s, {s}, 4);
  CHECK(fs.verdict == Verdict::fail);

  // a free module is filtered and its resolution stops at once
  auto fr = standardly_filtered(reg, {reg}, 4);
  CHECK(fr.verdict == Verdict::pass);
  CHECK(fr.multiplicities == std::vector<long>{2});

  // vanishing Ext but an open resolution: inconclusive
  auto fi = standardly_filtered(s, {reg}, 4);
  CHECK(fi.verdict == Verdict::inconclusive);
  CHECK(fi.multiplicities == std::vector<long>{1});
}

TEST_CASE("highest weight certification") {
  // upper triangular 2x2 by hand: basis {E11, E22, E12}
  SparseVec z;
  std::vector<std::vector<SparseVec>> table(3, std::vector<SparseVec>(3, z));
  table[0][0] = {{0, Int(1)}};
  table[0][2] = {{2, Int(1)}};
  table[2][1] = {{2, Int(1)}};
  table[1][1] = {{1, Int(1)}};
  FinAlgebra raw({"E11", "E22", "E12"}, table, {Int(1), Int(1), Int(0)});
  raw.set_peirce_system({{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}},
                        {0, 1, 0}, {0, 1, 1});
  raw.verify();
  auto a = std::make_shared<const FinAlgebra>(std::move(raw));

  auto mod = [&](std::size_t rank, std::vector<IntegerMatrix> act,
                 std::vector<int> blocks, const char *name) {
    AlgModule m;
    m.algebra = a;
    m.rank = rank;
    m.action = std::move(act);
    m.coord_block = std::move(blocks);
    m.name = name;
    m.verify();
    return m;
  };
  auto s1 = mod(1, {IntegerMatrix{{1}}, IntegerMatrix{{0}}, IntegerMatrix{{0}}},
                {0}, "S1");
  auto s2 = mod(1, {IntegerMatrix{{0}}, IntegerMatrix{{1}}, IntegerMatrix{{0}}},
                {1}, "S2");
  auto p1 = mod(2,
                {IntegerMatrix{{1, 0}, {0, 0}}, IntegerMatrix{{0, 0}, {0, 1}},
                 IntegerMatrix{{0, 1}, {0, 0}}},
                {0, 1}, "P1");
  auto i2 = mod(2,
                {IntegerMatrix{{1, 0}, {0, 0}}, IntegerMatrix{{0, 0}, {0, 1}},
                 IntegerMatrix{{0, 1}, {0, 0}}},
                {0, 1}, "I2");
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};

  auto hw = verify_highest_weight(a, {s1, s2}, {s1, i2}, {"1", "2"}, leq);
  CHECK(hw.overall() == Verdict::pass);
  CHECK(hw.end_check == Verdict::pass);
  CHECK(hw.directed_check == Verdict::pass);
  CHECK(hw.pairing_check == Verdict::pass);
  CHECK(hw.filtration_check == Verdict::pass);
  CHECK(hw.rank_check == Verdict::pass);
  CHECK(hw.failures.empty());
  CHECK(hw.hom_pairing == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
  CHECK(hw.regular_multiplicities == std::vector<long>{1, 2});

  // projectives as standards break directedness: Hom(P2, P1) != 0
  auto bad = verify_highest_weight(a, {p1, s2}, {s1, s2}, {"1", "2"}, leq);
  CHECK(bad.directed_check == Verdict::fail);
  CHECK(bad.overall() == Verdict::fail);
  CHECK_FALSE(bad.failures.empty());

  // simples as costandards break the Ext pairing and the rank count
  auto bad2 = verify_highest_weight(a, {s1, s2}, {s1, s2}, {"1", "2"}, leq);
  CHECK(bad2.pairing_check == Verdict::fail);
  CHECK(bad2.rank_check == Verdict::fail);
  CHECK(bad2.overall() == Verdict::fail);
}

TEST_CASE("datum verification rejects bad input") {
  // bimodule whose one sided actions do not commute
  auto dn = dual_numbers();
  GluingDatum d;
  d.algebras = {dn, dn};
  Bimodule m;
  m.right_alg = dn;
  m.left_alg = dn;
  m.rank = 2;
  m.right_action = {IntegerMatrix::identity(2), IntegerMatrix{{0, 1}, {0, 0}}};
  m.left_action = {IntegerMatrix::identity(2), IntegerMatrix{{0, 0}, {1, 0}}};
  m.labels = {"m0", "m1"};
  d.bimodules.emplace(std::pair<int, int>(0, 1), m);
  CHECK_THROWS_AS(d.verify(), std::runtime_error);

  GluingDatum d2;
  d2.algebras = {ground(), ground()};
  CHECK_THROWS_AS(d2.bimodule(0, 1), std::out_of_range);
}

} // TEST_SUITE
