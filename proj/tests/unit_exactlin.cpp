#include <doctest.h>

#include <random>

#include "ztilt/exactlin.hpp"

using namespace ztilt::exactlin;

namespace {

IntegerMatrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c,
                            int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = d(rng);
  return m;
}

} // namespace

TEST_SUITE_BEGIN("exactlin");

TEST_CASE("hermite form of a 2x2 example") {
  IntegerMatrix a{{2, 4}, {1, 3}};
  auto hr = hnf(a);
  CHECK(hr.rank == 2);
  CHECK(hr.pivot_cols == std::vector<std::size_t>{0, 1});
  IntegerMatrix expect{{1, 1}, {0, 2}};
  CHECK(hr.h == expect);
  CHECK(hr.u.mul(a) == hr.h);
  CHECK(det(hr.u) * det(hr.u) == 1);
}

TEST_CASE("hermite transform is unimodular and canonical") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = 1 + iter % 5, c = 1 + (iter * 7) % 6;
    IntegerMatrix a = random_matrix(rng, r, c);
    auto hr = hnf(a);
    CHECK(hr.u.mul(a) == hr.h);
    Int du = det(hr.u);
    CHECK((du == 1 || du == -1));
    // pivots positive, entries above pivots reduced
    for (std::size_t i = 0; i < hr.rank; ++i) {
      const Int &p = hr.h.at(i, hr.pivot_cols[i]);
      CHECK(p > 0);
      for (std::size_t k = 0; k < i; ++k) {
        const Int &above = hr.h.at(k, hr.pivot_cols[i]);
        CHECK(above >= 0);
        CHECK(above < p);
      }
    }
    // canonical: shuffling generators leaves the lattice basis unchanged
    IntegerMatrix doubled = IntegerMatrix::vstack(a, a);
    CHECK(Lattice::from_generators(a) == Lattice::from_generators(doubled));
  }
}

TEST_CASE("smith form of diag(2,3) and random compatibility") {
  IntegerMatrix a{{2, 0}, {0, 3}};
  auto s = snf(a);
  CHECK(s.invariants == std::vector<Int>{1, 6});
  CHECK(s.left.mul(a).mul(s.right) == s.diag);

  std::mt19937 rng(777);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t r = 1 + iter % 4, c = 1 + (iter * 5) % 5;
    IntegerMatrix m = random_matrix(rng, r, c);
    auto sm = snf(m);
    CHECK(sm.left.mul(m).mul(sm.right) == sm.diag);
    Int dl = det(sm.left), dr = det(sm.right);
    CHECK((dl == 1 || dl == -1));
    CHECK((dr == 1 || dr == -1));
    for (std::size_t i = 0; i + 1 < sm.invariants.size(); ++i) {
      CHECK(sm.invariants[i] > 0);
      CHECK(mpz_divisible_p(sm.invariants[i + 1].get_mpz_t(),
                            sm.invariants[i].get_mpz_t()));
    }
    // off-diagonal zero
    for (std::size_t i = 0; i < sm.diag.rows(); ++i)
      for (std::size_t j = 0; j < sm.diag.cols(); ++j)
        if (i != j)
          CHECK(sm.diag.at(i, j) == 0);
  }
}

TEST_CASE("kernel of [[2,4]]") {
  IntegerMatrix a{{2, 4}};
  Lattice k = kernel_basis(a);
  REQUIRE(k.rank() == 1);
  IntegerMatrix expect{{2, -1}};
  CHECK(k.basis() == expect);
}

TEST_CASE("kernel rows annihilate and kernel is saturated") {
  std::mt19937 rng(999);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t r = 1 + iter % 4, c = 2 + (iter * 3) % 5;
    IntegerMatrix a = random_matrix(rng, r, c);
    Lattice k = kernel_basis(a);
    if (k.rank() > 0) {
      IntegerMatrix prod = a.mul(k.basis().transpose());
      CHECK(prod.is_zero());
    }
    auto hr = hnf(a, false);
    CHECK(k.rank() == c - hr.rank);
    CHECK(saturate(k) == k);
  }
}

TEST_CASE("integral solve distinguishes failure modes") {
  IntegerMatrix a{{1, 1}, {0, 2}};
  auto ok = solve_integral(a, {Int(3), Int(2)});
  REQUIRE(ok.status == SolveStatus::ok);
  CHECK(ok.x == std::vector<Int>{2, 1});

  auto frac = solve_integral(a, {Int(0), Int(1)});
  CHECK(frac.status == SolveStatus::no_integral_solution);

  IntegerMatrix b{{1, 1}, {2, 2}};
  auto none = solve_integral(b, {Int(1), Int(3)});
  CHECK(none.status == SolveStatus::no_rational_solution);
}

TEST_CASE("integral solve round-trip") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t r = 1 + iter % 4, c = 1 + (iter * 3) % 4;
    IntegerMatrix a = random_matrix(rng, r, c);
    IntegerMatrix x = random_matrix(rng, c, 1);
    std::vector<Int> b(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        b[i] += a.at(i, j) * x.at(j, 0);
    auto res = solve_integral(a, b);
    REQUIRE(res.status == SolveStatus::ok);
    for (std::size_t i = 0; i < r; ++i) {
      Int acc(0);
      for (std::size_t j = 0; j < c; ++j)
        acc += a.at(i, j) * res.x[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("lattice quotient frozen examples") {
  Lattice a = Lattice::from_generators(IntegerMatrix{{1, 0}, {0, 2}});
  Lattice b = Lattice::from_generators(IntegerMatrix{{0, 2}});
  auto q = lattice_quotient(a, b);
  CHECK(q.free_rank == 1);
  CHECK(q.torsion.empty());
  REQUIRE(q.lift.rows() == 1);
  // the lift spans A together with B
  Lattice reassembled =
      Lattice::from_generators(IntegerMatrix::vstack(q.lift, b.basis()));
  CHECK(reassembled == a);

  Lattice full = Lattice::full(2);
  Lattice evens = Lattice::from_generators(IntegerMatrix{{2, 0}});
  auto q2 = lattice_quotient(full, evens);
  CHECK(q2.free_rank == 1);
  CHECK(q2.torsion == std::vector<Int>{2});
}

TEST_CASE("lattice quotient torsion matches determinant index") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t n = 2 + iter % 3;
    IntegerMatrix m = random_matrix(rng, n, n);
    Int dm = det(m);
    if (dm == 0)
      continue;
    Lattice full = Lattice::full(n);
    Lattice sub = Lattice::from_generators(m);
    auto q = lattice_quotient(full, sub);
    CHECK(q.free_rank == 0);
    Int prod(1);
    for (const auto &t : q.torsion)
      prod *= t;
    CHECK(prod == abs(dm));
  }
}

TEST_CASE("quotient projection maps lift to unit vectors and kills B") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 3 + iter % 2;
    IntegerMatrix gens = random_matrix(rng, n + 1, n);
    Lattice a = Lattice::from_generators(gens);
    if (a.rank() < 2)
      continue;
    // B spanned by doubled first basis vector stays inside A
    IntegerMatrix bgen = a.basis().row(0).scaled(Int(2));
    Lattice b = Lattice::from_generators(bgen);
    auto q = lattice_quotient(a, b);
    CHECK(q.free_rank == a.rank() - 1);
    // proj composed with coordinates of the lift gives the identity
    auto lift_coords = a.coordinates(q.lift);
    REQUIRE(lift_coords.has_value());
    CHECK(lift_coords->mul(q.proj) ==
          IntegerMatrix::identity(q.free_rank));
    auto b_coords = a.coordinates(b.basis());
    REQUIRE(b_coords.has_value());
    CHECK(b_coords->mul(q.proj).is_zero());
  }
}

TEST_CASE("saturation closes the rational span") {
  Lattice l = Lattice::from_generators(IntegerMatrix{{2, 4}});
  Lattice s = saturate(l);
  CHECK(s.basis() == IntegerMatrix{{1, 2}});

  std::mt19937 rng(555);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t r = 1 + iter % 3, c = 3 + iter % 3;
    IntegerMatrix gens = random_matrix(rng, r, c);
    Lattice base = Lattice::from_generators(gens);
    Lattice doubled = Lattice::from_generators(gens.scaled(Int(3)));
    CHECK(saturate(base) == saturate(doubled));
    CHECK(saturate(saturate(base)) == saturate(base));
    CHECK(saturate(base).rank() == base.rank());
    CHECK(saturate(base).contains(base.basis()));
  }
}

TEST_CASE("degenerate shapes are legal") {
  IntegerMatrix empty_rows(0, 3);
  auto hr = hnf(empty_rows);
  CHECK(hr.rank == 0);
  CHECK(kernel_basis(empty_rows).rank() == 3);
  IntegerMatrix empty_cols(3, 0);
  CHECK(kernel_basis(empty_cols).rank() == 0);
  CHECK(left_kernel(empty_cols).rows() == 3);
  Lattice z = Lattice::zero(4);
  CHECK(lattice_quotient(Lattice::full(4), z).free_rank == 4);
  CHECK(det(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("rank over a prime field") {
  IntegerMatrix a{{2, 4}, {1, 3}};
  CHECK(rank_mod(a, 2) == 1);
  CHECK(rank_mod(a, 3) == 2);
  CHECK(rank_mod(a, 5) == 2);
  std::mt19937 rng(808);
  for (int iter = 0; iter < 20; ++iter) {
    IntegerMatrix m = random_matrix(rng, 4, 4);
    // rank over a prime not dividing det equals rational rank
    Int dm = det(m);
    auto hr = hnf(m, false);
    for (std::uint32_t p : {10007u, 65521u}) {
      if (dm != 0 && mpz_fdiv_ui(dm.get_mpz_t(), p) != 0)
        CHECK(rank_mod(m, p) == 4);
      CHECK(rank_mod(m, p) <= hr.rank);
    }
  }
}

TEST_SUITE_END();
