#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"

using namespace qpf;
using qpf::testing::matmul;
using qpf::testing::oracle_rank;
using qpf::testing::random_rational_matrix;
using qpf::testing::standard_R;
using qpf::testing::to_mpq;

namespace {

const RatFunc q = RatFunc::q();

template <class F>
Mat<F> eye(Index n) {
  Mat<F> m = Mat<F>::Constant(n, n, F(0));
  for (Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
Mat<F> jordan_block(Index n, const F& lambda) {
  Mat<F> m = eye<F>(n) * lambda;
  for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = F(1);
  return m;
}

template <class F>
Mat<F> block_diag(const std::vector<Mat<F>>& parts) {
  Index n = 0;
  for (const auto& p : parts) n += p.rows();
  Mat<F> m = Mat<F>::Constant(n, n, F(0));
  Index off = 0;
  for (const auto& p : parts) {
    m.block(off, off, p.rows(), p.cols()) = p;
    off += p.rows();
  }
  return m;
}

template <class F>
Mat<F> poly_at(const FieldPoly<F>& p, const Mat<F>& m) {
  Mat<F> acc = Mat<F>::Constant(m.rows(), m.cols(), F(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = matmul(acc, m);
    for (Index i = 0; i < m.rows(); ++i) acc(i, i) += p.coeffs()[static_cast<std::size_t>(k)];
  }
  return acc;
}

template <class F>
bool all_zero(const Mat<F>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("nullspace examples") {
  CHECK(nullspace(eye<RatFunc>(3)).dim() == 0);
  Mat<RatFunc> z = Mat<RatFunc>::Constant(2, 2, RatFunc(0));
  CHECK(nullspace(z).dim() == 2);
  Mat<RatFunc> m(2, 2);
  m << RatFunc(1), q, q, q * q;
  Subspace<RatFunc> ns = nullspace(m);
  REQUIRE(ns.dim() == 1);
  SparseVec<RatFunc> v;
  v.e = {{0, q}, {1, RatFunc(-1)}};
  CHECK(ns.contains(v));
  CHECK(rank(m) == 1);
}

TEST_CASE("rank-nullity and solve on random matrices") {
  std::mt19937 rng(3);
  for (int it = 0; it < 25; ++it) {
    Index r = 1 + it % 6, c = 1 + (it * 7) % 8;
    Mat<Rational> m = random_rational_matrix(rng, r, c, 50);
    Index rk = rank(m);
    CHECK(rk == oracle_rank(to_mpq(m)));
    const Subspace<Rational> ker = nullspace(m);
    CHECK(rk + ker.dim() == c);
    if (ker.dim() > 0) CHECK(matmul(m, ker.basis()) == Mat<Rational>::Constant(r, ker.dim(), Rational(0)));
    Mat<Rational> x0 = random_rational_matrix(rng, c, 2);
    Mat<Rational> b = matmul(m, x0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(matmul(m, *x) == b);
    CHECK(column_space(m).dim() == rk);
  }
  Mat<Rational> m(2, 1);
  m << Rational(0), Rational(0);
  Mat<Rational> b(2, 1);
  b << Rational(1), Rational(0);
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("subspace lattice") {
  std::mt19937 rng(9);
  Subspace<Rational> e1 = Subspace<Rational>::span(3, {SparseVec<Rational>::unit(0)});
  Subspace<Rational> e2 = Subspace<Rational>::span(3, {SparseVec<Rational>::unit(1)});
  CHECK(subspace_intersect(e1, e1) == e1);
  CHECK(subspace_intersect(e1, e2).dim() == 0);
  CHECK(subspace_sum(e1, e2).dim() == 2);
  CHECK_THROWS_AS(subspace_sum(e1, Subspace<Rational>(4)), DimensionMismatch);
  for (int it = 0; it < 30; ++it) {
    const Index n = 6;
    Mat<Rational> a = random_rational_matrix(rng, n, 1 + it % 4, 40);
    Mat<Rational> b = random_rational_matrix(rng, n, 1 + (it / 4) % 4, 40);
    Subspace<Rational> A = Subspace<Rational>::from_columns(a), B = Subspace<Rational>::from_columns(b);
    Subspace<Rational> S = subspace_sum(A, B), I = subspace_intersect(A, B);
    CHECK(A.dim() + B.dim() == S.dim() + I.dim());
    Mat<Rational> stacked(n, a.cols() + b.cols());
    stacked << a, b;
    CHECK(S.dim() == oracle_rank(to_mpq(stacked)));
    CHECK(A.contains(I));
    CHECK(B.contains(I));
    CHECK(S.contains(A));
    // Canonical form does not depend on the spanning set.
    CHECK(Subspace<Rational>::from_columns(a) == Subspace<Rational>::span(n, A.basis_vectors()));
  }
}

TEST_CASE("min_poly examples") {
  auto id = min_poly(eye<RatFunc>(3));
  CHECK(id == FieldPoly<RatFunc>::linear(RatFunc(1)));
  Mat<RatFunc> n2 = jordan_block<RatFunc>(2, RatFunc(0));
  CHECK(min_poly(n2) == FieldPoly<RatFunc>(std::vector<RatFunc>{RatFunc(0), RatFunc(0), RatFunc(1)}));
  auto p = min_poly(standard_R<RatFunc>(2, q));
  CHECK(p == FieldPoly<RatFunc>::linear(q) * FieldPoly<RatFunc>::linear(-q.inverse()));
}

TEST_CASE("min_poly annihilates and is minimal on random matrices") {
  std::mt19937 rng(21);
  for (int it = 0; it < 15; ++it) {
    const Index n = 2 + it % 5;
    Mat<Rational> m = random_rational_matrix(rng, n, n, 35);
    if (it % 3 == 0) m = block_diag<Rational>({m.topLeftCorner(1, 1), m.topLeftCorner(1, 1), m});
    auto p = min_poly(m);
    CHECK(all_zero(poly_at(p, m)));
    // Minimality: I, M, ..., M^{deg-1} are independent.
    std::vector<std::vector<mpq_class>> rows;
    Mat<Rational> pw = eye<Rational>(m.rows());
    for (int k = 0; k < p.degree(); ++k) {
      std::vector<mpq_class> flat;
      for (Index i = 0; i < pw.rows(); ++i)
        for (Index j = 0; j < pw.cols(); ++j) flat.push_back(pw(i, j).value());
      rows.push_back(flat);
      pw = matmul(pw, m);
    }
    CHECK(oracle_rank(rows) == p.degree());
  }
}

TEST_CASE("generalized eigenspaces of the standard R-matrix") {
  Mat<RatFunc> r2 = standard_R<RatFunc>(2, q);
  CHECK(gen_eigenspace(r2, q, 4).dim() == 3);
  CHECK(gen_eigenspace(r2, -q.inverse(), 4).dim() == 1);
  const FieldSpec fi = FieldSpec::root_of_unity(4);
  const Cyclotomic i = Cyclotomic::zeta(4);
  Mat<Cyclotomic> r2i = standard_R<Cyclotomic>(2, i);
  CHECK(gen_eigenspace(r2i, i, 4).dim() == 4);
  CHECK(gen_eigenspace(r2i, i, 1).dim() == 3);
  (void)fi;
}

TEST_CASE("jordan examples") {
  auto ji = jordan(eye<RatFunc>(3), {RatFunc(1)});
  REQUIRE(ji.blocks.size() == 1);
  CHECK(ji.blocks[0].sizes == std::vector<int>{1, 1, 1});
  Mat<RatFunc> r2 = standard_R<RatFunc>(2, q);
  auto jr = jordan(r2, {q, -q.inverse(), RatFunc(1)});
  REQUIRE(jr.blocks.size() == 2);
  CHECK(jr.find(q)->sizes == std::vector<int>{1, 1, 1});
  CHECK(jr.find(-q.inverse())->sizes == std::vector<int>{1});
  CHECK_THROWS_AS(jordan(r2, {q}), MinPolyDoesNotSplit);

  const Cyclotomic i = Cyclotomic::zeta(4);
  auto j4 = jordan(standard_R<Cyclotomic>(2, i), {i, -i.inverse()});
  REQUIRE(j4.blocks.size() == 1);
  CHECK(j4.blocks[0].eigenvalue == i);
  CHECK(j4.blocks[0].sizes == std::vector<int>{2, 1, 1});
}

TEST_CASE("jordan data is a similarity invariant") {
  std::mt19937 rng(44);
  Mat<Rational> j = block_diag<Rational>({jordan_block<Rational>(3, Rational(2)), jordan_block<Rational>(1, Rational(2)),
                                          jordan_block<Rational>(2, Rational(-1)), jordan_block<Rational>(2, Rational(-1))});
  const std::vector<Rational> cands{Rational(2), Rational(-1), Rational(5)};
  auto ref = jordan(j, cands);
  CHECK(ref.find(Rational(2))->sizes == std::vector<int>{3, 1});
  CHECK(ref.find(Rational(-1))->sizes == std::vector<int>{2, 2});
  for (int it = 0; it < 5; ++it) {
    Mat<Rational> p;
    do {
      p = random_rational_matrix(rng, 8, 8, 70);
    } while (rank(p) < 8);
    Mat<Rational> inv = *solve(p, eye<Rational>(8));
    CHECK(jordan(matmul(matmul(p, j), inv), cands) == ref);
  }
}

TEST_CASE("generalized eigenspaces are invariant") {
  std::mt19937 rng(8);
  Mat<Rational> j = block_diag<Rational>({jordan_block<Rational>(2, Rational(3)), jordan_block<Rational>(2, Rational(1))});
  Mat<Rational> p;
  do {
    p = random_rational_matrix(rng, 4, 4, 80);
  } while (rank(p) < 4);
  Mat<Rational> m = matmul(matmul(p, j), *solve(p, eye<Rational>(4)));
  Subspace<Rational> g = gen_eigenspace(m, Rational(3));
  CHECK(g.dim() == 2);
  SpMat<Rational> ms = to_sparse(m);
  for (const auto& v : g.basis_vectors()) CHECK(g.contains(apply(ms, v)));
}

TEST_CASE("algebra closure") {
  CHECK(algebra_closure(std::vector<Mat<RatFunc>>{eye<RatFunc>(3)}).first == 1);
  CHECK(algebra_closure(std::vector<Mat<RatFunc>>{jordan_block<RatFunc>(2, RatFunc(0))}).first == 2);
  CHECK(algebra_closure(std::vector<Mat<RatFunc>>{standard_R<RatFunc>(2, q)}).first == 2);
  CHECK(algebra_closure(std::vector<Mat<RatFunc>>{}, 3).first == 1);
  std::mt19937 rng(12);
  Mat<Rational> a = random_rational_matrix(rng, 4, 4, 30), b = random_rational_matrix(rng, 4, 4, 30);
  auto ab = algebra_closure(std::vector<Mat<Rational>>{a, b});
  auto ba = algebra_closure(std::vector<Mat<Rational>>{b, a});
  CHECK(ab.first == ba.first);
  CHECK(ab.second == ba.second);
}

TEST_CASE("eigen census classifies signed powers") {
  SpMat<RatFunc> r2 = to_sparse(standard_R<RatFunc>(2, q));
  auto c = eigen_census(r2, FieldSpec::generic(), 3);
  REQUIRE(c.eigenvalues.size() == 2);
  for (const auto& e : c.eigenvalues) {
    CHECK(e.multiplicity == 1);
    CHECK(e.positive() != e.negative());
  }
  const FieldSpec fi = FieldSpec::root_of_unity(4);
  auto ci = eigen_census(to_sparse(standard_R<Cyclotomic>(2, Cyclotomic::zeta(4))), fi, 3);
  REQUIRE(ci.eigenvalues.size() == 1);
  CHECK(ci.eigenvalues[0].positive());
  CHECK(ci.eigenvalues[0].negative());
  Mat<RatFunc> odd = eye<RatFunc>(2) * (RatFunc(2) * q);
  CHECK_THROWS_AS(eigen_census(to_sparse(odd), FieldSpec::generic(), 2, 1), MinPolyDoesNotSplit);
}
