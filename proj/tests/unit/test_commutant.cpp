#include <random>
#include <thread>

#include "doctest.h"
#include "qpf/commutant.hpp"
#include "qpf/pairs.hpp"
#include "support/fixtures.hpp"

using namespace qpf;
using qpf::testing::dense_generator;
using qpf::testing::matmul;
using qpf::testing::standard_R;

namespace {

const FieldSpec gen = FieldSpec::generic();
const RatFunc q = RatFunc::q();

HeckePair<RatFunc> std_pair(int n) { return standard_pair<RatFunc>(n, gen); }

// Random element of a Hom space with small integer coordinates.
template <class F>
SpMat<F> random_element(const HomSpaceBasis<F>& h, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<F> coords;
  for (Index k = 0; k < h.dim(); ++k) coords.push_back(F(c(rng)));
  return h.combine(coords);
}

template <class F>
bool commutes(const HomSpaceBasis<F>& h, const SpMat<F>& x) {
  const auto rv = braid_rep(h.source(), h.d()), rw = braid_rep(h.target(), h.d());
  for (std::size_t i = 0; i < rv.gens.size(); ++i)
    if (!equal(mul(x, rv.gens[i]), mul(rw.gens[i], x))) return false;
  return true;
}

}  // namespace

TEST_CASE("braid representations") {
  auto v2 = std_pair(2);
  CHECK(braid_rep(v2, 1).gens.empty());
  auto r2 = braid_rep(v2, 2);
  REQUIRE(r2.gens.size() == 1);
  CHECK(equal(r2.gens[0], v2.R()));
  CHECK(check_braid_relations(braid_rep(v2, 3)));
  CHECK(check_braid_relations(braid_rep(std_pair(3), 4)));
  CHECK(check_braid_relations(braid_rep(cable(v2, 2), 3)));
  // cable(V_2, 2) on two strands is T2 T1 T3 T2 on V_2^{⊗4}.
  const Mat<RatFunc> r = standard_R<RatFunc>(2, q);
  Mat<RatFunc> w = dense_generator(r, 2, 4, 1);
  for (int i : {0, 2, 1}) w = matmul(dense_generator(r, 2, 4, i), w);
  CHECK(equal(braid_rep(cable(v2, 2), 2).gens[0], to_sparse(w)));
}

TEST_CASE("hom space dimensions") {
  auto v2 = std_pair(2), v3 = std_pair(3);
  auto c22 = cable(v2, 2);
  CHECK(hom_basis(v2, v3, 1)->dim() == 6);
  CHECK(hom_basis(c22, c22, 1)->dim() == 16);
  // Frozen from the brute-force nullspace oracle at two rational points.
  CHECK(hom_basis(v2, v2, 2)->dim() == 10);
  CHECK(hom_basis(v2, v3, 2)->dim() == 21);
  CHECK(hom_basis(v3, v2, 2)->dim() == 21);
  CHECK(hom_basis(v3, v3, 2)->dim() == 45);
  CHECK(hom_basis(c22, c22, 2)->dim() == 60);
  CHECK(hom_basis(v2, v2, 3)->dim() == 20);
  // Scalars q and q^4 on the two strands admit no intertwiner.
  auto one = cable(std_pair(1), 1), four = cable(std_pair(1), 2);
  CHECK(hom_basis(one, four, 2)->dim() == 0);
}

TEST_CASE("hom basis elements intertwine") {
  auto v2 = std_pair(2), v3 = std_pair(3);
  for (const auto& [a, b, d] : {std::tuple{v2, v3, 2}, std::tuple{v3, v2, 2}, std::tuple{v2, v2, 3}}) {
    auto h = hom_basis(a, b, d);
    for (const auto& x : h->basis()) CHECK(commutes(*h, x));
    // Canonical: every basis vector is 1 at its own pivot, 0 at the others.
    for (Index i = 0; i < h->dim(); ++i)
      for (Index j = 0; j < h->dim(); ++j)
        CHECK(h->flat_basis()[static_cast<std::size_t>(i)].at(h->flat_basis()[static_cast<std::size_t>(j)].lead()) ==
              RatFunc(i == j ? 1 : 0));
  }
  auto h = hom_basis(v2, v2, 2);
  CHECK(h->contains(v2.R()));
  SparseVec<RatFunc> e01;
  e01.e.emplace_back(1, RatFunc(1));
  const SpMat<RatFunc> x = unflatten(e01, 4, 4);
  CHECK_FALSE(h->contains(x));
  CHECK_THROWS_AS(HomElement<RatFunc>::make(h, x), NotInCommutant);
}

TEST_CASE("hom cache is shared and thread safe") {
  clear_hom_cache();
  auto v2 = std_pair(2), v3 = std_pair(3);
  std::vector<std::shared_ptr<const HomSpaceBasis<RatFunc>>> got(8);
  std::vector<std::thread> ts;
  for (std::size_t i = 0; i < got.size(); ++i) ts.emplace_back([&, i] { got[i] = hom_basis(v3, v2, 2); });
  for (auto& t : ts) t.join();
  for (const auto& g : got) CHECK(g->flat_basis() == got[0]->flat_basis());
  CHECK(hom_cache_size() == 1);
  CHECK(hom_basis(v3, v2, 2).get() == hom_basis(v3, v2, 2).get());
}

TEST_CASE("schur products") {
  std::mt19937 rng(11);
  auto v2 = std_pair(2), v3 = std_pair(3);
  auto h23 = hom_basis(v2, v3, 2), h32 = hom_basis(v3, v2, 2), h22 = hom_basis(v2, v2, 2), h33 = hom_basis(v3, v3, 2);
  auto g = HomElement<RatFunc>::make(h23, random_element(*h23, rng));
  auto id3 = HomElement<RatFunc>::identity(v3, 2);
  CHECK(equal(schur_product(id3, g).matrix, g.matrix));
  for (int t = 0; t < 3; ++t) {
    auto a = HomElement<RatFunc>::make(h32, random_element(*h32, rng));
    auto b = HomElement<RatFunc>::make(h33, random_element(*h33, rng));
    auto c = HomElement<RatFunc>::make(h23, random_element(*h23, rng));
    auto left = schur_product(schur_product(a, b), c);
    auto right = schur_product(a, schur_product(b, c));
    CHECK(equal(left.matrix, right.matrix));
    CHECK(left.space.get() == h22.get());
    CHECK(h22->coordinates(left.matrix).has_value());
  }
  CHECK_THROWS_AS(schur_product(g, g), DimensionMismatch);
}

TEST_CASE("a_dim matches the commutant dimension") {
  auto v1 = std_pair(1), v2 = std_pair(2), v3 = std_pair(3);
  auto c22 = cable(v2, 2);
  CHECK(a_dim(v2, v3, 1) == 6);
  CHECK(a_dim(v2, v3, 0) == 1);
  for (int d = 1; d <= 4; ++d) CHECK(a_dim(v1, v1, d) == 1);
  CHECK(a_dim(v2, v2, 2) == 10);
  for (const auto& [a, b] : {std::pair{v2, v2}, std::pair{v2, v3}, std::pair{v3, v2}, std::pair{v3, v3}, std::pair{c22, c22}})
    CHECK(a_dim(a, b, 2) == hom_basis(b, a, 2)->dim());
  CHECK(a_dim(v2, v2, 3) == hom_basis(v2, v2, 3)->dim());
  CHECK(a_dim(v2, v3, 3) == hom_basis(v3, v2, 3)->dim());
  CHECK_THROWS_AS(a_dim(v2, c22, 2), DegreeMismatch);
}

TEST_CASE("e-Hecke algebra dimensions") {
  auto r = ehecke_dim(2, 1, 2, false);
  CHECK(r.dim == 2);
  CHECK(r.point == "5/3");
  CHECK_FALSE(r.exact);
  auto x = ehecke_dim(2, 1, 2, true);
  CHECK(x.dim == 2);
  CHECK(x.probabilistic_dim == 2);
  CHECK(ehecke_dim(2, 2, 4, false).dim == 7);
  auto h22 = ehecke_dim(2, 2, 4, true);
  CHECK(h22.dim == 7);
  CHECK(h22.probabilistic_dim == 7);
  CHECK(ehecke_dim(2, 2, 4, false, 17).dim == 7);
  CHECK(ehecke_dim(3, 1, 3, false).dim == 6);
  CHECK(ehecke_dim(2, 2, 2, false).undercount_warning);
  for (int e = 1; e <= 2; ++e) CHECK(ehecke_dim(2, e, 2 * e, false).dim <= 2 * (2 * e * e + 1));
}

TEST_CASE("generation") {
  auto v1 = std_pair(1), v2 = std_pair(2), v3 = std_pair(3);
  CHECK(generates(v2, v2, 2));
  CHECK(generates(v2, v3, 2));
  CHECK_FALSE(generates(cable(v1, 1), v2, 2));
  CHECK_THROWS_AS(generates(v2, cable(v2, 2), 2), DegreeMismatch);
  // Summands of a generated pair are generated.
  auto c22 = cable(v2, 2);
  auto sym = subquotient(c22, gen_eigenspace(v2.R(), q, 4), Subspace<RatFunc>(4));
  auto ext = subquotient(c22, gen_eigenspace(v2.R(), -q.inverse(), 4), Subspace<RatFunc>(4));
  REQUIRE(generates(c22, c22, 2));
  CHECK(generates(c22, sym, 2));
  CHECK(generates(c22, ext, 2));
  auto s22 = direct_sum<RatFunc>({v2, v2});
  auto first = subquotient(s22, Subspace<RatFunc>::span(4, {SparseVec<RatFunc>::unit(0), SparseVec<RatFunc>::unit(1)}),
                           Subspace<RatFunc>(4));
  REQUIRE(generates(s22, s22, 2));
  CHECK(first.same_data(v2));
  CHECK(generates(s22, first, 2));
  CHECK_FALSE(generates(v2, s22, 2));
}

TEST_CASE("jordan factor test agrees with generation") {
  SUBCASE("q = i") {
    const FieldSpec f = FieldSpec::root_of_unity(4);
    const Cyclotomic i = Cyclotomic::generator(f);
    auto u2 = standard_pair<Cyclotomic>(2, f), u1 = standard_pair<Cyclotomic>(1, f);
    auto jd = pair_jordan(u2);
    REQUIRE(jd.blocks.size() == 1);
    CHECK(jd.blocks[0].eigenvalue == i);
    CHECK(jd.blocks[0].sizes == std::vector<int>{2, 1, 1});
    auto diag = explicit_pair<Cyclotomic>(f, 2, 1, scalar_matrix<Cyclotomic>(4, i), "scalar-i");
    auto s = direct_sum<Cyclotomic>({u2, u2});
    struct Case {
      HeckePair<Cyclotomic> u, v;
      bool expect;
    };
    for (const auto& c : {Case{u2, u2, true}, Case{u2, u1, false}, Case{u1, u2, true}, Case{u2, diag, false},
                          Case{u2, s, true}}) {
      CHECK(jordan_factor_test(c.u, c.v) == c.expect);
      CHECK(generates(c.v, c.u, 2) == c.expect);
    }
  }
  SUBCASE("q = zeta_3") {
    const FieldSpec f = FieldSpec::root_of_unity(3);
    auto u2 = standard_pair<Cyclotomic>(2, f), u1 = standard_pair<Cyclotomic>(1, f);
    struct Case {
      HeckePair<Cyclotomic> u, v;
      bool expect;
    };
    for (const auto& c : {Case{u2, u2, true}, Case{u2, u1, false}, Case{u1, u2, true}}) {
      CHECK(jordan_factor_test(c.u, c.v) == c.expect);
      CHECK(generates(c.v, c.u, 2) == c.expect);
    }
  }
}

TEST_CASE("non-generation witness") {
  auto w = nongeneration_witness<RatFunc>(2, 3, gen);
  CHECK(w.values == std::vector<RatFunc>{q, q.pow(4), q.pow(9)});
  CHECK(w.distinct());
  CHECK(nongeneration_witness<RatFunc>(3, 1, gen).values == std::vector<RatFunc>{q});
  CHECK(nongeneration_witness<RatFunc>(2, 10, gen).distinct());
  const FieldSpec z3 = FieldSpec::root_of_unity(3);
  auto c = nongeneration_witness<Cyclotomic>(2, 3, z3);
  REQUIRE_FALSE(c.distinct());
  CHECK(c.collisions.front() == std::pair{1, 2});
  CHECK(c.values[0] == Cyclotomic::generator(z3));
}
