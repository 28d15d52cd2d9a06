#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "qpf/pairs.hpp"
#include "support/fixtures.hpp"

using namespace qpf;
using qpf::testing::dense_generator;
using qpf::testing::matmul;
using qpf::testing::standard_R;

namespace {

const FieldSpec gen = FieldSpec::generic();
const RatFunc q = RatFunc::q();

template <class F>
bool is_permutation(const SpMat<F>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    SparseVec<F> c = column(m, j);
    if (c.nnz() != 1 || !(c.e[0].second == F(1))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("block swap words") {
  CHECK(block_swap_word(1, 1) == std::vector<int>{0});
  CHECK(block_swap_word(2, 1) == std::vector<int>{1, 0});
  CHECK(block_swap_word(1, 2) == std::vector<int>{0, 1});
  CHECK(block_swap_word(2, 2) == std::vector<int>{1, 0, 2, 1});
  CHECK(block_swap_word(3, 2).size() == 6);
}

TEST_CASE("standard pair matches the defining cases") {
  auto p1 = standard_pair<RatFunc>(1, gen);
  CHECK(p1.R_dense() == (Mat<RatFunc>(1, 1) << q).finished());
  for (int n = 1; n <= 4; ++n) {
    auto p = standard_pair<RatFunc>(n, gen);
    CHECK(p.dim() == n);
    CHECK(p.degree_e() == 1);
    CHECK(p.R_dense() == standard_R<RatFunc>(n, q));
  }
  auto p2 = standard_pair<RatFunc>(2, gen);
  // R(v1⊗v2) = v2⊗v1, R(v2⊗v1) = (q − q^{-1}) v2⊗v1 + v1⊗v2.
  CHECK(column(p2.R(), 1) == SparseVec<RatFunc>::unit(2));
  SparseVec<RatFunc> c2;
  c2.e = {{1, RatFunc(1)}, {2, q - q.inverse()}};
  CHECK(column(p2.R(), 2) == c2);
  auto flip = standard_pair<Rational>(2, FieldSpec::numeric(1));
  CHECK(is_permutation(flip.R()));
  CHECK(column(flip.R(), 1) == SparseVec<Rational>::unit(2));
}

TEST_CASE("Yang-Baxter and Hecke relations") {
  for (int n = 1; n <= 4; ++n) {
    auto p = standard_pair<RatFunc>(n, gen);
    CHECK(is_zero(check_ybe(p)));
    CHECK(check_hecke(p));
  }
  CHECK(is_zero(check_ybe(cable(standard_pair<RatFunc>(2, gen), 2))));
  CHECK(is_zero(check_ybe(cable(standard_pair<RatFunc>(3, gen), 2))));
  CHECK(is_zero(check_ybe(cable(standard_pair<RatFunc>(2, gen), 3))));
  CHECK_FALSE(check_hecke(cable(standard_pair<RatFunc>(2, gen), 2)));
  // A matrix that is not a solution.
  SpMat<RatFunc> bad = scalar_matrix<RatFunc>(4, q);
  bad.coeffRef(1, 0) = RatFunc(1);
  typename HeckePair<RatFunc>::Data d;
  d.field = gen;
  d.dim = 2;
  d.R = bad;
  CHECK_FALSE(is_zero(check_ybe(HeckePair<RatFunc>(d))));
}

TEST_CASE("cabling") {
  auto v2 = standard_pair<RatFunc>(2, gen);
  CHECK(cable(v2, 1).same_data(v2));
  auto v1 = standard_pair<RatFunc>(1, gen);
  for (int e = 1; e <= 4; ++e) {
    auto c = cable(v1, e);
    CHECK(c.dim() == 1);
    CHECK(c.degree_e() == e);
    CHECK(c.R_dense()(0, 0) == q.pow(e * e));
  }
  // R of V2^{⊗2} is T2 T1 T3 T2 on four strands, built here from Kronecker products.
  const Mat<RatFunc> r2 = standard_R<RatFunc>(2, q);
  Mat<RatFunc> t1 = dense_generator(r2, 2, 4, 0), t2 = dense_generator(r2, 2, 4, 1), t3 = dense_generator(r2, 2, 4, 2);
  const Mat<RatFunc> expect = matmul(matmul(t2, t1), matmul(t3, t2));
  auto c22 = cable(v2, 2);
  CHECK(c22.dim() == 4);
  CHECK(c22.degree_e() == 2);
  CHECK(c22.R_dense() == expect);
  SUBCASE("cabling is associative") {
    CHECK(cable(cable(v2, 2), 2).same_data(cable(v2, 4)));
    CHECK(equal(cable(cable(v1, 2), 3).R(), cable(v1, 6).R()));
    CHECK(equal(cable(cable(v2, 3), 1).R(), cable(v2, 3).R()));
  }
  SUBCASE("at q = 1 the cabled matrix is the block swap") {
    auto c = cable(standard_pair<Rational>(2, FieldSpec::numeric(1)), 2);
    REQUIRE(is_permutation(c.R()));
    for (Index x = 0; x < 4; ++x)
      for (Index y = 0; y < 4; ++y) CHECK(column(c.R(), x * 4 + y) == SparseVec<Rational>::unit(y * 4 + x));
  }
}

TEST_CASE("direct sums") {
  auto v2 = standard_pair<RatFunc>(2, gen);
  CHECK(direct_sum<RatFunc>({v2}).same_data(v2));
  for (int e = 1; e <= 3; ++e) {
    auto c = cable(standard_pair<RatFunc>(1, gen), e);
    auto s = direct_sum<RatFunc>({c, c});
    REQUIRE(s.dim() == 2);
    CHECK(s.R_dense()(0, 0) == q.pow(e * e));
    CHECK(s.R_dense()(3, 3) == q.pow(e * e));
    // Off-diagonal blocks swap the summands.
    CHECK(column(s.R(), 1) == SparseVec<RatFunc>::unit(2).scaled(q.pow(e * e)));
    CHECK(is_zero(check_ybe(s)));
  }
  auto s22 = direct_sum<RatFunc>({v2, v2});
  CHECK(s22.dim() == 4);
  CHECK(is_zero(check_ybe(s22)));
  // R_V ⊗ flip on the multiplicity: eigenvalues ±q, ±q^{-1}, so not Hecke.
  CHECK_FALSE(check_hecke(s22));
  {
    auto mp = min_poly(s22.R());
    CHECK(mp.degree() == 4);
    for (const auto& r : {q, -q, q.inverse(), -q.inverse()}) CHECK(mp.root_multiplicity(r) == 1);
  }
  CHECK_THROWS_AS(direct_sum<RatFunc>({v2, cable(v2, 2)}), DegreeMismatch);
  CHECK_THROWS_AS(direct_sum<RatFunc>({v2, standard_pair<RatFunc>(3, gen)}), IncompatibleAmbient);
  // Summands that are subquotients of one ambient.
  auto c22 = cable(v2, 2);
  auto ps = subquotient(c22, gen_eigenspace(standard_pair<RatFunc>(2, gen).R(), q, 4), Subspace<RatFunc>(4));
  auto pe = subquotient(c22, gen_eigenspace(standard_pair<RatFunc>(2, gen).R(), -q.inverse(), 4), Subspace<RatFunc>(4));
  auto both = direct_sum<RatFunc>({ps, pe});
  CHECK(both.dim() == 4);
  CHECK(is_zero(check_ybe(both)));
}

TEST_CASE("duals") {
  auto v2 = standard_pair<RatFunc>(2, gen);
  auto d = dual_pair(v2);
  CHECK(equal(d.R(), v2.R()));
  CHECK(d.provenance().to_string() == "dual(std(2))");
  CHECK(dual_pair(d).same_data(v2));
  std::mt19937 rng(5);
  std::vector<HeckePair<RatFunc>> pool{v2, standard_pair<RatFunc>(3, gen), cable(v2, 2),
                                       direct_sum<RatFunc>({v2, v2})};
  for (int i = 0; i < 8; ++i) {
    const auto& p = pool[rng() % pool.size()];
    CHECK(dual_pair(p).dim() == p.dim());
    CHECK(dual_pair(p).degree_e() == p.degree_e());
  }
}

TEST_CASE("subquotients") {
  auto v2 = standard_pair<RatFunc>(2, gen);
  auto c22 = cable(v2, 2);
  CHECK(subquotient(c22, Subspace<RatFunc>::full(4), Subspace<RatFunc>(4)).same_data(c22));

  auto sym = gen_eigenspace(v2.R(), q, 4);
  auto p = subquotient(c22, sym, Subspace<RatFunc>(4));
  CHECK(p.dim() == 3);
  CHECK(p.R().rows() == 9);
  CHECK(is_zero(check_ybe(p)));

  auto ext = gen_eigenspace(v2.R(), -q.inverse(), 4);
  auto quo = subquotient(c22, Subspace<RatFunc>::full(4), ext);
  CHECK(quo.dim() == 3);
  CHECK(is_zero(check_ybe(quo)));
  // At generic q the symmetric sub and quotient carry the same eigenvalue data.
  std::vector<RatFunc> cands;
  for (int r = -4; r <= 4; ++r) {
    cands.push_back(q.pow(r));
    cands.push_back(-q.pow(r));
  }
  CHECK(jordan(p.R(), cands) == jordan(quo.R(), cands));

  auto line = Subspace<RatFunc>::span(4, {SparseVec<RatFunc>::unit(1)});
  CHECK_THROWS_AS(subquotient(c22, line, Subspace<RatFunc>(4)), NotInvariant);
  CHECK_THROWS_AS(subquotient(c22, line, Subspace<RatFunc>::full(4)), InvalidPair);
}

TEST_CASE("q = 1 specialization gives permutation matrices") {
  const FieldSpec one = FieldSpec::numeric(1);
  auto v2 = standard_pair<RatFunc>(2, gen);
  for (const auto& p : {v2, standard_pair<RatFunc>(3, gen), cable(v2, 2), direct_sum<RatFunc>({v2, v2}),
                        dual_pair(cable(standard_pair<RatFunc>(1, gen), 3))})
    CHECK(is_permutation(specialize_pair<Rational>(p, one).R()));
  auto c = specialize_pair<Cyclotomic>(v2, FieldSpec::root_of_unity(4));
  CHECK(c.R_dense() == standard_R<Cyclotomic>(2, Cyclotomic::zeta(4)));
}

TEST_CASE("explicit pairs are validated") {
  auto v2 = standard_pair<RatFunc>(2, gen);
  CHECK(explicit_pair<RatFunc>(gen, 2, 1, v2.R()).same_data(v2));
  CHECK_THROWS_AS(explicit_pair<RatFunc>(gen, 2, 1, SpMat<RatFunc>(4, 4)), InvalidPair);
  CHECK_THROWS_AS(explicit_pair<RatFunc>(gen, 3, 1, v2.R()), InvalidPair);
  SpMat<RatFunc> bad = scalar_matrix<RatFunc>(4, q);
  bad.coeffRef(1, 0) = RatFunc(1);
  CHECK_THROWS_AS(explicit_pair<RatFunc>(gen, 2, 1, bad), InvalidPair);
}

TEST_CASE("descriptors and JSON") {
  auto p = parse_pair<RatFunc>("cable( std(2) , 2)", gen);
  CHECK(p.same_data(cable(standard_pair<RatFunc>(2, gen), 2)));
  CHECK(p.provenance().to_string() == "cable(std(2),2)");
  CHECK(parse_pair<RatFunc>("dsum(std(2),std(2))", gen).dim() == 4);
  CHECK(parse_pair<RatFunc>("dual(std(3))", gen).dim() == 3);
  CHECK(parse_pair<RatFunc>("unit", gen).degree_e() == 0);

  auto err = [](const char* text) -> std::pair<std::size_t, std::string> {
    try {
      parse_pair<RatFunc>(text, FieldSpec::generic());
    } catch (const ParseError& e) {
      return {e.position, e.token};
    }
    return {999, ""};
  };
  CHECK(err("cable(std(2),x)") == std::pair<std::size_t, std::string>{13, "x"});
  CHECK(err("foo(1)") == std::pair<std::size_t, std::string>{0, "foo(1"});
  CHECK(err("std(2) extra").first == 7);
  CHECK(err("std(0)").first == 4);
  CHECK(err("dsum(std(2),").first == 12);

  auto c = cable(standard_pair<RatFunc>(2, gen), 2);
  nlohmann::json j = pair_to_json(c);
  CHECK(j["dim"] == 4);
  CHECK(j["R"].size() == 16);
  CHECK(pair_from_json<RatFunc>(j, gen).same_data(c));
  CHECK_THROWS_AS(pair_from_json<RatFunc>(j, FieldSpec::root_of_unity(3)), FieldMismatch);

  const std::string path = "test_pairs_tmp.json";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  CHECK(parse_pair<RatFunc>("@" + path, gen).same_data(c));
  std::remove(path.c_str());
  CHECK(err("@no_such_file.json").first == 1);

  auto z = parse_pair<Cyclotomic>("std(2)", FieldSpec::root_of_unity(3));
  CHECK(pair_from_json<Cyclotomic>(pair_to_json(z), FieldSpec::root_of_unity(3)).same_data(z));
  CHECK(parse_field_spec("generic") == FieldSpec::generic());
  CHECK(parse_field_spec("root-of-unity(4)") == FieldSpec::root_of_unity(4));
  CHECK(parse_field_spec("q=5/3") == FieldSpec::numeric(mpq_class(5, 3)));
  CHECK_THROWS_AS(parse_field_spec("bogus"), ParseError);
}
