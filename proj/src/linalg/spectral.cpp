#include "qpf/linalg/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <type_traits>

#include "qpf/scalar.hpp"

namespace qpf {

namespace {

// Minimal polynomial of seed under m.
template <class F>
FieldPoly<F> local_min_poly(const SpMat<F>& m, const SparseVec<F>& seed) {
  struct Row {
    SparseVec<F> v;
    std::vector<F> combo;
  };
  std::map<Index, Row> rows;
  SparseVec<F> w = seed;
  for (std::size_t k = 0;; ++k) {
    SparseVec<F> r = w;
    std::vector<F> combo(k + 1, F(0));
    combo[k] = F(1);
    while (!r.empty()) {
      auto it = rows.find(r.lead());
      if (it == rows.end()) break;
      const F c = r.e.front().second;
      SparseAccumulator<F> acc;
      acc.add(r);
      acc.add_scaled(it->second.v, -c);
      r = acc.finish();
      for (std::size_t i = 0; i < it->second.combo.size(); ++i) combo[i] -= c * it->second.combo[i];
    }
    if (r.empty()) return FieldPoly<F>(std::move(combo));
    const F inv = r.e.front().second.inverse();
    r = r.scaled(inv);
    for (auto& x : combo) x *= inv;
    const Index lead = r.lead();
    rows.emplace(lead, Row{std::move(r), std::move(combo)});
    w = apply(m, w);
  }
}

// p(m) x by Horner's rule.
template <class F>
SparseVec<F> apply_poly(const SpMat<F>& m, const FieldPoly<F>& p, const SparseVec<F>& x) {
  SparseVec<F> r;
  for (int k = p.degree(); k >= 0; --k) {
    SparseAccumulator<F> acc;
    if (!r.empty()) acc.add(apply(m, r));
    acc.add_scaled(x, p.coeffs()[static_cast<std::size_t>(k)]);
    r = acc.finish();
  }
  return r;
}

template <class F>
SpMat<F> shifted(const SpMat<F>& m, const F& lambda) {
  return sub(m, scalar_matrix<F>(m.rows(), lambda));
}

// rank (m - λ)^k for k = 0, 1, ... up to the first repeat.
template <class F>
std::vector<Index> rank_sequence(const SpMat<F>& m, const F& lambda) {
  const SpMat<F> a = shifted(m, lambda);
  std::vector<Index> r{m.rows()};
  SpMat<F> pw = a;
  for (;;) {
    r.push_back(rank(pw));
    if (r.back() == r[r.size() - 2]) return r;
    pw = mul(pw, a);
  }
}

template <class F>
JordanBlocks<F> blocks_from_ranks(const F& lambda, const std::vector<Index>& r) {
  JordanBlocks<F> jb{lambda, {}};
  const int index = static_cast<int>(r.size()) - 2;
  for (int k = index; k >= 1; --k) {
    const auto i = static_cast<std::size_t>(k);
    const Index count = (r[i - 1] - r[i]) - (r[i] - r[i + 1]);
    for (Index c = 0; c < count; ++c) jb.sizes.push_back(k);
  }
  return jb;
}

// Candidates that may be eigenvalues of m. A rank drop of m - λ forces one
// modulo p at any point where the entries reduce, so the filter is exact in
// the direction that matters. Fields without a reduction keep everything.
namespace modp {

constexpr std::uint64_t P = 2147483629ULL;

std::uint64_t mulm(std::uint64_t a, std::uint64_t b) { return a * b % P; }
std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulm(a, a))
    if (e & 1) r = mulm(r, a);
  return r;
}
std::uint64_t inv(std::uint64_t a) { return powm(a, P - 2); }
std::uint64_t of(const mpz_class& z) { return mpz_fdiv_ui(z.get_mpz_t(), P); }

std::optional<std::uint64_t> reduce(const Rational& x, std::uint64_t) {
  const std::uint64_t d = of(x.value().get_den());
  if (d == 0) return std::nullopt;
  return mulm(of(x.value().get_num()), inv(d));
}

std::optional<std::uint64_t> reduce(const RatFunc& x, std::uint64_t q0) {
  auto ev = [&](const ZPoly& p) {
    std::uint64_t r = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = (mulm(r, q0) + of(*it)) % P;
    return r;
  };
  const std::uint64_t d = ev(x.denominator());
  if (d == 0) return std::nullopt;
  return mulm(ev(x.numerator()), inv(d));
}

Index rank(std::vector<std::vector<std::uint64_t>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Index r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(r)]);
    auto& pr = a[static_cast<std::size_t>(r)];
    const std::uint64_t iv = inv(pr[c]);
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulm(a[i][c], iv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + P - mulm(f, pr[j])) % P;
    }
    ++r;
  }
  return r;
}

template <class F>
std::optional<std::vector<bool>> filter(const SpMat<F>& m, const std::vector<F>& values, std::uint64_t q0) {
  const std::size_t n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<std::uint64_t>> base(n, std::vector<std::uint64_t>(n, 0));
  for (Index k = 0; k < m.outerSize(); ++k)
    for (typename SpMat<F>::InnerIterator it(m, k); it; ++it) {
      auto v = reduce(it.value(), q0);
      if (!v) return std::nullopt;
      base[static_cast<std::size_t>(it.row())][static_cast<std::size_t>(it.col())] = *v;
    }
  std::vector<bool> out;
  for (const F& x : values) {
    auto v = reduce(x, q0);
    if (!v) return std::nullopt;
    auto a = base;
    for (std::size_t i = 0; i < n; ++i) a[i][i] = (a[i][i] + P - *v) % P;
    out.push_back(rank(std::move(a)) < static_cast<Index>(n));
  }
  return out;
}

}  // namespace modp

template <class F>
std::vector<bool> possible_eigenvalues(const SpMat<F>& m, const std::vector<F>& values) {
  if constexpr (std::is_same_v<F, RatFunc> || std::is_same_v<F, Rational>) {
    for (std::uint64_t q0 : {1000003ULL, 7919ULL, 104729ULL})
      if (auto f = modp::filter(m, values, q0)) return *f;
  }
  return std::vector<bool>(values.size(), true);
}

template <class F>
JordanData<F> jordan_from(const SpMat<F>& m, const std::vector<F>& values) {
  const Index n = m.rows();
  JordanData<F> out;
  Index accounted = 0;
  const std::vector<bool> maybe = possible_eigenvalues(m, values);
  std::vector<std::pair<std::size_t, Index>> found;
  Index geometric = 0;
  for (std::size_t i = 0; i < values.size() && geometric < n; ++i) {
    if (!maybe[i]) continue;
    const Index r1 = rank(shifted(m, values[i]));
    if (r1 == n) continue;
    geometric += n - r1;
    found.emplace_back(i, r1);
  }
  for (const auto& [i, r1] : found) {
    const std::vector<Index> r = geometric == n ? std::vector<Index>{n, r1, r1} : rank_sequence(m, values[i]);
    accounted += n - r.back();
    out.blocks.push_back(blocks_from_ranks(values[i], r));
  }
  if (accounted != n)
    throw MinPolyDoesNotSplit("generalized eigenspaces of the candidates have total dimension " +
                              std::to_string(accounted) + ", not " + std::to_string(n));
  return out;
}

template <class F>
std::vector<F> dedupe(const std::vector<F>& xs) {
  std::vector<F> r;
  for (const F& x : xs)
    if (std::find(r.begin(), r.end(), x) == r.end()) r.push_back(x);
  return r;
}

}  // namespace

template <class F>
FieldPoly<F> min_poly(const SpMat<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("min_poly: matrix not square");
  const Index n = m.rows();
  // A vector with small pseudo-random entries almost always has the full
  // minimal polynomial; the basis vectors certify it, falling back to lcm.
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(1, 9);
  SparseVec<F> seed;
  for (Index j = 0; j < n; ++j) seed.e.emplace_back(j, F(coef(rng)));
  FieldPoly<F> p = n ? local_min_poly(m, seed) : FieldPoly<F>::constant(F(1));
  for (Index j = 0; j < n; ++j) {
    const SparseVec<F> e = SparseVec<F>::unit(j);
    if (!apply_poly(m, p, e).empty()) p = FieldPoly<F>::lcm(p, local_min_poly(m, e));
  }
  return p.monic();
}

template <class F>
FieldPoly<F> min_poly(const Mat<F>& m) {
  return min_poly(to_sparse(m));
}

template <class F>
std::string JordanData<F>::to_string() const {
  std::string s;
  for (const auto& b : blocks) {
    if (!s.empty()) s += "; ";
    s += b.eigenvalue.to_string() + ": [";
    for (std::size_t i = 0; i < b.sizes.size(); ++i) s += (i ? "," : "") + std::to_string(b.sizes[i]);
    s += "]";
  }
  return s;
}

template <class F>
JordanData<F> jordan(const SpMat<F>& m, const std::vector<F>& candidates) {
  if (m.rows() != m.cols()) throw DimensionMismatch("jordan: matrix not square");
  return jordan_from(m, dedupe(candidates));
}
template <class F>
JordanData<F> jordan(const Mat<F>& m, const std::vector<F>& candidates) {
  return jordan(to_sparse(m), candidates);
}

template <class F>
Subspace<F> gen_eigenspace(const SpMat<F>& m, const F& lambda, int N) {
  if (m.rows() != m.cols()) throw DimensionMismatch("gen_eigenspace: matrix not square");
  if (N <= 0) N = static_cast<int>(std::max<Index>(m.rows(), 1));
  const SpMat<F> a = shifted(m, lambda);
  SpMat<F> pw = a;
  Subspace<F> ker = nullspace(pw);
  for (int k = 2; k <= N; ++k) {
    pw = mul(pw, a);
    Subspace<F> next = nullspace(pw);
    if (next.dim() == ker.dim()) break;
    ker = std::move(next);
  }
  return ker;
}

template <class F>
Subspace<F> gen_eigenspace(const Mat<F>& m, const F& lambda, int N) {
  return gen_eigenspace(to_sparse(m), lambda, N);
}

template <class F>
std::vector<typename EigenCensus<F>::Entry> signed_power_candidates(const FieldSpec& field, int range) {
  const F q = F::generator(field);
  std::vector<typename EigenCensus<F>::Entry> out;
  for (int r = -range; r <= range; ++r) {
    const F v = q.pow(r);
    for (int sign : {1, -1}) {
      F x = sign > 0 ? v : -v;
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.value == x; });
      if (it == out.end())
        out.push_back({x, 0, {SignedPower{sign, r}}, {}});
      else
        it->labels.push_back(SignedPower{sign, r});
    }
  }
  return out;
}

template <class F>
EigenCensus<F> eigen_census(const SpMat<F>& m, const FieldSpec& field, int range, int max_doublings) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigen_census: matrix not square");
  const Index n = m.rows();
  EigenCensus<F> c;
  for (int attempt = 0; attempt <= max_doublings; ++attempt, range *= 2) {
    c.range = range;
    c.eigenvalues.clear();
    auto cands = signed_power_candidates<F>(field, range);
    std::vector<F> values;
    for (const auto& e : cands) values.push_back(e.value);
    const std::vector<bool> maybe = possible_eigenvalues(m, values);
    // Eigenspaces first: when they fill the space every index is 1 and no
    // powers are needed.
    Index geometric = 0;
    for (std::size_t i = 0; i < cands.size() && geometric < n; ++i) {
      if (!maybe[i]) continue;
      auto& e = cands[i];
      e.ranks = {n, rank(shifted(m, e.value))};
      if (e.ranks[1] == n) continue;
      geometric += n - e.ranks[1];
      c.eigenvalues.push_back(std::move(e));
    }
    Index accounted = 0;
    for (auto& e : c.eigenvalues) {
      if (geometric == n)
        e.ranks.push_back(e.ranks[1]);
      else
        e.ranks = rank_sequence(m, e.value);
      e.multiplicity = static_cast<int>(e.ranks.size()) - 2;
      accounted += e.gen_dim();
    }
    if (accounted == n) {
      c.minpoly = FieldPoly<F>::constant(F(1));
      for (const auto& e : c.eigenvalues)
        for (int k = 0; k < e.multiplicity; ++k) c.minpoly = c.minpoly * FieldPoly<F>::linear(e.value);
      return c;
    }
  }
  throw MinPolyDoesNotSplit("eigenvalues not all of the form ±q^r with |r| <= " + std::to_string(c.range));
}

template <class F>
JordanData<F> jordan_auto(const SpMat<F>& m, const FieldSpec& field, int range) {
  const EigenCensus<F> c = eigen_census(m, field, range);
  JordanData<F> out;
  for (const auto& e : c.eigenvalues) out.blocks.push_back(blocks_from_ranks(e.value, e.ranks));
  return out;
}

#define QPF_INSTANTIATE(F)                                                                           \
  template FieldPoly<F> min_poly<F>(const SpMat<F>&);                                               \
  template FieldPoly<F> min_poly<F>(const Mat<F>&);                                                 \
  template struct JordanData<F>;                                                                    \
  template JordanData<F> jordan<F>(const SpMat<F>&, const std::vector<F>&);                         \
  template JordanData<F> jordan<F>(const Mat<F>&, const std::vector<F>&);                           \
  template Subspace<F> gen_eigenspace<F>(const SpMat<F>&, const F&, int);                           \
  template Subspace<F> gen_eigenspace<F>(const Mat<F>&, const F&, int);                             \
  template struct EigenCensus<F>;                                                                   \
  template std::vector<typename EigenCensus<F>::Entry> signed_power_candidates<F>(const FieldSpec&, int); \
  template EigenCensus<F> eigen_census<F>(const SpMat<F>&, const FieldSpec&, int, int);            \
  template JordanData<F> jordan_auto<F>(const SpMat<F>&, const FieldSpec&, int);
QPF_FOR_EACH_FIELD(QPF_INSTANTIATE)
#undef QPF_INSTANTIATE

}  // namespace qpf
