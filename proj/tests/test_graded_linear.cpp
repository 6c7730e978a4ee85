#include "doctest.h"

#include "vtx/graded_linear/subspace.hpp"

#include <algorithm>
#include <random>

using namespace vtx;

namespace {

ScaledExponent e(int64_t n, int64_t t = 1) { return ScaledExponent(n, t); }

SpacePtr flat_space(std::size_t dim, ScaledExponent degree = ScaledExponent(0)) {
  auto s = std::make_shared<GradedSpace>();
  for (std::size_t i = 0; i < dim; ++i) s->add_basis(degree, "b" + std::to_string(i));
  return s;
}

GradedVector vec(const std::vector<int>& c) {
  GradedVector v;
  for (std::size_t i = 0; i < c.size(); ++i) v.add(i, c[i]);
  return v;
}

// Rank oracle: fraction-free Gaussian elimination on a dense copy.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("graded space bookkeeping") {
  GradedSpace s(2);
  s.add_basis(e(0), "a");
  s.add_basis(e(1, 2), "b");
  s.add_basis(e(1, 2), "c");
  CHECK(s.dim() == 3);
  CHECK(s.dim_at(e(1, 2)) == 2);
  CHECK(s.find("c") == 2);
  CHECK(s.find("zz") == 3);
  CHECK_THROWS(s.add_basis(e(1, 3), "d"));
  CHECK_THROWS(s.add_basis(e(1), "a"));
}

TEST_CASE("span_close") {
  const auto sp = flat_space(3);
  CHECK(span_close(sp, {}).rank() == 0);
  const GradedVector v = vec({1, 2, 0});
  CHECK(span_close(sp, {v, v.scaled(2)}).rank() == 1);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto two = flat_space(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GradedVector> vs;
    std::vector<std::vector<Rational>> dense;
    for (int r = 0; r < 3; ++r) {
      const int a = coef(rng), b = coef(rng);
      vs.push_back(vec({a, b}));
      dense.push_back({a, b});
    }
    const Subspace s = span_close(two, vs);
    CHECK(s.rank() <= 2);
    CHECK(s.rank() == dense_rank(dense));
  }
}

TEST_CASE("echelon bases are canonical") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto sp = std::make_shared<GradedSpace>();
  for (int i = 0; i < 6; ++i) sp->add_basis(e(i / 2), "");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GradedVector> vs;
    for (int r = 0; r < 4; ++r) {
      std::vector<int> c(6);
      for (auto& x : c) x = coef(rng);
      vs.push_back(vec(c));
    }
    const Subspace a = span_close(sp, vs);
    std::shuffle(vs.begin(), vs.end(), rng);
    const Subspace b = span_close(sp, vs);
    CHECK(a == b);
    CHECK(span_close(sp, a.basis()) == a);
  }
}

TEST_CASE("quotient") {
  const auto sp = flat_space(3);
  const Quotient id = quotient(sp, Subspace(sp));
  CHECK(id.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(id.project(GradedVector::basis(i)) == GradedVector::basis(i));

  const Quotient zero = quotient(sp, span_close(sp, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
  CHECK(zero.dim() == 0);

  const GradedVector gen = vec({1, -1, 2});
  const Subspace sub = span_close(sp, {gen});
  const Quotient q = quotient(sp, sub);
  CHECK(q.dim() == 2);
  CHECK(q.project(gen).is_zero());
  CHECK(q.project(gen.scaled(Rational(5, 3))).is_zero());
  CHECK(!q.project(vec({1, 1, 0})).is_zero());
  // lift then project is the identity on the quotient.
  for (std::size_t i = 0; i < q.dim(); ++i)
    CHECK(q.project(q.lift(GradedVector::basis(i))) == GradedVector::basis(i));
}

TEST_CASE("quotient dimensions per degree add up") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto sp = std::make_shared<GradedSpace>(2);
  for (int i = 0; i < 8; ++i) sp->add_basis(e(i / 3, 2), "");
  for (int trial = 0; trial < 20; ++trial) {
    Subspace s(sp);
    for (int r = 0; r < 4; ++r) {
      const int d = r % 3;
      GradedVector v;
      for (std::size_t i : sp->component(e(d, 2))) v.add(i, coef(rng));
      s.insert(v);
    }
    const Quotient q = quotient(sp, s);
    for (const auto& [d, idx] : sp->components()) CHECK(q.dim_at(d) + s.rank_at(d) == idx.size());
    for (const auto& b : s.basis()) CHECK(q.project(b).is_zero());
  }
}

TEST_CASE("intersect") {
  const auto sp = flat_space(3);
  const Subspace a = span_close(sp, {vec({1, 0, 0}), vec({0, 1, 1})});
  CHECK(intersect(a, Subspace(sp)).rank() == 0);
  CHECK(intersect(a, a) == a);

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<GradedVector> pa, pb;
    std::vector<std::vector<Rational>> dense;
    for (int r = 0; r < 2; ++r) {
      pa.push_back(vec({coef(rng), coef(rng), coef(rng)}));
      pb.push_back(vec({coef(rng), coef(rng), coef(rng)}));
    }
    const Subspace sa = span_close(sp, pa), sb = span_close(sp, pb);
    const Subspace both = intersect(sa, sb);
    // Oracle: dim(A cap B) = rank A + rank B - rank(A + B).
    std::vector<std::vector<Rational>> stacked;
    for (const auto& v : pa) stacked.push_back({v.at(0), v.at(1), v.at(2)});
    for (const auto& v : pb) stacked.push_back({v.at(0), v.at(1), v.at(2)});
    CHECK(both.rank() == sa.rank() + sb.rank() - dense_rank(stacked));
    if (sa.rank() == 2 && sb.rank() == 2) CHECK(both.rank() >= 1);
    for (const auto& v : both.basis()) {
      CHECK(sa.contains(v));
      CHECK(sb.contains(v));
    }
  }
}
