#include "doctest.h"
#include "lieschur/error.hpp"
#include "lieschur/linalg.hpp"
#include "lieschur/population.hpp"

using namespace lieschur;

namespace {

Matrix mat(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  std::vector<Rational> e;
  for (long v : values) e.emplace_back(v);
  return Matrix(rows, cols, std::move(e));
}

Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

Matrix random_matrix(SeededGenerator& gen, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      // Sparse-ish entries keep ranks varied.
      m(r, c) = gen.uniform(0, 2) == 0 ? make_rational(gen.uniform(-3, 3), gen.uniform(1, 3)) : Rational(0);
  return m;
}

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("-2/4").get_str() == "-1/2");
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    Rational sum = Rational(1, 6) + Rational(1, 3);
    CHECK(sum.get_num() == 1);
    CHECK(sum.get_den() == 2);
  }

  TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.matrix == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto zero = rref(Matrix(2, 4));
    CHECK(zero.matrix == Matrix(2, 4));
    CHECK(zero.pivots.empty());

    auto dep = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(dep.matrix == mat(2, 2, {1, 2, 0, 0}));
    CHECK(dep.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(5)) == 5);
    CHECK(rank(Matrix(3, 7)) == 0);
    CHECK(rank(mat(3, 2, {1, 2, 2, 4, 3, 6})) == 1);
    CHECK(rank(Matrix(0, 0)) == 0);
  }

  TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix(2, 3)) == Subspace::full(3));
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    Subspace k = kernel_basis(mat(1, 3, {1, 1, 0}));
    CHECK(k.dim() == 2);
    CHECK(contains(k, vec({1, -1, 0})));
    CHECK(contains(k, vec({0, 0, 1})));
    CHECK_FALSE(contains(k, vec({1, 0, 0})));
  }

  TEST_CASE("row_space examples") {
    CHECK(row_space(Matrix::identity(3)) == Subspace::full(3));
    CHECK(row_space(Matrix(2, 3)) == Subspace(3));
    CHECK(row_space(mat(2, 2, {1, 0, 1, 1})) == Subspace::full(2));
  }

  TEST_CASE("subspace sum and intersection") {
    const Subspace e1 = Subspace::span(3, {vec({1, 0, 0})});
    const Subspace e2 = Subspace::span(3, {vec({0, 1, 0})});
    CHECK(subspace_sum(e1, Subspace(3)) == e1);
    CHECK(subspace_sum(e1, e2) == Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})}));
    const Subspace p = Subspace::span(2, {vec({1, 1})});
    const Subspace m = Subspace::span(2, {vec({1, -1})});
    CHECK(subspace_sum(p, m) == Subspace::full(2));

    CHECK(subspace_intersect(e1, Subspace::full(3)) == e1);
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    const Subspace a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    const Subspace b = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(subspace_intersect(a, b) == e2);

    CHECK_THROWS_AS(subspace_sum(e1, p), Error);
    CHECK_THROWS_AS(subspace_intersect(e1, p), Error);
  }

  TEST_CASE("contains") {
    const Subspace e2 = Subspace::span(3, {vec({0, 1, 0})});
    CHECK(contains(e2, vec({0, 0, 0})));
    CHECK_FALSE(contains(e2, vec({1, 0, 0})));
    const Subspace s = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    CHECK(contains(s, vec({1, 1, 0})));
    CHECK(contains(s, vec({2, 2, -5})));
    CHECK_THROWS_AS(contains(s, vec({1, 1})), Error);
  }

  TEST_CASE("inverse") {
    const Matrix m = mat(2, 2, {2, 1, 1, 1});
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), Error);
    CHECK_THROWS_AS(inverse(Matrix(2, 3)), Error);
  }

  TEST_CASE("properties on random matrices") {
    SeededGenerator gen(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const auto rows = static_cast<std::size_t>(gen.uniform(0, 6));
      const auto cols = static_cast<std::size_t>(gen.uniform(1, 6));
      const Matrix m = random_matrix(gen, rows, cols);
      const auto r = rref(m);

      // rank–nullity
      const Subspace ker = kernel_basis(m);
      CHECK(rank(m) + ker.dim() == cols);
      for (const auto& v : ker.basis_vectors()) CHECK(is_zero(m * std::span<const Rational>(v)));

      // idempotence
      CHECK(rref(r.matrix).matrix == r.matrix);

      // canonicality: row operations do not change the subspace value
      Matrix shuffled = m;
      if (rows >= 2) {
        for (std::size_t c = 0; c < cols; ++c) {
          shuffled(0, c) = m(1, c);
          shuffled(1, c) = m(0, c) + 3 * m(1, c);
        }
      }
      INFO("m=", to_string(m.entries()), " shuffled=", to_string(shuffled.entries()), " rows=", rows);
      CHECK(row_space(shuffled) == row_space(m));

      // modular law
      const Matrix other = random_matrix(gen, static_cast<std::size_t>(gen.uniform(0, 5)), cols);
      const Subspace a = row_space(m);
      const Subspace b = row_space(other);
      const Subspace sum = subspace_sum(a, b);
      const Subspace cap = subspace_intersect(a, b);
      CHECK(a.dim() + b.dim() == sum.dim() + cap.dim());
      CHECK(is_subspace_of(cap, a));
      CHECK(is_subspace_of(cap, b));
    }
  }
}
