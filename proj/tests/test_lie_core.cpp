#include "doctest.h"
#include "lieschur/catalog.hpp"
#include "lieschur/error.hpp"
#include "lieschur/lie_algebra.hpp"
#include "lieschur/population.hpp"

using namespace lieschur;

namespace {

Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

LieAlgebra h1() { return LieAlgebra::build(3, {{0, 1, vec({0, 0, 1})}}); }

}  // namespace

TEST_SUITE("lie_core") {
  TEST_CASE("build accepts valid tables") {
    CHECK(h1() == heisenberg(1).algebra);
    const LieAlgebra a2 = LieAlgebra::build(2, {});
    CHECK(a2.is_abelian());
    CHECK(a2.dim() == 2);
    // sl2-like cyclic table: Jacobi holds, not nilpotent.
    const LieAlgebra so3 =
        LieAlgebra::build(3, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({0, 1, 0})}, {1, 2, vec({1, 0, 0})}});
    CHECK_FALSE(is_nilpotent(so3));
    CHECK(LieAlgebra(0).dim() == 0);
    CHECK(LieAlgebra(1).is_abelian());
  }

  TEST_CASE("build rejects bad tables") {
    CHECK_THROWS_AS(LieAlgebra::build(3, {{1, 0, vec({0, 0, 1})}}), Error);
    CHECK_THROWS_AS(LieAlgebra::build(3, {{0, 3, vec({0, 0, 1})}}), Error);
    CHECK_THROWS_AS(LieAlgebra::build(3, {{0, 1, vec({0, 1})}}), Error);
    try {
      LieAlgebra::build(3, {{0, 1, vec({0, 0, 1})}, {0, 1, vec({0, 0, 2})}});
      FAIL("expected DuplicateBracket");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateBracket);
    }
    try {
      LieAlgebra::build(4, {{0, 1, vec({0, 0, 1, 0})}, {2, 3, vec({1, 0, 0, 0})}});
      FAIL("expected JacobiViolation");
    } catch (const JacobiViolation& e) {
      CHECK(e.kind() == ErrorKind::JacobiViolation);
      CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 3});
      CHECK(e.defect() == "(1,0,0,0)");
    }
  }

  TEST_CASE("bracket") {
    const LieAlgebra L = h1();
    CHECK(bracket(L, unit_vector(3, 0), unit_vector(3, 1)) == vec({0, 0, 1}));
    CHECK(bracket(L, unit_vector(3, 1), unit_vector(3, 0)) == vec({0, 0, -1}));
    const Vector x = vec({2, -1, 5});
    CHECK(is_zero(bracket(L, x, x)));
    CHECK_THROWS_AS(bracket(L, vec({1, 0}), x), Error);
  }

  TEST_CASE("derived subalgebra and center") {
    CHECK(derived_subalgebra(abelian(4).algebra).dim() == 0);
    CHECK(derived_subalgebra(heisenberg(3).algebra).dim() == 1);
    CHECK(derived_subalgebra(l_3_4_1_4().algebra).dim() == 2);
    CHECK(center(abelian(3).algebra) == Subspace::full(3));
    CHECK(center(h1()) == Subspace::span(3, {vec({0, 0, 1})}));
    CHECK(center(l4524_plus_a1().algebra).dim() == 3);
    for (const auto& e : {heisenberg(2), l_3_4_1_4(), l_4_5_2_4()}) {
      const auto& L = e.algebra;
      for (const auto& z : center(L).basis_vectors())
        for (std::size_t j = 0; j < L.dim(); ++j) CHECK(is_zero(bracket(L, z, unit_vector(L.dim(), j))));
    }
  }

  TEST_CASE("lower central series") {
    auto a4 = lower_central_series(abelian(4).algebra);
    CHECK(a4.lcs_dims == std::vector<std::size_t>{4, 0});
    CHECK(a4.nilpotency_class == 1u);
    auto h2 = lower_central_series(heisenberg(2).algebra);
    CHECK(h2.lcs_dims == std::vector<std::size_t>{5, 1, 0});
    CHECK(h2.nilpotency_class == 2u);
    auto fil = lower_central_series(l_3_4_1_4().algebra);
    CHECK(fil.lcs_dims == std::vector<std::size_t>{4, 2, 1, 0});
    CHECK(fil.nilpotency_class == 3u);
    CHECK(fil.derived_dim == 2);
    CHECK(fil.center_dim == 1);
    CHECK(lower_central_series(LieAlgebra(0)).nilpotency_class == 0u);
  }

  TEST_CASE("is_ideal") {
    for (const auto& e : {heisenberg(1), l_3_4_1_4(), l_4_5_2_4(), abelian(2)}) {
      CHECK(is_ideal(e.algebra, derived_subalgebra(e.algebra)));
      CHECK(is_ideal(e.algebra, center(e.algebra)));
    }
    CHECK_FALSE(is_ideal(h1(), Subspace::span(3, {vec({1, 0, 0})})));
  }

  TEST_CASE("quotient") {
    const auto hq = quotient(h1(), center(h1()));
    CHECK(hq.algebra == abelian(2).algebra);

    const LieAlgebra fil = l_3_4_1_4().algebra;
    const auto ab = quotient(fil, derived_subalgebra(fil));
    CHECK(ab.algebra.is_abelian());
    CHECK(ab.algebra.dim() == 2);

    const auto q = quotient(fil, Subspace::span(4, {vec({0, 0, 0, 1})}));
    CHECK(q.algebra == heisenberg(1).algebra);
    CHECK(q.complement == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS(quotient(h1(), Subspace::span(3, {vec({1, 0, 0})})), Error);
  }

  TEST_CASE("quotient projection is a homomorphism") {
    SeededGenerator gen(11);
    for (const auto& e : {l_3_4_1_4(), l_4_5_2_4(), heisenberg_plus_abelian(2, 2), l4524_plus_a1()}) {
      const LieAlgebra& L = e.algebra;
      for (int trial = 0; trial < 5; ++trial) {
        const Subspace K = random_central_subspace(L, gen);
        const auto q = quotient(L, K);
        CHECK(q.algebra.dim() == L.dim() - K.dim());
        Vector x = zero_vector(L.dim()), y = zero_vector(L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i) {
          x[i] = gen.uniform(-3, 3);
          y[i] = gen.uniform(-3, 3);
        }
        const Vector lhs = q.projection * std::span<const Rational>(bracket(L, x, y));
        const Vector rhs = bracket(q.algebra, q.projection * std::span<const Rational>(x),
                                   q.projection * std::span<const Rational>(y));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("direct sum") {
    const LieAlgebra L = l_3_4_1_4().algebra;
    CHECK(direct_sum(L, LieAlgebra(0)) == L);
    const LieAlgebra s = direct_sum(h1(), abelian(1).algebra);
    CHECK(s.dim() == 4);
    CHECK(derived_subalgebra(s).dim() == 1);
    CHECK(direct_sum(abelian(2).algebra, abelian(3).algebra) == abelian(5).algebra);
    const LieAlgebra big = direct_sum(l_4_5_2_4().algebra, heisenberg(2).algebra);
    CHECK(derived_subalgebra(big).dim() == 3);
  }

  TEST_CASE("change of basis") {
    const LieAlgebra L = l_3_4_1_4().algebra;
    CHECK(change_of_basis(L, Matrix::identity(4)) == L);

    Matrix scale = Matrix::identity(3);
    scale(2, 2) = 2;
    const LieAlgebra scaled = change_of_basis(h1(), scale);
    CHECK(scaled.constant(0, 1, 2) == make_rational(1, 2));

    CHECK_THROWS_AS(change_of_basis(L, Matrix(4, 4)), Error);
    CHECK_THROWS_AS(change_of_basis(L, Matrix::identity(3)), Error);

    SeededGenerator gen(5);
    for (const auto& e : {l_3_4_1_4(), l_4_5_2_4(), heisenberg(2), heisenberg_plus_abelian(1, 2)}) {
      const SeriesReport before = lower_central_series(e.algebra);
      for (int trial = 0; trial < 5; ++trial) {
        const LieAlgebra moved = change_of_basis(e.algebra, random_unimodular(e.algebra.dim(), gen));
        CHECK(lower_central_series(moved) == before);
      }
    }
  }
}
