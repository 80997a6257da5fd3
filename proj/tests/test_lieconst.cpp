#include "doctest.h"
#include "lieschur/catalog.hpp"
#include "lieschur/error.hpp"
#include "lieschur/lieconst.hpp"
#include "lieschur/population.hpp"

using namespace lieschur;

TEST_SUITE("lieconst") {
  TEST_CASE("parse examples") {
    CHECK(parse_lieconst("dim 3\n[e1,e2] = e3\n") == heisenberg(1).algebra);
    CHECK(parse_lieconst("dim 2") == abelian(2).algebra);
    CHECK(parse_lieconst("# filiform\ndim 4\n[e1,e2] = e3\n\n[e1,e3] = e4  # tail\n") == l_3_4_1_4().algebra);
    const LieAlgebra L = parse_lieconst("dim 3\n[e1,e2] = 1/2 e3 - 3 * e1 + e3");
    CHECK(L.constant(0, 1, 2) == make_rational(3, 2));
    CHECK(L.constant(0, 1, 0) == -3);
    CHECK(parse_lieconst("dim 3\n[e1,e2] = 0\n").is_abelian());
    CHECK(parse_lieconst("dim 3\n[e1,e2]=-e3").constant(0, 1, 2) == -1);
  }

  TEST_CASE("syntax errors carry positions") {
    try {
      parse_lieconst("dim 3\n[e1 e2] = e3\n");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_lieconst(""), SyntaxError);
    CHECK_THROWS_AS(parse_lieconst("[e1,e2] = e3"), SyntaxError);
    CHECK_THROWS_AS(parse_lieconst("dim 3\n[e1,e2] = e3 e1"), SyntaxError);
    CHECK_THROWS_AS(parse_lieconst("dim 3\n[e1,e2] = 1/0 e3"), SyntaxError);
    CHECK_THROWS_AS(parse_lieconst("dim 3\ndim 4"), SyntaxError);
  }

  TEST_CASE("semantic errors") {
    const auto kind_of = [](const char* text) {
      try {
        parse_lieconst(text);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of("dim 3\n[e1,e4] = e3") == ErrorKind::IndexOutOfRange);
    CHECK(kind_of("dim 3\n[e2,e1] = e3") == ErrorKind::IndexOutOfRange);
    CHECK(kind_of("dim 3\n[e1,e2] = e0") == ErrorKind::IndexOutOfRange);
    CHECK(kind_of("dim 3\n[e1,e2] = e3\n[e1,e2] = e3") == ErrorKind::DuplicateBracket);
    CHECK(kind_of("dim 4\n[e1,e2] = e3\n[e3,e4] = e1") == ErrorKind::JacobiViolation);
  }

  TEST_CASE("render examples") {
    CHECK(render_lieconst(abelian(2).algebra) == "dim 2\n");
    CHECK(render_lieconst(heisenberg(1).algebra) == "dim 3\n[e1,e2] = e3\n");
    const LieAlgebra fil = l_3_4_1_4().algebra;
    const auto q = quotient(fil, Subspace::span(4, {unit_vector(4, 3)}));
    CHECK(render_lieconst(q.algebra) == render_lieconst(heisenberg(1).algebra));
    const LieAlgebra L = parse_lieconst("dim 3\n[e1,e2] = -2/4 e3 - e1");
    CHECK(render_lieconst(L) == "dim 3\n[e1,e2] = -e1 - 1/2 e3\n");
  }

  TEST_CASE("round trip on basis-changed algebras") {
    SeededGenerator gen(8);
    for (const auto& e : {l_3_4_1_4(), l_4_5_2_4(), heisenberg(2), l4524_plus_a1()}) {
      const LieAlgebra moved = change_of_basis(e.algebra, random_unimodular(e.algebra.dim(), gen));
      const std::string text = render_lieconst(moved);
      CHECK(parse_lieconst(text) == moved);
      CHECK(render_lieconst(parse_lieconst(text)) == text);
    }
  }
}
