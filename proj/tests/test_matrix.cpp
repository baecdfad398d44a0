#include <catch2/catch_amalgamated.hpp>

#include "cob/matrix.hpp"

using namespace cob;

TEST_CASE("degenerate shapes are legal values") {
  IntMatrix empty;
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK(empty.is_square());
  CHECK(empty.is_symmetric());
  CHECK(empty.is_zero());

  IntMatrix wide(0, 3);
  CHECK(wide.rows() == 0);
  CHECK(wide.cols() == 3);
  CHECK_FALSE(wide.is_square());

  IntMatrix tall(3, 0);
  IntMatrix product = tall * wide;  // 3x3 of zeros
  CHECK(product.rows() == 3);
  CHECK(product.is_zero());
}

TEST_CASE("arithmetic and transpose") {
  IntMatrix a{{Int(1), Int(2)}, {Int(3), Int(4)}};
  IntMatrix b{{Int(0), Int(1)}, {Int(1), Int(0)}};
  CHECK(a * b == IntMatrix{{Int(2), Int(1)}, {Int(4), Int(3)}});
  CHECK(a + b - b == a);
  CHECK((-a) * Int(-1) == a);
  CHECK(a.transposed().transposed() == a);
  CHECK(a.transposed() == IntMatrix{{Int(1), Int(3)}, {Int(2), Int(4)}});
  CHECK_THROWS_AS(a * IntMatrix(3, 2), DimensionError);
  CHECK_THROWS_AS(a + IntMatrix(3, 2), DimensionError);
}

TEST_CASE("blocks and assembly") {
  IntMatrix m(3, 3);
  m.set_block(1, 1, IntMatrix{{Int(5), Int(6)}, {Int(7), Int(8)}});
  CHECK(m(1, 1) == 5);
  CHECK(m(2, 2) == 8);
  CHECK(m.block(1, 1, 2, 2) == IntMatrix{{Int(5), Int(6)}, {Int(7), Int(8)}});
  CHECK_THROWS_AS(m.set_block(2, 2, IntMatrix(2, 2)), DimensionError);

  IntMatrix i2 = IntMatrix::identity(2);
  IntMatrix z21(2, 1), z12(1, 2), one{{Int(9)}};
  IntMatrix grid = IntMatrix::from_blocks({{i2, z21}, {z12, one}});
  CHECK(grid.rows() == 3);
  CHECK(grid(2, 2) == 9);
  CHECK(grid(0, 0) == 1);
  CHECK_THROWS_AS(IntMatrix::from_blocks({{i2, z12}}), DimensionError);
}

TEST_CASE("row and column operations") {
  IntMatrix m{{Int(1), Int(0)}, {Int(0), Int(1)}};
  m.add_row_multiple(0, 1, Int(3));
  CHECK(m == IntMatrix{{Int(1), Int(3)}, {Int(0), Int(1)}});
  m.add_col_multiple(0, 1, Int(-2));
  CHECK(m == IntMatrix{{Int(-5), Int(3)}, {Int(-2), Int(1)}});
  m.swap_rows(0, 1);
  m.negate_col(1);
  CHECK(m == IntMatrix{{Int(-2), Int(-1)}, {Int(-5), Int(-3)}});
}

TEST_CASE("rational conversion round trip and integrality") {
  IntMatrix m{{Int(2), Int(-7)}};
  RatMatrix q = to_rational(m);
  CHECK(to_integral(q) == m);
  CHECK(is_integral(q));
  q(0, 0) = Rat(1, 2);
  CHECK_FALSE(is_integral(q));
  CHECK_THROWS_AS(to_integral(q), DimensionError);
}

TEST_CASE("ragged literals rejected") {
  auto build = [] { return IntMatrix{{Int(1), Int(2)}, {Int(3)}}; };
  CHECK_THROWS_AS(build(), DimensionError);
}
