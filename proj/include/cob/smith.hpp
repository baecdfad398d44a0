#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cob/matrix.hpp"

namespace cob {

/// U * input * V = S with U, V unimodular and S diagonal, the diagonal
/// nonnegative with each nonzero entry dividing the next and zeros trailing.
struct SmithDecomposition {
  IntMatrix u;               // rows x rows
  IntMatrix v;               // cols x cols
  IntMatrix s;               // rows x cols, diagonal
  std::vector<Int> factors;  // diagonal of s, length min(rows, cols)

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : factors)
      if (d != 0) ++r;
    return r;
  }
};

namespace detail {

// Quotient minimizing |a - q*b|, used so row/column reductions shrink
// entries monotonically.
inline Int nearest_quotient(const Int& a, const Int& b) {
  Int q, r;
  divide_qr(a, b, q, r);
  if (r == 0) return q;
  Int abs_b = abs_of(b);
  Int abs_r = abs_of(r);
  // round to nearest; exact ties keep the truncated quotient
  if (2 * abs_r > abs_b) q += (sign_of(r) == sign_of(b)) ? 1 : -1;
  return q;
}

}  // namespace detail

/// Smith normal form over the integers, all arithmetic arbitrary precision.
///
/// Pivot rule: smallest nonzero absolute value in the active submatrix, ties
/// broken by lowest (row, col), so the output is deterministic.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition out;
  out.u = IntMatrix::identity(rows);
  out.v = IntMatrix::identity(cols);
  out.s = m;
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < steps; ++t) {
    // Deterministic pivot selection over s[t.., t..].
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Int best_abs;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          Int a = abs_of(s(i, j));
          if (!best || a < best_abs) {
            best = {i, j};
            best_abs = a;
          }
        }
      return best;
    };

    auto pivot = find_pivot();
    if (!pivot) break;  // all remaining entries zero
    if (pivot->first != t) {
      s.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
    }
    if (pivot->second != t) {
      s.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);
    }

    for (;;) {
      bool clean = true;
      // Reduce column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = detail::nearest_quotient(s(i, t), s(t, t));
        if (q != 0) {
          s.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (s(i, t) != 0) clean = false;
      }
      // Reduce row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = detail::nearest_quotient(s(t, j), s(t, t));
        if (q != 0) {
          s.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder strictly smaller than the pivot appeared; reselect.
        auto p = find_pivot();
        if (p->first != t) {
          s.swap_rows(t, p->first);
          u.swap_rows(t, p->first);
        }
        if (p->second != t) {
          s.swap_cols(t, p->second);
          v.swap_cols(t, p->second);
        }
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols && divisible; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            divisible = false;
          }
      if (divisible) break;
    }

    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }

  out.factors.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.factors.push_back(s(t, t));
  return out;
}

}  // namespace cob
