#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cob/matrix.hpp"

namespace cob {

/// Inertia of a symmetric form: counts of positive, zero and negative
/// squares after exact diagonalization. pos + zero + neg = dimension.
struct SignatureTriple {
  std::size_t pos = 0;
  std::size_t zero = 0;
  std::size_t neg = 0;

  bool operator==(const SignatureTriple&) const = default;

  std::string to_string() const {
    return "(" + std::to_string(pos) + "," + std::to_string(zero) + "," +
           std::to_string(neg) + ")";
  }
};

/// Exact determinant by fraction-free (Bareiss) elimination. The empty 0x0
/// matrix has determinant 1.
inline Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return Int(0);
      w.swap_rows(k, swap_row);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        w(i, j) = num / prev;  // division is exact (Bareiss)
      }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

/// Solve a * x = rhs exactly over the rationals for a nonsingular integer a.
/// Fraction-free forward elimination, rational back-substitution.
inline RatMatrix solve_rational(const IntMatrix& a, const IntMatrix& rhs) {
  if (!a.is_square()) throw DimensionError("solve requires a square matrix");
  if (a.rows() != rhs.rows())
    throw DimensionError("solve: right-hand side has wrong row count");
  const std::size_t n = a.rows(), w = rhs.cols();
  if (n == 0) return RatMatrix(0, w);

  // Augmented [a | rhs], eliminated in place with exact divisions.
  IntMatrix aug(n, n + w);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, rhs);
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (aug(k, k) == 0) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (aug(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == k)
        throw SingularError("matrix is singular: not a Q-cobordism datum");
      aug.swap_rows(k, swap_row);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n + w; ++j)
        aug(i, j) = (aug(i, j) * aug(k, k) - aug(i, k) * aug(k, j)) / prev;
      aug(i, k) = 0;
    }
    prev = aug(k, k);
  }
  if (aug(n - 1, n - 1) == 0)
    throw SingularError("matrix is singular: not a Q-cobordism datum");

  RatMatrix x(n, w);
  for (std::size_t c = 0; c < w; ++c)
    for (std::size_t i = n; i-- > 0;) {
      Rat acc(aug(i, n + c));
      for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(aug(i, j)) * x(j, c);
      x(i, c) = acc / Rat(aug(i, i));
    }
  return x;
}

/// Column-vector convenience overload.
inline std::vector<Rat> solve_rational(const IntMatrix& a, const std::vector<Int>& b) {
  IntMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  RatMatrix x = solve_rational(a, rhs);
  std::vector<Rat> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x(i, 0);
  return out;
}

/// Exact inverse of a nonsingular integer matrix, entries in Z[1/det].
inline RatMatrix invert_rational(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse requires a square matrix");
  return solve_rational(a, IntMatrix::identity(a.rows()));
}

/// Inertia counts of a symmetric rational matrix via exact symmetric
/// congruence diagonalization. A zero diagonal pivot is repaired by a
/// symmetric swap with a later nonzero diagonal entry, or failing that by
/// adding a row/column holding a nonzero off-diagonal entry (valid in
/// characteristic zero).
inline SignatureTriple signature_symmetric(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("signature requires a square matrix");
  if (!m.is_symmetric()) throw DimensionError("signature requires a symmetric matrix");
  const std::size_t n = m.rows();
  RatMatrix w = m;
  SignatureTriple sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t dl = k;
      for (std::size_t l = k + 1; l < n; ++l)
        if (w(l, l) != 0) {
          dl = l;
          break;
        }
      if (dl != k) {
        w.swap_rows(k, dl);
        w.swap_cols(k, dl);
      } else {
        std::size_t ol = k;
        for (std::size_t l = k + 1; l < n; ++l)
          if (w(k, l) != 0) {
            ol = l;
            break;
          }
        if (ol != k) {
          // All candidate diagonal entries are zero here, so the congruence
          // (row k += row ol, col k += col ol) makes w(k,k) = 2*w(k,ol) != 0.
          w.add_row_multiple(k, ol, Rat(1));
          w.add_col_multiple(k, ol, Rat(1));
        }
      }
    }
    const Rat pivot = w(k, k);
    if (pivot == 0) {
      ++sig.zero;  // row k is zero on the active block
      continue;
    }
    if (pivot > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w(i, k) == 0) continue;
      Rat factor = w(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
      w(i, k) = 0;
    }
    // The trailing block is now the symmetric Schur complement; row k is
    // never read again.
    for (std::size_t j = k + 1; j < n; ++j) w(k, j) = 0;
  }
  return sig;
}

inline SignatureTriple signature_symmetric(const IntMatrix& m) {
  return signature_symmetric(to_rational(m));
}

/// Positive inertia index, the sign_+ of surgery-theoretic formulas.
inline std::size_t positive_index(const IntMatrix& m) {
  return signature_symmetric(m).pos;
}

}  // namespace cob
