#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "cob/linalg.hpp"
#include "cob/rng.hpp"
#include "cob/triplet.hpp"

namespace cob {

enum class Family { Z, Q };

inline std::string family_name(Family f) { return f == Family::Z ? "Z" : "Q"; }

/// Parameters for the seeded semi-Lagrangian instance generator.
struct GeneratorParams {
  Family family = Family::Z;
  std::size_t g_bottom = 1;
  std::size_t g_top = 1;
  std::size_t n_link = 2;
  long long entry_bound = 3;  // graph/link entries drawn from [-bound, bound]
  std::uint64_t seed = 0;

  static constexpr std::size_t kMaxGenus = 8;
  static constexpr std::size_t kMaxLink = 12;

  void check() const {
    if (g_bottom > kMaxGenus || g_top > kMaxGenus)
      throw DimensionError("generator: genus exceeds " + std::to_string(kMaxGenus));
    if (n_link > kMaxLink)
      throw DimensionError("generator: link size exceeds " + std::to_string(kMaxLink));
    if (entry_bound < 1) throw DimensionError("generator: entry bound must be >= 1");
  }
};

namespace detail {

inline IntMatrix random_entries(SplitMix64& rng, std::size_t rows,
                                std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Int(rng.int_in(-bound, bound));
  return m;
}

inline IntMatrix random_symmetric(SplitMix64& rng, std::size_t n,
                                  long long bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = Int(rng.int_in(-bound, bound));
      m(j, i) = m(i, j);
    }
  return m;
}

}  // namespace detail

/// Random unimodular matrix: a product of elementary row operations applied
/// to the identity. det = +1 always.
inline IntMatrix random_unimodular(SplitMix64& rng, std::size_t n,
                                   std::size_t ops) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  for (std::size_t k = 0; k < ops; ++k) {
    std::size_t i = static_cast<std::size_t>(rng.below(n));
    std::size_t j = static_cast<std::size_t>(rng.below(n - 1));
    if (j >= i) ++j;
    m.add_row_multiple(i, j, Int(rng.coin() ? 1 : -1));
  }
  return m;
}

/// Random symmetric unimodular matrix: a diagonal of signs conjugated by
/// elementary congruences, so |det| = 1 and symmetry is exact.
inline IntMatrix random_symmetric_unimodular(SplitMix64& rng, std::size_t n,
                                             std::size_t ops) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = rng.coin() ? 1 : -1;
  if (n < 2) return m;
  for (std::size_t k = 0; k < ops; ++k) {
    std::size_t i = static_cast<std::size_t>(rng.below(n));
    std::size_t j = static_cast<std::size_t>(rng.below(n - 1));
    if (j >= i) ++j;
    Int e(rng.coin() ? 1 : -1);
    m.add_row_multiple(i, j, e);
    m.add_col_multiple(i, j, e);
  }
  return m;
}

/// Seeded generator of semi-Lagrangian presentations.
///
/// Z family: the link block is symmetric unimodular; the graph self-linking
/// blocks are forced to B A^-1 B^T and C A^-1 C^T (integral because A^-1 is).
///
/// Q family: the link block is symmetric nonsingular (resampled until the
/// determinant is nonzero) and the graph rows are taken in its row space,
/// B = M1 A and C = M2 A, with self-linking M1 A M1^T and M2 A M2^T; the
/// rational-form conditions then hold identically.
///
/// The cross block (top circles vs bottom circles) is unconstrained and
/// drawn uniformly in both families.
inline TripletPresentation gen_semilagrangian(const GeneratorParams& params) {
  params.check();
  SplitMix64 rng(params.seed);
  const std::size_t n = params.n_link;
  const long long bound = params.entry_bound;

  TripletPresentation t;
  t.g_bottom = params.g_bottom;
  t.g_top = params.g_top;
  t.n_link = n;

  if (params.family == Family::Z) {
    t.link = random_symmetric_unimodular(rng, n, 2 * n + 2);
    t.bottom_link = detail::random_entries(rng, t.g_bottom, n, bound);
    t.top_link = detail::random_entries(rng, t.g_top, n, bound);
    if (n == 0) {
      t.bottom_bottom = IntMatrix::zero(t.g_bottom, t.g_bottom);
      t.top_top = IntMatrix::zero(t.g_top, t.g_top);
    } else {
      RatMatrix inv = invert_rational(t.link);
      t.bottom_bottom =
          to_integral(to_rational(t.bottom_link) * inv *
                      to_rational(t.bottom_link.transposed()));
      t.top_top = to_integral(to_rational(t.top_link) * inv *
                              to_rational(t.top_link.transposed()));
    }
    t.top_bottom = detail::random_entries(rng, t.g_top, t.g_bottom, bound);
  } else {
    for (;;) {
      t.link = detail::random_symmetric(rng, n, bound);
      if (determinant(t.link) != 0) break;
    }
    IntMatrix m1 = detail::random_entries(rng, t.g_bottom, n, bound);
    IntMatrix m2 = detail::random_entries(rng, t.g_top, n, bound);
    t.bottom_link = m1 * t.link;
    t.top_link = m2 * t.link;
    t.bottom_bottom = m1 * t.link * m1.transposed();
    t.top_top = m2 * t.link * m2.transposed();
    t.top_bottom = detail::random_entries(rng, t.g_top, t.g_bottom, bound);
  }

  if (!validate(t).empty())
    throw InternalError("generator produced an invalid presentation");
  return t;
}

}  // namespace cob
