#pragma once

#include <cstddef>

#include "cob/homology.hpp"
#include "cob/linalg.hpp"

namespace cob {

/// Standard intersection form on the first homology of the genus-g surface
/// in the ordered basis (a_1..a_g, b_1..b_g): [[0, I], [-I, 0]].
inline IntMatrix intersection_form(std::size_t g) {
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    j(k, g + k) = 1;
    j(g + k, k) = -1;
  }
  return j;
}

/// W^T J W = J, checked exactly.
inline bool is_symplectic(const IntMatrix& w, std::size_t g) {
  if (w.rows() != 2 * g || w.cols() != 2 * g)
    throw DimensionError("symplectic check: matrix must be 2g x 2g");
  IntMatrix j = intersection_form(g);
  return w.transposed() * j * w == j;
}

/// The homology action of a surface mapping class: an integer matrix
/// preserving the intersection form. Construction validates symplecticity.
struct SymplecticMap {
  std::size_t g = 0;
  IntMatrix action;  // 2g x 2g

  bool operator==(const SymplecticMap&) const = default;

  static SymplecticMap make(IntMatrix w) {
    if (w.rows() != w.cols() || w.rows() % 2 != 0)
      throw DimensionError("symplectic map must be square of even dimension");
    SymplecticMap m;
    m.g = w.rows() / 2;
    m.action = std::move(w);
    if (!is_symplectic(m.action, m.g))
      throw ValidationError("matrix does not preserve the intersection form");
    return m;
  }

  IntMatrix block_aa() const { return action.block(0, 0, g, g); }
  IntMatrix block_ab() const { return action.block(0, g, g, g); }
  IntMatrix block_ba() const { return action.block(g, 0, g, g); }
  IntMatrix block_bb() const { return action.block(g, g, g, g); }
};

/// Membership in the subgroup preserving both the a-span and the b-span:
/// the off-diagonal blocks vanish, and then the lower diagonal block is
/// forced to be the inverse transpose of the upper one.
inline bool in_lagrangian_subgroup(const SymplecticMap& w) {
  if (!w.block_ab().is_zero() || !w.block_ba().is_zero()) return false;
  // For block-diagonal symplectic maps D = (A^T)^-1 holds automatically;
  // anything else indicates a broken invariant upstream.
  if (w.block_bb().transposed() * w.block_aa() != IntMatrix::identity(w.g))
    throw InternalError("block-diagonal symplectic map with D^T A != I");
  return true;
}

/// Homology of the closed manifold glued from a handlebody and an
/// anti-handlebody along the mapping class: the cokernel of the a-a block.
/// Trivial exactly when that block is unimodular (the integral homology
/// sphere criterion).
inline HomologySummary heegaard_h1(const SymplecticMap& w) {
  return homology_from_relations(w.block_aa());
}

/// Composition in the mapping class group, second argument applied first.
inline SymplecticMap compose_maps(const SymplecticMap& w2, const SymplecticMap& w1) {
  if (w1.g != w2.g) throw DimensionError("compose_maps: genus mismatch");
  return SymplecticMap::make(w2.action * w1.action);
}

/// Inverse map; symplectic matrices are invertible over the integers.
inline SymplecticMap invert_map(const SymplecticMap& w) {
  // W^-1 = J^-1 W^T J, integral by construction.
  IntMatrix j = intersection_form(w.g);
  IntMatrix jinv = -j;  // J^-1 = -J
  return SymplecticMap::make(jinv * w.action.transposed() * j);
}

}  // namespace cob
