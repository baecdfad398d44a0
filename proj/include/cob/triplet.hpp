#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cob/homology.hpp"
#include "cob/linalg.hpp"

namespace cob {

/// Linking data of a surgery triplet: a framed link together with a bottom
/// and a top chain graph in the 3-sphere, recorded purely as pairwise
/// linking numbers between the component groups.
///
/// Blocks (rows x cols):
///   link          n  x n   framed link, framings on the diagonal (symmetric)
///   bottom_link   g1 x n   bottom graph circles vs link components
///   top_link      g2 x n   top graph circles vs link components
///   bottom_bottom g1 x g1  bottom circles pairwise, self-framings on the
///                          diagonal (symmetric)
///   top_bottom    g2 x g1  top circles vs bottom circles
///   top_top       g2 x g2  top circles pairwise (symmetric)
///
/// An empty bottom or top is genus 0 with 0-row blocks; an empty link is
/// n = 0. All operations treat these degenerate shapes uniformly.
struct TripletPresentation {
  std::size_t g_bottom = 0;
  std::size_t g_top = 0;
  std::size_t n_link = 0;
  IntMatrix link;
  IntMatrix bottom_link;
  IntMatrix top_link;
  IntMatrix bottom_bottom;
  IntMatrix top_bottom;
  IntMatrix top_top;

  bool operator==(const TripletPresentation&) const = default;

  static TripletPresentation make(std::size_t g_bottom, std::size_t g_top,
                                  std::size_t n_link) {
    TripletPresentation t;
    t.g_bottom = g_bottom;
    t.g_top = g_top;
    t.n_link = n_link;
    t.link = IntMatrix::zero(n_link, n_link);
    t.bottom_link = IntMatrix::zero(g_bottom, n_link);
    t.top_link = IntMatrix::zero(g_top, n_link);
    t.bottom_bottom = IntMatrix::zero(g_bottom, g_bottom);
    t.top_bottom = IntMatrix::zero(g_top, g_bottom);
    t.top_top = IntMatrix::zero(g_top, g_top);
    return t;
  }
};

/// Dimension and symmetry checks. Returns the list of violations; empty
/// means the presentation is usable by every other operation.
inline std::vector<std::string> validate(const TripletPresentation& t) {
  std::vector<std::string> v;
  auto check_shape = [&v](const IntMatrix& m, std::size_t r, std::size_t c,
                          const char* name, const char* rdesc, const char* cdesc) {
    if (m.rows() != r)
      v.push_back(std::string(name) + " rows != " + rdesc);
    if (m.cols() != c)
      v.push_back(std::string(name) + " cols != " + cdesc);
  };
  check_shape(t.link, t.n_link, t.n_link, "link block", "n_link", "n_link");
  check_shape(t.bottom_link, t.g_bottom, t.n_link, "bottom_link block",
              "g_bottom", "n_link");
  check_shape(t.top_link, t.g_top, t.n_link, "top_link block", "g_top", "n_link");
  check_shape(t.bottom_bottom, t.g_bottom, t.g_bottom, "bottom_bottom block",
              "g_bottom", "g_bottom");
  check_shape(t.top_bottom, t.g_top, t.g_bottom, "top_bottom block", "g_top",
              "g_bottom");
  check_shape(t.top_top, t.g_top, t.g_top, "top_top block", "g_top", "g_top");
  if (t.link.is_square() && !t.link.is_symmetric())
    v.push_back("link block not symmetric");
  if (t.bottom_bottom.is_square() && !t.bottom_bottom.is_symmetric())
    v.push_back("bottom_bottom block not symmetric");
  if (t.top_top.is_square() && !t.top_top.is_symmetric())
    v.push_back("top_top block not symmetric");
  return v;
}

inline void require_valid(const TripletPresentation& t) {
  auto v = validate(t);
  if (v.empty()) return;
  std::string msg = "invalid presentation:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw ValidationError(msg);
}

enum class GeneratorKind { LinkMeridian, BottomMeridian, TopMeridian };

struct GeneratorLabel {
  GeneratorKind kind;
  std::size_t index;  // 1-based within its group

  bool operator==(const GeneratorLabel&) const = default;

  std::string name() const {
    switch (kind) {
      case GeneratorKind::LinkMeridian: return "mu" + std::to_string(index);
      case GeneratorKind::BottomMeridian: return "m" + std::to_string(index);
      case GeneratorKind::TopMeridian: return "m'" + std::to_string(index);
    }
    return {};
  }
};

/// First homology of the cobordism, presented on the meridian generators:
/// one relation row per link component over (link, bottom, top) meridians.
struct HomologyPresentation {
  IntMatrix relations;  // n_link x (n_link + g_bottom + g_top)
  std::vector<GeneratorLabel> generators;
};

/// Homology of the filling: the closed manifold obtained by plugging the
/// standard handlebody and anti-handlebody into the boundary. This is the
/// cokernel of the link block alone.
inline HomologySummary h1_filling(const TripletPresentation& t) {
  require_valid(t);
  return homology_from_relations(t.link);
}

inline HomologyPresentation h1_presentation(const TripletPresentation& t) {
  require_valid(t);
  HomologyPresentation p;
  p.relations = IntMatrix::zero(t.n_link, t.n_link + t.g_bottom + t.g_top);
  p.relations.set_block(0, 0, t.link);
  p.relations.set_block(0, t.n_link, t.bottom_link.transposed());
  p.relations.set_block(0, t.n_link + t.g_bottom, t.top_link.transposed());
  for (std::size_t i = 0; i < t.n_link; ++i)
    p.generators.push_back({GeneratorKind::LinkMeridian, i + 1});
  for (std::size_t i = 0; i < t.g_bottom; ++i)
    p.generators.push_back({GeneratorKind::BottomMeridian, i + 1});
  for (std::size_t i = 0; i < t.g_top; ++i)
    p.generators.push_back({GeneratorKind::TopMeridian, i + 1});
  return p;
}

inline std::pair<HomologyPresentation, HomologySummary> h1_cobordism(
    const TripletPresentation& t) {
  HomologyPresentation p = h1_presentation(t);
  HomologySummary h = homology_from_relations(p.relations);
  return {std::move(p), h};
}

namespace detail {

// Decides membership of vectors in the subgroup generated by `gens` inside
// the group presented by `p`. One Smith form serves all queries.
class SubgroupMembership {
 public:
  SubgroupMembership(const HomologyPresentation& p,
                     const std::vector<std::vector<Int>>& gens) {
    dim_ = p.relations.cols();
    IntMatrix stacked(gens.size() + p.relations.rows(), dim_);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].size() != dim_)
        throw DimensionError("subgroup generator has wrong dimension");
      for (std::size_t j = 0; j < dim_; ++j) stacked(i, j) = gens[i][j];
    }
    for (std::size_t i = 0; i < p.relations.rows(); ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        stacked(gens.size() + i, j) = p.relations(i, j);
    snf_ = smith_normal_form(stacked.transposed());
  }

  // x in <gens> + <relations> over Z (or over Q).
  bool contains(const std::vector<Int>& x, bool rational) const {
    if (x.size() != dim_) throw DimensionError("element has wrong dimension");
    // Solve stacked^T * w = x: with U*stacked^T*V = S this reads
    // S * (V^-1 w) = U x, solvable iff U x is compatible with the diagonal.
    std::vector<Int> y(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) y[i] += snf_.u(i, j) * x[j];
    const std::size_t diag = snf_.factors.size();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i < diag && snf_.factors[i] != 0) {
        if (rational) continue;
        if (y[i] % snf_.factors[i] != 0) return false;
      } else if (y[i] != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t dim_ = 0;
  SmithDecomposition snf_;
};

}  // namespace detail

/// True iff every element of xs lies in the subgroup generated by ys inside
/// the abelian group presented by p, decided exactly over Z.
inline bool submodule_leq(const HomologyPresentation& p,
                          const std::vector<std::vector<Int>>& xs,
                          const std::vector<std::vector<Int>>& ys) {
  if (xs.empty()) return true;
  detail::SubgroupMembership member(p, ys);
  for (const auto& x : xs)
    if (!member.contains(x, /*rational=*/false)) return false;
  return true;
}

/// Rational variant: membership after clearing torsion (ranks over Q).
inline bool submodule_leq_rational(const HomologyPresentation& p,
                                   const std::vector<std::vector<Int>>& xs,
                                   const std::vector<std::vector<Int>>& ys) {
  if (xs.empty()) return true;
  detail::SubgroupMembership member(p, ys);
  for (const auto& x : xs)
    if (!member.contains(x, /*rational=*/true)) return false;
  return true;
}

/// Classification of a presentation.
///
/// is_q / is_z: the filling is a rational / integral homology sphere,
/// detected by det(link) != 0 / = +-1.
///
/// semi_lagrangian_matrix: the rational-form conditions
///   bottom_bottom = B A^-1 B^T, top_top = C A^-1 C^T, B A^-1 C^T integral
/// (A = link, B = bottom_link, C = top_link); requires is_q.
///
/// semi_lagrangian_integral: the integral conditions, decided inside
/// H_1 of the cobordism: each bottom-circle class lies in the span of the
/// top meridians and each top-circle class in the span of the bottom
/// meridians.
struct ClassificationReport {
  bool is_q = false;
  bool is_z = false;
  bool semi_lagrangian_matrix = false;
  bool semi_lagrangian_integral = false;
  // Defect data, present when is_q.
  std::optional<RatMatrix> bottom_defect;  // bottom_bottom - B A^-1 B^T
  std::optional<RatMatrix> top_defect;     // top_top - C A^-1 C^T
  std::optional<RatMatrix> cross_term;     // B A^-1 C^T

  bool operator==(const ClassificationReport&) const = default;
};

namespace detail {

// Rows of [B | D | E^T]: the class of each bottom circle pushed into the
// cobordism, written on the (mu, m, m') generators.
inline std::vector<std::vector<Int>> bottom_circle_classes(
    const TripletPresentation& t) {
  std::vector<std::vector<Int>> rows;
  const std::size_t dim = t.n_link + t.g_bottom + t.g_top;
  for (std::size_t k = 0; k < t.g_bottom; ++k) {
    std::vector<Int> r(dim);
    for (std::size_t j = 0; j < t.n_link; ++j) r[j] = t.bottom_link(k, j);
    for (std::size_t j = 0; j < t.g_bottom; ++j)
      r[t.n_link + j] = t.bottom_bottom(k, j);
    for (std::size_t j = 0; j < t.g_top; ++j)
      r[t.n_link + t.g_bottom + j] = t.top_bottom(j, k);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Rows of [C | E | F]: the class of each top circle.
inline std::vector<std::vector<Int>> top_circle_classes(
    const TripletPresentation& t) {
  std::vector<std::vector<Int>> rows;
  const std::size_t dim = t.n_link + t.g_bottom + t.g_top;
  for (std::size_t k = 0; k < t.g_top; ++k) {
    std::vector<Int> r(dim);
    for (std::size_t j = 0; j < t.n_link; ++j) r[j] = t.top_link(k, j);
    for (std::size_t j = 0; j < t.g_bottom; ++j)
      r[t.n_link + j] = t.top_bottom(k, j);
    for (std::size_t j = 0; j < t.g_top; ++j)
      r[t.n_link + t.g_bottom + j] = t.top_top(k, j);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<std::vector<Int>> meridian_units(std::size_t dim,
                                                    std::size_t offset,
                                                    std::size_t count) {
  std::vector<std::vector<Int>> units;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Int> u(dim);
    u[offset + k] = 1;
    units.push_back(std::move(u));
  }
  return units;
}

}  // namespace detail

inline ClassificationReport classify(const TripletPresentation& t) {
  require_valid(t);
  ClassificationReport rep;
  Int det = determinant(t.link);
  rep.is_q = det != 0;
  rep.is_z = abs_of(det) == 1;

  if (rep.is_q) {
    RatMatrix inv_bt = solve_rational(t.link, t.bottom_link.transposed());
    RatMatrix inv_ct = solve_rational(t.link, t.top_link.transposed());
    RatMatrix b_ainv_bt = to_rational(t.bottom_link) * inv_bt;
    RatMatrix c_ainv_ct = to_rational(t.top_link) * inv_ct;
    RatMatrix b_ainv_ct = to_rational(t.bottom_link) * inv_ct;
    rep.bottom_defect = to_rational(t.bottom_bottom) - b_ainv_bt;
    rep.top_defect = to_rational(t.top_top) - c_ainv_ct;
    rep.cross_term = b_ainv_ct;
    rep.semi_lagrangian_matrix = rep.bottom_defect->is_zero() &&
                                 rep.top_defect->is_zero() &&
                                 is_integral(*rep.cross_term);
  }

  HomologyPresentation p = h1_presentation(t);
  const std::size_t dim = t.n_link + t.g_bottom + t.g_top;
  bool bottom_ok = submodule_leq(
      p, detail::bottom_circle_classes(t),
      detail::meridian_units(dim, t.n_link + t.g_bottom, t.g_top));
  bool top_ok =
      bottom_ok && submodule_leq(p, detail::top_circle_classes(t),
                                 detail::meridian_units(dim, t.n_link, t.g_bottom));
  rep.semi_lagrangian_integral = bottom_ok && top_ok;
  return rep;
}

/// Homology of the complement of an arbitrarily embedded genus-g chain
/// graph: always free of rank g, computed from the Mayer-Vietoris relation
/// matrix (identity of size 2g-1 stacked on the g alternating pattern rows)
/// as the cokernel of the induced map Z^(2g-1) -> Z^(3g-1).
inline HomologySummary chain_graph_complement_h1(std::size_t g) {
  if (g == 0) return HomologySummary{};
  const std::size_t cols = 2 * g - 1;
  IntMatrix m(3 * g - 1, cols);
  for (std::size_t i = 0; i < cols; ++i) m(i, i) = 1;
  for (std::size_t i = 0; i < g; ++i) {
    m(cols + i, 2 * i) = 1;
    if (2 * i + 1 < cols) m(cols + i, 2 * i + 1) = -1;
  }
  return cokernel(m);
}

}  // namespace cob
