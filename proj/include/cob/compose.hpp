#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cob/triplet.hpp"

namespace cob {

/// Presentation of the product cobordism (surface x interval) of genus g:
/// no surgery link, two parallel zero-framed copies of the chain graph.
inline TripletPresentation identity_presentation(std::size_t g) {
  return TripletPresentation::make(g, g, 0);
}

/// Named span of components in a composite link, in presentation order.
struct ComponentRange {
  std::string label;
  std::size_t offset = 0;
  std::size_t count = 0;

  bool operator==(const ComponentRange&) const = default;
};

/// Result of gluing two presentations along their shared-genus interface.
///
/// The composite link is ordered [L1 | U | V | L2]: the two input links with
/// 2g new components in between, where U closes up the top circles of the
/// first presentation and V the bottom circles of the second, clasped in
/// pairs with linking -1.
struct CompositeBuild {
  TripletPresentation result;
  std::size_t interface_genus = 0;
  std::vector<ComponentRange> component_order;
};

/// Glue bottom-to-top: the first argument is the lower cobordism, its top is
/// identified with the second argument's bottom. Total on validated inputs;
/// no semi-Lagrangian assumption is made.
inline CompositeBuild compose(const TripletPresentation& lo,
                              const TripletPresentation& hi) {
  require_valid(lo);
  require_valid(hi);
  if (lo.g_top != hi.g_bottom)
    throw DimensionError("compose: interface genus mismatch (top of first != bottom of second)");
  const std::size_t g = lo.g_top;
  const std::size_t n1 = lo.n_link, n2 = hi.n_link;
  const std::size_t n = n1 + 2 * g + n2;

  CompositeBuild out;
  out.interface_genus = g;
  out.component_order = {{"L1", 0, n1},
                         {"U", n1, g},
                         {"V", n1 + g, g},
                         {"L2", n1 + 2 * g, n2}};

  TripletPresentation& r = out.result;
  r = TripletPresentation::make(lo.g_bottom, hi.g_top, n);

  IntMatrix& a = r.link;
  a.set_block(0, 0, lo.link);
  a.set_block(0, n1, lo.top_link.transposed());
  a.set_block(n1, 0, lo.top_link);
  a.set_block(n1, n1, lo.top_top);
  // Clasp pattern between the two closure families.
  for (std::size_t k = 0; k < g; ++k) {
    a(n1 + k, n1 + g + k) = -1;
    a(n1 + g + k, n1 + k) = -1;
  }
  a.set_block(n1 + g, n1 + g, hi.bottom_bottom);
  a.set_block(n1 + g, n1 + 2 * g, hi.bottom_link);
  a.set_block(n1 + 2 * g, n1 + g, hi.bottom_link.transposed());
  a.set_block(n1 + 2 * g, n1 + 2 * g, hi.link);

  r.bottom_link.set_block(0, 0, lo.bottom_link);
  r.bottom_link.set_block(0, n1, lo.top_bottom.transposed());

  r.top_link.set_block(0, n1 + g, hi.top_bottom);
  r.top_link.set_block(0, n1 + 2 * g, hi.top_link);

  r.bottom_bottom = lo.bottom_bottom;
  r.top_top = hi.top_top;
  // top_bottom stays zero: the far graphs do not link.
  return out;
}

/// The integer attached to a decomposition along a genus-g surface:
///   sign_+(link of lower) + sign_+(link of upper) + g - sign_+(glued link).
/// Zero for semi-Lagrangian rational-homology-sphere presentations.
inline long long s_invariant(const TripletPresentation& lo,
                             const TripletPresentation& hi) {
  CompositeBuild glued = compose(lo, hi);
  long long s1 = static_cast<long long>(positive_index(lo.link));
  long long s2 = static_cast<long long>(positive_index(hi.link));
  long long s12 = static_cast<long long>(positive_index(glued.result.link));
  return s1 + s2 + static_cast<long long>(glued.interface_genus) - s12;
}

/// Outcome of checking the gluing identities on a composed pair:
/// signature additivity, the determinant product rule, and multiplicativity
/// of the filling homology order. Inputs that are not semi-Lagrangian
/// rational presentations are reported, not rejected.
struct GluingReport {
  bool inputs_semi_lagrangian = false;
  bool signature_ok = false;
  bool determinant_ok = false;
  bool order_ok = false;

  SignatureTriple expected_signature, actual_signature;
  Int expected_determinant, actual_determinant;
  Int expected_order, actual_order;

  bool all_ok() const {
    return inputs_semi_lagrangian && signature_ok && determinant_ok && order_ok;
  }

  std::string to_string() const {
    if (!inputs_semi_lagrangian)
      return "inputs are not semi-Lagrangian Q-presentations; identities not checked";
    std::string out;
    out += "signature: " + std::string(signature_ok ? "ok" : "FAIL") +
           " expected " + expected_signature.to_string() + " got " +
           actual_signature.to_string() + "\n";
    out += "determinant: " + std::string(determinant_ok ? "ok" : "FAIL") +
           " expected " + expected_determinant.str() + " got " +
           actual_determinant.str() + "\n";
    out += "homology order: " + std::string(order_ok ? "ok" : "FAIL") +
           " expected " + expected_order.str() + " got " + actual_order.str();
    return out;
  }
};

inline GluingReport verify_gluing_identities(const TripletPresentation& lo,
                                             const TripletPresentation& hi) {
  GluingReport rep;
  ClassificationReport c1 = classify(lo);
  ClassificationReport c2 = classify(hi);
  rep.inputs_semi_lagrangian =
      c1.semi_lagrangian_matrix && c2.semi_lagrangian_matrix;
  if (!rep.inputs_semi_lagrangian) return rep;

  CompositeBuild glued = compose(lo, hi);
  const std::size_t g = glued.interface_genus;

  SignatureTriple s1 = signature_symmetric(lo.link);
  SignatureTriple s2 = signature_symmetric(hi.link);
  rep.expected_signature = {s1.pos + s2.pos + g, 0, s1.neg + s2.neg + g};
  rep.actual_signature = signature_symmetric(glued.result.link);
  rep.signature_ok = rep.expected_signature == rep.actual_signature;

  Int d1 = determinant(lo.link);
  Int d2 = determinant(hi.link);
  rep.expected_determinant = (g % 2 == 0) ? d1 * d2 : Int(-d1 * d2);
  rep.actual_determinant = determinant(glued.result.link);
  rep.determinant_ok = rep.expected_determinant == rep.actual_determinant;

  auto o1 = h1_filling(lo).order();
  auto o2 = h1_filling(hi).order();
  auto o12 = h1_filling(glued.result).order();
  if (o1 && o2 && o12) {
    rep.expected_order = *o1 * *o2;
    rep.actual_order = *o12;
    rep.order_ok = rep.expected_order == rep.actual_order;
  }
  return rep;
}

/// Horizontal product of two empty-bottom presentations: links placed side
/// by side with no mutual linking, tops concatenated. For genus-0 tops this
/// is the connected sum of the fillings.
inline TripletPresentation bullet(const TripletPresentation& x,
                                  const TripletPresentation& y) {
  require_valid(x);
  require_valid(y);
  if (x.g_bottom != 0 || y.g_bottom != 0)
    throw DimensionError("bullet requires empty-bottom presentations");
  TripletPresentation r =
      TripletPresentation::make(0, x.g_top + y.g_top, x.n_link + y.n_link);
  r.link.set_block(0, 0, x.link);
  r.link.set_block(x.n_link, x.n_link, y.link);
  r.top_link.set_block(0, 0, x.top_link);
  r.top_link.set_block(x.g_top, x.n_link, y.top_link);
  r.top_top.set_block(0, 0, x.top_top);
  r.top_top.set_block(x.g_top, x.g_top, y.top_top);
  return r;
}

}  // namespace cob
