#pragma once

#include "cob/triplet.hpp"

namespace cob {
namespace fixtures {

/// Two-component link with framings 1 and -3 linking once, a genus-1 bottom
/// graph meeting the components with signs +1/-1, and an unlinked genus-1
/// top graph clasping the bottom one. The filling has homology Z/4, and the
/// rational-form semi-Lagrangian conditions hold while the integral ones
/// fail: the bottom-circle class is 2-torsion away from the top span.
///
/// The bottom row is not an integer combination of the link rows, so this
/// instance lies outside the family produced by gen_semilagrangian; it is
/// kept as a fixture precisely for that reason.
inline TripletPresentation rational_only_semilagrangian() {
  TripletPresentation t;
  t.g_bottom = 1;
  t.g_top = 1;
  t.n_link = 2;
  t.link = IntMatrix{{Int(1), Int(1)}, {Int(1), Int(-3)}};
  t.bottom_link = IntMatrix{{Int(1), Int(-1)}};
  t.top_link = IntMatrix{{Int(0), Int(0)}};
  t.bottom_bottom = IntMatrix{{Int(0)}};
  t.top_bottom = IntMatrix{{Int(-1)}};
  t.top_top = IntMatrix{{Int(0)}};
  return t;
}

/// One zero-framed link component clasped once by a genus-1 bottom graph,
/// empty top: the complement of one Hopf-link component after surgery on
/// the other. The filling is not a rational homology sphere, yet the
/// boundary carries exactly twice the rank of the cobordism homology.
inline TripletPresentation surgered_hopf_complement() {
  TripletPresentation t;
  t.g_bottom = 1;
  t.g_top = 0;
  t.n_link = 1;
  t.link = IntMatrix{{Int(0)}};
  t.bottom_link = IntMatrix{{Int(1)}};
  t.top_link = IntMatrix(0, 1);
  t.bottom_bottom = IntMatrix{{Int(0)}};
  t.top_bottom = IntMatrix(0, 1);
  t.top_top = IntMatrix(0, 0);
  return t;
}

}  // namespace fixtures
}  // namespace cob
