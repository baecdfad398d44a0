#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cob/smith.hpp"

namespace cob {

/// A finitely generated abelian group: free rank plus the invariant factors
/// greater than one, in divisibility order d1 | d2 | ...
struct HomologySummary {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const HomologySummary&) const = default;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }

  /// Cardinality when finite (product of the invariant factors).
  std::optional<Int> order() const {
    if (!is_finite()) return std::nullopt;
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
      if (!out.empty()) out += " + ";
      out += part;
    };
    if (free_rank == 1)
      append("Z");
    else if (free_rank > 1)
      append("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) append("Z/" + d.str());
    return out;
  }
};

/// Group presented by the rows of `relations` acting on Z^cols:
/// Z^cols / <rows>.
inline HomologySummary homology_from_relations(const IntMatrix& relations) {
  SmithDecomposition snf = smith_normal_form(relations);
  HomologySummary h;
  h.free_rank = relations.cols() - snf.rank();
  for (const auto& d : snf.factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

/// Cokernel of the linear map given by `m`: Z^rows / (column span).
inline HomologySummary cokernel(const IntMatrix& m) {
  return homology_from_relations(m.transposed());
}

}  // namespace cob
