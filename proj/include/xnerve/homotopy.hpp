#ifndef XNERVE_HOMOTOPY_HPP_
#define XNERVE_HOMOTOPY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "xnerve/algebra.hpp"
#include "xnerve/group.hpp"
#include "xnerve/nerve.hpp"

namespace xnerve {

  // Connected components of the underlying graph of C, each sorted, ordered
  // by their smallest object.
  std::vector<std::vector<Object>> pi0(CrossedMonoid const& xm);

  // C(t,t) / boundary(A(t)); labels are the smallest morphism id of each
  // coset. Throws std::logic_error if the image of the boundary is not
  // normal.
  GroupPresentation pi1(CrossedModule const& xm, Object t);

  // Ker boundary_t under the fiber product; labels are element ids. Throws
  // std::logic_error if the kernel is not abelian.
  GroupPresentation pi2(CrossedModule const& xm, Object t);

  struct PiComparison {
    int                                     n = 0;
    GroupPresentation                       algebraic;
    GroupPresentation                       simplicial;
    std::optional<std::vector<std::size_t>> isomorphism;  // algebraic -> simplicial
    std::vector<std::string>                problems;

    bool isomorphic() const { return isomorphism.has_value(); }
  };

  // Compares pi1 or pi2 with the brute-force simplicial group at t.
  PiComparison pi_compare(CrossedModule const& xm, int n, Object t,
                          std::uint64_t cap = kDefaultCellCap);

  struct VanishingReport {
    int                      n = 3;
    std::size_t              order = 0;
    std::vector<std::string> problems;

    bool trivial() const { return problems.empty() && order == 1; }
  };

  // Brute-force pi_n at t, expected trivial for n >= 3.
  VanishingReport higher_vanishing(CrossedModule const& xm, Object t,
                                   int n = 3,
                                   std::uint64_t cap = kDefaultCellCap);

}  // namespace xnerve

#endif  // XNERVE_HOMOTOPY_HPP_
