#ifndef XNERVE_TUPLES_HPP_
#define XNERVE_TUPLES_HPP_

#include <compare>
#include <cstddef>
#include <vector>

namespace xnerve {

  // (x_0, ..., x_n) of (n-1)-cells. Cell is either a provider index or a
  // concrete NerveCell.
  template <class Cell>
  struct BoundaryTuple {
    int               dim = 0;
    std::vector<Cell> faces;

    auto operator<=>(BoundaryTuple const&) const = default;
  };

  // (x_0, ..., ^x_l, ..., x_n). `faces` has n+1 slots; slot `omitted` holds
  // a value-initialized Cell and is never read.
  template <class Cell>
  struct HornTuple {
    int               dim     = 0;
    int               omitted = 0;
    std::vector<Cell> faces;

    auto operator<=>(HornTuple const&) const = default;
  };

}  // namespace xnerve

#endif  // XNERVE_TUPLES_HPP_
