#ifndef XNERVE_FILLERS_HPP_
#define XNERVE_FILLERS_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "xnerve/algebra.hpp"
#include "xnerve/nerve.hpp"
#include "xnerve/tuples.hpp"

namespace xnerve {

  using CellBoundary = BoundaryTuple<NerveCell>;
  using CellHorn     = HornTuple<NerveCell>;

  // A filler whose recomputed face disagrees with the horn. Never expected;
  // thrown instead of returning a wrong cell.
  class FillerError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  struct FaceCheck {
    int       index = 0;
    NerveCell expected;
    NerveCell actual;
    bool      match = false;
  };

  struct FillResult {
    NerveCell              filler;
    std::vector<FaceCheck> checks;  // one per given face

    bool verified() const;
  };

  ////////////////////////////////////////////////////////////////////////
  // Cell-level tuples
  ////////////////////////////////////////////////////////////////////////

  // Well-typed faces of the right dimension, pairwise compatible.
  bool in_kernel(CrossedMonoid const& xm, CellBoundary const& t);
  bool in_horns(CrossedMonoid const& xm, CellHorn const& h);

  // (d_{l-1} x_0, ..., d_{l-1} x_{l-1}, d_l x_{l+1}, ..., d_l x_n), n >= 2.
  CellBoundary beta(CrossedMonoid const& xm, CellHorn const& h);

  // Puts `face` into the omitted slot.
  CellBoundary complete(CellHorn const& h, NerveCell face);

  ////////////////////////////////////////////////////////////////////////
  // The image of b_3
  ////////////////////////////////////////////////////////////////////////

  // (m3_12)^(m3_22) m1_12 == (m2_12)^(m3_22) m0_12 for a tuple in the
  // 3-dimensional simplicial kernel. Necessary for membership in the image
  // of b_3 over any crossed monoid, sufficient over a crossed module.
  bool image_b3(CrossedMonoid const& xm, CellBoundary const& t);

  ////////////////////////////////////////////////////////////////////////
  // Fillers for crossed modules
  ////////////////////////////////////////////////////////////////////////

  // The unique cell with boundary t, n >= 3. Returns nothing when t is not
  // in the image of b_n (only possible for n = 3). Throws
  // std::invalid_argument when t is not in the simplicial kernel.
  std::optional<NerveCell> fill_boundary(CrossedModule const& xm,
                                         CellBoundary const&  t);

  // (M0, Mn, m2_{1,n-1}), n >= 4.
  CornerTriple nu(CellBoundary const& t);

  // Dimension-specific fillers. The horn must be valid (std::invalid_argument
  // otherwise) and of the stated dimension.
  FillResult fill_horn1(CrossedModule const& xm, CellHorn const& h);
  FillResult fill_horn2(CrossedModule const& xm, CellHorn const& h);
  FillResult fill_horn3(CrossedModule const& xm, CellHorn const& h);
  FillResult fill_horn4(CrossedModule const& xm, CellHorn const& h);
  FillResult fill_horn_high(CrossedModule const& xm, CellHorn const& h);

  // Dispatches on the dimension.
  FillResult fill_horn(CrossedModule const& xm, CellHorn const& h);

  // Same, for a crossed monoid not yet known to be a crossed module. Throws
  // RefusalError naming the failed hypothesis ("groupoid" or "fiber-group").
  FillResult fill_horn(CrossedMonoid const& xm, CellHorn const& h);

}  // namespace xnerve

#endif  // XNERVE_FILLERS_HPP_
