#ifndef XNERVE_NERVE_HPP_
#define XNERVE_NERVE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xnerve/algebra.hpp"
#include "xnerve/level_provider.hpp"
#include "xnerve/tuples.hpp"

namespace xnerve {

  // An n-cell of N(A, C): an upper triangular n x n matrix with morphisms
  // m_jj : x_j -> x_{j-1} on the diagonal and m_ij in A(x_i) above it,
  // together with its object sequence (x_0, ..., x_n). A 0-cell is a single
  // object and has no entries; a 1-cell is a morphism.
  //
  // Entries are stored row-major, upper triangle only, as raw ids.
  class NerveCell {
   public:
    NerveCell() = default;

    // No typing checks; use cell_new() for untrusted input.
    NerveCell(std::vector<Object> objects, std::vector<std::uint32_t> entries)
        : objects_(std::move(objects)), entries_(std::move(entries)) {}

    static NerveCell point(Object p) {
      return NerveCell({p}, {});
    }

    int dim() const noexcept {
      return static_cast<int>(objects_.size()) - 1;
    }

    std::span<Object const> objects() const noexcept {
      return objects_;
    }
    Object object(int i) const {
      return objects_[i];
    }

    // 1-based, 1 <= j <= dim()
    Morphism diagonal(int j) const {
      return Morphism(entries_[slot(j, j)]);
    }
    // 1-based, 1 <= i < j <= dim()
    Element entry(int i, int j) const {
      return Element(entries_[slot(i, j)]);
    }
    // Either of the above as a raw id.
    std::uint32_t raw(int i, int j) const {
      return entries_[slot(i, j)];
    }

    std::span<std::uint32_t const> entries() const noexcept {
      return entries_;
    }

    auto operator<=>(NerveCell const&) const = default;

    static std::size_t num_entries(int n) {
      return static_cast<std::size_t>(n) * (n + 1) / 2;
    }

   private:
    std::size_t slot(int i, int j) const {
      int const n = dim();
      return static_cast<std::size_t>((i - 1) * (n + 1) - (i - 1) * i / 2
                                      + (j - i));
    }

    std::vector<Object>        objects_;
    std::vector<std::uint32_t> entries_;
  };

  struct NerveCellHash {
    std::size_t operator()(NerveCell const& c) const noexcept;
  };

  // (M0, Mn, m) with d_{n-1} M0 = d_0 Mn and m in A(t(M0_11)), the fiber over
  // x_1 of the cell it reconstructs.
  struct CornerTriple {
    NerveCell first;  // d_0 M
    NerveCell last;   // d_n M
    Element   corner; // m_1n

    auto operator<=>(CornerTriple const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction and typing
  ////////////////////////////////////////////////////////////////////////

  // Builds an n-cell from its object sequence (n+1 objects) and its entries
  // in row-major order. Throws CellTypeError naming the first offending
  // position.
  NerveCell cell_new(CrossedMonoid const& xm, std::vector<Object> objects,
                     std::vector<std::uint32_t> entries);

  // The first typing error of `c`, if any, as (row, col); (0, 0) for a bad
  // object sequence.
  std::optional<std::pair<int, int>> check_cell(CrossedMonoid const& xm,
                                                NerveCell const&     c);

  // Canonical text form: "<n> ; <x_0> ... <x_n> ; <entries row-major>".
  std::string to_text(NerveCell const& c);
  NerveCell   parse_cell(CrossedMonoid const& xm, std::string_view text);

  ////////////////////////////////////////////////////////////////////////
  // Simplicial structure
  ////////////////////////////////////////////////////////////////////////

  // eta_{jk} = m_{j+1,j+1} boundary(m_{j+1,j+2} ... m_{j+1,k}), a morphism
  // x_{j+1} -> x_j. Requires 0 <= j < n and j+1 <= k <= n; k = j+1 gives the
  // bare diagonal.
  Morphism eta(CrossedMonoid const& xm, NerveCell const& m, int j, int k);

  // d_j, 0 <= j <= n, n >= 1.
  NerveCell face(CrossedMonoid const& xm, NerveCell const& m, int j);

  // s_j, 0 <= j <= n.
  NerveCell degeneracy(CrossedMonoid const& xm, NerveCell const& m, int j);

  BoundaryTuple<NerveCell> boundary(CrossedMonoid const& xm,
                                    NerveCell const&     m);
  HornTuple<NerveCell>     horn(CrossedMonoid const& xm, NerveCell const& m,
                                int l);

  ////////////////////////////////////////////////////////////////////////
  // Corner bijection
  ////////////////////////////////////////////////////////////////////////

  // M -> (d_0 M, d_n M, m_1n), n >= 2.
  CornerTriple lambda(CrossedMonoid const& xm, NerveCell const& m);

  // Inverse of lambda. Throws std::invalid_argument when d_{n-1} M0 != d_0 Mn
  // or the corner lies in the wrong fiber.
  NerveCell mu(CrossedMonoid const& xm, CornerTriple const& t);

  // lambda(d_j(mu(t))) for 1 <= j <= n-1, n >= 3, computed from the closed
  // corner formulas without assembling mu(t).
  CornerTriple face_of_mu(CrossedMonoid const& xm, CornerTriple const& t,
                          int j);

  // Applies F to the objects and diagonal and f to the fiber entries.
  NerveCell induced_map(CrossedMonoid const& src, XMorphism const& m,
                        NerveCell const& cell);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::uint64_t kDefaultCellCap = 5'000'000;

  // Ranks N_n in its canonical order: object sequences lexicographically,
  // then entries row-major, each entry running over its hom-set or fiber in
  // id order.
  class NerveIndex {
   public:
    // Tables for dimensions 0..max_dim. Dimensions whose cell count does not
    // fit in 64 bits are dropped from the top.
    NerveIndex(CrossedMonoid const& xm, int max_dim);

    int           max_dim() const noexcept { return max_dim_; }
    std::uint64_t count(int n) const;

    std::uint64_t rank(NerveCell const& c) const;
    NerveCell     unrank(int n, std::uint64_t r) const;

   private:
    struct Level {
      // tail[p * O + y]: weighted number of completions of positions p+1..n
      // given x_p = y.
      std::vector<std::uint64_t> tail;
      std::uint64_t              count = 0;
    };

    std::uint64_t weight(int n, int p, Object x) const;
    std::uint64_t edge(Object prev, Object next) const;

    CrossedMonoid const* xm_;
    int                  max_dim_;
    std::vector<Level>   levels_;
  };

  // All n-cells in canonical order. Throws CapacityError when there are more
  // than `cap` of them.
  std::vector<NerveCell> enumerate(CrossedMonoid const& xm, int n,
                                   std::uint64_t cap = kDefaultCellCap);

  // The nerve as a LevelProvider over cell ranks. Holds its own copy of the
  // crossed monoid.
  class NerveProvider final : public LevelProvider {
   public:
    explicit NerveProvider(CrossedMonoid xm, int max_dim = 8);
    NerveProvider(NerveProvider const&)            = delete;
    NerveProvider& operator=(NerveProvider const&) = delete;

    int           max_dim() const override { return index_.max_dim(); }
    std::uint64_t count(int n) const override { return index_.count(n); }
    CellIndex     face(int n, int j, CellIndex c) const override;
    CellIndex     degeneracy(int n, int j, CellIndex c) const override;
    std::string   describe(int n, CellIndex c) const override;

    NerveCell cell(int n, CellIndex c) const { return index_.unrank(n, c); }
    CellIndex index(NerveCell const& c) const { return index_.rank(c); }

    CrossedMonoid const& crossed_monoid() const noexcept { return xm_; }

   private:
    CrossedMonoid xm_;
    NerveIndex    index_;
  };

}  // namespace xnerve

#endif  // XNERVE_NERVE_HPP_
