#ifndef XNERVE_SIMPLICIAL_HPP_
#define XNERVE_SIMPLICIAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xnerve/algebra.hpp"
#include "xnerve/group.hpp"
#include "xnerve/level_provider.hpp"
#include "xnerve/nerve.hpp"
#include "xnerve/tuples.hpp"

namespace xnerve {

  using Boundary = BoundaryTuple<CellIndex>;
  using Horn     = HornTuple<CellIndex>;

  // Labels used by audit_simplicial, one per identity family.
  inline constexpr char const* kFaceFace        = "d_j d_k = d_{k-1} d_j";
  inline constexpr char const* kFaceDegenBelow  = "d_j s_k = s_{k-1} d_j";
  inline constexpr char const* kFaceDegenSame   = "d_j s_j = id";
  inline constexpr char const* kFaceDegenNext   = "d_{j+1} s_j = id";
  inline constexpr char const* kFaceDegenAbove  = "d_k s_j = s_j d_{k-1}";
  inline constexpr char const* kDegenDegen      = "s_j s_{k-1} = s_k s_j";

  // Checks every instance of the six simplicial identity families on every
  // cell of dimension <= maxdim. Instances whose result would lie above the
  // provider's max_dim() are skipped. Witnesses are (n, cell, j, k).
  ValidationReport audit_simplicial(LevelProvider const& p, int maxdim,
                                    std::uint64_t cap = kDefaultCellCap);

  // (d_0 c, ..., d_n c)
  Boundary boundary(LevelProvider const& p, int n, CellIndex c);
  Horn     horn(LevelProvider const& p, int n, int l, CellIndex c);

  // d_j x_k = d_{k-1} x_j for all j < k (skipping the omitted face of a
  // horn). Tuples of 0-cells are always compatible.
  bool in_kernel(LevelProvider const& p, Boundary const& t);
  bool in_horns(LevelProvider const& p, Horn const& h);

  // All of the simplicial kernel in dimension n >= 1 (tuples of (n-1)-cells),
  // in lexicographic order. Built by joining cells on shared faces.
  std::vector<Boundary> simplicial_kernel(LevelProvider const& p, int n,
                                          std::uint64_t cap = kDefaultCellCap);

  // All l-horns in dimension n >= 1, in lexicographic order.
  std::vector<Horn> horns(LevelProvider const& p, int n, int l,
                          std::uint64_t cap = kDefaultCellCap);

  // (d_{l-1} x_0, ..., d_{l-1} x_{l-1}, d_l x_{l+1}, ..., d_l x_n), n >= 2.
  Boundary beta(LevelProvider const& p, Horn const& h);

  struct CoskeletalLevel {
    int           dim = 0;
    std::uint64_t cells = 0;
    std::uint64_t kernel = 0;
    std::uint64_t image = 0;
    bool          injective = true;
    bool          surjective = true;
    // two cells with the same boundary
    std::optional<std::pair<CellIndex, CellIndex>> collision;
    // a kernel tuple that is nobody's boundary
    std::optional<Boundary> missing;
  };

  struct CoskeletalReport {
    std::vector<CoskeletalLevel> levels;
    bool bijective() const;
  };

  // Decides bijectivity of b_k for n < k <= upto.
  CoskeletalReport check_coskeletal(LevelProvider const& p, int n, int upto,
                                    std::uint64_t cap = kDefaultCellCap);

  struct KanLevel {
    int                 dim = 0;
    int                 omitted = 0;
    std::uint64_t       horns = 0;
    bool                fillable = true;
    std::optional<Horn> witness;  // the first unfillable horn
  };

  struct KanReport {
    std::vector<KanLevel> levels;
    bool kan() const;
    KanLevel const* first_failure() const;
  };

  // Decides surjectivity of b^k_l for from <= k <= upto and every l.
  KanReport check_kan(LevelProvider const& p, int upto, int from = 1,
                      std::uint64_t cap = kDefaultCellCap);

  struct PiResult {
    GroupPresentation      group;
    // class representatives (lexicographically minimal cells), in label order
    std::vector<CellIndex> representatives;
    // sphere cells {y : b(y) = (x, ..., x)} and their class
    std::vector<CellIndex>   spheres;
    std::vector<std::size_t> class_of;
    // axiom failures of the computed table; empty for a genuine group
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
  };

  // The n-th homotopy group at the 0-cell `basepoint`, n >= 1, by brute
  // force. Refuses (RefusalError "kan") unless every horn of dimension
  // <= n+1 fills.
  PiResult pi_bruteforce(LevelProvider const& p, int n, CellIndex basepoint,
                         std::uint64_t cap = kDefaultCellCap);

  // s_0 ... s_0 x in dimension n.
  CellIndex degenerate_point(LevelProvider const& p, CellIndex x, int n);

}  // namespace xnerve

#endif  // XNERVE_SIMPLICIAL_HPP_
