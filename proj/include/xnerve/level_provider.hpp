#ifndef XNERVE_LEVEL_PROVIDER_HPP_
#define XNERVE_LEVEL_PROVIDER_HPP_

#include <cstdint>
#include <string>

namespace xnerve {

  // Cells of one level are numbered 0..count(n)-1; equality of cells is
  // equality of indices.
  using CellIndex = std::uint64_t;

  // A finite simplicial set, truncated at max_dim(). Implementations must
  // be safe to call concurrently.
  class LevelProvider {
   public:
    virtual ~LevelProvider() = default;

    virtual int           max_dim() const = 0;
    virtual std::uint64_t count(int n) const = 0;
    // d_j : X_n -> X_{n-1}, 0 <= j <= n, n >= 1
    virtual CellIndex face(int n, int j, CellIndex c) const = 0;
    // s_j : X_n -> X_{n+1}, 0 <= j <= n
    virtual CellIndex degeneracy(int n, int j, CellIndex c) const = 0;

    virtual std::string describe(int n, CellIndex c) const {
      return std::to_string(n) + ":" + std::to_string(c);
    }
  };

}  // namespace xnerve

#endif  // XNERVE_LEVEL_PROVIDER_HPP_
