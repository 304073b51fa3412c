#ifndef XNERVE_TESTS_ORACLES_HPP_
#define XNERVE_TESTS_ORACLES_HPP_

// Independent slow reimplementations used to cross-check the library.

#include <algorithm>
#include <set>
#include <vector>

#include "xnerve/simplicial.hpp"

namespace oracle {

  using xnerve::CellIndex;
  using xnerve::LevelProvider;

  // Every (n+1)-tuple of (n-1)-cells, filtered by pairwise compatibility
  // computed directly from the provider. `omitted` < 0 for the full kernel.
  inline std::vector<std::vector<CellIndex>> naive_tuples(
      LevelProvider const& p, int n, int omitted) {
    std::uint64_t const    N = p.count(n - 1);
    std::vector<std::vector<CellIndex>> faces(N);
    for (CellIndex c = 0; c < N && n >= 2; ++c) {
      for (int j = 0; j < n; ++j) {
        faces[c].push_back(p.face(n - 1, j, c));
      }
    }
    std::vector<CellIndex> cur(n + 1, 0);
    std::vector<std::vector<CellIndex>> out;
    while (true) {
      bool ok = true;
      for (int k = 0; k <= n && ok && n >= 2; ++k) {
        for (int j = 0; j < k && ok; ++j) {
          if (j == omitted || k == omitted) {
            continue;
          }
          ok = faces[cur[k]][j] == faces[cur[j]][k - 1];
        }
      }
      if (ok) {
        out.push_back(cur);
      }
      int k = n;
      while (k >= 0) {
        if (k == omitted) {
          --k;
          continue;
        }
        if (++cur[k] < N) {
          break;
        }
        cur[k] = 0;
        --k;
      }
      if (k < 0) {
        break;
      }
    }
    return out;
  }

  // The set of boundary (or horn) vectors of all n-cells.
  inline std::set<std::vector<CellIndex>> naive_image(LevelProvider const& p,
                                                      int n, int omitted) {
    std::set<std::vector<CellIndex>> out;
    for (CellIndex c = 0; c < p.count(n); ++c) {
      std::vector<CellIndex> v(n + 1, 0);
      for (int j = 0; j <= n; ++j) {
        if (j != omitted) {
          v[j] = p.face(n, j, c);
        }
      }
      out.insert(v);
    }
    return out;
  }

}  // namespace oracle

#endif  // XNERVE_TESTS_ORACLES_HPP_

#include <array>
#include <optional>
#include <random>

#include "xnerve/fillers.hpp"

namespace oracle {

  using xnerve::CellHorn;
  using xnerve::CrossedMonoid;
  using xnerve::Element;
  using xnerve::Morphism;
  using xnerve::NerveCell;

  // Converts a provider horn into cells.
  inline CellHorn to_cells(xnerve::NerveProvider const& p,
                           xnerve::Horn const&          h) {
    CellHorn out{h.dim, h.omitted, {}};
    for (int j = 0; j <= h.dim; ++j) {
      out.faces.push_back(j == h.omitted ? NerveCell()
                                         : p.cell(h.dim - 1, h.faces[j]));
    }
    return out;
  }

  // `count` horns drawn uniformly with replacement.
  inline std::vector<CellHorn> sample_horns(xnerve::NerveProvider const& p,
                                            int n, int l, std::size_t count,
                                            std::uint64_t seed) {
    auto                                  all = xnerve::horns(p, n, l);
    std::mt19937_64                       rng(seed);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::vector<CellHorn>                 out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(to_cells(p, all[pick(rng)]));
    }
    return out;
  }

  // Corner of the faces of a 3-cell, written out by hand:
  // d_0 -> m23, d_1 -> m13^m22 m23, d_2 -> m12 m13, d_3 -> m12.
  inline Element corner_of_face(CrossedMonoid const& xm, NerveCell const& m,
                                int j) {
    switch (j) {
      case 0:
        return m.entry(2, 3);
      case 1:
        return xm.mul(xm.act(m.entry(1, 3), m.diagonal(2)), m.entry(2, 3));
      case 2:
        return xm.mul(m.entry(1, 2), m.entry(1, 3));
      default:
        return m.entry(1, 2);
    }
  }

  using WMatrix = std::array<std::array<std::optional<Element>, 5>, 5>;

  // w_st = (d_s M^t)_12 for s < t, (d_{s-1} M^t)_12 for s > t, through the
  // library's face maps. Column l stays empty.
  inline WMatrix w_from_faces(CrossedMonoid const& xm, CellHorn const& h) {
    WMatrix w{};
    for (int s = 0; s <= 4; ++s) {
      for (int t = 0; t <= 4; ++t) {
        if (s == t || t == h.omitted) {
          continue;
        }
        int j   = s < t ? s : s - 1;
        w[s][t] = xnerve::face(xm, h.faces[t], j).entry(1, 2);
      }
    }
    return w;
  }

  struct Shared {
    Morphism m22, m33;
    Element  m23;
  };

  // m22 := m0_11 = m3_22 = m4_22, m23 := m0_12 = m4_23,
  // m33 := m0_22 = m1_22 = m4_33, each from any available face.
  inline std::optional<Shared> shared_entries(CellHorn const& h) {
    auto const& f = h.faces;
    int const   l = h.omitted;
    std::vector<Morphism> a22, a33;
    std::vector<Element>  a23;
    if (l != 0) {
      a22.push_back(f[0].diagonal(1));
      a23.push_back(f[0].entry(1, 2));
      a33.push_back(f[0].diagonal(2));
    }
    if (l != 3) {
      a22.push_back(f[3].diagonal(2));
    }
    if (l != 4) {
      a22.push_back(f[4].diagonal(2));
      a23.push_back(f[4].entry(2, 3));
      a33.push_back(f[4].diagonal(3));
    }
    if (l != 1) {
      a33.push_back(f[1].diagonal(2));
    }
    auto same = [](auto const& v) {
      return std::all_of(v.begin(), v.end(),
                         [&](auto const& x) { return x == v.front(); });
    };
    if (a22.empty() || a23.empty() || a33.empty() || !same(a22) || !same(a23)
        || !same(a33)) {
      return std::nullopt;
    }
    return Shared{a22.front(), a33.front(), a23.front()};
  }

  // The displayed W, entry by entry, in the shared notation.
  inline WMatrix w_displayed(CrossedMonoid const& xm, CellHorn const& h) {
    auto const sh = shared_entries(h);
    WMatrix    w{};
    if (!sh) {
      return w;
    }
    auto const& M   = h.faces;
    auto        mul = [&](Element a, Element b) { return xm.mul(a, b); };
    auto        act = [&](Element a, Morphism g) { return xm.act(a, g); };
    Morphism    twist =
        xm.compose(xm.compose(sh->m22, xm.boundary(sh->m23)), sh->m33);
    for (int t = 0; t <= 4; ++t) {
      if (t == h.omitted) {
        continue;
      }
      auto const& m = M[t];
      if (t != 0) {
        w[0][t] = m.entry(2, 3);
      }
      if (t != 1) {
        Morphism g = t == 0 ? sh->m33 : t == 2 ? twist : sh->m22;
        if (t == 0) {
          w[1][t] = m.entry(2, 3);
        } else {
          w[1][t] = mul(act(m.entry(1, 3), g), m.entry(2, 3));
        }
      }
      if (t != 2) {
        if (t < 2) {
          w[2][t] = mul(act(m.entry(1, 3), sh->m33), m.entry(2, 3));
        } else {
          w[2][t] = mul(m.entry(1, 2), m.entry(1, 3));
        }
      }
      if (t != 3) {
        w[3][t] = t < 3 ? mul(m.entry(1, 2), m.entry(1, 3)) : m.entry(1, 2);
      }
      if (t != 4) {
        w[4][t] = m.entry(1, 2);
      }
    }
    return w;
  }

  // Off row and column l the matrix is symmetric.
  inline bool w_symmetric(WMatrix const& w, int l) {
    for (int s = 0; s <= 4; ++s) {
      for (int t = 0; t <= 4; ++t) {
        if (s == t || s == l || t == l) {
          continue;
        }
        if (w[s][t] != w[t][s]) {
          return false;
        }
      }
    }
    return true;
  }

  // The identity the proof checks for the omitted index l.
  inline bool w_identity(xnerve::CrossedModule const& cm, WMatrix const& w,
                         CellHorn const& h) {
    auto const& xm = cm.monoid();
    auto const  sh = shared_entries(h);
    if (!sh) {
      return false;
    }
    auto mul = [&](Element a, Element b) { return xm.mul(a, b); };
    auto inv = [&](Element a) { return cm.inverse(a); };
    auto act = [&](Element a, Morphism g) { return xm.act(a, g); };
    auto at  = [&](int s, int t) { return *w[s][t]; };
    Morphism twist =
        xm.compose(xm.compose(sh->m22, xm.boundary(sh->m23)), sh->m33);
    switch (h.omitted) {
      case 0:
        return mul(at(0, 2), inv(at(0, 1)))
               == act(mul(inv(at(0, 4)), at(0, 3)), sh->m33);
      case 1:
        return mul(at(1, 2), inv(at(1, 0)))
               == act(mul(inv(at(1, 4)), at(1, 3)), sh->m33);
      case 2:
        return mul(at(2, 1), inv(at(2, 0)))
               == act(mul(inv(at(2, 4)), at(2, 3)), twist);
      case 3:
        return mul(at(3, 1), inv(at(3, 0)))
               == act(mul(inv(at(3, 4)), at(3, 2)), sh->m22);
      default:
        return mul(at(4, 1), inv(at(4, 0)))
               == act(mul(inv(at(4, 3)), at(4, 2)), sh->m22);
    }
  }

}  // namespace oracle
