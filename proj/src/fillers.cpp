#include "xnerve/fillers.hpp"

#include <algorithm>

namespace xnerve {

  namespace {

    void require_horn(CrossedMonoid const& xm, CellHorn const& h, int dim) {
      if (h.dim != dim) {
        throw std::invalid_argument("expected a horn of dimension "
                                    + std::to_string(dim));
      }
      if (!in_horns(xm, h)) {
        throw std::invalid_argument("faces do not form a horn");
      }
    }

    FillResult verified(CrossedMonoid const& xm, CellHorn const& h,
                        NerveCell filler) {
      FillResult r{std::move(filler), {}};
      if (check_cell(xm, r.filler)) {
        throw FillerError("filler is not a well-typed cell");
      }
      for (int j = 0; j <= h.dim; ++j) {
        if (j == h.omitted) {
          continue;
        }
        auto actual = face(xm, r.filler, j);
        bool match  = actual == h.faces[j];
        r.checks.push_back({j, h.faces[j], std::move(actual), match});
        if (!match) {
          throw FillerError("face " + std::to_string(j) + " of the filler "
                            + to_text(r.filler) + " differs from the horn");
        }
      }
      return r;
    }

    NerveCell two_cell(CrossedMonoid const& xm, Morphism m11, Element m12,
                       Morphism m22) {
      return NerveCell({xm.target(m11), xm.source(m11), xm.source(m22)},
                       {m11.value, m12.value, m22.value});
    }

    bool compatible(CrossedMonoid const& xm, std::vector<NerveCell> const& x,
                    int n, int omitted) {
      if (static_cast<int>(x.size()) != n + 1) {
        return false;
      }
      for (int k = 0; k <= n; ++k) {
        if (k == omitted) {
          continue;
        }
        if (x[k].dim() != n - 1 || check_cell(xm, x[k])) {
          return false;
        }
      }
      if (n < 2) {
        return true;
      }
      for (int k = 0; k <= n; ++k) {
        for (int j = 0; j < k; ++j) {
          if (j == omitted || k == omitted) {
            continue;
          }
          if (face(xm, x[k], j) != face(xm, x[j], k - 1)) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  bool FillResult::verified() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](FaceCheck const& c) { return c.match; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Cell-level tuples
  ////////////////////////////////////////////////////////////////////////

  bool in_kernel(CrossedMonoid const& xm, CellBoundary const& t) {
    return compatible(xm, t.faces, t.dim, -1);
  }

  bool in_horns(CrossedMonoid const& xm, CellHorn const& h) {
    return h.omitted >= 0 && h.omitted <= h.dim
           && compatible(xm, h.faces, h.dim, h.omitted);
  }

  CellBoundary beta(CrossedMonoid const& xm, CellHorn const& h) {
    int const n = h.dim;
    int const l = h.omitted;
    if (n < 2) {
      throw std::out_of_range("beta needs a horn of dimension >= 2");
    }
    CellBoundary y{n - 1, {}};
    for (int i = 0; i < l; ++i) {
      y.faces.push_back(face(xm, h.faces[i], l - 1));
    }
    for (int i = l + 1; i <= n; ++i) {
      y.faces.push_back(face(xm, h.faces[i], l));
    }
    return y;
  }

  CellBoundary complete(CellHorn const& h, NerveCell face) {
    CellBoundary t{h.dim, h.faces};
    t.faces[h.omitted] = std::move(face);
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // The image of b_3
  ////////////////////////////////////////////////////////////////////////

  bool image_b3(CrossedMonoid const& xm, CellBoundary const& t) {
    if (t.dim != 3 || !in_kernel(xm, t)) {
      throw std::invalid_argument("image_b3 needs a tuple in the 3-dimensional "
                                  "simplicial kernel");
    }
    auto const& m = t.faces;
    Morphism    g = m[3].diagonal(2);
    return xm.mul(xm.act(m[3].entry(1, 2), g), m[1].entry(1, 2))
           == xm.mul(xm.act(m[2].entry(1, 2), g), m[0].entry(1, 2));
  }

  ////////////////////////////////////////////////////////////////////////
  // Fillers
  ////////////////////////////////////////////////////////////////////////

  CornerTriple nu(CellBoundary const& t) {
    int const n = t.dim;
    if (n < 4) {
      throw std::invalid_argument("nu needs a tuple of dimension >= 4");
    }
    return {t.faces[0], t.faces[n], t.faces[2].entry(1, n - 1)};
  }

  std::optional<NerveCell> fill_boundary(CrossedModule const& cm,
                                         CellBoundary const&  t) {
    auto const& xm = cm.monoid();
    if (t.dim < 3 || !in_kernel(xm, t)) {
      throw std::invalid_argument("fill_boundary needs a tuple in the "
                                  "simplicial kernel of dimension >= 3");
    }
    NerveCell m;
    if (t.dim == 3) {
      if (!image_b3(xm, t)) {
        return std::nullopt;
      }
      auto const& f = t.faces;
      Element     c = xm.mul(cm.inverse(f[3].entry(1, 2)), f[2].entry(1, 2));
      m             = mu(xm, {f[0], f[3], c});
    } else {
      m = mu(xm, nu(t));
    }
    for (int j = 0; j <= t.dim; ++j) {
      if (face(xm, m, j) != t.faces[j]) {
        return std::nullopt;
      }
    }
    return m;
  }

  FillResult fill_horn1(CrossedModule const& cm, CellHorn const& h) {
    auto const& xm = cm.monoid();
    require_horn(xm, h, 1);
    // the one given face is a point; the identity on it fills
    Object p = h.faces[1 - h.omitted].object(0);
    return verified(xm, h, NerveCell({p, p}, {xm.identity(p).value}));
  }

  FillResult fill_horn2(CrossedModule const& cm, CellHorn const& h) {
    auto const& xm = cm.monoid();
    require_horn(xm, h, 2);
    auto const& x = h.faces;
    Morphism    m11, m22;
    switch (h.omitted) {
      case 0:
        m11 = x[2].diagonal(1);
        m22 = xm.compose(cm.inverse(m11), x[1].diagonal(1));
        break;
      case 1:
        m11 = x[2].diagonal(1);
        m22 = x[0].diagonal(1);
        break;
      default:
        m22 = x[0].diagonal(1);
        m11 = xm.compose(x[1].diagonal(1), cm.inverse(m22));
        break;
    }
    Element e = xm.unit(xm.source(m11));
    return verified(xm, h, two_cell(xm, m11, e, m22));
  }

  FillResult fill_horn3(CrossedModule const& cm, CellHorn const& h) {
    auto const& xm = cm.monoid();
    require_horn(xm, h, 3);
    int const   l = h.omitted;
    auto const& M = h.faces;

    // Diagonal of the missing face from d_j M^l = d_{l-1} M^j (j < l) and
    // d_i M^l = d_l M^{i+1} (i >= l).
    Morphism m11, m22;
    switch (l) {
      case 0:
        m11 = M[3].diagonal(2);
        m22 = M[1].diagonal(2);
        break;
      case 1:
        m11 = xm.compose(xm.compose(M[3].diagonal(1),
                                    xm.boundary(M[3].entry(1, 2))),
                         M[3].diagonal(2));
        m22 = M[0].diagonal(2);
        break;
      case 2:
        m11 = M[3].diagonal(1);
        m22 = xm.compose(xm.compose(M[0].diagonal(1),
                                    xm.boundary(M[0].entry(1, 2))),
                         M[0].diagonal(2));
        break;
      default:
        m11 = M[2].diagonal(1);
        m22 = M[0].diagonal(1);
        break;
    }

    // Corner from (m3_12)^g m1_12 = (m2_12)^g m0_12 with g = m3_22, or
    // g = m0_11 when M^3 is the missing face.
    Morphism g = l == 3 ? M[0].diagonal(1) : M[3].diagonal(2);
    auto     inv = [&](Element a) { return cm.inverse(a); };
    auto     mul = [&](Element a, Element b) { return xm.mul(a, b); };
    Element  c;
    switch (l) {
      case 0: {
        Element X = xm.act(M[3].entry(1, 2), g);
        Element Y = xm.act(M[2].entry(1, 2), g);
        c         = mul(mul(inv(Y), X), M[1].entry(1, 2));
        break;
      }
      case 1: {
        Element X = xm.act(M[3].entry(1, 2), g);
        Element Y = xm.act(M[2].entry(1, 2), g);
        c         = mul(mul(inv(X), Y), M[0].entry(1, 2));
        break;
      }
      case 2: {
        Element X = xm.act(M[3].entry(1, 2), g);
        c = cm.unact(mul(mul(X, M[1].entry(1, 2)), inv(M[0].entry(1, 2))), g);
        break;
      }
      default: {
        Element Y = xm.act(M[2].entry(1, 2), g);
        c = cm.unact(mul(mul(Y, M[0].entry(1, 2)), inv(M[1].entry(1, 2))), g);
        break;
      }
    }

    auto t = complete(h, two_cell(xm, m11, c, m22));
    if (!in_kernel(xm, t)) {
      throw FillerError("reconstructed face does not complete the horn");
    }
    auto m = fill_boundary(cm, t);
    if (!m) {
      throw FillerError("completed 3-boundary misses the image of b_3");
    }
    return verified(xm, h, std::move(*m));
  }

  namespace {

    FillResult fill_via_beta(CrossedModule const& cm, CellHorn const& h) {
      auto const& xm      = cm.monoid();
      auto        missing = fill_boundary(cm, beta(xm, h));
      if (!missing) {
        throw FillerError("beta of the horn misses the image of b_"
                          + std::to_string(h.dim - 1));
      }
      auto t = complete(h, std::move(*missing));
      auto m = fill_boundary(cm, t);
      if (!m) {
        throw FillerError("completed boundary has no filler");
      }
      return verified(xm, h, std::move(*m));
    }

  }  // namespace

  FillResult fill_horn4(CrossedModule const& cm, CellHorn const& h) {
    require_horn(cm.monoid(), h, 4);
    return fill_via_beta(cm, h);
  }

  FillResult fill_horn_high(CrossedModule const& cm, CellHorn const& h) {
    if (h.dim < 5) {
      throw std::invalid_argument("fill_horn_high needs dimension >= 5");
    }
    require_horn(cm.monoid(), h, h.dim);
    return fill_via_beta(cm, h);
  }

  FillResult fill_horn(CrossedModule const& cm, CellHorn const& h) {
    switch (h.dim) {
      case 1:
        return fill_horn1(cm, h);
      case 2:
        return fill_horn2(cm, h);
      case 3:
        return fill_horn3(cm, h);
      case 4:
        return fill_horn4(cm, h);
      default:
        if (h.dim < 1) {
          throw std::invalid_argument("horns start in dimension 1");
        }
        return fill_horn_high(cm, h);
    }
  }

  FillResult fill_horn(CrossedMonoid const& xm, CellHorn const& h) {
    return fill_horn(CrossedModule::from(xm), h);
  }

}  // namespace xnerve
