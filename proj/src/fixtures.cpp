#include "xnerve/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace xnerve::fixtures {

  namespace {

    using Table = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

    // Single object; morphism ids 0..|C|-1 with 0 the identity, element ids
    // 0..|A|-1 with `unit` the unit.
    CrossedMonoid one_object(std::string name, std::uint32_t c_order,
                             Table c_mul, std::uint32_t a_order,
                             std::uint32_t a_unit, Table a_mul,
                             Table action /* (g, a) -> a^g */,
                             std::function<std::uint32_t(std::uint32_t)> bd) {
      CrossedMonoidData d;
      d.name        = std::move(name);
      d.num_objects = 1;
      for (std::uint32_t g = 0; g < c_order; ++g) {
        d.morphisms.push_back({Object(0), Object(0)});
      }
      d.identities = {Morphism(0)};
      for (std::uint32_t g = 0; g < c_order; ++g) {
        for (std::uint32_t h = 0; h < c_order; ++h) {
          d.composition.push_back(
              {Morphism(g), Morphism(h), Morphism(c_mul(g, h))});
        }
      }
      FiberSpec f;
      f.unit = Element(a_unit);
      for (std::uint32_t a = 0; a < a_order; ++a) {
        f.elements.emplace_back(a);
        auto& row = f.mul.emplace_back();
        for (std::uint32_t b = 0; b < a_order; ++b) {
          row.emplace_back(a_mul(a, b));
        }
      }
      d.fibers.push_back(std::move(f));
      for (std::uint32_t g = 0; g < c_order; ++g) {
        auto& row = d.action.emplace_back();
        for (std::uint32_t a = 0; a < a_order; ++a) {
          row.emplace_back(Element(a), Element(action(g, a)));
        }
      }
      auto& brow = d.boundary.emplace_back();
      for (std::uint32_t a = 0; a < a_order; ++a) {
        brow.emplace_back(Element(a), Morphism(bd(a)));
      }
      return CrossedMonoid(d);
    }

    Table cyclic(std::uint32_t n) {
      return [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; };
    }

    std::uint32_t zero(std::uint32_t) {
      return 0;
    }

    // S3 as permutations of {0,1,2}; id 0 is the identity. Composition is
    // (p*q)(i) = p(q(i)).
    std::array<std::array<std::uint32_t, 3>, 6> const kS3 = {{
        {0, 1, 2},
        {1, 0, 2},
        {0, 2, 1},
        {2, 1, 0},
        {1, 2, 0},
        {2, 0, 1},
    }};

    std::uint32_t s3_index(std::array<std::uint32_t, 3> const& p) {
      for (std::uint32_t i = 0; i < 6; ++i) {
        if (kS3[i] == p) {
          return i;
        }
      }
      return 0;
    }

    std::uint32_t s3_mul(std::uint32_t p, std::uint32_t q) {
      std::array<std::uint32_t, 3> r{};
      for (int i = 0; i < 3; ++i) {
        r[i] = kS3[p][kS3[q][i]];
      }
      return s3_index(r);
    }

    std::uint32_t s3_inv(std::uint32_t p) {
      for (std::uint32_t q = 0; q < 6; ++q) {
        if (s3_mul(p, q) == 0) {
          return q;
        }
      }
      return 0;
    }

  }  // namespace

  CrossedMonoid f1() {
    return one_object("F1", 1, cyclic(1), 1, 0, cyclic(1),
                      [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid f2() {
    return one_object("F2", 2, cyclic(2), 1, 0, cyclic(1),
                      [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid f3() {
    return one_object("F3", 1, cyclic(1), 3, 0, cyclic(3),
                      [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid f4() {
    return one_object("F4", 2, cyclic(2), 3, 0, cyclic(3),
                      [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid f5() {
    return one_object(
        "F5", 1, cyclic(1), 2, 0,
        [](std::uint32_t a, std::uint32_t b) { return a | b; },
        [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid f6() {
    return one_object(
        "F6", 2, cyclic(2), 3, 0, cyclic(3),
        [](std::uint32_t g, std::uint32_t a) { return g ? (3 - a) % 3 : a; },
        zero);
  }

  CrossedMonoid f7() {
    return one_object(
        "F7", 2, cyclic(2), 4, 0, cyclic(4),
        [](std::uint32_t g, std::uint32_t a) { return g ? (4 - a) % 4 : a; },
        [](std::uint32_t a) { return a % 2; });
  }

  CrossedMonoid bg_s3() {
    return one_object("BS3", 6, s3_mul, 1, 0, cyclic(1),
                      [](std::uint32_t, std::uint32_t a) { return a; }, zero);
  }

  CrossedMonoid conjugation_s3() {
    return one_object(
        "S3conj", 6, s3_mul, 6, 0, s3_mul,
        [](std::uint32_t g, std::uint32_t a) {
          return s3_mul(s3_inv(g), s3_mul(a, g));
        },
        [](std::uint32_t a) { return a; });
  }

  CrossedMonoid pair_groupoid() {
    // Morphism (src, tgt, b) has id 4*src + 2*tgt + b.
    auto id = [](std::uint32_t s, std::uint32_t t, std::uint32_t b) {
      return s * 4 + t * 2 + b;
    };
    CrossedMonoidData d;
    d.name        = "PairZ2";
    d.num_objects = 2;
    d.morphisms.resize(8);
    for (std::uint32_t s = 0; s < 2; ++s) {
      for (std::uint32_t t = 0; t < 2; ++t) {
        for (std::uint32_t b = 0; b < 2; ++b) {
          d.morphisms[id(s, t, b)] = {Object(s), Object(t)};
        }
      }
    }
    d.identities = {Morphism(id(0, 0, 0)), Morphism(id(1, 1, 0))};
    // (t, u, b) * (s, t, c) = (s, u, b + c)
    for (std::uint32_t s = 0; s < 2; ++s) {
      for (std::uint32_t t = 0; t < 2; ++t) {
        for (std::uint32_t u = 0; u < 2; ++u) {
          for (std::uint32_t b = 0; b < 2; ++b) {
            for (std::uint32_t c = 0; c < 2; ++c) {
              d.composition.push_back({Morphism(id(t, u, b)),
                                       Morphism(id(s, t, c)),
                                       Morphism(id(s, u, (b + c) % 2))});
            }
          }
        }
      }
    }
    // A(x) = {2x, 2x+1}, unit 2x.
    for (std::uint32_t x = 0; x < 2; ++x) {
      FiberSpec f;
      f.elements = {Element(2 * x), Element(2 * x + 1)};
      f.unit     = Element(2 * x);
      for (std::uint32_t a = 0; a < 2; ++a) {
        auto& row = f.mul.emplace_back();
        for (std::uint32_t b = 0; b < 2; ++b) {
          row.emplace_back(2 * x + (a + b) % 2);
        }
      }
      d.fibers.push_back(std::move(f));
    }
    d.action.resize(8);
    for (std::uint32_t s = 0; s < 2; ++s) {
      for (std::uint32_t t = 0; t < 2; ++t) {
        for (std::uint32_t b = 0; b < 2; ++b) {
          for (std::uint32_t a = 0; a < 2; ++a) {
            d.action[id(s, t, b)].emplace_back(Element(2 * t + a),
                                               Element(2 * s + a));
          }
        }
      }
    }
    for (std::uint32_t x = 0; x < 2; ++x) {
      auto& row = d.boundary.emplace_back();
      for (std::uint32_t a = 0; a < 2; ++a) {
        row.emplace_back(Element(2 * x + a), Morphism(id(x, x, a)));
      }
    }
    return CrossedMonoid(d);
  }

  CrossedMonoid disjoint_union(CrossedMonoid const& a, CrossedMonoid const& b) {
    auto da = a.to_data();
    auto db = b.to_data();
    auto const O = static_cast<std::uint32_t>(da.num_objects);
    auto const M = static_cast<std::uint32_t>(da.morphisms.size());
    auto const E = static_cast<std::uint32_t>(a.num_elements());
    auto       obj = [O](Object x) { return Object(x.value + O); };
    auto       mor = [M](Morphism m) { return Morphism(m.value + M); };
    auto       el  = [E](Element e) { return Element(e.value + E); };

    CrossedMonoidData d = da;
    d.name              = da.name + "+" + db.name;
    d.num_objects += db.num_objects;
    for (auto ms : db.morphisms) {
      d.morphisms.push_back({obj(ms.src), obj(ms.tgt)});
    }
    for (auto i : db.identities) {
      d.identities.push_back(mor(i));
    }
    for (auto c : db.composition) {
      d.composition.push_back({mor(c.left), mor(c.right), mor(c.result)});
    }
    for (auto f : db.fibers) {
      for (auto& e : f.elements) {
        e = el(e);
      }
      f.unit = el(f.unit);
      for (auto& row : f.mul) {
        for (auto& e : row) {
          e = el(e);
        }
      }
      d.fibers.push_back(std::move(f));
    }
    for (auto row : db.action) {
      for (auto& [x, y] : row) {
        x = el(x);
        y = el(y);
      }
      d.action.push_back(std::move(row));
    }
    for (auto row : db.boundary) {
      for (auto& [x, g] : row) {
        x = el(x);
        g = mor(g);
      }
      d.boundary.push_back(std::move(row));
    }
    return CrossedMonoid(d);
  }

  XMorphism inclusion_f3_f4() {
    XMorphism m;
    m.objects   = {Object(0)};
    m.morphisms = {Morphism(0)};
    m.elements  = {Element(0), Element(1), Element(2)};
    return m;
  }

}  // namespace xnerve::fixtures
