#include "xnerve/algebra.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

namespace xnerve {

  namespace {

    std::string str(std::uint32_t v) {
      return std::to_string(v);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid::FiniteMonoid(std::size_t order, std::size_t unit,
                             std::vector<std::uint32_t> table)
      : order_(order), unit_(unit), table_(std::move(table)) {
    if (order_ == 0) {
      throw StructuralError("monoid has no elements");
    }
    if (unit_ >= order_) {
      throw StructuralError("monoid unit " + std::to_string(unit_)
                            + " out of range");
    }
    if (table_.size() != order_ * order_) {
      throw StructuralError("multiplication table is not total: expected "
                            + std::to_string(order_ * order_) + " entries, got "
                            + std::to_string(table_.size()));
    }
    for (auto v : table_) {
      if (v >= order_) {
        throw StructuralError("multiplication table entry " + str(v)
                              + " out of range");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteCategory
  ////////////////////////////////////////////////////////////////////////

  FiniteCategory::FiniteCategory(std::size_t                   num_objects,
                                 std::vector<MorphismSpec>     morphisms,
                                 std::vector<Morphism>         identities,
                                 std::vector<CompositionEntry> composition)
      : num_objects_(num_objects),
        morphisms_(std::move(morphisms)),
        identities_(std::move(identities)),
        compose_(morphisms_.size() * morphisms_.size(), kUndefined),
        homs_(num_objects_ * num_objects_),
        hom_position_(morphisms_.size()) {
    std::size_t const M = morphisms_.size();
    for (std::size_t i = 0; i < M; ++i) {
      auto const& ms = morphisms_[i];
      if (ms.src.value >= num_objects_ || ms.tgt.value >= num_objects_) {
        throw StructuralError("morphism " + std::to_string(i)
                              + " has a dangling endpoint");
      }
      auto& h         = homs_[ms.src.value * num_objects_ + ms.tgt.value];
      hom_position_[i] = h.size();
      h.push_back(Morphism(static_cast<std::uint32_t>(i)));
    }
    if (identities_.size() != num_objects_) {
      throw StructuralError("identity map must list every object");
    }
    for (std::size_t x = 0; x < num_objects_; ++x) {
      Morphism id = identities_[x];
      if (id.value >= M) {
        throw StructuralError("identity of object " + std::to_string(x)
                              + " is a dangling morphism id");
      }
      if (morphisms_[id.value].src.value != x
          || morphisms_[id.value].tgt.value != x) {
        throw StructuralError("identity of object " + std::to_string(x)
                              + " is not an endomorphism of it");
      }
    }
    for (auto const& e : composition) {
      if (e.left.value >= M || e.right.value >= M || e.result.value >= M) {
        throw StructuralError("composition entry refers to a dangling "
                              "morphism id");
      }
      if (source(e.left) != target(e.right)) {
        throw StructuralError("composition entry (" + str(e.left.value) + ", "
                              + str(e.right.value)
                              + ") is not a composable pair");
      }
      auto& slot = compose_[e.left.value * M + e.right.value];
      if (slot != kUndefined) {
        throw StructuralError("duplicate composition entry ("
                              + str(e.left.value) + ", " + str(e.right.value)
                              + ")");
      }
      slot = e.result.value;
    }
    for (std::size_t a = 0; a < M; ++a) {
      for (std::size_t b = 0; b < M; ++b) {
        if (morphisms_[a].src == morphisms_[b].tgt
            && compose_[a * M + b] == kUndefined) {
          throw StructuralError("composition table is missing the pair ("
                                + std::to_string(a) + ", " + std::to_string(b)
                                + ")");
        }
      }
    }
  }

  std::optional<Morphism> FiniteCategory::try_compose(Morphism a,
                                                      Morphism b) const {
    auto v = compose_[a.value * morphisms_.size() + b.value];
    if (v == kUndefined) {
      return std::nullopt;
    }
    return Morphism(v);
  }

  std::vector<CompositionEntry> FiniteCategory::composition_table() const {
    std::vector<CompositionEntry> out;
    std::size_t const             M = morphisms_.size();
    for (std::uint32_t a = 0; a < M; ++a) {
      for (std::uint32_t b = 0; b < M; ++b) {
        auto v = compose_[a * M + b];
        if (v != kUndefined) {
          out.push_back({Morphism(a), Morphism(b), Morphism(v)});
        }
      }
    }
    return out;
  }

  Morphism compose(FiniteCategory const& cat, Morphism alpha, Morphism beta) {
    if (alpha.value >= cat.num_morphisms() || beta.value >= cat.num_morphisms()) {
      throw CompositionError("morphism id out of range");
    }
    auto r = cat.try_compose(alpha, beta);
    if (!r) {
      throw CompositionError("cannot compose " + str(alpha.value) + " * "
                             + str(beta.value) + ": source of the left factor ("
                             + str(cat.source(alpha).value)
                             + ") differs from target of the right factor ("
                             + str(cat.target(beta).value) + ")");
    }
    return *r;
  }

  ////////////////////////////////////////////////////////////////////////
  // CrossedMonoid
  ////////////////////////////////////////////////////////////////////////

  CrossedMonoid::CrossedMonoid(CrossedMonoidData const& d)
      : name_(d.name),
        cat_(d.num_objects, d.morphisms, d.identities, d.composition) {
    std::size_t const O = d.num_objects;
    if (d.fibers.size() != O) {
      throw StructuralError("a monoid must be given for every object");
    }
    std::size_t total = 0;
    for (auto const& f : d.fibers) {
      total += f.elements.size();
    }
    owner_.assign(total, Object(0xFFFFFFFF));
    local_.assign(total, 0);
    fibers_.resize(O);
    monoids_.reserve(O);

    // Fibers are kept sorted by id so that enumeration order is id order;
    // local indices are positions in the sorted fiber.
    for (std::size_t x = 0; x < O; ++x) {
      auto sorted = d.fibers[x].elements;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto e = sorted[i];
        if (e.value >= total) {
          throw StructuralError("element id " + str(e.value)
                                + " is dangling: element ids must be 0.."
                                + std::to_string(total - 1));
        }
        if (owner_[e.value].value != 0xFFFFFFFF) {
          throw StructuralError("element id " + str(e.value)
                                + " appears in more than one place");
        }
        owner_[e.value] = Object(static_cast<std::uint32_t>(x));
        local_[e.value] = i;
      }
      fibers_[x] = std::move(sorted);
    }
    for (std::size_t x = 0; x < O; ++x) {
      auto const&       f  = d.fibers[x];
      std::size_t const k  = f.elements.size();
      Object const      ox(static_cast<std::uint32_t>(x));
      auto              in_fiber = [&](Element e) {
        return e.value < total && owner_[e.value] == ox;
      };
      if (k == 0) {
        throw StructuralError("monoid over object " + std::to_string(x)
                              + " has no elements");
      }
      if (!in_fiber(f.unit)) {
        throw StructuralError("unit of the monoid over object "
                              + std::to_string(x) + " is not one of its elements");
      }
      if (f.mul.size() != k) {
        throw StructuralError("multiplication table of object "
                              + std::to_string(x) + " is not total");
      }
      std::vector<std::uint32_t> table(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        auto const& row = f.mul[i];
        if (row.size() != k) {
          throw StructuralError("multiplication table of object "
                                + std::to_string(x) + " is not total");
        }
        for (std::size_t j = 0; j < k; ++j) {
          if (!in_fiber(row[j])) {
            throw StructuralError("multiplication table of object "
                                  + std::to_string(x) + " leaves the monoid ("
                                  + str(row[j].value) + ")");
          }
          table[local_[f.elements[i].value] * k + local_[f.elements[j].value]] =
              static_cast<std::uint32_t>(local_[row[j].value]);
        }
      }
      monoids_.emplace_back(k, local_[f.unit.value], std::move(table));
    }

    std::size_t const M = cat_.num_morphisms();
    if (d.action.size() != M) {
      throw StructuralError("an action table must be given for every morphism");
    }
    action_.resize(M);
    for (std::size_t m = 0; m < M; ++m) {
      Morphism const alpha(static_cast<std::uint32_t>(m));
      Object const   s = cat_.source(alpha), t = cat_.target(alpha);
      auto&          row = action_[m];
      row.assign(fibers_[t.value].size(), Element(0xFFFFFFFF));
      for (auto [a, b] : d.action[m]) {
        if (a.value >= total || owner_[a.value] != t) {
          throw StructuralError("action of morphism " + std::to_string(m)
                                + " is applied to element " + str(a.value)
                                + " outside A(target)");
        }
        if (b.value >= total || owner_[b.value] != s) {
          throw StructuralError("action of morphism " + std::to_string(m)
                                + " sends " + str(a.value)
                                + " outside A(source)");
        }
        if (row[local_[a.value]].value != 0xFFFFFFFF) {
          throw StructuralError("action of morphism " + std::to_string(m)
                                + " lists element " + str(a.value) + " twice");
        }
        row[local_[a.value]] = b;
      }
      for (auto v : row) {
        if (v.value == 0xFFFFFFFF) {
          throw StructuralError("action of morphism " + std::to_string(m)
                                + " is not total");
        }
      }
    }

    if (d.boundary.size() != O) {
      throw StructuralError("a boundary map must be given for every object");
    }
    boundary_.assign(total, Morphism(0xFFFFFFFF));
    for (std::size_t x = 0; x < O; ++x) {
      for (auto [a, g] : d.boundary[x]) {
        if (a.value >= total || owner_[a.value].value != x) {
          throw StructuralError("boundary of object " + std::to_string(x)
                                + " is applied to element " + str(a.value)
                                + " outside its monoid");
        }
        if (g.value >= M) {
          throw StructuralError("boundary of element " + str(a.value)
                                + " is a dangling morphism id");
        }
        if (boundary_[a.value].value != 0xFFFFFFFF) {
          throw StructuralError("boundary lists element " + str(a.value)
                                + " twice");
        }
        boundary_[a.value] = g;
      }
    }
    for (std::size_t a = 0; a < total; ++a) {
      if (boundary_[a].value == 0xFFFFFFFF) {
        throw StructuralError("boundary map is not total (element "
                              + std::to_string(a) + ")");
      }
    }
  }

  Element CrossedMonoid::mul(Element a, Element b) const {
    Object x = owner_[a.value];
    if (owner_[b.value] != x) {
      throw std::invalid_argument("cannot multiply elements " + str(a.value)
                                  + " and " + str(b.value)
                                  + " of different fibers");
    }
    auto const& mon = monoids_[x.value];
    return fibers_[x.value][mon.mul(local_[a.value], local_[b.value])];
  }

  CrossedMonoidData CrossedMonoid::to_data() const {
    CrossedMonoidData d;
    d.name        = name_;
    d.num_objects = cat_.num_objects();
    d.morphisms   = cat_.morphisms();
    d.identities  = cat_.identities();
    d.composition = cat_.composition_table();
    for (std::size_t x = 0; x < d.num_objects; ++x) {
      FiberSpec f;
      f.elements = fibers_[x];
      f.unit     = unit(Object(static_cast<std::uint32_t>(x)));
      for (auto a : f.elements) {
        auto& row = f.mul.emplace_back();
        for (auto b : f.elements) {
          row.push_back(mul(a, b));
        }
      }
      d.fibers.push_back(std::move(f));
    }
    for (std::size_t m = 0; m < cat_.num_morphisms(); ++m) {
      Morphism alpha(static_cast<std::uint32_t>(m));
      auto&    row = d.action.emplace_back();
      for (auto a : fibers_[cat_.target(alpha).value]) {
        row.emplace_back(a, act(a, alpha));
      }
    }
    for (std::size_t x = 0; x < d.num_objects; ++x) {
      auto& row = d.boundary.emplace_back();
      for (auto a : fibers_[x]) {
        row.emplace_back(a, boundary(a));
      }
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  bool ValidationReport::has(std::string const& axiom) const {
    return find(axiom) != nullptr;
  }

  Violation const* ValidationReport::find(std::string const& axiom) const {
    for (auto const& v : violations) {
      if (v.axiom == axiom) {
        return &v;
      }
    }
    return nullptr;
  }

  namespace {

    using Witness = std::vector<std::uint32_t>;

    // An axiom is a family of instances, enumerated in lexicographic id
    // order, and a predicate telling whether one instance fails.
    struct Axiom {
      std::string_view label;
      std::string_view description;
      // Calls `visit` on each well-typed instance until it returns true.
      void (*instances)(CrossedMonoid const&,
                        std::function<bool(Witness const&)> const&);
      bool (*fails)(CrossedMonoid const&, Witness const&);
    };

    Morphism M(std::uint32_t v) {
      return Morphism(v);
    }
    Element E(std::uint32_t v) {
      return Element(v);
    }

    std::uint32_t count32(std::size_t n) {
      return static_cast<std::uint32_t>(n);
    }

    void for_morphisms(CrossedMonoid const& xm,
                       std::function<bool(Witness const&)> const& visit) {
      for (std::uint32_t a = 0; a < count32(xm.num_morphisms()); ++a) {
        if (visit({a})) {
          return;
        }
      }
    }

    void for_composable_pairs(CrossedMonoid const& xm,
                              std::function<bool(Witness const&)> const& visit) {
      auto const& cat = xm.category();
      for (std::uint32_t a = 0; a < count32(xm.num_morphisms()); ++a) {
        for (std::uint32_t b = 0; b < count32(xm.num_morphisms()); ++b) {
          if (cat.source(M(a)) == cat.target(M(b)) && visit({a, b})) {
            return;
          }
        }
      }
    }

    void for_composable_triples(
        CrossedMonoid const& xm,
        std::function<bool(Witness const&)> const& visit) {
      auto const&         cat = xm.category();
      std::uint32_t const n   = count32(xm.num_morphisms());
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (cat.source(M(a)) != cat.target(M(b))) {
            continue;
          }
          for (std::uint32_t c = 0; c < n; ++c) {
            if (cat.source(M(b)) == cat.target(M(c)) && visit({a, b, c})) {
              return;
            }
          }
        }
      }
    }

    void for_elements(CrossedMonoid const& xm,
                      std::function<bool(Witness const&)> const& visit) {
      for (std::uint32_t a = 0; a < count32(xm.num_elements()); ++a) {
        if (visit({a})) {
          return;
        }
      }
    }

    void for_objects(CrossedMonoid const& xm,
                     std::function<bool(Witness const&)> const& visit) {
      for (std::uint32_t x = 0; x < count32(xm.num_objects()); ++x) {
        if (visit({x})) {
          return;
        }
      }
    }

    void for_element_pairs(CrossedMonoid const& xm,
                           std::function<bool(Witness const&)> const& visit) {
      std::uint32_t const n = count32(xm.num_elements());
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (xm.owner(E(a)) == xm.owner(E(b)) && visit({a, b})) {
            return;
          }
        }
      }
    }

    void for_element_triples(CrossedMonoid const& xm,
                             std::function<bool(Witness const&)> const& visit) {
      std::uint32_t const n = count32(xm.num_elements());
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (xm.owner(E(a)) != xm.owner(E(b))) {
            continue;
          }
          for (std::uint32_t c = 0; c < n; ++c) {
            if (xm.owner(E(a)) == xm.owner(E(c)) && visit({a, b, c})) {
              return;
            }
          }
        }
      }
    }

    // (alpha, a) with a in A(t(alpha))
    void for_morphism_element(CrossedMonoid const& xm,
                              std::function<bool(Witness const&)> const& visit) {
      for (std::uint32_t m = 0; m < count32(xm.num_morphisms()); ++m) {
        for (auto a : xm.fiber(xm.target(M(m)))) {
          if (visit({m, a.value})) {
            return;
          }
        }
      }
    }

    // (alpha, a, b) with a, b in A(t(alpha))
    void for_morphism_element_pair(
        CrossedMonoid const& xm,
        std::function<bool(Witness const&)> const& visit) {
      for (std::uint32_t m = 0; m < count32(xm.num_morphisms()); ++m) {
        auto fib = xm.fiber(xm.target(M(m)));
        for (auto a : fib) {
          for (auto b : fib) {
            if (visit({m, a.value, b.value})) {
              return;
            }
          }
        }
      }
    }

    // (alpha, beta, a) with s(alpha) = t(beta), a in A(t(alpha))
    void for_action_composition(
        CrossedMonoid const& xm,
        std::function<bool(Witness const&)> const& visit) {
      auto const&         cat = xm.category();
      std::uint32_t const n   = count32(xm.num_morphisms());
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (cat.source(M(a)) != cat.target(M(b))) {
            continue;
          }
          for (auto e : xm.fiber(cat.target(M(a)))) {
            if (visit({a, b, e.value})) {
              return;
            }
          }
        }
      }
    }

    bool is_endo_of_owner(CrossedMonoid const& xm, Element a) {
      Morphism g = xm.boundary(a);
      Object   t = xm.owner(a);
      return xm.source(g) == t && xm.target(g) == t;
    }

    Axiom const kAxioms[] = {
        {"cat-typing", "composite alpha*beta runs from s(beta) to t(alpha)",
         for_composable_pairs,
         [](CrossedMonoid const& xm, Witness const& w) {
           Morphism r = xm.compose(M(w[0]), M(w[1]));
           return xm.source(r) != xm.source(M(w[1]))
                  || xm.target(r) != xm.target(M(w[0]));
         }},
        {"cat-unit", "1_t * alpha = alpha = alpha * 1_s", for_morphisms,
         [](CrossedMonoid const& xm, Witness const& w) {
           Morphism a = M(w[0]);
           return xm.compose(xm.identity(xm.target(a)), a) != a
                  || xm.compose(a, xm.identity(xm.source(a))) != a;
         }},
        {"cat-assoc", "(alpha*beta)*gamma = alpha*(beta*gamma)",
         for_composable_triples,
         [](CrossedMonoid const& xm, Witness const& w) {
           auto const& cat = xm.category();
           auto        ab  = cat.try_compose(M(w[0]), M(w[1]));
           auto        bc  = cat.try_compose(M(w[1]), M(w[2]));
           auto        l   = ab ? cat.try_compose(*ab, M(w[2])) : std::nullopt;
           auto        r   = bc ? cat.try_compose(M(w[0]), *bc) : std::nullopt;
           return !l || !r || *l != *r;
         }},
        {"mon-unit", "e*a = a = a*e in A(t)", for_elements,
         [](CrossedMonoid const& xm, Witness const& w) {
           Element a = E(w[0]);
           Element e = xm.unit(xm.owner(a));
           return xm.mul(e, a) != a || xm.mul(a, e) != a;
         }},
        {"mon-assoc", "(ab)c = a(bc) in A(t)", for_element_triples,
         [](CrossedMonoid const& xm, Witness const& w) {
           Element a = E(w[0]), b = E(w[1]), c = E(w[2]);
           return xm.mul(xm.mul(a, b), c) != xm.mul(a, xm.mul(b, c));
         }},
        {"act-id", "a^(1_t) = a", for_elements,
         [](CrossedMonoid const& xm, Witness const& w) {
           Element a = E(w[0]);
           return xm.act(a, xm.identity(xm.owner(a))) != a;
         }},
        {"act-comp", "a^(alpha*beta) = (a^alpha)^beta", for_action_composition,
         [](CrossedMonoid const& xm, Witness const& w) {
           Morphism a = M(w[0]), b = M(w[1]);
           Element  e = E(w[2]);
           auto     ab = xm.category().try_compose(a, b);
           if (!ab || xm.target(*ab) != xm.owner(e)) {
             return true;
           }
           return xm.act(e, *ab) != xm.act(xm.act(e, a), b);
         }},
        {"act-unit", "e_t^alpha = e_s", for_morphisms,
         [](CrossedMonoid const& xm, Witness const& w) {
           Morphism a = M(w[0]);
           return xm.act(xm.unit(xm.target(a)), a) != xm.unit(xm.source(a));
         }},
        {"act-hom", "(ab)^alpha = a^alpha b^alpha", for_morphism_element_pair,
         [](CrossedMonoid const& xm, Witness const& w) {
           Morphism g = M(w[0]);
           Element  a = E(w[1]), b = E(w[2]);
           return xm.act(xm.mul(a, b), g) != xm.mul(xm.act(a, g), xm.act(b, g));
         }},
        {"cr1.typing", "boundary_t(a) lies in C(t,t)", for_elements,
         [](CrossedMonoid const& xm, Witness const& w) {
           return !is_endo_of_owner(xm, E(w[0]));
         }},
        {"cr1.unit", "boundary_t(e_t) = 1_t", for_objects,
         [](CrossedMonoid const& xm, Witness const& w) {
           Object t(w[0]);
           return xm.boundary(xm.unit(t)) != xm.identity(t);
         }},
        {"cr1.hom", "boundary_t(ab) = boundary_t(a) boundary_t(b)",
         for_element_pairs,
         [](CrossedMonoid const& xm, Witness const& w) {
           Element a = E(w[0]), b = E(w[1]);
           auto    r = xm.category().try_compose(xm.boundary(a), xm.boundary(b));
           return !r || xm.boundary(xm.mul(a, b)) != *r;
         }},
        {"cr2", "alpha boundary_s(a^alpha) = boundary_t(a) alpha",
         for_morphism_element,
         [](CrossedMonoid const& xm, Witness const& w) {
           auto const& cat   = xm.category();
           Morphism    alpha = M(w[0]);
           Element     a     = E(w[1]);
           auto l = cat.try_compose(alpha, xm.boundary(xm.act(a, alpha)));
           auto r = cat.try_compose(xm.boundary(a), alpha);
           return !l || !r || *l != *r;
         }},
        {"cr3", "ab = b a^(boundary_t(b))", for_element_pairs,
         [](CrossedMonoid const& xm, Witness const& w) {
           Element  a = E(w[0]), b = E(w[1]);
           Morphism g = xm.boundary(b);
           if (xm.target(g) != xm.owner(a) || xm.source(g) != xm.owner(a)) {
             return true;
           }
           return xm.mul(a, b) != xm.mul(b, xm.act(a, g));
         }},
    };

    std::string witness_text(Witness const& w) {
      std::string s = "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(w[i]);
      }
      return s + ")";
    }

  }  // namespace

  std::string_view axiom_description(std::string_view axiom) {
    for (auto const& ax : kAxioms) {
      if (ax.label == axiom) {
        return ax.description;
      }
    }
    return {};
  }

  ValidationReport validate_crossed_monoid(CrossedMonoid const& xm) {
    ValidationReport report;
    for (auto const& ax : kAxioms) {
      // cr3 and cr2 only make sense once the boundary is correctly typed;
      // an ill-typed boundary is already reported under cr1.typing.
      bool const needs_typed_boundary = ax.label == "cr2" || ax.label == "cr3"
                                        || ax.label == "cr1.hom";
      if (needs_typed_boundary && report.has("cr1.typing")) {
        continue;
      }
      ax.instances(xm, [&](Witness const& w) {
        if (ax.fails(xm, w)) {
          report.violations.push_back(
              {std::string(ax.label), w,
               std::string(ax.description) + " fails at " + witness_text(w)});
          return true;
        }
        return false;
      });
    }
    return report;
  }

  bool violation_holds(CrossedMonoid const& xm, Violation const& v) {
    for (auto const& ax : kAxioms) {
      if (ax.label == v.axiom) {
        return ax.fails(xm, v.witness);
      }
    }
    return false;
  }

  Classification classify_structure(CrossedMonoid const& xm) {
    Classification c;
    auto const&    cat = xm.category();

    c.is_groupoid = true;
    for (std::uint32_t m = 0; m < xm.num_morphisms() && c.is_groupoid; ++m) {
      Morphism a(m);
      bool     found = false;
      for (auto b : cat.hom(xm.target(a), xm.source(a))) {
        if (xm.compose(a, b) == xm.identity(xm.target(a))
            && xm.compose(b, a) == xm.identity(xm.source(a))) {
          found = true;
          break;
        }
      }
      if (!found) {
        c.is_groupoid = false;
        c.witnesses.push_back({"groupoid", {m},
                               "morphism " + str(m) + " has no inverse"});
      }
    }

    c.fibers_are_groups = true;
    for (std::uint32_t a = 0; a < xm.num_elements() && c.fibers_are_groups;
         ++a) {
      Element x   = Element(a);
      Element e   = xm.unit(xm.owner(x));
      bool    inv = false;
      for (auto y : xm.fiber(xm.owner(x))) {
        if (xm.mul(x, y) == e && xm.mul(y, x) == e) {
          inv = true;
          break;
        }
      }
      if (!inv) {
        c.fibers_are_groups = false;
        c.witnesses.push_back({"fiber-group", {a},
                               "element " + str(a) + " has no inverse"});
      }
    }

    // left: xy = xz with y != z; right: yx = zx with y != z
    c.fibers_cancellative = true;
    for (std::uint32_t x = 0; x < xm.num_elements() && c.fibers_cancellative;
         ++x) {
      auto fib = xm.fiber(xm.owner(Element(x)));
      for (std::size_t i = 0; i < fib.size() && c.fibers_cancellative; ++i) {
        for (std::size_t j = i + 1; j < fib.size(); ++j) {
          Element y = fib[i], z = fib[j];
          if (xm.mul(Element(x), y) == xm.mul(Element(x), z)) {
            c.fibers_cancellative = false;
            c.witnesses.push_back(
                {"left-cancellation", {x, y.value, z.value},
                 str(x) + "*" + str(y.value) + " = " + str(x) + "*"
                     + str(z.value)});
            break;
          }
          if (xm.mul(y, Element(x)) == xm.mul(z, Element(x))) {
            c.fibers_cancellative = false;
            c.witnesses.push_back(
                {"right-cancellation", {x, y.value, z.value},
                 str(y.value) + "*" + str(x) + " = " + str(z.value) + "*"
                     + str(x)});
            break;
          }
        }
      }
    }

    c.action_injective = true;
    for (std::uint32_t m = 0; m < xm.num_morphisms() && c.action_injective;
         ++m) {
      auto                         fib = xm.fiber(xm.target(Morphism(m)));
      std::unordered_set<Element> seen;
      for (auto a : fib) {
        if (!seen.insert(xm.act(a, Morphism(m))).second) {
          c.action_injective = false;
          c.witnesses.push_back(
              {"action-injective", {m, a.value},
               "action of morphism " + str(m) + " is not injective at "
                   + str(a.value)});
          break;
        }
      }
    }

    c.is_crossed_module = c.is_groupoid && c.fibers_are_groups;
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // CrossedModule
  ////////////////////////////////////////////////////////////////////////

  CrossedModule CrossedModule::from(CrossedMonoid xm) {
    auto cls = classify_structure(xm);
    for (auto const& w : cls.witnesses) {
      if (w.axiom == "groupoid" || w.axiom == "fiber-group") {
        throw RefusalError(
            w.axiom, w.witness,
            "not a crossed module (" + w.axiom + "): " + w.detail
                + "; cancellation "
                + (cls.fibers_cancellative ? "holds" : "fails")
                + ", action injectivity "
                + (cls.action_injective ? "holds" : "fails"));
      }
    }
    CrossedModule cm(std::move(xm));
    auto const&   m = cm.xm_;
    cm.morphism_inverse_.resize(m.num_morphisms());
    for (std::uint32_t a = 0; a < m.num_morphisms(); ++a) {
      for (auto b : m.category().hom(m.target(Morphism(a)),
                                     m.source(Morphism(a)))) {
        if (m.compose(Morphism(a), b) == m.identity(m.target(Morphism(a)))) {
          cm.morphism_inverse_[a] = b;
          break;
        }
      }
    }
    cm.element_inverse_.resize(m.num_elements());
    for (std::uint32_t a = 0; a < m.num_elements(); ++a) {
      Element x(a);
      Element e = m.unit(m.owner(x));
      for (auto y : m.fiber(m.owner(x))) {
        if (m.mul(x, y) == e) {
          cm.element_inverse_[a] = y;
          break;
        }
      }
    }
    return cm;
  }

  ////////////////////////////////////////////////////////////////////////
  // XMorphism
  ////////////////////////////////////////////////////////////////////////

  XMorphism XMorphism::identity(CrossedMonoid const& xm) {
    XMorphism m;
    for (std::uint32_t i = 0; i < xm.num_objects(); ++i) {
      m.objects.emplace_back(i);
    }
    for (std::uint32_t i = 0; i < xm.num_morphisms(); ++i) {
      m.morphisms.emplace_back(i);
    }
    for (std::uint32_t i = 0; i < xm.num_elements(); ++i) {
      m.elements.emplace_back(i);
    }
    return m;
  }

  ValidationReport validate_xmorphism(CrossedMonoid const& src,
                                      CrossedMonoid const& dst,
                                      XMorphism const&     f) {
    if (f.objects.size() != src.num_objects()
        || f.morphisms.size() != src.num_morphisms()
        || f.elements.size() != src.num_elements()) {
      throw StructuralError("crossed monoid morphism maps are not total");
    }
    for (auto x : f.objects) {
      if (x.value >= dst.num_objects()) {
        throw StructuralError("object map points out of range");
      }
    }
    for (auto m : f.morphisms) {
      if (m.value >= dst.num_morphisms()) {
        throw StructuralError("morphism map points out of range");
      }
    }
    for (auto a : f.elements) {
      if (a.value >= dst.num_elements()) {
        throw StructuralError("element map points out of range");
      }
    }

    ValidationReport report;
    auto             fail = [&](char const* axiom, Witness w, std::string what) {
      if (!report.has(axiom)) {
        report.violations.push_back({axiom, std::move(w), std::move(what)});
      }
    };
    auto F = [&](Morphism m) { return f.morphisms[m.value]; };
    auto Fo = [&](Object x) { return f.objects[x.value]; };
    auto fe = [&](Element a) { return f.elements[a.value]; };

    for (std::uint32_t m = 0; m < src.num_morphisms(); ++m) {
      Morphism a(m);
      if (dst.source(F(a)) != Fo(src.source(a))
          || dst.target(F(a)) != Fo(src.target(a))) {
        fail("functor.typing", {m}, "F(" + str(m) + ") has wrong endpoints");
      }
    }
    for (std::uint32_t x = 0; x < src.num_objects(); ++x) {
      if (F(src.identity(Object(x))) != dst.identity(Fo(Object(x)))) {
        fail("functor.identity", {x}, "F(1_x) != 1_F(x) at x=" + str(x));
      }
    }
    if (!report.has("functor.typing")) {
      for (auto const& e : src.category().composition_table()) {
        auto r = dst.category().try_compose(F(e.left), F(e.right));
        if (!r || *r != F(e.result)) {
          fail("functor.compose", {e.left.value, e.right.value},
               "F(alpha*beta) != F(alpha)*F(beta)");
        }
      }
    }
    for (std::uint32_t a = 0; a < src.num_elements(); ++a) {
      if (dst.owner(fe(Element(a))) != Fo(src.owner(Element(a)))) {
        fail("hom.typing", {a}, "f does not map A(x) into B(F(x))");
      }
    }
    if (report.has("hom.typing")) {
      return report;
    }
    for (std::uint32_t x = 0; x < src.num_objects(); ++x) {
      if (fe(src.unit(Object(x))) != dst.unit(Fo(Object(x)))) {
        fail("hom.unit", {x}, "f_x(e_x) != e_F(x)");
      }
    }
    for (std::uint32_t a = 0; a < src.num_elements(); ++a) {
      for (auto b : src.fiber(src.owner(Element(a)))) {
        if (fe(src.mul(Element(a), b)) != dst.mul(fe(Element(a)), fe(b))) {
          fail("hom.mul", {a, b.value},
               "f(" + str(a) + "*" + str(b.value) + ") != f(" + str(a)
                   + ")*f(" + str(b.value) + ")");
        }
      }
    }
    if (report.has("functor.typing")) {
      return report;
    }
    for (std::uint32_t m = 0; m < src.num_morphisms(); ++m) {
      Morphism alpha(m);
      for (auto a : src.fiber(src.target(alpha))) {
        if (fe(src.act(a, alpha)) != dst.act(fe(a), F(alpha))) {
          fail("mor1.action", {m, a.value}, "f_s(a^alpha) != f_t(a)^F(alpha)");
        }
      }
    }
    for (std::uint32_t a = 0; a < src.num_elements(); ++a) {
      if (F(src.boundary(Element(a))) != dst.boundary(fe(Element(a)))) {
        fail("mor1.boundary", {a}, "F(boundary(a)) != boundary(f(a))");
      }
    }
    return report;
  }

}  // namespace xnerve
