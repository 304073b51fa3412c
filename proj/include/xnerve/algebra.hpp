#ifndef XNERVE_ALGEBRA_HPP_
#define XNERVE_ALGEBRA_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "xnerve/errors.hpp"

namespace xnerve {

  // Dense integer ids with a tag so objects, morphisms and fiber elements
  // cannot be mixed up.
  template <class Tag>
  struct Id {
    std::uint32_t value = 0;

    constexpr Id() = default;
    constexpr explicit Id(std::uint32_t v) : value(v) {}

    constexpr auto operator<=>(Id const&) const = default;
  };

  struct ObjectTag;
  struct MorphismTag;
  struct ElementTag;

  using Object   = Id<ObjectTag>;
  using Morphism = Id<MorphismTag>;
  using Element  = Id<ElementTag>;

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  // A monoid on {0, ..., order-1} given by its full multiplication table.
  // The constructor only checks that the table is total and in range;
  // associativity and unit laws are the validator's business.
  class FiniteMonoid {
   public:
    FiniteMonoid(std::size_t order, std::size_t unit,
                 std::vector<std::uint32_t> table);

    std::size_t order() const noexcept { return order_; }
    std::size_t unit() const noexcept { return unit_; }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table_[a * order_ + b];
    }

   private:
    std::size_t                order_;
    std::size_t                unit_;
    std::vector<std::uint32_t> table_;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteCategory
  ////////////////////////////////////////////////////////////////////////

  struct MorphismSpec {
    Object src;
    Object tgt;
  };

  // (alpha, beta, alpha * beta); defined exactly when s(alpha) = t(beta).
  struct CompositionEntry {
    Morphism left;
    Morphism right;
    Morphism result;
  };

  // Products are written alpha * beta with s(alpha) = t(beta); the composite
  // runs from s(beta) to t(alpha), i.e. beta is applied first.
  class FiniteCategory {
   public:
    FiniteCategory(std::size_t                   num_objects,
                   std::vector<MorphismSpec>     morphisms,
                   std::vector<Morphism>         identities,
                   std::vector<CompositionEntry> composition);

    std::size_t num_objects() const noexcept { return num_objects_; }
    std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

    Object source(Morphism m) const { return morphisms_[m.value].src; }
    Object target(Morphism m) const { return morphisms_[m.value].tgt; }
    Morphism identity(Object x) const { return identities_[x.value]; }

    std::optional<Morphism> try_compose(Morphism a, Morphism b) const;

    // All morphisms src -> tgt in increasing id order.
    std::span<Morphism const> hom(Object src, Object tgt) const {
      return homs_[src.value * num_objects_ + tgt.value];
    }
    // Position of m inside hom(source(m), target(m)).
    std::size_t hom_position(Morphism m) const {
      return hom_position_[m.value];
    }

    std::vector<MorphismSpec> const& morphisms() const noexcept {
      return morphisms_;
    }
    std::vector<Morphism> const& identities() const noexcept {
      return identities_;
    }
    std::vector<CompositionEntry> composition_table() const;

   private:
    static constexpr std::uint32_t kUndefined = 0xFFFFFFFF;

    std::size_t                        num_objects_;
    std::vector<MorphismSpec>          morphisms_;
    std::vector<Morphism>              identities_;
    std::vector<std::uint32_t>         compose_;  // dense M x M
    std::vector<std::vector<Morphism>> homs_;
    std::vector<std::size_t>           hom_position_;
  };

  // alpha * beta; throws CompositionError when s(alpha) != t(beta).
  Morphism compose(FiniteCategory const& cat, Morphism alpha, Morphism beta);

  ////////////////////////////////////////////////////////////////////////
  // CrossedMonoid
  ////////////////////////////////////////////////////////////////////////

  struct FiberSpec {
    std::vector<Element>              elements;
    Element                           unit;
    std::vector<std::vector<Element>> mul;  // mul[i][j] = elements[i]*elements[j]
  };

  // Raw tables as they come out of a document. Element ids are global and
  // each belongs to exactly one fiber.
  struct CrossedMonoidData {
    std::string                   name;
    std::size_t                   num_objects = 0;
    std::vector<MorphismSpec>     morphisms;
    std::vector<Morphism>         identities;
    std::vector<CompositionEntry> composition;
    std::vector<FiberSpec>        fibers;  // per object
    // per morphism alpha: s -> t, pairs (a, a^alpha) for a in A(t)
    std::vector<std::vector<std::pair<Element, Element>>> action;
    // per object t, pairs (a, boundary_t(a)) for a in A(t)
    std::vector<std::vector<std::pair<Element, Morphism>>> boundary;
  };

  class CrossedMonoid {
   public:
    // Throws StructuralError on malformed tables.
    explicit CrossedMonoid(CrossedMonoidData const& data);

    std::string const& name() const noexcept { return name_; }

    FiniteCategory const& category() const noexcept { return cat_; }
    std::size_t num_objects() const noexcept { return cat_.num_objects(); }
    std::size_t num_morphisms() const noexcept { return cat_.num_morphisms(); }
    std::size_t num_elements() const noexcept { return owner_.size(); }

    Object   source(Morphism m) const { return cat_.source(m); }
    Object   target(Morphism m) const { return cat_.target(m); }
    Morphism identity(Object x) const { return cat_.identity(x); }
    Morphism compose(Morphism a, Morphism b) const {
      return xnerve::compose(cat_, a, b);
    }

    std::span<Element const> fiber(Object x) const {
      return fibers_[x.value];
    }
    FiniteMonoid const& fiber_monoid(Object x) const {
      return monoids_[x.value];
    }
    Object      owner(Element a) const { return owner_[a.value]; }
    std::size_t local_index(Element a) const { return local_[a.value]; }
    Element     unit(Object x) const {
      return fibers_[x.value][monoids_[x.value].unit()];
    }

    // Product in the fiber containing both a and b.
    Element mul(Element a, Element b) const;
    // a^alpha for a in A(t(alpha)); lands in A(s(alpha)).
    Element act(Element a, Morphism alpha) const {
      if (owner_[a.value] != cat_.target(alpha)) {
        throw std::invalid_argument("element does not lie over the target of "
                                    "the acting morphism");
      }
      return action_[alpha.value][local_[a.value]];
    }
    // boundary_t(a) for t = owner(a).
    Morphism boundary(Element a) const { return boundary_[a.value]; }

    CrossedMonoidData to_data() const;

   private:
    std::string                       name_;
    FiniteCategory                    cat_;
    std::vector<FiniteMonoid>         monoids_;
    std::vector<std::vector<Element>> fibers_;
    std::vector<Object>               owner_;
    std::vector<std::size_t>          local_;
    std::vector<std::vector<Element>> action_;
    std::vector<Morphism>             boundary_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  // One failed axiom instance. `axiom` is a stable label (cr1.hom, cr2, cr3,
  // mon-assoc, ...); `witness` holds the ids quantified over by that axiom in
  // the order they are listed in axiom_description().
  struct Violation {
    std::string                axiom;
    std::vector<std::uint32_t> witness;
    std::string                detail;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
    bool has(std::string const& axiom) const;
    Violation const* find(std::string const& axiom) const;
  };

  // Every axiom label that validate_crossed_monoid may report.
  std::string_view axiom_description(std::string_view axiom);

  // Checks every instance of every crossed monoid axiom. At most one
  // violation per axiom label, and it is the lexicographically first witness
  // in id order.
  ValidationReport validate_crossed_monoid(CrossedMonoid const& xm);

  // Re-evaluates the axiom instance named by `v`; true iff it really fails.
  bool violation_holds(CrossedMonoid const& xm, Violation const& v);

  struct Classification {
    bool is_groupoid         = false;
    bool fibers_are_groups   = false;
    bool fibers_cancellative = false;
    bool action_injective    = false;
    bool is_crossed_module   = false;
    // First failure witness per flag that is false, labelled by the flag.
    std::vector<Violation> witnesses;
  };

  Classification classify_structure(CrossedMonoid const& xm);

  ////////////////////////////////////////////////////////////////////////
  // CrossedModule
  ////////////////////////////////////////////////////////////////////////

  // A crossed monoid that is known to be a crossed module, together with
  // precomputed inverse tables. Only obtainable through from(), which
  // refuses anything else.
  class CrossedModule {
   public:
    // Throws RefusalError naming the failed hypothesis ("groupoid" or
    // "fiber-group").
    static CrossedModule from(CrossedMonoid xm);

    CrossedMonoid const& monoid() const noexcept { return xm_; }

    Morphism inverse(Morphism m) const { return morphism_inverse_[m.value]; }
    Element  inverse(Element a) const { return element_inverse_[a.value]; }

    // a^(alpha^-1): undoes the action of alpha. a lives in A(s(alpha)).
    Element unact(Element a, Morphism alpha) const {
      return xm_.act(a, inverse(alpha));
    }

   private:
    explicit CrossedModule(CrossedMonoid xm) : xm_(std::move(xm)) {}

    CrossedMonoid         xm_;
    std::vector<Morphism> morphism_inverse_;
    std::vector<Element>  element_inverse_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Morphisms of crossed monoids
  ////////////////////////////////////////////////////////////////////////

  // (f, F): F on objects and morphisms, f on global element ids.
  struct XMorphism {
    std::vector<Object>   objects;
    std::vector<Morphism> morphisms;
    std::vector<Element>  elements;

    static XMorphism identity(CrossedMonoid const& xm);
  };

  // Throws StructuralError when a map is not total or points out of range.
  ValidationReport validate_xmorphism(CrossedMonoid const& src,
                                      CrossedMonoid const& dst,
                                      XMorphism const&     m);

}  // namespace xnerve

template <class Tag>
struct std::hash<xnerve::Id<Tag>> {
  std::size_t operator()(xnerve::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // XNERVE_ALGEBRA_HPP_
