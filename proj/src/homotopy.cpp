#include "xnerve/homotopy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "xnerve/simplicial.hpp"

namespace xnerve {

  std::vector<std::vector<Object>> pi0(CrossedMonoid const& xm) {
    std::size_t const        O = xm.num_objects();
    std::vector<std::size_t> parent(O);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) {
        a = parent[a] = parent[parent[a]];
      }
      return a;
    };
    for (auto const& m : xm.category().morphisms()) {
      auto a = find(m.src.value), b = find(m.tgt.value);
      parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<Object>> out;
    std::vector<std::size_t>         slot(O, SIZE_MAX);
    for (std::size_t x = 0; x < O; ++x) {
      auto r = find(x);
      if (slot[r] == SIZE_MAX) {
        slot[r] = out.size();
        out.emplace_back();
      }
      out[slot[r]].emplace_back(static_cast<std::uint32_t>(x));
    }
    return out;
  }

  GroupPresentation pi1(CrossedModule const& cm, Object t) {
    auto const& xm   = cm.monoid();
    auto const  loop = xm.category().hom(t, t);

    std::set<Morphism> image;
    for (auto a : xm.fiber(t)) {
      image.insert(xm.boundary(a));
    }
    for (auto g : loop) {
      for (auto d : image) {
        auto conj = xm.compose(xm.compose(cm.inverse(g), d), g);
        if (!image.count(conj)) {
          throw std::logic_error("image of the boundary is not normal at "
                                 "morphism "
                                 + std::to_string(g.value));
        }
      }
    }

    // coset of g is g.Im, labelled by its smallest member
    std::vector<Morphism> reps;
    auto                  rep_of = [&](Morphism g) {
      Morphism best = g;
      for (auto d : image) {
        best = std::min(best, xm.compose(g, d));
      }
      return best;
    };
    for (auto g : loop) {
      if (rep_of(g) == g) {
        reps.push_back(g);
      }
    }
    auto index = [&](Morphism g) {
      return static_cast<std::uint32_t>(
          std::find(reps.begin(), reps.end(), rep_of(g)) - reps.begin());
    };

    GroupPresentation G;
    for (auto r : reps) {
      G.labels.push_back(std::to_string(r.value));
    }
    G.unit = index(xm.identity(t));
    for (auto a : reps) {
      for (auto b : reps) {
        G.table.push_back(index(xm.compose(a, b)));
      }
    }
    G.tag = order_profile_tag(G);
    return G;
  }

  GroupPresentation pi2(CrossedModule const& cm, Object t) {
    auto const&          xm = cm.monoid();
    std::vector<Element> kernel;
    for (auto a : xm.fiber(t)) {
      if (xm.boundary(a) == xm.identity(t)) {
        kernel.push_back(a);
      }
    }
    auto index = [&](Element a) {
      auto it = std::find(kernel.begin(), kernel.end(), a);
      if (it == kernel.end()) {
        throw std::logic_error("kernel of the boundary is not closed");
      }
      return static_cast<std::uint32_t>(it - kernel.begin());
    };
    GroupPresentation G;
    for (auto a : kernel) {
      G.labels.push_back(std::to_string(a.value));
    }
    G.unit = index(xm.unit(t));
    for (auto a : kernel) {
      for (auto b : kernel) {
        G.table.push_back(index(xm.mul(a, b)));
      }
    }
    if (!is_abelian(G)) {
      throw std::logic_error("kernel of the boundary is not abelian");
    }
    G.tag = order_profile_tag(G);
    return G;
  }

  PiComparison pi_compare(CrossedModule const& cm, int n, Object t,
                          std::uint64_t cap) {
    if (n != 1 && n != 2) {
      throw std::out_of_range("pi_compare covers n = 1 and n = 2");
    }
    PiComparison out;
    out.n         = n;
    out.algebraic = n == 1 ? pi1(cm, t) : pi2(cm, t);

    NerveProvider p(cm.monoid(), n + 2);
    auto          brute = pi_bruteforce(p, n, p.index(NerveCell::point(t)), cap);
    out.simplicial      = brute.group;
    out.problems        = brute.problems;
    if (brute.ok()) {
      out.isomorphism = find_isomorphism(out.algebraic, out.simplicial);
      if (!out.isomorphism) {
        out.problems.push_back("no isomorphism between the algebraic ("
                               + out.algebraic.tag + ") and simplicial ("
                               + out.simplicial.tag + ") groups");
      }
    }
    return out;
  }

  VanishingReport higher_vanishing(CrossedModule const& cm, Object t, int n,
                                   std::uint64_t cap) {
    NerveProvider   p(cm.monoid(), n + 2);
    auto            brute = pi_bruteforce(p, n, p.index(NerveCell::point(t)), cap);
    VanishingReport out;
    out.n        = n;
    out.order    = brute.group.order();
    out.problems = brute.problems;
    return out;
  }

}  // namespace xnerve
