#ifndef XNERVE_FIXTURES_HPP_
#define XNERVE_FIXTURES_HPP_

#include "xnerve/algebra.hpp"

// Small crossed monoids used by the tests, the acceptance suite and the
// bundled data/*.json files.
namespace xnerve::fixtures {

  CrossedMonoid f1();  // one object, C = {1}, A trivial
  CrossedMonoid f2();  // one object, C = Z/2, A trivial
  CrossedMonoid f3();  // one object, C = {1}, A = Z/3
  CrossedMonoid f4();  // C = Z/2, A = Z/3, trivial action
  CrossedMonoid f5();  // C = {1}, A = {e, a} with aa = a
  CrossedMonoid f6();  // C = Z/2, A = Z/3, g acts by negation
  CrossedMonoid f7();  // C = Z/2, A = Z/4, boundary k -> g^k: breaks cr3

  // C = S3, A trivial: the classifying space of a non-abelian group.
  CrossedMonoid bg_s3();
  // A = C = S3, boundary the identity, action by conjugation a^g = g^-1 a g.
  CrossedMonoid conjugation_s3();
  // Two objects, C(x, y) = Z/2 for every pair, A(x) = Z/2 with boundary
  // a -> (x, x, a). Multi-object groupoid with an isomorphic boundary.
  CrossedMonoid pair_groupoid();

  // Objects, morphisms and elements of `b` are renumbered after those of `a`.
  CrossedMonoid disjoint_union(CrossedMonoid const& a, CrossedMonoid const& b);

  // F3 -> F4: identity on the object and on Z/3, the unique morphism to 1.
  XMorphism inclusion_f3_f4();

}  // namespace xnerve::fixtures

#endif  // XNERVE_FIXTURES_HPP_
