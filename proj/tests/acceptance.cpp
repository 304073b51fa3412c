// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "xnerve/fillers.hpp"
#include "xnerve/fixtures.hpp"
#include "xnerve/homotopy.hpp"
#include "xnerve/simplicial.hpp"

using namespace xnerve;
namespace fx = xnerve::fixtures;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  // All (M0, Mn, m) with d_{n-1} M0 = d_0 Mn and m over x_1.
  std::vector<CornerTriple> corner_triples(CrossedMonoid const& xm, int n) {
    auto                      lower = enumerate(xm, n - 1);
    std::vector<CornerTriple> out;
    for (auto const& a : lower) {
      auto da = face(xm, a, n - 1);
      for (auto const& b : lower) {
        if (face(xm, b, 0) != da) {
          continue;
        }
        for (auto e : xm.fiber(a.object(0))) {
          out.push_back({a, b, e});
        }
      }
    }
    return out;
  }

  CellBoundary to_cells(NerveProvider const& p, Boundary const& b) {
    CellBoundary out{b.dim, {}};
    for (auto c : b.faces) {
      out.faces.push_back(p.cell(b.dim - 1, c));
    }
    return out;
  }

  // Fills `h`, recomputes every face of the filler independently and counts
  // a mismatch if any differs or the filler throws.
  bool fills(CrossedModule const& cm, CellHorn const& h,
             std::function<FillResult(CrossedModule const&, CellHorn const&)>
                 filler) {
    try {
      auto r = filler(cm, h);
      for (int j = 0; j <= h.dim; ++j) {
        if (j != h.omitted && face(cm.monoid(), r.filler, j) != h.faces[j]) {
          return false;
        }
      }
      return check_cell(cm.monoid(), r.filler) == std::nullopt;
    } catch (std::exception const&) {
      return false;
    }
  }

  Outcome simplicial_identities() {
    Outcome o;
    std::uint64_t four = 0;
    for (auto const& xm :
         {fx::f1(), fx::f2(), fx::f3(), fx::f4(), fx::f5(), fx::f6()}) {
      NerveProvider p(xm, 5);
      auto          v = audit_simplicial(p, 4);
      o.require(v.passed(), xm.name() + ": " + (v.passed() ? "" : v.violations[0].axiom));
      if (xm.name() == "F4") {
        four = p.count(4);
      }
    }
    o.require(four == 11664, "F4 has " + std::to_string(four) + " four-cells");
    o.detail = o.ok ? "F1-F6 up to dim 4, F4 N_4 = 11664, zero violations"
                    : o.detail;
    return o;
  }

  Outcome lambda_mu() {
    Outcome       o;
    std::uint64_t cells = 0, triples = 0;
    for (auto const& xm : {fx::f2(), fx::f4(), fx::f6()}) {
      for (int n = 2; n <= 4; ++n) {
        auto all = enumerate(xm, n);
        for (auto const& c : all) {
          o.require(mu(xm, lambda(xm, c)) == c,
                    xm.name() + ": mu(lambda(M)) != M for " + to_text(c));
        }
        auto ts = corner_triples(xm, n);
        o.require(ts.size() == all.size(),
                  xm.name() + ": |N~_" + std::to_string(n) + "| != |N_n|");
        for (auto const& t : ts) {
          o.require(lambda(xm, mu(xm, t)) == t,
                    xm.name() + ": lambda(mu(t)) != t");
        }
        cells += all.size();
        triples += ts.size();
      }
    }
    if (o.ok) {
      o.detail = "F2, F4, F6 dims 2-4: " + std::to_string(cells)
                 + " cells and " + std::to_string(triples)
                 + " corner triples round trip";
    }
    return o;
  }

  Outcome corner_formulas() {
    Outcome       o;
    std::uint64_t count = 0;
    for (auto const& xm : {fx::f4(), fx::f6()}) {
      for (auto const& t : corner_triples(xm, 3)) {
        for (int j = 1; j <= 2; ++j) {
          o.require(face_of_mu(xm, t, j) == lambda(xm, face(xm, mu(xm, t), j)),
                    xm.name() + ": face_of_mu differs at j = "
                        + std::to_string(j));
        }
        ++count;
      }
    }
    if (o.ok) {
      o.detail = "all " + std::to_string(count)
                 + " triples of N~_3(F4), N~_3(F6), j = 1, 2";
    }
    return o;
  }

  Outcome coskeletal(std::vector<std::pair<CrossedMonoid, std::uint64_t>> const& cases,
                     int dim) {
    Outcome     o;
    std::string counts;
    for (auto const& [xm, expect] : cases) {
      NerveProvider p(xm, dim);
      auto          r = check_coskeletal(p, dim - 1, dim);
      auto const&   l = r.levels.back();
      o.require(l.dim == dim && l.cells == expect,
                xm.name() + ": " + std::to_string(l.cells) + " cells");
      o.require(l.injective, xm.name() + ": b_" + std::to_string(dim)
                                 + " not injective");
      o.require(l.surjective, xm.name() + ": b_" + std::to_string(dim)
                                  + " not surjective");
      counts += (counts.empty() ? "" : ", ") + xm.name() + " "
                + std::to_string(l.cells) + " = kernel "
                + std::to_string(l.kernel);
    }
    if (o.ok) {
      o.detail = "b_" + std::to_string(dim) + " bijective: " + counts;
    }
    return o;
  }

  Outcome image_characterization() {
    Outcome       o;
    std::uint64_t tuples = 0, in_image = 0;
    for (auto const& xm : {fx::f2(), fx::f4(), fx::f6()}) {
      NerveProvider p(xm, 4);
      auto          image = oracle::naive_image(p, 3, -1);
      for (auto const& t : simplicial_kernel(p, 3)) {
        bool brute = image.count(t.faces) > 0;
        o.require(image_b3(xm, to_cells(p, t)) == brute,
                  xm.name() + ": predicate disagrees with brute force");
        ++tuples;
        in_image += brute;
      }
    }
    auto          f5 = fx::f5();
    NerveProvider p5(f5, 4);
    for (CellIndex c = 0; c < p5.count(3); ++c) {
      o.require(image_b3(f5, boundary(f5, p5.cell(3, c))),
                "F5: an image tuple violates the image condition");
    }
    if (o.ok) {
      o.detail = std::to_string(tuples) + " kernel tuples on F2, F4, F6 ("
                 + std::to_string(in_image)
                 + " in the image); F5 necessity on all "
                 + std::to_string(p5.count(3)) + " 3-cells";
    }
    return o;
  }

  Outcome kan_fillers() {
    Outcome       o;
    std::uint64_t total = 0;
    auto          exhaust = [&](CrossedMonoid const& xm, int n, auto filler) {
      NerveProvider p(xm, n + 1);
      auto          cm = CrossedModule::from(xm);
      for (int l = 0; l <= n; ++l) {
        for (auto const& h : horns(p, n, l)) {
          o.require(fills(cm, oracle::to_cells(p, h), filler),
                    xm.name() + ": mismatch in dim " + std::to_string(n));
          ++total;
        }
      }
    };
    for (auto const& xm : {fx::f4(), fx::f6()}) {
      exhaust(xm, 2, fill_horn2);
      exhaust(xm, 3, fill_horn3);
    }
    exhaust(fx::f2(), 4, fill_horn4);
    {
      auto          f4 = fx::f4();
      NerveProvider p(f4, 5);
      auto          cm = CrossedModule::from(f4);
      for (int l = 0; l <= 4; ++l) {
        for (auto const& h : oracle::sample_horns(p, 4, l, 1000, 1234 + l)) {
          o.require(fills(cm, h, fill_horn4), "F4: 4-horn mismatch");
          ++total;
        }
      }
    }
    exhaust(fx::f2(), 5, fill_horn_high);
    if (o.ok) {
      o.detail = std::to_string(total)
                 + " horns filled, every face verified, zero mismatches";
    }
    return o;
  }

  Outcome kan_converse() {
    Outcome       o;
    auto          f5 = fx::f5();
    NerveProvider p(f5, 4);
    auto          r = check_kan(p, 3);
    auto const*   first = r.first_failure();
    o.require(first && first->dim == 3, "F5: no unfillable horn in dim 3");
    auto cell = [&](std::uint32_t corner) {
      return p.index(NerveCell(std::vector<Object>(3, Object(0)),
                               {0, corner, 0}));
    };
    Horn expect{3, 1, {cell(0), 0, cell(0), cell(1)}};
    bool found = false;
    for (auto const& l : r.levels) {
      if (l.dim == 3 && l.omitted == 1) {
        found = !l.fillable && l.witness == expect;
      }
    }
    o.require(found, "F5: (e, -, e, a) is not the reported 3-horn witness");
    std::string refusals;
    try {
      (void)fill_horn(f5, oracle::to_cells(p, expect));
      o.require(false, "F5: fill_horn did not refuse");
    } catch (RefusalError const& e) {
      o.require(e.hypothesis() == "fiber-group",
                "F5: refused with " + e.hypothesis());
      refusals = e.hypothesis();
    }
    try {
      (void)pi_bruteforce(p, 2, 0);
      o.require(false, "F5: pi_bruteforce did not refuse");
    } catch (RefusalError const& e) {
      o.require(e.hypothesis() == "kan", "F5: pi refused with " + e.hypothesis());
      refusals += ", " + e.hypothesis();
    }
    if (o.ok) {
      o.detail = "F5 horn (e, -, e, a) in dim 3 unfillable; refusals: "
                 + refusals;
    }
    return o;
  }

  Outcome homotopy_groups() {
    Outcome o;
    struct Case {
      CrossedMonoid xm;
      std::size_t   pi1, pi2;
    };
    for (auto const& c : {Case{fx::f2(), 2, 1}, Case{fx::f4(), 2, 3},
                          Case{fx::f6(), 2, 3}}) {
      auto cm = CrossedModule::from(c.xm);
      auto g1 = pi_compare(cm, 1, Object(0));
      auto g2 = pi_compare(cm, 2, Object(0));
      o.require(g1.isomorphic() && g1.problems.empty()
                    && g1.algebraic.order() == c.pi1,
                c.xm.name() + ": pi_1");
      o.require(g2.isomorphic() && g2.problems.empty()
                    && g2.algebraic.order() == c.pi2
                    && is_abelian(g2.simplicial),
                c.xm.name() + ": pi_2");
    }
    auto v = higher_vanishing(CrossedModule::from(fx::f2()), Object(0), 3);
    o.require(v.trivial(), "F2: pi_3 not trivial");
    if (o.ok) {
      o.detail = "pi_1/pi_2 orders F2 2/1, F4 2/3, F6 2/3 with explicit "
                 "isomorphisms; pi_3(F2) trivial";
    }
    return o;
  }

  Outcome w_matrix() {
    Outcome       o;
    std::uint64_t count = 0;
    for (auto const& xm : {fx::f4(), fx::f6()}) {
      NerveProvider p(xm, 5);
      auto          cm = CrossedModule::from(xm);
      for (int l = 0; l <= 4; ++l) {
        for (auto const& h : oracle::sample_horns(p, 4, l, 200, 900 + l)) {
          auto w = oracle::w_from_faces(xm, h);
          o.require(w == oracle::w_displayed(xm, h),
                    xm.name() + ": W differs from its displayed form");
          o.require(oracle::w_symmetric(w, l) && oracle::w_identity(cm, w, h),
                    xm.name() + ": w_st identity fails at l = "
                        + std::to_string(l));
          o.require(image_b3(xm, beta(xm, h)),
                    xm.name() + ": beta violates the image condition");
          ++count;
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(count)
                 + " random 4-horns on F4, F6: identities hold, beta in image";
    }
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*             name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria = {
      {"simplicial identities", simplicial_identities},
      {"lambda/mu bijection", lambda_mu},
      {"corner face formulas", corner_formulas},
      {"4-coskeletal",
       [] { return coskeletal({{fx::f2(), 32}, {fx::f5(), 1024}}, 5); }},
      {"3-coskeletal",
       [] { return coskeletal({{fx::f4(), 11664}, {fx::f6(), 11664}}, 4); }},
      {"image of b_3", image_characterization},
      {"Kan fillers", kan_fillers},
      {"Kan converse", kan_converse},
      {"homotopy groups", homotopy_groups},
      {"W-matrix identities", w_matrix},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str(), secs);
    failed += !o.ok;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
