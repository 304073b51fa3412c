#include "xnerve/group.hpp"

#include <algorithm>
#include <functional>

namespace xnerve {

  std::optional<std::string> group_axiom_failure(GroupPresentation const& g) {
    std::size_t const n = g.order();
    if (n == 0 || g.table.size() != n * n || g.unit >= n) {
      return "closure: table is not square over the labels";
    }
    for (auto v : g.table) {
      if (v >= n) {
        return "closure: entry " + std::to_string(v) + " out of range";
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (g.mul(g.unit, a) != a || g.mul(a, g.unit) != a) {
        return "unit: fails at " + g.labels[a];
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            return "associativity: fails at (" + g.labels[a] + ", "
                   + g.labels[b] + ", " + g.labels[c] + ")";
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b) {
        found = g.mul(a, b) == g.unit && g.mul(b, a) == g.unit;
      }
      if (!found) {
        return "inverse: " + g.labels[a] + " has none";
      }
    }
    return std::nullopt;
  }

  bool is_abelian(GroupPresentation const& g) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = a + 1; b < g.order(); ++b) {
        if (g.mul(a, b) != g.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> element_orders(GroupPresentation const& g) {
    std::vector<std::size_t> out(g.order(), 0);
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::size_t p = a, k = 1;
      while (p != g.unit && k <= g.order()) {
        p = g.mul(p, a);
        ++k;
      }
      out[a] = k;
    }
    return out;
  }

  std::optional<std::vector<std::size_t>> find_isomorphism(
      GroupPresentation const& g, GroupPresentation const& h) {
    std::size_t const n = g.order();
    if (n != h.order()) {
      return std::nullopt;
    }
    auto go = element_orders(g);
    auto ho = element_orders(h);
    {
      auto a = go, b = ho;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> phi(n, kNone);
    std::vector<bool>        used(n, false);

    // Every product among assigned elements whose value is also assigned.
    auto consistent = [&]() {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; phi[x] != kNone && y < n; ++y) {
          std::size_t xy = g.mul(x, y);
          if (phi[y] != kNone && phi[xy] != kNone
              && phi[xy] != h.mul(phi[x], phi[y])) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> place = [&](std::size_t a) -> bool {
      if (a == n) {
        return true;
      }
      if (phi[a] != kNone) {
        return place(a + 1);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (used[b] || go[a] != ho[b]) {
          continue;
        }
        phi[a]  = b;
        used[b] = true;
        if (consistent() && place(a + 1)) {
          return true;
        }
        phi[a]  = kNone;
        used[b] = false;
      }
      return false;
    };

    phi[g.unit]  = h.unit;
    used[h.unit] = true;
    if (!place(0)) {
      return std::nullopt;
    }
    return phi;
  }

  std::string order_profile_tag(GroupPresentation const& g) {
    std::size_t const n = g.order();
    if (n == 1) {
      return "trivial";
    }
    auto orders = element_orders(g);
    if (std::find(orders.begin(), orders.end(), n) != orders.end()) {
      return "cyclic of order " + std::to_string(n);
    }
    return (is_abelian(g) ? "abelian of order " : "non-abelian of order ")
           + std::to_string(n);
  }

}  // namespace xnerve
