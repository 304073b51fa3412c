#ifndef XNERVE_GROUP_HPP_
#define XNERVE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xnerve {

  // A finite group by multiplication table over {0, ..., order-1}.
  struct GroupPresentation {
    std::vector<std::string>   labels;
    std::size_t                unit = 0;
    std::vector<std::uint32_t> table;  // order x order, row-major
    std::string                tag;    // cosmetic, see order_profile_tag

    std::size_t order() const noexcept { return labels.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table[a * order() + b];
    }
  };

  // The first failed group axiom ("closure", "unit", "associativity",
  // "inverse") with a witness, or nothing.
  std::optional<std::string> group_axiom_failure(GroupPresentation const& g);

  bool is_abelian(GroupPresentation const& g);

  std::vector<std::size_t> element_orders(GroupPresentation const& g);

  // A bijection phi with phi(ab) = phi(a)phi(b), found by backtracking.
  std::optional<std::vector<std::size_t>> find_isomorphism(
      GroupPresentation const& g, GroupPresentation const& h);

  // "trivial", "cyclic of order k", "abelian of order k" or "non-abelian of
  // order k".
  std::string order_profile_tag(GroupPresentation const& g);

}  // namespace xnerve

#endif  // XNERVE_GROUP_HPP_
