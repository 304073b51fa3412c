#ifndef XNERVE_ERRORS_HPP_
#define XNERVE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xnerve {

  // Malformed input tables: non-total operations, dangling or duplicate ids.
  // Kept distinct from axiom violations, which are reported, not thrown.
  class StructuralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class CompositionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A nerve cell whose entries do not type-check. Row/column are 1-based
  // matrix positions; (0, 0) means the object sequence itself is wrong.
  class CellTypeError : public std::invalid_argument {
   public:
    CellTypeError(int row, int col, std::string const& what)
        : std::invalid_argument(what), row_(row), col_(col) {}
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

   private:
    int row_;
    int col_;
  };

  // An enumeration would exceed the configured cell budget.
  class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An operation that needs a crossed module (groupoid + group fibers), or a
  // Kan provider, was handed something weaker. `hypothesis` names what failed.
  class RefusalError : public std::runtime_error {
   public:
    RefusalError(std::string hypothesis, std::vector<std::uint32_t> witness,
                 std::string const& what)
        : std::runtime_error(what),
          hypothesis_(std::move(hypothesis)),
          witness_(std::move(witness)) {}
    std::string const& hypothesis() const noexcept { return hypothesis_; }
    std::vector<std::uint32_t> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::string                hypothesis_;
    std::vector<std::uint32_t> witness_;
  };

}  // namespace xnerve

#endif  // XNERVE_ERRORS_HPP_
