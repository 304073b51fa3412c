#ifndef XNERVE_IO_HPP_
#define XNERVE_IO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xnerve/algebra.hpp"

namespace xnerve {

  class ParseError : public std::runtime_error {
   public:
    enum class Kind { syntax, schema, dangling_id };

    ParseError(Kind kind, std::string const& what,
               std::optional<std::size_t> byte = std::nullopt)
        : std::runtime_error(what), kind_(kind), byte_(byte) {}

    Kind kind() const noexcept { return kind_; }
    // byte offset of a syntax error
    std::optional<std::size_t> byte() const noexcept { return byte_; }

   private:
    Kind                       kind_;
    std::optional<std::size_t> byte_;
  };

  char const* to_string(ParseError::Kind kind);

  struct InputDocument {
    CrossedMonoidData          data;
    // "expected" metadata, kept verbatim as compact JSON
    std::optional<std::string> expected;
  };

  // Reads a crossed monoid document:
  //
  //   {
  //     "name": "F4",                                  (optional)
  //     "objects": [0],
  //     "morphisms": [{"id": 0, "src": 0, "tgt": 0}, ...],
  //     "identity": {"0": 0},
  //     "compose": [[alpha, beta, alpha*beta], ...],
  //     "monoids": {"0": {"elements": [0, 1, 2], "unit": 0,
  //                       "mul": [[0, 1, 2], ...]}},
  //     "action": {"1": {"0": 0, "1": 2, "2": 1}, ...},
  //     "boundary": {"0": {"0": 0, "1": 0, "2": 0}},
  //     "expected": {...}                             (optional)
  //   }
  //
  // Ids are dense: objects and morphisms 0..n-1, fiber elements partition
  // 0..n-1. Tables are taken as given; totality and the axioms are checked
  // later by CrossedMonoid and the validator.
  InputDocument parse_input(std::string_view bytes);

  // Canonical text form; parse_input(serialize(d)) reproduces d and
  // serialize(parse_input(s)) == s for canonical s.
  std::string serialize(InputDocument const& doc);
  std::string serialize(CrossedMonoid const& xm);

}  // namespace xnerve

#endif  // XNERVE_IO_HPP_
