#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhom {

  // Index of an element of a finite structure. Elements are always 0..n-1.
  using element = std::uint32_t;

  // Malformed input: wrong shape, out-of-range entries, bad file syntax.
  // Distinct from a well-formed object that fails an axiom.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A size or search budget was exceeded.
  class budget_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A structural precondition does not hold (e.g. target not medial).
  class precondition_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  std::string join(std::vector<element> const& xs, char const* sep = " ");

}  // namespace qhom
