#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/types.hpp"

namespace qhom {

  // A finite abelian group given by its addition table. Element 0 is zero.
  class AbelianGroupTable {
   public:
    AbelianGroupTable() : AbelianGroupTable(cyclic(1)) {}

    // Validates commutativity, associativity, identity 0 and inverses.
    static AbelianGroupTable from_table(std::size_t m, std::vector<element> add);
    static AbelianGroupTable cyclic(std::size_t d);
    // "Z1", "Z4", "Z2xZ4", ... Elements are encoded little-endian mixed radix:
    // (a1, a2, ...) has index a1 + d1*(a2 + d2*(...)).
    static AbelianGroupTable from_label(std::string_view label);

    std::size_t order() const noexcept {
      return _m;
    }
    element add(element a, element b) const noexcept {
      return _add[static_cast<std::size_t>(a) * _m + b];
    }
    element neg(element a) const noexcept {
      return _neg[a];
    }
    element sub(element a, element b) const noexcept {
      return add(a, neg(b));
    }
    element times(std::size_t k, element a) const noexcept;
    std::size_t element_order(element a) const noexcept;

    std::optional<std::string> const& label() const noexcept {
      return _label;
    }
    std::vector<element> const& table() const noexcept {
      return _add;
    }

    // Subgroup generated by gens, ascending.
    std::vector<element> span(std::span<element const> gens) const;
    bool generates(std::span<element const> gens) const {
      return span(gens).size() == _m;
    }
    // A generating set found greedily; empty for the trivial group.
    std::vector<element> generators() const;

    friend bool operator==(AbelianGroupTable const& a, AbelianGroupTable const& b) {
      return a._m == b._m && a._add == b._add;
    }

   private:
    AbelianGroupTable(std::size_t m, std::vector<element> add, std::optional<std::string> label);

    std::size_t                _m = 1;
    std::vector<element>       _add{0};
    std::vector<element>       _neg{0};
    std::optional<std::string> _label;
  };

  // The cyclic orders (d1, d2, ...) parsed from a label.
  std::vector<std::size_t> parse_group_label(std::string_view label);
  std::string              format_group_label(std::vector<std::size_t> const& factors);

  // True if image: G -> H is additive (and so fixes zero).
  bool is_group_hom(AbelianGroupTable const&  g,
                    AbelianGroupTable const&  h,
                    std::span<element const>  image);

  // Extends gens[s] -> targets[s] to a homomorphism G -> H by breadth-first
  // propagation from k(0) = 0. Returns the full image table, or nothing if
  // the assignment is not well defined. Throws input_error if gens does not
  // generate G or the lists differ in length.
  std::optional<std::vector<element>> group_hom_extends(AbelianGroupTable const&  g,
                                                        AbelianGroupTable const&  h,
                                                        std::span<element const>  gens,
                                                        std::span<element const>  targets);

  // Every homomorphism G -> H, in lexicographic order of image tables.
  std::vector<std::vector<element>> all_group_homs(AbelianGroupTable const& g,
                                                   AbelianGroupTable const& h);

  // An isomorphism onto a labelled group with invariant factors d1 | d2 | ...
  struct GroupIdentification {
    AbelianGroupTable    labelled;
    std::vector<element> to_labelled;  // g element -> labelled element
  };

  GroupIdentification identify_group(AbelianGroupTable const& g);

}  // namespace qhom
