#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/partition.hpp"
#include "qhom/types.hpp"

namespace qhom {

  enum class Axiom { none, idempotence, left_divisibility, self_distributivity };

  char const* to_string(Axiom a) noexcept;

  // Outcome of checking the quandle axioms on a square table. The witness is
  // (x) for idempotence and left divisibility, (x, y, z) for distributivity.
  struct ValidationReport {
    Axiom                failed = Axiom::none;
    std::vector<element> witness;

    bool ok() const noexcept {
      return failed == Axiom::none;
    }
    std::string describe() const;
  };

  // Checks shape and range (throws input_error) and then the three axiom
  // families in order, returning the lexicographically first failure.
  ValidationReport verify_quandle(std::vector<std::vector<long long>> const& raw);

  // A finite quandle given by its left-translation table: at(x, y) = x ▷ y,
  // so row x is the map L_x. Instances always satisfy the quandle axioms.
  class QuandleTable {
   public:
    QuandleTable() = default;

    // Throws input_error for malformed input and invalid_quandle when an
    // axiom fails.
    explicit QuandleTable(std::vector<std::vector<long long>> const& rows);
    static QuandleTable from_flat(std::size_t n, std::vector<element> cells);

    static QuandleTable trivial(std::size_t n);
    // x ▷ y = 2x - y mod n (dihedral quandle).
    static QuandleTable dihedral(std::size_t n);

    std::size_t order() const noexcept {
      return _n;
    }
    element operator()(element x, element y) const noexcept {
      return _cells[static_cast<std::size_t>(x) * _n + y];
    }
    std::span<element const> row(element x) const noexcept {
      return {_cells.data() + static_cast<std::size_t>(x) * _n, _n};
    }
    std::vector<element> const& cells() const noexcept {
      return _cells;
    }
    // The unique z with x ▷ z = y.
    element left_divide(element x, element y) const noexcept {
      return _ldiv[static_cast<std::size_t>(x) * _n + y];
    }

    std::vector<std::vector<long long>> rows() const;

    // Table relabeled so that new element i is old element perm[i].
    QuandleTable relabel(std::span<element const> perm) const;

    friend bool operator==(QuandleTable const& a, QuandleTable const& b) {
      return a._n == b._n && a._cells == b._cells;
    }
    friend auto operator<=>(QuandleTable const& a, QuandleTable const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._cells <=> b._cells;
    }

   private:
    QuandleTable(std::size_t n, std::vector<element> cells, bool check);

    std::size_t          _n = 0;
    std::vector<element> _cells;
    std::vector<element> _ldiv;
  };

  class invalid_quandle : public std::runtime_error {
   public:
    explicit invalid_quandle(ValidationReport r);
    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  // Orbits of the inner group. Blocks are ordered by least element and the
  // representative of a block (its base point) is that least element.
  struct ComponentPartition {
    std::vector<std::vector<element>> blocks;
    std::vector<std::size_t>          block_of;
    std::vector<element>              representative;

    std::size_t count() const noexcept {
      return blocks.size();
    }
    Partition as_partition() const;
    // Sorted block sizes.
    std::vector<std::size_t> size_profile() const;
  };

  ComponentPartition components(QuandleTable const& q);

  enum class Property { trivial, medial, two_reductive, latin, connected, involutory };

  char const*                  to_string(Property p) noexcept;
  std::vector<Property> const& all_properties();
  // Accepts the snake_case names and the dashed spelling (two-reductive).
  // Throws input_error for an unknown name.
  Property parse_property(std::string_view name);

  // Witness arity depends on the property: trivial (x,y); medial (x,y,z,w);
  // two_reductive (x,y,z); latin (y); connected (x) an element outside the
  // component of 0; involutory (x,y).
  struct PropertyCheck {
    bool                 holds = true;
    std::vector<element> witness;
    explicit operator bool() const noexcept {
      return holds;
    }
  };

  PropertyCheck check_property(QuandleTable const& q, Property p);

  // A bijection f: Q -> R with f(x ▷ y) = f(x) ▷ f(y), if one exists.
  std::optional<std::vector<element>> is_isomorphic(QuandleTable const& q,
                                                    QuandleTable const& r);

  // True if f (as an image sequence) is a homomorphism S -> T.
  bool is_homomorphism(QuandleTable const&       s,
                       QuandleTable const&       t,
                       std::span<element const>  f);

  inline constexpr std::size_t default_power_budget = 10'000;

  // Q^k with coordinates little-endian base n: element i has coordinate c at
  // (i / n^c) % n.
  QuandleTable direct_power(QuandleTable const& q,
                            std::size_t         k,
                            std::size_t         budget = default_power_budget);

  // Least subset containing seeds and closed under ▷, ascending.
  std::vector<element> generated_subquandle(QuandleTable const&      q,
                                            std::span<element const> seeds);

  // A short sequence of elements whose closure is Q, chosen greedily so each
  // next element maximizes the closure gained.
  std::vector<element> greedy_generators(QuandleTable const& q);

  // Every subquandle (nonempty closed subset) of q, each ascending. Exponential;
  // intended for small q.
  std::vector<std::vector<element>> all_subquandles(QuandleTable const& q);

}  // namespace qhom
