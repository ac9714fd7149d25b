#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "qhom/partition.hpp"
#include "qhom/quandle.hpp"
#include "qhom/terms.hpp"

namespace qhom {

  // Least congruence of q containing the seed pairs.
  Partition congruence_closure(QuandleTable const&                             q,
                               std::vector<std::pair<element, element>> const& seeds);

  enum class CongruenceKind {
    components,     // ker(c_Q): same component
    medial,         // m_Q: generated by mediality instances
    two_reductive,  // γ_Q: generated by 2-reductivity instances
    identities      // Cg(K) for an explicit finite list K
  };

  Partition standard_congruence(QuandleTable const&          q,
                                CongruenceKind               kind,
                                std::vector<Identity> const& ids = {});

  // (a, b, c, d) with a~b, c~d but a▷c not related to b▷d, lexicographically
  // least; empty when alpha is a congruence.
  std::optional<std::array<element, 4>> congruence_violation(QuandleTable const& q,
                                                             Partition const&    alpha);

  class not_a_congruence : public input_error {
   public:
    explicit not_a_congruence(std::array<element, 4> witness);
    std::array<element, 4> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<element, 4> _witness;
  };

  struct Quotient {
    QuandleTable         table;
    std::vector<element> projection;  // element -> class index
  };

  // Classes are numbered by ascending representative. Throws not_a_congruence.
  Quotient quotient(QuandleTable const& q, Partition const& alpha);

}  // namespace qhom
