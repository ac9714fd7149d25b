#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhom/quandle.hpp"

namespace qhom {

  // Syntax error in the identity language, with a 0-based column.
  class parse_error : public input_error {
   public:
    parse_error(std::string const& what, std::size_t position);
    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // A term over ▷: a variable or `left * right`. Stored as a flat node array
  // with the root last; children always precede their parent.
  class Term {
   public:
    struct Node {
      char        variable = 0;  // 0 for an operation node
      std::size_t left     = 0;
      std::size_t right    = 0;
      std::size_t position = 0;  // column in the source text
    };

    static Term variable(char v, std::size_t position = 0);
    static Term apply(Term const& left, Term const& right, std::size_t position = 0);

    std::vector<Node> const& nodes() const noexcept {
      return _nodes;
    }
    std::size_t root() const noexcept {
      return _nodes.size() - 1;
    }
    // Distinct variables in order of first appearance, left to right.
    std::vector<char> variables() const;

    // value_of[v - 'a'] (or 'A') gives the element assigned to variable v.
    element evaluate(QuandleTable const& q, std::span<element const> values_by_letter) const;

    // Minimal parenthesization under right-associative `*`.
    std::string to_string() const;

    // Structural equality, ignoring source positions.
    friend bool operator==(Term const& a, Term const& b);

   private:
    std::vector<Node> _nodes;
  };

  struct Identity {
    Term              lhs;
    Term              rhs;
    std::vector<char> vars;  // distinct, lhs variables first

    std::string to_string() const;
    friend bool operator==(Identity const&, Identity const&) = default;
  };

  // identity := term '=' term
  // term     := factor ('*' term)?        (right associative)
  // factor   := VAR | '(' term ')'
  Identity parse_identity(std::string_view src);

  namespace identities {
    Identity const& mediality();      // (x*y)*(z*w) = (x*z)*(y*w)
    Identity const& two_reductivity();  // (x*y)*z = y*z
    Identity const& involutory();     // x*(x*y) = y
    Identity const& idempotence();    // x*x = x
  }  // namespace identities

  struct IdentityCheck {
    bool                 holds = true;
    std::vector<element> witness;  // values of id.vars, in order
    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Exhaustive over |Q|^|vars| assignments; the first variable is the most
  // significant digit, so the witness is the lexicographically least failure.
  IdentityCheck satisfies_identity(QuandleTable const& q, Identity const& id);

  // Every (lhs, rhs) value pair over all assignments of every identity,
  // sorted and without duplicates.
  std::vector<std::pair<element, element>>
  instantiate_identity_pairs(QuandleTable const& q, std::vector<Identity> const& ids);

}  // namespace qhom
