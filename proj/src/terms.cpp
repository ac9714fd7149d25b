#include "qhom/terms.hpp"

#include <algorithm>
#include <cctype>

namespace qhom {

  namespace {

    constexpr std::size_t letter_slots = 52;
    constexpr std::size_t max_vars     = 26;

    std::size_t slot(char v) {
      return std::islower(static_cast<unsigned char>(v)) ? static_cast<std::size_t>(v - 'a')
                                                         : 26 + static_cast<std::size_t>(v - 'A');
    }

    class parser {
     public:
      explicit parser(std::string_view src) : _src(src) {}

      Identity identity() {
        skip();
        if (at_end() || peek() == '=') {
          throw parse_error("empty left side", _pos);
        }
        Term lhs = term();
        skip();
        if (at_end() || peek() != '=') {
          throw parse_error("expected '='", _pos);
        }
        ++_pos;
        skip();
        if (at_end()) {
          throw parse_error("empty right side", _pos);
        }
        Term rhs = term();
        skip();
        if (!at_end()) {
          throw parse_error(std::string("unexpected '") + peek() + "'", _pos);
        }
        Identity id{std::move(lhs), std::move(rhs), {}};
        id.vars = id.lhs.variables();
        for (char v : id.rhs.variables()) {
          if (std::find(id.vars.begin(), id.vars.end(), v) == id.vars.end()) {
            id.vars.push_back(v);
          }
        }
        if (id.vars.size() > max_vars) {
          throw parse_error("more than 26 variables", 0);
        }
        return id;
      }

     private:
      Term term() {
        Term left = factor();
        skip();
        if (!at_end() && peek() == '*') {
          std::size_t op = _pos++;
          return Term::apply(left, term(), op);
        }
        return left;
      }

      Term factor() {
        skip();
        if (at_end()) {
          throw parse_error("unexpected end of input", _pos);
        }
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 128) {
          return Term::variable(c, _pos++);
        }
        if (c == '(') {
          std::size_t open = _pos++;
          skip();
          if (!at_end() && peek() == ')') {
            throw parse_error("empty parentheses", _pos);
          }
          Term inner = term();
          skip();
          if (at_end() || peek() != ')') {
            throw parse_error("missing ')' for '(' at column " + std::to_string(open), _pos);
          }
          ++_pos;
          return inner;
        }
        throw parse_error(std::string("unexpected '") + c + "'", _pos);
      }

      void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }
      bool at_end() const {
        return _pos >= _src.size();
      }
      char peek() const {
        return _src[_pos];
      }

      std::string_view _src;
      std::size_t      _pos = 0;
    };

  }  // namespace

  parse_error::parse_error(std::string const& what, std::size_t position)
      : input_error("column " + std::to_string(position) + ": " + what), _position(position) {}

  Term Term::variable(char v, std::size_t position) {
    Term t;
    t._nodes.push_back({v, 0, 0, position});
    return t;
  }

  Term Term::apply(Term const& left, Term const& right, std::size_t position) {
    Term        t;
    std::size_t shift = left._nodes.size();
    t._nodes          = left._nodes;
    for (Node n : right._nodes) {
      if (n.variable == 0) {
        n.left += shift;
        n.right += shift;
      }
      t._nodes.push_back(n);
    }
    t._nodes.push_back({0, left.root(), shift + right.root(), position});
    return t;
  }

  std::vector<char> Term::variables() const {
    // Children precede parents but the left subtree is stored first, so the
    // node order is already left-to-right for leaves.
    std::vector<char> out;
    for (Node const& n : _nodes) {
      if (n.variable != 0 && std::find(out.begin(), out.end(), n.variable) == out.end()) {
        out.push_back(n.variable);
      }
    }
    return out;
  }

  element Term::evaluate(QuandleTable const& q, std::span<element const> values) const {
    std::vector<element> v(_nodes.size());
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      Node const& n = _nodes[i];
      v[i]          = n.variable != 0 ? values[slot(n.variable)] : q(v[n.left], v[n.right]);
    }
    return v.back();
  }

  std::string Term::to_string() const {
    std::vector<std::string> s(_nodes.size());
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      Node const& n = _nodes[i];
      if (n.variable != 0) {
        s[i] = std::string(1, n.variable);
      } else {
        bool wrap = _nodes[n.left].variable == 0;
        s[i]      = (wrap ? "(" + s[n.left] + ")" : s[n.left]) + "*" + s[n.right];
      }
    }
    return s.back();
  }

  bool operator==(Term const& a, Term const& b) {
    if (a._nodes.size() != b._nodes.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a._nodes.size(); ++i) {
      auto const &x = a._nodes[i], &y = b._nodes[i];
      if (x.variable != y.variable || (x.variable == 0 && (x.left != y.left || x.right != y.right))) {
        return false;
      }
    }
    return true;
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  Identity parse_identity(std::string_view src) {
    return parser(src).identity();
  }

  namespace identities {
    Identity const& mediality() {
      static Identity const id = parse_identity("(x*y)*(z*w) = (x*z)*(y*w)");
      return id;
    }
    Identity const& two_reductivity() {
      static Identity const id = parse_identity("(x*y)*z = y*z");
      return id;
    }
    Identity const& involutory() {
      static Identity const id = parse_identity("x*(x*y) = y");
      return id;
    }
    Identity const& idempotence() {
      static Identity const id = parse_identity("x*x = x");
      return id;
    }
  }  // namespace identities

  namespace {

    // Calls f(values) for every assignment of id.vars in lexicographic order;
    // stops early when f returns false.
    template <typename F>
    void for_each_assignment(QuandleTable const& q, Identity const& id, F&& f) {
      std::size_t const    k = id.vars.size();
      std::vector<element> digits(k, 0);
      std::vector<element> values(letter_slots, 0);
      element const        n = static_cast<element>(q.order());
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          values[slot(id.vars[i])] = digits[i];
        }
        if (!f(values, digits)) {
          return;
        }
        std::size_t i = k;
        while (i > 0 && ++digits[i - 1] == n) {
          digits[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
      }
    }

  }  // namespace

  IdentityCheck satisfies_identity(QuandleTable const& q, Identity const& id) {
    IdentityCheck out;
    for_each_assignment(q, id, [&](auto const& values, auto const& digits) {
      if (id.lhs.evaluate(q, values) != id.rhs.evaluate(q, values)) {
        out = {false, digits};
        return false;
      }
      return true;
    });
    return out;
  }

  std::vector<std::pair<element, element>>
  instantiate_identity_pairs(QuandleTable const& q, std::vector<Identity> const& ids) {
    std::vector<std::pair<element, element>> out;
    for (Identity const& id : ids) {
      for_each_assignment(q, id, [&](auto const& values, auto const&) {
        out.emplace_back(id.lhs.evaluate(q, values), id.rhs.evaluate(q, values));
        return true;
      });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
  }

}  // namespace qhom
