#include "qhom/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>

namespace qhom {

  AbelianGroupTable::AbelianGroupTable(std::size_t                m,
                                       std::vector<element>       add,
                                       std::optional<std::string> label)
      : _m(m), _add(std::move(add)), _neg(m, 0), _label(std::move(label)) {
    for (element a = 0; a < m; ++a) {
      for (element b = 0; b < m; ++b) {
        if (this->add(a, b) == 0) {
          _neg[a] = b;
          break;
        }
      }
    }
  }

  AbelianGroupTable AbelianGroupTable::from_table(std::size_t m, std::vector<element> add) {
    if (m == 0 || add.size() != m * m) {
      throw input_error("group table size does not match order");
    }
    for (element v : add) {
      if (v >= m) {
        throw input_error("group table entry out of range");
      }
    }
    auto at = [&](element a, element b) { return add[static_cast<std::size_t>(a) * m + b]; };
    for (element a = 0; a < m; ++a) {
      if (at(0, a) != a) {
        throw input_error("element 0 is not the identity of the group table");
      }
      bool has_inverse = false;
      for (element b = 0; b < m; ++b) {
        if (at(a, b) != at(b, a)) {
          throw input_error("group table is not commutative");
        }
        has_inverse |= at(a, b) == 0;
        for (element c = 0; c < m; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            throw input_error("group table is not associative");
          }
        }
      }
      if (!has_inverse) {
        throw input_error("element " + std::to_string(a) + " has no inverse");
      }
    }
    return AbelianGroupTable(m, std::move(add), std::nullopt);
  }

  AbelianGroupTable AbelianGroupTable::cyclic(std::size_t d) {
    return from_label("Z" + std::to_string(d));
  }

  std::vector<std::size_t> parse_group_label(std::string_view label) {
    std::vector<std::size_t> factors;
    std::size_t              pos = 0;
    while (true) {
      if (pos >= label.size() || label[pos] != 'Z') {
        throw input_error("bad group label '" + std::string(label) + "'");
      }
      ++pos;
      std::size_t d   = 0;
      auto        res = std::from_chars(label.data() + pos, label.data() + label.size(), d);
      if (res.ec != std::errc() || d == 0) {
        throw input_error("bad group label '" + std::string(label) + "'");
      }
      pos = static_cast<std::size_t>(res.ptr - label.data());
      factors.push_back(d);
      if (pos == label.size()) {
        break;
      }
      if (label[pos] != 'x') {
        throw input_error("bad group label '" + std::string(label) + "'");
      }
      ++pos;
    }
    return factors;
  }

  std::string format_group_label(std::vector<std::size_t> const& factors) {
    if (factors.empty()) {
      return "Z1";
    }
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out += (i ? "xZ" : "Z") + std::to_string(factors[i]);
    }
    return out;
  }

  AbelianGroupTable AbelianGroupTable::from_label(std::string_view label) {
    std::vector<std::size_t> d = parse_group_label(label);
    std::size_t              m = 1;
    for (std::size_t f : d) {
      m *= f;
      if (m > 1'000'000) {
        throw input_error("group order too large");
      }
    }
    std::vector<element> add(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t ra = a, rb = b, out = 0, scale = 1;
        for (std::size_t f : d) {
          out += scale * ((ra % f + rb % f) % f);
          ra /= f;
          rb /= f;
          scale *= f;
        }
        add[a * m + b] = static_cast<element>(out);
      }
    }
    return AbelianGroupTable(m, std::move(add), std::string(label));
  }

  element AbelianGroupTable::times(std::size_t k, element a) const noexcept {
    element out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      out = add(out, a);
    }
    return out;
  }

  std::size_t AbelianGroupTable::element_order(element a) const noexcept {
    std::size_t k = 1;
    for (element x = a; x != 0; x = add(x, a)) {
      ++k;
    }
    return k;
  }

  std::vector<element> AbelianGroupTable::span(std::span<element const> gens) const {
    std::vector<bool>    in(_m, false);
    std::vector<element> members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (element g : gens) {
        if (g >= _m) {
          throw input_error("group element out of range");
        }
        element y = add(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<element> AbelianGroupTable::generators() const {
    std::vector<element> gens;
    std::size_t          have = 1;
    while (have < _m) {
      element     best = 0;
      std::size_t size = have;
      for (element x = 1; x < _m; ++x) {
        gens.push_back(x);
        std::size_t s = span(gens).size();
        gens.pop_back();
        if (s > size) {
          size = s;
          best = x;
        }
      }
      gens.push_back(best);
      have = size;
    }
    return gens;
  }

  bool is_group_hom(AbelianGroupTable const& g,
                    AbelianGroupTable const& h,
                    std::span<element const> image) {
    if (image.size() != g.order()) {
      return false;
    }
    for (element v : image) {
      if (v >= h.order()) {
        return false;
      }
    }
    for (element a = 0; a < g.order(); ++a) {
      for (element b = a; b < g.order(); ++b) {
        if (image[g.add(a, b)] != h.add(image[a], image[b])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<element>> group_hom_extends(AbelianGroupTable const& g,
                                                        AbelianGroupTable const& h,
                                                        std::span<element const> gens,
                                                        std::span<element const> targets) {
    if (gens.size() != targets.size()) {
      throw input_error("generator and target lists differ in length");
    }
    for (element t : targets) {
      if (t >= h.order()) {
        throw input_error("target element out of range");
      }
    }
    if (!g.generates(gens)) {
      throw input_error("the given elements do not generate the source group");
    }
    constexpr element    unset = ~element{0};
    std::vector<element> k(g.order(), unset);
    k[0] = 0;
    std::deque<element> queue{0};
    while (!queue.empty()) {
      element x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        element y   = g.add(x, gens[s]);
        element val = h.add(k[x], targets[s]);
        if (k[y] == unset) {
          k[y] = val;
          queue.push_back(y);
        } else if (k[y] != val) {
          return std::nullopt;
        }
      }
    }
    return k;
  }

  std::vector<std::vector<element>> all_group_homs(AbelianGroupTable const& g,
                                                   AbelianGroupTable const& h) {
    std::vector<element> gens = g.generators();
    if (gens.empty()) {
      return {std::vector<element>(g.order(), 0)};
    }
    // Candidate images per generator: order must divide the generator's order.
    std::vector<std::vector<element>> options(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t o = g.element_order(gens[s]);
      for (element y = 0; y < h.order(); ++y) {
        if (o % h.element_order(y) == 0) {
          options[s].push_back(y);
        }
      }
    }
    std::vector<std::vector<element>> out;
    std::vector<element>              targets(gens.size());
    std::function<void(std::size_t)>  rec = [&](std::size_t s) {
      if (s == gens.size()) {
        if (auto k = group_hom_extends(g, h, gens, targets)) {
          out.push_back(std::move(*k));
        }
        return;
      }
      for (element y : options[s]) {
        targets[s] = y;
        rec(s + 1);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {

    void invariant_factor_lists(std::size_t                            prev,
                                std::size_t                            remaining,
                                std::vector<std::size_t>&              cur,
                                std::vector<std::vector<std::size_t>>& out) {
      if (remaining == 1) {
        out.push_back(cur);
        return;
      }
      for (std::size_t d = 2; d <= remaining; ++d) {
        if (remaining % d == 0 && d % prev == 0) {
          cur.push_back(d);
          invariant_factor_lists(d, remaining / d, cur, out);
          cur.pop_back();
        }
      }
    }

    // Chooses elements for factors[idx..0] (largest first) whose cyclic
    // subgroups form an internal direct sum.
    bool choose_basis(AbelianGroupTable const&        g,
                      std::vector<std::size_t> const& factors,
                      std::size_t                     remaining,
                      std::vector<element>&           chosen,
                      std::vector<element>&           basis) {
      if (remaining == 0) {
        return true;
      }
      std::size_t const d    = factors[remaining - 1];
      std::size_t const have = g.span(chosen).size();
      for (element x = 1; x < g.order(); ++x) {
        if (g.element_order(x) != d) {
          continue;
        }
        chosen.push_back(x);
        if (g.span(chosen).size() == have * d) {
          basis[remaining - 1] = x;
          if (choose_basis(g, factors, remaining - 1, chosen, basis)) {
            return true;
          }
        }
        chosen.pop_back();
      }
      return false;
    }

  }  // namespace

  GroupIdentification identify_group(AbelianGroupTable const& g) {
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t>              cur;
    invariant_factor_lists(1, g.order(), cur, candidates);
    for (auto const& factors : candidates) {
      std::vector<element> chosen, basis(factors.size());
      if (!choose_basis(g, factors, factors.size(), chosen, basis)) {
        continue;
      }
      AbelianGroupTable    labelled = AbelianGroupTable::from_label(format_group_label(factors));
      std::vector<element> to_labelled(g.order());
      for (std::size_t idx = 0; idx < g.order(); ++idx) {
        std::size_t rest  = idx;
        element     image = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          image = g.add(image, g.times(rest % factors[i], basis[i]));
          rest /= factors[i];
        }
        to_labelled[image] = static_cast<element>(idx);
      }
      return {std::move(labelled), std::move(to_labelled)};
    }
    throw std::logic_error("abelian group has no invariant factor decomposition");
  }

}  // namespace qhom
