#include "qhom/congruence.hpp"

namespace qhom {

  Partition congruence_closure(QuandleTable const&                             q,
                               std::vector<std::pair<element, element>> const& seeds) {
    std::size_t const n = q.order();
    union_find        uf(n);
    for (auto [a, b] : seeds) {
      if (a >= n || b >= n) {
        throw input_error("seed pair out of range");
      }
      uf.unite(a, b);
    }
    // Compatibility with every (x, root(x)) pair and every c suffices: the
    // two-sided condition follows by transitivity, a▷c ~ b▷c ~ b▷d.
    bool changed = true;
    while (changed) {
      changed = false;
      for (element a = 0; a < n; ++a) {
        element b = uf.find(a);
        if (a == b) {
          continue;
        }
        for (element c = 0; c < n; ++c) {
          changed |= uf.unite(q(a, c), q(b, c));
          changed |= uf.unite(q(c, a), q(c, b));
        }
      }
    }
    return Partition::from_union_find(uf);
  }

  Partition standard_congruence(QuandleTable const&          q,
                                CongruenceKind               kind,
                                std::vector<Identity> const& ids) {
    switch (kind) {
      case CongruenceKind::components:
        return components(q).as_partition();
      case CongruenceKind::medial:
        return congruence_closure(q, instantiate_identity_pairs(q, {identities::mediality()}));
      case CongruenceKind::two_reductive:
        return congruence_closure(q,
                                  instantiate_identity_pairs(q, {identities::two_reductivity()}));
      case CongruenceKind::identities:
        return congruence_closure(q, instantiate_identity_pairs(q, ids));
    }
    throw input_error("unknown congruence kind");
  }

  std::optional<std::array<element, 4>> congruence_violation(QuandleTable const& q,
                                                             Partition const&    alpha) {
    std::size_t const n = q.order();
    if (alpha.size() != n) {
      throw input_error("partition size does not match quandle order");
    }
    bool bad = false;
    for (auto [a, b] : alpha.generating_pairs()) {
      for (element c = 0; c < n && !bad; ++c) {
        bad = !alpha.related(q(a, c), q(b, c)) || !alpha.related(q(c, a), q(c, b));
      }
    }
    if (!bad) {
      return std::nullopt;
    }
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (!alpha.related(a, b)) {
          continue;
        }
        for (element c = 0; c < n; ++c) {
          for (element d = 0; d < n; ++d) {
            if (alpha.related(c, d) && !alpha.related(q(a, c), q(b, d))) {
              return std::array<element, 4>{a, b, c, d};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  not_a_congruence::not_a_congruence(std::array<element, 4> w)
      : input_error("partition is not a congruence: " + std::to_string(w[0]) + "~"
                    + std::to_string(w[1]) + " and " + std::to_string(w[2]) + "~"
                    + std::to_string(w[3]) + " but their products are not related"),
        _witness(w) {}

  Quotient quotient(QuandleTable const& q, Partition const& alpha) {
    if (auto w = congruence_violation(q, alpha)) {
      throw not_a_congruence(*w);
    }
    std::size_t const    m = alpha.class_count();
    std::vector<element> projection(q.order());
    for (element x = 0; x < q.order(); ++x) {
      projection[x] = static_cast<element>(alpha.class_index(x));
    }
    std::vector<element> cells(m * m);
    auto const&          classes = alpha.classes();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        cells[i * m + j] = projection[q(classes[i].front(), classes[j].front())];
      }
    }
    return {QuandleTable::from_flat(m, std::move(cells)), std::move(projection)};
  }

}  // namespace qhom
