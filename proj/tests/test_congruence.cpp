#include <doctest.h>

#include "fixtures.hpp"
#include "qhom/congruence.hpp"
#include "qhom/enumerate.hpp"

using namespace qhom;

namespace {

  // Least equivalence containing the seeds and closed under a~b, c~d =>
  // a▷c ~ b▷d, by saturating a relation matrix.
  Partition naive_closure(QuandleTable const& q, std::vector<std::pair<element, element>> const& seeds) {
    std::size_t const              n = q.order();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (element x = 0; x < n; ++x) {
      rel[x][x] = true;
    }
    for (auto [a, b] : seeds) {
      rel[a][b] = rel[b][a] = true;
    }
    bool changed = true;
    auto add     = [&](element a, element b) {
      if (!rel[a][b]) {
        rel[a][b] = rel[b][a] = true;
        changed               = true;
      }
    };
    while (changed) {
      changed = false;
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          if (!rel[a][b]) {
            continue;
          }
          for (element c = 0; c < n; ++c) {
            if (rel[b][c]) {
              add(a, c);
            }
            for (element d = 0; d < n; ++d) {
              if (rel[c][d]) {
                add(q(a, c), q(b, d));
              }
            }
          }
        }
      }
    }
    std::vector<element> label(n);
    for (element x = 0; x < n; ++x) {
      element m = x;
      for (element y = 0; y < x; ++y) {
        if (rel[x][y]) {
          m = std::min(m, y);
        }
      }
      label[x] = m;
    }
    return Partition::from_labels(label);
  }

}  // namespace

TEST_CASE("partition serialization") {
  CHECK(Partition::from_labels({0, 0, 2}).to_string() == "0 1 | 2");
  CHECK(Partition::from_labels({5, 7, 5, 7}).to_string() == "0 2 | 1 3");
  CHECK(Partition::discrete(3).to_string() == "0 | 1 | 2");
  CHECK(Partition::full(3).to_string() == "0 1 2");
  CHECK(Partition::discrete(3).refines(Partition::full(3)));
  CHECK_FALSE(Partition::full(3).refines(Partition::discrete(3)));
}

TEST_CASE("congruence_closure examples") {
  CHECK(congruence_closure(fixtures::r3(), {}).is_discrete());
  CHECK(congruence_closure(fixtures::r3(), {{0, 1}}) == Partition::full(3));
  CHECK(congruence_closure(fixtures::q3_3(), {{0, 1}}).to_string() == "0 1 | 2");
}

TEST_CASE("standard congruences") {
  CHECK(standard_congruence(QuandleTable::trivial(4), CongruenceKind::medial).is_discrete());
  CHECK(standard_congruence(fixtures::r3(), CongruenceKind::two_reductive) == Partition::full(3));
  CHECK(standard_congruence(fixtures::q3_3(), CongruenceKind::components).to_string() == "0 1 | 2");
  CHECK(standard_congruence(fixtures::r3(), CongruenceKind::identities,
                            {parse_identity("x*y = y")})
        == Partition::full(3));
}

TEST_CASE("quotient") {
  auto same = quotient(fixtures::f4a(), Partition::discrete(4));
  CHECK(same.table == fixtures::f4a());
  CHECK(same.projection == std::vector<element>{0, 1, 2, 3});

  auto one = quotient(fixtures::r3(), Partition::full(3));
  CHECK(one.table == QuandleTable::trivial(1));

  auto two = quotient(fixtures::q3_3(), standard_congruence(fixtures::q3_3(), CongruenceKind::components));
  CHECK(two.table == QuandleTable::trivial(2));
  CHECK(two.projection == std::vector<element>{0, 0, 1});

  auto bad = Partition::from_labels({0, 0, 2});
  auto v   = congruence_violation(fixtures::r3(), bad);
  REQUIRE(v);
  CHECK(*v == std::array<element, 4>{0, 0, 0, 1});
  CHECK_THROWS_AS(quotient(fixtures::r3(), bad), not_a_congruence);
}

TEST_CASE("closure matches the saturating oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& e : enumerate_quandles(n).entries) {
      for (element a = 0; a < n; ++a) {
        for (element b = a + 1; b < n; ++b) {
          CHECK(congruence_closure(e.table, {{a, b}}) == naive_closure(e.table, {{a, b}}));
        }
      }
    }
  }
}

TEST_CASE("named congruences on the catalog") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& e : enumerate_quandles(n).entries) {
      auto const& q    = e.table;
      auto        ker  = standard_congruence(q, CongruenceKind::components);
      auto        m    = standard_congruence(q, CongruenceKind::medial);
      auto        g    = standard_congruence(q, CongruenceKind::two_reductive);
      auto        qm   = quotient(q, m);
      auto        qg   = quotient(q, g);
      std::size_t comp = components(q).count();
      CHECK(check_property(qm.table, Property::medial).holds);
      CHECK(check_property(qg.table, Property::two_reductive).holds);
      CHECK(m.refines(ker));
      CHECK(g.refines(ker));
      CHECK(components(qm.table).count() == comp);
      CHECK(components(qg.table).count() == comp);
      CHECK(quotient(q, ker).table == QuandleTable::trivial(comp));
      CHECK(is_homomorphism(q, qm.table, qm.projection));
      CHECK(m.is_discrete() == e.medial);
      CHECK(g.is_discrete() == e.two_reductive);

      // closing again adds nothing
      CHECK(congruence_closure(q, m.generating_pairs()) == m);
      CHECK(congruence_closure(q, g.generating_pairs()) == g);
    }
  }
}

TEST_CASE("closures are stable under left division") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& e : enumerate_quandles(n).entries) {
      auto const& q = e.table;
      for (auto const& alpha : {standard_congruence(q, CongruenceKind::medial),
                                standard_congruence(q, CongruenceKind::two_reductive),
                                congruence_closure(q, {{0, n - 1}})}) {
        for (element a = 0; a < n; ++a) {
          for (element b = 0; b < n; ++b) {
            if (!alpha.related(a, b)) {
              continue;
            }
            for (element c = 0; c < n; ++c) {
              for (element d = 0; d < n; ++d) {
                if (alpha.related(c, d)) {
                  CHECK(alpha.related(q.left_divide(a, c), q.left_divide(b, d)));
                }
              }
            }
          }
        }
      }
    }
  }
}
