#include <doctest.h>

#include "fixtures.hpp"
#include "qhom/congruence.hpp"
#include "qhom/enumerate.hpp"
#include "qhom/mesh.hpp"

using namespace qhom;

TEST_CASE("group labels") {
  CHECK(parse_group_label("Z2xZ4") == std::vector<std::size_t>{2, 4});
  CHECK(parse_group_label("Z1") == std::vector<std::size_t>{1});
  CHECK(format_group_label({2, 4}) == "Z2xZ4");
  CHECK(format_group_label({}) == "Z1");
  for (char const* bad : {"", "Z", "Z0", "Z2x", "x2", "Z2*Z3", "z2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_label(bad), input_error);
  }
}

TEST_CASE("labelled groups use little-endian mixed radix") {
  auto g = AbelianGroupTable::from_label("Z2xZ3");
  REQUIRE(g.order() == 6);
  CHECK(g.label() == std::optional<std::string>{"Z2xZ3"});
  for (element a = 0; a < 6; ++a) {
    for (element b = 0; b < 6; ++b) {
      element lo = (a % 2 + b % 2) % 2;
      element hi = (a / 2 + b / 2) % 3;
      CHECK(g.add(a, b) == lo + 2 * hi);
    }
  }
  CHECK(g.element_order(1) == 2);
  CHECK(g.element_order(2) == 3);
  CHECK(g.element_order(3) == 6);
}

TEST_CASE("from_table validates the group axioms") {
  CHECK_NOTHROW(AbelianGroupTable::from_table(2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(AbelianGroupTable::from_table(2, {0, 1, 1, 1}), input_error);
  CHECK_THROWS_AS(AbelianGroupTable::from_table(2, {1, 0, 0, 1}), input_error);
}

TEST_CASE("identify_group") {
  for (char const* label : {"Z1", "Z2", "Z4", "Z2xZ2", "Z6", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3"}) {
    CAPTURE(label);
    auto g  = AbelianGroupTable::from_label(label);
    auto id = identify_group(g);
    CHECK(id.labelled.label() == std::optional<std::string>{label});
    CHECK(is_group_hom(g, id.labelled, id.to_labelled));
  }
  // Z2xZ3 is cyclic
  auto z6 = identify_group(AbelianGroupTable::from_label("Z2xZ3"));
  CHECK(*z6.labelled.label() == "Z6");
  CHECK(is_group_hom(AbelianGroupTable::from_label("Z2xZ3"), z6.labelled, z6.to_labelled));
}

TEST_CASE("group_hom_extends") {
  auto z2 = AbelianGroupTable::cyclic(2), z3 = AbelianGroupTable::cyclic(3);
  std::vector<element> one{1}, g01{0, 1}, t10{1, 0}, zero{0};

  auto id = group_hom_extends(z2, z2, one, one);
  REQUIRE(id);
  CHECK(*id == std::vector<element>{0, 1});
  CHECK_FALSE(group_hom_extends(z2, z3, one, one));
  CHECK_FALSE(group_hom_extends(z2, z2, g01, t10));
  CHECK_THROWS_AS(group_hom_extends(z2, z2, zero, zero), input_error);

  auto z4 = AbelianGroupTable::cyclic(4);
  std::vector<element> two{2};
  auto                 doubling = group_hom_extends(z2, z4, one, two);
  REQUIRE(doubling);
  CHECK(is_group_hom(z2, z4, *doubling));
}

TEST_CASE("all_group_homs matches exhaustive filtering") {
  std::vector<AbelianGroupTable> groups;
  for (char const* l : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6"}) {
    groups.push_back(AbelianGroupTable::from_label(l));
  }
  for (auto const& g : groups) {
    for (auto const& h : groups) {
      std::size_t          brute = 0;
      std::vector<element> img(g.order(), 0);
      while (true) {
        brute += is_group_hom(g, h, img);
        std::size_t i = img.size();
        while (i > 0 && img[i - 1] + 1 == h.order()) {
          img[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++img[i - 1];
      }
      auto homs = all_group_homs(g, h);
      CHECK(homs.size() == brute);
      CHECK(std::is_sorted(homs.begin(), homs.end()));
      for (auto const& k : homs) {
        CHECK(is_group_hom(g, h, k));
      }
    }
  }
}

TEST_CASE("validate_mesh") {
  CHECK(validate_mesh(fixtures::q3_3_mesh()).ok());
  CHECK(validate_mesh(fixtures::f4a_mesh()).ok());
  CHECK(validate_mesh(fixtures::r3_mesh()).ok());
  CHECK(validate_mesh(fixtures::tetrahedral_mesh()).ok());

  auto diag = AffineMesh::zero({AbelianGroupTable::cyclic(2)});
  diag.consts[0][0] = 1;
  CHECK(validate_mesh(diag).failed == MeshAxiom::diagonal_constant);

  auto ungenerated = AffineMesh::zero({AbelianGroupTable::cyclic(2), AbelianGroupTable::cyclic(2)});
  CHECK(validate_mesh(ungenerated).failed == MeshAxiom::generation);

  auto not_invertible = fixtures::alexander(AbelianGroupTable::cyclic(3), {0, 1, 2});
  CHECK(validate_mesh(not_invertible).failed == MeshAxiom::diagonal_invertible);

  auto not_additive = fixtures::alexander(AbelianGroupTable::cyclic(3), {0, 2, 2});
  CHECK(validate_mesh(not_additive).failed == MeshAxiom::homomorphism);

  // Z3 acting with phi = 2 beside a point: phi_00 phi_00 != phi_10 phi_01
  auto mixed = AffineMesh::zero({AbelianGroupTable::cyclic(3), AbelianGroupTable::cyclic(1)});
  mixed.phi[0][0]   = {0, 2, 1};
  mixed.consts[1][0] = 1;
  CHECK(validate_mesh(mixed).failed == MeshAxiom::composition);

  // every phi is doubling on Z3, and c_01 = c_10 = 1 breaks c_ij = -c_ji
  auto incompatible = AffineMesh::zero({AbelianGroupTable::cyclic(3), AbelianGroupTable::cyclic(3)});
  for (auto& row : incompatible.phi) {
    for (auto& map : row) {
      map = {0, 2, 1};
    }
  }
  incompatible.consts[0][1] = 1;
  incompatible.consts[1][0] = 1;
  auto rep = validate_mesh(incompatible);
  CHECK(rep.failed == MeshAxiom::constant_compatible);
  CHECK(rep.witness == std::vector<std::size_t>{0, 1, 0});
  incompatible.consts[1][0] = 2;
  CHECK(validate_mesh(incompatible).ok());

  auto malformed = fixtures::q3_3_mesh();
  malformed.consts[1][0] = 5;
  CHECK_THROWS_AS(validate_mesh(malformed), input_error);
}

TEST_CASE("mesh_to_quandle") {
  auto q = mesh_to_quandle(fixtures::q3_3_mesh());
  CHECK(q.table == fixtures::q3_3());
  CHECK(q.labels == std::vector<std::pair<std::size_t, element>>{{0, 0}, {0, 1}, {1, 0}});

  CHECK(mesh_to_quandle(AffineMesh::zero({AbelianGroupTable::cyclic(1)})).table == QuandleTable::trivial(1));
  CHECK(mesh_to_quandle(fixtures::f4a_mesh()).table == fixtures::f4a());
  CHECK(mesh_to_quandle(fixtures::r3_mesh()).table == fixtures::r3());

  auto bad = AffineMesh::zero({AbelianGroupTable::cyclic(2), AbelianGroupTable::cyclic(2)});
  CHECK_THROWS_AS(mesh_to_quandle(bad), input_error);
}

TEST_CASE("composed meshes are medial with the groups as components") {
  std::vector<AffineMesh> meshes{fixtures::q3_3_mesh(), fixtures::f4a_mesh(), fixtures::z2_z3_mesh(),
                                 fixtures::r3_mesh(),   fixtures::tetrahedral_mesh()};
  for (element t : {2u, 3u, 4u}) {
    meshes.push_back(fixtures::z5_mesh(t));
  }
  for (auto const& m : meshes) {
    auto q = mesh_to_quandle(m);
    CHECK(check_property(q.table, Property::medial).holds);
    auto comps = components(q.table);
    REQUIRE(comps.count() == m.index_count());
    for (std::size_t i = 0; i < m.index_count(); ++i) {
      CHECK(comps.blocks[i].size() == m.groups[i].order());
      CHECK(comps.blocks[i].front() == m.offset(i));
    }
    if (m.is_two_reductive_form()) {
      CHECK(check_property(q.table, Property::two_reductive).holds);
    }
  }
  CHECK(check_property(mesh_to_quandle(fixtures::tetrahedral_mesh()).table, Property::connected).holds);
}

TEST_CASE("decompose_two_reductive examples") {
  auto d = decompose_two_reductive(fixtures::q3_3());
  REQUIRE(d.mesh.index_count() == 2);
  CHECK(d.mesh.groups[0].order() == 2);
  CHECK(d.mesh.groups[1].order() == 1);
  CHECK(d.mesh.consts[1][0] == 1);
  CHECK(d.mesh.consts[0][1] == 0);

  auto triv = decompose_two_reductive(QuandleTable::trivial(3));
  CHECK(triv.mesh.index_count() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(triv.mesh.groups[i].order() == 1);
  }

  auto f = with_labelled_groups(decompose_two_reductive(fixtures::f4a()));
  CHECK(*f.mesh.groups[0].label() == "Z2");
  CHECK(*f.mesh.groups[1].label() == "Z2");
  CHECK(f.mesh.consts[0][1] == 1);
  CHECK(f.mesh.consts[1][0] == 1);

  CHECK_THROWS_AS(decompose_two_reductive(fixtures::r3()), precondition_error);
}

TEST_CASE("decomposition roundtrip over the catalog") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& e : enumerate_quandles(n).entries) {
      if (!e.two_reductive) {
        continue;
      }
      for (auto const& d : {decompose_two_reductive(e.table), with_labelled_groups(decompose_two_reductive(e.table))}) {
        CHECK(validate_mesh(d.mesh).ok());
        CHECK(d.mesh.is_two_reductive_form());
        for (std::size_t j = 0; j < d.mesh.index_count(); ++j) {
          CHECK(d.mesh.consts[j][j] == 0);
        }
        auto composed = mesh_to_quandle(d.mesh).table;
        // to_input is an isomorphism composed -> input
        CHECK(is_homomorphism(composed, e.table, d.to_input));
        CHECK(is_isomorphic(composed, e.table));
        for (auto const& block : components(composed).blocks) {
          for (element a : block) {
            for (element b : block) {
              CHECK(composed(a, b) == b);
            }
          }
        }
      }
    }
  }
}
