#pragma once

#include <filesystem>
#include <string>

#include "qhom/abelian_group.hpp"
#include "qhom/mesh.hpp"
#include "qhom/quandle.hpp"

namespace fixtures {

  using qhom::AbelianGroupTable;
  using qhom::AffineMesh;
  using qhom::QuandleTable;

  inline std::filesystem::path dir() {
    return QHOM_FIXTURE_DIR;
  }

  inline QuandleTable trivial(std::size_t n) {
    return QuandleTable::trivial(n);
  }

  inline QuandleTable r3() {
    return QuandleTable({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  }

  inline QuandleTable q3_3() {
    return QuandleTable({{0, 1, 2}, {0, 1, 2}, {1, 0, 2}});
  }

  inline QuandleTable f4a() {
    return QuandleTable({{0, 1, 3, 2}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 2, 3}});
  }

  inline AffineMesh q3_3_mesh() {
    AffineMesh m = AffineMesh::zero({AbelianGroupTable::cyclic(2), AbelianGroupTable::cyclic(1)});
    m.consts[1][0] = 1;
    return m;
  }

  inline AffineMesh f4a_mesh() {
    AffineMesh m = AffineMesh::zero({AbelianGroupTable::cyclic(2), AbelianGroupTable::cyclic(2)});
    m.consts[0][1] = 1;
    m.consts[1][0] = 1;
    return m;
  }

  // Z2 and Z3 with both cross constants equal to 1.
  inline AffineMesh z2_z3_mesh() {
    AffineMesh m = AffineMesh::zero({AbelianGroupTable::cyclic(2), AbelianGroupTable::cyclic(3)});
    m.consts[0][1] = 1;
    m.consts[1][0] = 1;
    return m;
  }

  // One component A with a ▷ b = phi(a) + (1 - phi)(b).
  inline AffineMesh alexander(AbelianGroupTable group, std::vector<qhom::element> phi) {
    AffineMesh m = AffineMesh::zero({std::move(group)});
    m.phi[0][0]  = std::move(phi);
    return m;
  }

  inline AffineMesh r3_mesh() {
    return alexander(AbelianGroupTable::cyclic(3), {0, 2, 1});
  }

  // Z2xZ2 with e1 -> e2, e2 -> e1 + e2: the connected quandle of order 4.
  inline AffineMesh tetrahedral_mesh() {
    return alexander(AbelianGroupTable::from_label("Z2xZ2"), {0, 2, 3, 1});
  }

  inline AffineMesh z5_mesh(qhom::element t) {
    std::vector<qhom::element> phi(5);
    for (qhom::element a = 0; a < 5; ++a) {
      phi[a] = (t * a) % 5;
    }
    return alexander(AbelianGroupTable::cyclic(5), phi);
  }

}  // namespace fixtures
