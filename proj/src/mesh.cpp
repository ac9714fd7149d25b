#include "qhom/mesh.hpp"

#include <deque>
#include <sstream>

namespace qhom {

  AffineMesh AffineMesh::zero(std::vector<AbelianGroupTable> groups) {
    AffineMesh        m;
    std::size_t const r = groups.size();
    m.groups            = std::move(groups);
    m.phi.assign(r, std::vector<std::vector<element>>(r));
    m.consts.assign(r, std::vector<element>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        m.phi[i][j].assign(m.groups[i].order(), 0);
      }
    }
    return m;
  }

  std::size_t AffineMesh::total_order() const noexcept {
    std::size_t n = 0;
    for (auto const& g : groups) {
      n += g.order();
    }
    return n;
  }

  std::size_t AffineMesh::offset(std::size_t i) const noexcept {
    std::size_t n = 0;
    for (std::size_t k = 0; k < i; ++k) {
      n += groups[k].order();
    }
    return n;
  }

  bool AffineMesh::is_two_reductive_form() const noexcept {
    for (auto const& row : phi) {
      for (auto const& map : row) {
        for (element v : map) {
          if (v != 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void AffineMesh::check_structure() const {
    std::size_t const r = groups.size();
    if (r == 0) {
      throw input_error("mesh has no components");
    }
    if (phi.size() != r || consts.size() != r) {
      throw input_error("mesh maps and constants must be r x r");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (phi[i].size() != r || consts[i].size() != r) {
        throw input_error("mesh maps and constants must be r x r");
      }
      for (std::size_t j = 0; j < r; ++j) {
        if (consts[i][j] >= groups[j].order()) {
          throw input_error("constant c[" + std::to_string(i) + "][" + std::to_string(j)
                            + "] is not an element of group " + std::to_string(j));
        }
        if (phi[i][j].size() != groups[i].order()) {
          throw input_error("phi[" + std::to_string(i) + "][" + std::to_string(j)
                            + "] must list one image per element of group "
                            + std::to_string(i));
        }
        for (element v : phi[i][j]) {
          if (v >= groups[j].order()) {
            throw input_error("phi[" + std::to_string(i) + "][" + std::to_string(j)
                              + "] has an image outside group " + std::to_string(j));
          }
        }
      }
    }
  }

  char const* to_string(MeshAxiom a) noexcept {
    switch (a) {
      case MeshAxiom::none: return "none";
      case MeshAxiom::homomorphism: return "homomorphism";
      case MeshAxiom::diagonal_invertible: return "diagonal_invertible";
      case MeshAxiom::diagonal_constant: return "diagonal_constant";
      case MeshAxiom::composition: return "composition";
      case MeshAxiom::constant_compatible: return "constant_compatible";
      case MeshAxiom::generation: return "generation";
    }
    return "?";
  }

  std::string MeshReport::describe() const {
    if (ok()) {
      return "ok";
    }
    std::ostringstream os;
    os << to_string(failed) << " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      os << (i ? "," : "") << witness[i];
    }
    os << ")";
    return os.str();
  }

  MeshReport validate_mesh(AffineMesh const& m) {
    m.check_structure();
    std::size_t const r  = m.index_count();
    auto const&       A  = m.groups;
    auto const&       ph = m.phi;
    auto const&       c  = m.consts;

    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (!is_group_hom(A[i], A[j], ph[i][j])) {
          return {MeshAxiom::homomorphism, {i, j}};
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<bool> hit(A[i].order(), false);
      for (element a = 0; a < A[i].order(); ++a) {
        element v = A[i].sub(a, ph[i][i][a]);
        if (hit[v]) {
          return {MeshAxiom::diagonal_invertible, {i}};
        }
        hit[v] = true;
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i][i] != 0) {
        return {MeshAxiom::diagonal_constant, {i}};
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t j2 = 0; j2 < r; ++j2) {
          for (std::size_t k = 0; k < r; ++k) {
            for (element a = 0; a < A[i].order(); ++a) {
              if (ph[j][k][ph[i][j][a]] != ph[j2][k][ph[i][j2][a]]) {
                return {MeshAxiom::composition, {i, j, j2, k}};
              }
            }
          }
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          if (ph[j][k][c[i][j]] != ph[k][k][A[k].sub(c[i][k], c[j][k])]) {
            return {MeshAxiom::constant_compatible, {i, j, k}};
          }
        }
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<element> gens;
      for (std::size_t i = 0; i < r; ++i) {
        gens.push_back(c[i][j]);
        gens.insert(gens.end(), ph[i][j].begin(), ph[i][j].end());
      }
      if (!A[j].generates(gens)) {
        return {MeshAxiom::generation, {j}};
      }
    }
    return {};
  }

  MeshQuandle mesh_to_quandle(AffineMesh const& m) {
    if (MeshReport rep = validate_mesh(m); !rep.ok()) {
      throw input_error("invalid mesh: " + rep.describe());
    }
    std::size_t const r = m.index_count();
    std::size_t const n = m.total_order();
    MeshQuandle       out;
    for (std::size_t i = 0; i < r; ++i) {
      for (element a = 0; a < m.groups[i].order(); ++a) {
        out.labels.emplace_back(i, a);
      }
    }
    std::vector<element> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      auto [i, a] = out.labels[x];
      for (std::size_t y = 0; y < n; ++y) {
        auto [j, b]             = out.labels[y];
        auto const& Aj          = m.groups[j];
        element     one_minus_b = Aj.sub(b, m.phi[j][j][b]);
        element     v           = Aj.add(Aj.add(m.consts[i][j], m.phi[i][j][a]), one_minus_b);
        cells[x * n + y]        = static_cast<element>(m.offset(j) + v);
      }
    }
    out.table = QuandleTable::from_flat(n, std::move(cells));
    return out;
  }

  Decomposition decompose_two_reductive(QuandleTable const& q) {
    if (auto chk = check_property(q, Property::two_reductive); !chk) {
      throw precondition_error("quandle is not 2-reductive: (x*y)*z != y*z at (" + join(chk.witness, ",")
                               + ")");
    }
    ComponentPartition comps = components(q);
    std::size_t const  r     = comps.count();
    // local index of each element within its component
    std::vector<element> local(q.order());
    for (auto const& block : comps.blocks) {
      for (std::size_t a = 0; a < block.size(); ++a) {
        local[block[a]] = static_cast<element>(a);
      }
    }

    std::vector<AbelianGroupTable>    groups;
    std::vector<std::vector<element>> consts(r, std::vector<element>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      auto const&       block = comps.blocks[j];
      std::size_t const m     = block.size();
      // translation of component j by (any element of) component i
      std::vector<std::vector<element>> rho(r, std::vector<element>(m));
      for (std::size_t i = 0; i < r; ++i) {
        element actor = comps.representative[i];
        for (std::size_t a = 0; a < m; ++a) {
          rho[i][a] = local[q(actor, block[a])];
        }
        consts[i][j] = rho[i][0];
      }
      constexpr element                 unset = ~element{0};
      std::vector<std::vector<element>> g(m);
      g[0].resize(m);
      for (std::size_t a = 0; a < m; ++a) {
        g[0][a] = static_cast<element>(a);
      }
      std::deque<element> queue{0};
      while (!queue.empty()) {
        element x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < r; ++i) {
          std::vector<element> composed(m);
          for (std::size_t a = 0; a < m; ++a) {
            composed[a] = rho[i][g[x][a]];
          }
          element y = composed[0];
          if (g[y].empty()) {
            g[y] = std::move(composed);
            queue.push_back(y);
          } else if (g[y] != composed) {
            throw std::logic_error("translation group of component " + std::to_string(j)
                                   + " does not act regularly");
          }
        }
      }
      std::vector<element> add(m * m, unset);
      for (std::size_t a = 0; a < m; ++a) {
        if (g[a].empty()) {
          throw std::logic_error("translation group of component " + std::to_string(j)
                                 + " is not transitive");
        }
        for (std::size_t b = 0; b < m; ++b) {
          add[a * m + b] = g[a][b];
        }
      }
      try {
        groups.push_back(AbelianGroupTable::from_table(m, std::move(add)));
      } catch (input_error const& e) {
        throw std::logic_error(std::string("translation group is not abelian: ") + e.what());
      }
    }

    Decomposition out;
    out.mesh        = AffineMesh::zero(std::move(groups));
    out.mesh.consts = std::move(consts);
    for (auto const& block : comps.blocks) {
      out.to_input.insert(out.to_input.end(), block.begin(), block.end());
    }
    return out;
  }

  Decomposition with_labelled_groups(Decomposition const& d) {
    AffineMesh const&              m = d.mesh;
    std::size_t const              r = m.index_count();
    std::vector<GroupIdentification> ids;
    for (auto const& g : m.groups) {
      ids.push_back(identify_group(g));
    }
    Decomposition out;
    out.mesh.groups.reserve(r);
    for (auto const& id : ids) {
      out.mesh.groups.push_back(id.labelled);
    }
    out.mesh.phi.assign(r, std::vector<std::vector<element>>(r));
    out.mesh.consts.assign(r, std::vector<element>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        out.mesh.consts[i][j] = ids[j].to_labelled[m.consts[i][j]];
        auto& map             = out.mesh.phi[i][j];
        map.assign(m.groups[i].order(), 0);
        for (element a = 0; a < m.groups[i].order(); ++a) {
          map[ids[i].to_labelled[a]] = ids[j].to_labelled[m.phi[i][j][a]];
        }
      }
    }
    out.to_input.assign(d.to_input.size(), 0);
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t off = m.offset(j);
      for (element a = 0; a < m.groups[j].order(); ++a) {
        out.to_input[off + ids[j].to_labelled[a]] = d.to_input[off + a];
      }
    }
    return out;
  }

}  // namespace qhom
