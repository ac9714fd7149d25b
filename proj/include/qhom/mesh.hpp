#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhom/abelian_group.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

  // An affine mesh over index set 0..r-1: groups A_i, homomorphisms
  // phi[i][j]: A_i -> A_j stored as image tables, constants consts[i][j] in A_j.
  // Composes to the quandle on the disjoint union of the A_i with
  //   a ▷ b = c_ij + phi_ij(a) + (1 - phi_jj)(b)   for a in A_i, b in A_j.
  struct AffineMesh {
    std::vector<AbelianGroupTable>                 groups;
    std::vector<std::vector<std::vector<element>>> phi;
    std::vector<std::vector<element>>              consts;

    // Zero maps and zero constants over the given groups.
    static AffineMesh zero(std::vector<AbelianGroupTable> groups);

    std::size_t index_count() const noexcept {
      return groups.size();
    }
    std::size_t total_order() const noexcept;
    // First composed index of component i.
    std::size_t offset(std::size_t i) const noexcept;
    bool        is_two_reductive_form() const noexcept;

    // Throws input_error when sizes or element ranges are inconsistent.
    void check_structure() const;
  };

  enum class MeshAxiom {
    none,
    homomorphism,         // some phi_ij is not additive
    diagonal_invertible,  // 1 - phi_ii is a bijection of A_i
    diagonal_constant,    // c_ii = 0
    composition,          // phi_jk phi_ij = phi_j'k phi_ij'
    constant_compatible,  // phi_jk(c_ij) = phi_kk(c_ik - c_jk)
    generation            // c_ij and phi_ij(A_i) generate A_j
  };

  char const* to_string(MeshAxiom a) noexcept;

  struct MeshReport {
    MeshAxiom                failed = MeshAxiom::none;
    std::vector<std::size_t> witness;  // indices (and elements where relevant)

    bool ok() const noexcept {
      return failed == MeshAxiom::none;
    }
    std::string describe() const;
  };

  MeshReport validate_mesh(AffineMesh const& m);

  struct MeshQuandle {
    QuandleTable                                  table;
    std::vector<std::pair<std::size_t, element>> labels;  // composed index -> (i, a)
  };

  // Throws input_error if the mesh is invalid.
  MeshQuandle mesh_to_quandle(AffineMesh const& m);

  struct Decomposition {
    AffineMesh           mesh;
    // composed index of the mesh quandle -> element of the input quandle
    std::vector<element> to_input;
  };

  // For a 2-reductive quandle: each A_j is the regular abelian group generated
  // by the translations acting on component j, with the component minimum as
  // zero and a + b = g_a(b). All phi are zero and c_ij is the image of the
  // base point of j under any element of component i. Throws
  // precondition_error if q is not 2-reductive.
  Decomposition decompose_two_reductive(QuandleTable const& q);

  // Re-expresses every group by its invariant-factor label. to_input is
  // carried along, so the result's composed quandle is still relabelled onto
  // the same input.
  Decomposition with_labelled_groups(Decomposition const& d);

}  // namespace qhom
