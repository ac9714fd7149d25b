#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhom/mesh.hpp"
#include "qhom/quandle.hpp"

namespace qhom {

  // A map S -> T as the image sequence h(0), ..., h(|S|-1).
  struct HomRecord {
    std::vector<element> image;

    friend auto operator<=>(HomRecord const&, HomRecord const&) = default;
  };

  enum class Engine { brute, two_reductive_mesh, general_mesh };

  char const* to_string(Engine e) noexcept;

  // Records are sorted lexicographically by image and distinct.
  struct HomSet {
    std::size_t            source_order = 0;
    std::size_t            target_order = 0;
    std::vector<HomRecord> records;
    Engine                 engine = Engine::brute;

    std::size_t size() const noexcept {
      return records.size();
    }
    std::optional<std::size_t> index_of(std::vector<element> const& image) const;
    // `homset <|S|> <|T|> <count> <engine>` then one record per line.
    std::string serialize() const;
  };

  inline constexpr std::uint64_t default_search_budget = 10'000'000;

  // Backtracking over images of a greedy generating sequence of S, forcing
  // h(x ▷ y) = h(x) ▷ h(y) as soon as both arguments are assigned. Throws
  // budget_error after `budget` partial assignments.
  HomSet enumerate_homs(QuandleTable const& s,
                        QuandleTable const& t,
                        std::uint64_t       budget = default_search_budget);

  // Hom(S,T) under (h ▷ k)(a) = h(a) ▷ k(a); table index i is homs.records[i].
  struct HomQuandle {
    QuandleTable table;
    HomSet       homs;
  };

  // Throws precondition_error unless T is medial.
  HomQuandle hom_quandle(QuandleTable const& s, QuandleTable const& t);
  HomQuandle hom_quandle(QuandleTable const& t, HomSet homs);

  // Number of maps from an m-set onto an n-set:
  //   sum_{j=1}^{n} (-1)^{n-j} C(n,j) j^m.
  std::uint64_t surjection_count(std::size_t m, std::size_t n);

  // Nonempty subsets U of T with u ▷ v = v for all u, v in U.
  std::vector<std::vector<element>> trivial_subquandles(QuandleTable const& t);

  struct TrivResult {
    HomSet        homs;       // records of Hom(S,T) with trivial image
    std::uint64_t predicted;  // sum over trivial U of surjections c(S) -> U
  };

  TrivResult triv_homs(QuandleTable const& s, QuandleTable const& t);

  // One component map g: c(S) -> c(T) and its contribution.
  struct ComponentMapTerm {
    std::vector<std::size_t> g;
    bool                     admissible = false;  // delta_g
    std::uint64_t            product    = 0;      // prod_i |g(i)| when admissible
  };

  struct TwoReductiveCount {
    std::uint64_t                 count = 0;
    std::vector<ComponentMapTerm> terms;  // every g, lexicographic
  };

  // Routes S through S/γ_S, decomposes both sides into meshes and decides each
  // g by group-homomorphism extension of the constants. Throws
  // precondition_error unless T is 2-reductive.
  TwoReductiveCount count_homs_two_reductive(QuandleTable const& s, QuandleTable const& t);

  // The same construction, materialized: for every admissible g and every
  // choice of base-point images, the unique homomorphism with those images.
  HomSet enumerate_homs_two_reductive(QuandleTable const& s, QuandleTable const& t);

  // Homomorphisms between the composed quandles of two meshes, as componentwise
  // affine maps h = k_i + e_i subject to the two compatibility conditions.
  HomSet enumerate_mesh_homs(AffineMesh const& ms,
                             AffineMesh const& mt,
                             std::uint64_t     budget = default_search_budget);

  // The base-point evaluation Hom(S,T) -> T^{c(S)} and what it looks like.
  struct EmbeddingReport {
    std::size_t               exponent       = 0;  // |c(S)|
    std::size_t               power_order    = 0;  // |T|^|c(S)|
    std::size_t               hom_count      = 0;
    bool                      injective      = false;
    bool                      homomorphism   = false;
    bool                      union_of_components = false;
    std::vector<element>      image;                // sorted codes in T^{c(S)}
    std::vector<std::size_t>  covered_components;   // component ids of T^{c(S)}
    std::vector<std::vector<element>> covered_blocks;
  };

  EmbeddingReport hom_structure_two_reductive(QuandleTable const& s,
                                              QuandleTable const& t,
                                              std::size_t budget = default_power_budget);

  enum class Composition { pre, post };

  struct FunctorialImage {
    HomSet                   homs;       // sorted, deduplicated images
    std::vector<std::size_t> index_map;  // input record -> output record
    // Whether the map respects the pointwise operation on all pairs; only
    // evaluated when the relevant targets are medial.
    std::optional<bool> respects_operation;
  };

  // pre:  f: S -> R, homs in Hom(R,T);  returns k ∘ f in Hom(S,T).
  //       `target` is T; `post_target` is unused.
  // post: f: T -> U, homs in Hom(S,T);  returns f ∘ k in Hom(S,U).
  //       `target` is T and `post_target` must be U.
  FunctorialImage compose_functorial(Composition         direction,
                                     HomRecord const&    f,
                                     HomSet const&       homs,
                                     QuandleTable const& target,
                                     QuandleTable const* post_target = nullptr);

}  // namespace qhom
