#pragma once

#include <string>
#include <vector>

#include "qhom/quandle.hpp"

namespace qhom {

  // Lexicographically least row-major relabelling among the permutations that
  // respect a label-independent ordered refinement of the elements.
  // Isomorphic inputs give equal outputs.
  QuandleTable canonical_form(QuandleTable const& q);

  struct CatalogEntry {
    QuandleTable             table;
    std::vector<std::size_t> component_sizes;  // sorted
    bool                     trivial       = false;
    bool                     medial        = false;
    bool                     two_reductive = false;
    bool                     latin         = false;
    bool                     connected     = false;
    bool                     involutory    = false;

    static CatalogEntry describe(QuandleTable q);
    bool                has(Property p) const noexcept;
  };

  struct Catalog {
    std::size_t               order = 0;
    std::vector<CatalogEntry> entries;  // canonical tables, ascending

    std::size_t size() const noexcept {
      return entries.size();
    }
  };

  enum class RowOrder { ascending, descending };

  // Depth-first over rows L_x (permutations fixing x), forcing
  // L_{x▷y} = L_x L_y L_x^{-1} as soon as rows x and y are placed, then
  // deduplicating by canonical form. Orders 1..6.
  Catalog enumerate_quandles(std::size_t n, RowOrder order = RowOrder::ascending);

  Catalog catalog_filter(Catalog const& c, Property p);

  // `rank=0 trivial=true ... components=1+2`
  std::string index_line(std::size_t rank, CatalogEntry const& e);

}  // namespace qhom
