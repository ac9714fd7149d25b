#include "qhom/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qhom {

  namespace {

    // Colour refinement numbered by sorted signature, so colours do not
    // depend on the labelling.
    std::vector<std::size_t> refined_colours(QuandleTable const& q) {
      std::size_t const                     n = q.order();
      std::vector<std::vector<std::size_t>> sig(n);
      auto                                  comps = components(q);
      for (element x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        for (element s = 0; s < n; ++s) {
          if (seen[s]) {
            continue;
          }
          std::size_t len = 0;
          for (element y = s; !seen[y]; y = q(x, y)) {
            seen[y] = true;
            ++len;
          }
          sig[x].push_back(len);
        }
        std::sort(sig[x].begin(), sig[x].end());
        sig[x].insert(sig[x].begin(), comps.blocks[comps.block_of[x]].size());
      }
      std::vector<std::size_t> colour(n);
      std::size_t              classes = 0;
      while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        for (auto const& s : sig) {
          ids.emplace(s, 0);
        }
        std::size_t next = 0;
        for (auto& [s, id] : ids) {
          id = next++;
        }
        for (element x = 0; x < n; ++x) {
          colour[x] = ids[sig[x]];
        }
        if (ids.size() == classes) {
          return colour;
        }
        classes = ids.size();
        for (element x = 0; x < n; ++x) {
          std::vector<std::array<std::size_t, 3>> nb;
          for (element y = 0; y < n; ++y) {
            nb.push_back({colour[y], colour[q(x, y)], colour[q(y, x)]});
          }
          std::sort(nb.begin(), nb.end());
          sig[x] = {colour[x]};
          for (auto const& a : nb) {
            sig[x].insert(sig[x].end(), a.begin(), a.end());
          }
        }
      }
    }

  }  // namespace

  QuandleTable canonical_form(QuandleTable const& q) {
    std::size_t const        n      = q.order();
    std::vector<std::size_t> colour = refined_colours(q);
    // cells[c] = elements of colour c; a candidate labelling lists the cells
    // in colour order with any arrangement inside each cell.
    std::size_t const                 cell_count = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<element>> cells(cell_count);
    for (element x = 0; x < n; ++x) {
      cells[colour[x]].push_back(x);
    }

    std::vector<element> best;
    std::vector<element> current(n * n);
    std::vector<element> perm(n), inv(n);
    while (true) {
      std::size_t pos = 0;
      for (auto const& c : cells) {
        for (element x : c) {
          perm[pos++] = x;
        }
      }
      for (element i = 0; i < n; ++i) {
        inv[perm[i]] = i;
      }
      // row-major comparison with early exit
      int cmp = best.empty() ? -1 : 0;
      for (std::size_t k = 0; k < n * n; ++k) {
        element v = inv[q(perm[k / n], perm[k % n])];
        if (cmp == 0) {
          if (v < best[k]) {
            cmp = -1;
          } else if (v > best[k]) {
            cmp = 1;
            break;
          }
        }
        current[k] = v;
      }
      if (cmp < 0) {
        best = current;
      }
      // advance the odometer of per-cell permutations
      std::size_t c = 0;
      for (; c < cells.size(); ++c) {
        if (std::next_permutation(cells[c].begin(), cells[c].end())) {
          break;
        }
      }
      if (c == cells.size()) {
        break;
      }
    }
    return QuandleTable::from_flat(n, std::move(best));
  }

  CatalogEntry CatalogEntry::describe(QuandleTable q) {
    CatalogEntry e;
    e.component_sizes = components(q).size_profile();
    e.trivial         = check_property(q, Property::trivial).holds;
    e.medial          = check_property(q, Property::medial).holds;
    e.two_reductive   = check_property(q, Property::two_reductive).holds;
    e.latin           = check_property(q, Property::latin).holds;
    e.connected       = e.component_sizes.size() == 1;
    e.involutory      = check_property(q, Property::involutory).holds;
    e.table           = std::move(q);
    return e;
  }

  bool CatalogEntry::has(Property p) const noexcept {
    switch (p) {
      case Property::trivial: return trivial;
      case Property::medial: return medial;
      case Property::two_reductive: return two_reductive;
      case Property::latin: return latin;
      case Property::connected: return connected;
      case Property::involutory: return involutory;
    }
    return false;
  }

  namespace {

    using row_state = std::vector<std::vector<element>>;

    class row_search {
     public:
      row_search(std::size_t n, RowOrder order) : _n(n) {
        _order.resize(n);
        std::iota(_order.begin(), _order.end(), element{0});
        if (order == RowOrder::descending) {
          std::reverse(_order.begin(), _order.end());
        }
        _candidates.resize(n);
        std::vector<element> p(n);
        std::iota(p.begin(), p.end(), element{0});
        do {
          for (element x = 0; x < n; ++x) {
            if (p[x] == x) {
              _candidates[x].push_back(p);
            }
          }
        } while (std::next_permutation(p.begin(), p.end()));
      }

      std::set<QuandleTable> run() {
        row_state rows(_n);
        recurse(rows);
        return std::move(_found);
      }

     private:
      // Sets row z and closes under L_{a▷b} = L_a L_b L_a^{-1}.
      bool place(row_state& rows, element z, std::vector<element> const& row) const {
        std::vector<std::pair<element, std::vector<element>>> queue{{z, row}};
        while (!queue.empty()) {
          auto [x, r] = std::move(queue.back());
          queue.pop_back();
          if (!rows[x].empty()) {
            if (rows[x] != r) {
              return false;
            }
            continue;
          }
          rows[x] = std::move(r);
          for (element w = 0; w < _n; ++w) {
            if (rows[w].empty()) {
              continue;
            }
            for (auto [a, b] : {std::pair{x, w}, std::pair{w, x}}) {
              auto const&          la = rows[a];
              auto const&          lb = rows[b];
              std::vector<element> inv(_n), forced(_n);
              for (element i = 0; i < _n; ++i) {
                inv[la[i]] = i;
              }
              for (element i = 0; i < _n; ++i) {
                forced[i] = la[lb[inv[i]]];
              }
              queue.emplace_back(la[b], std::move(forced));
            }
          }
        }
        return true;
      }

      void recurse(row_state& rows) {
        auto next = std::find_if(_order.begin(), _order.end(), [&](element x) {
          return rows[x].empty();
        });
        if (next == _order.end()) {
          std::vector<element> cells;
          for (auto const& r : rows) {
            cells.insert(cells.end(), r.begin(), r.end());
          }
          _found.insert(canonical_form(QuandleTable::from_flat(_n, std::move(cells))));
          return;
        }
        for (auto const& cand : _candidates[*next]) {
          row_state trial = rows;
          if (place(trial, *next, cand)) {
            recurse(trial);
          }
        }
      }

      std::size_t                                    _n;
      std::vector<element>                           _order;
      std::vector<std::vector<std::vector<element>>> _candidates;
      std::set<QuandleTable>                         _found;
    };

  }  // namespace

  Catalog enumerate_quandles(std::size_t n, RowOrder order) {
    if (n < 1 || n > 6) {
      throw input_error("enumeration supports orders 1 through 6");
    }
    Catalog out;
    out.order = n;
    for (auto const& q : row_search(n, order).run()) {
      out.entries.push_back(CatalogEntry::describe(q));
    }
    return out;
  }

  Catalog catalog_filter(Catalog const& c, Property p) {
    Catalog out;
    out.order = c.order;
    for (auto const& e : c.entries) {
      if (e.has(p)) {
        out.entries.push_back(e);
      }
    }
    return out;
  }

  std::string index_line(std::size_t rank, CatalogEntry const& e) {
    std::ostringstream os;
    os << "rank=" << rank;
    for (Property p : all_properties()) {
      os << ' ' << to_string(p) << '=' << (e.has(p) ? "true" : "false");
    }
    os << " components=";
    for (std::size_t i = 0; i < e.component_sizes.size(); ++i) {
      os << (i ? "+" : "") << e.component_sizes[i];
    }
    return os.str();
  }

}  // namespace qhom
