#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the table type and are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "qhom/quandle.hpp"

namespace oracle {

  using qhom::element;
  using qhom::QuandleTable;
  using table = std::vector<std::vector<element>>;

  inline table rows_of(QuandleTable const& q) {
    table t(q.order(), std::vector<element>(q.order()));
    for (element x = 0; x < q.order(); ++x) {
      for (element y = 0; y < q.order(); ++y) {
        t[x][y] = q(x, y);
      }
    }
    return t;
  }

  inline bool is_quandle(table const& t) {
    std::size_t const n = t.size();
    for (element x = 0; x < n; ++x) {
      if (t[x][x] != x) {
        return false;
      }
      std::vector<bool> hit(n, false);
      for (element y = 0; y < n; ++y) {
        hit[t[x][y]] = true;
      }
      if (std::count(hit.begin(), hit.end(), true) != static_cast<long>(n)) {
        return false;
      }
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        for (element z = 0; z < n; ++z) {
          if (t[x][t[y][z]] != t[t[x][y]][t[x][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every map S -> T checked against the definition.
  inline std::vector<std::vector<element>> all_homs(QuandleTable const& s, QuandleTable const& t) {
    std::size_t const                 n = s.order(), m = t.order();
    std::vector<std::vector<element>> out;
    std::vector<element>              h(n, 0);
    while (true) {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) {
        for (element y = 0; y < n && ok; ++y) {
          ok = h[s(x, y)] == t(h[x], h[y]);
        }
      }
      if (ok) {
        out.push_back(h);
      }
      std::size_t i = n;
      while (i > 0 && h[i - 1] == m - 1) {
        h[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++h[i - 1];
    }
    return out;
  }

  inline std::uint64_t surjections(std::size_t from, std::size_t onto) {
    std::uint64_t        count = 0;
    std::vector<element> f(from, 0);
    if (from == 0) {
      return onto == 0 ? 1 : 0;
    }
    while (true) {
      std::set<element> image(f.begin(), f.end());
      if (image.size() == onto) {
        ++count;
      }
      std::size_t i = from;
      while (i > 0 && f[i - 1] + 1 == onto) {
        f[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++f[i - 1];
    }
    return count;
  }

  inline bool isomorphic(table const& a, table const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::size_t const    n = a.size();
    std::vector<element> p(n);
    std::iota(p.begin(), p.end(), element{0});
    do {
      bool ok = true;
      for (element x = 0; x < n && ok; ++x) {
        for (element y = 0; y < n && ok; ++y) {
          ok = p[a[x][y]] == b[p[x]][p[y]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  inline std::size_t orbit_count(table const& t) {
    std::size_t const    n = t.size();
    std::vector<element> label(n);
    std::iota(label.begin(), label.end(), element{0});
    bool changed = true;
    while (changed) {
      changed = false;
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          element a = label[y], b = label[t[x][y]];
          if (a != b) {
            element lo = std::min(a, b), hi = std::max(a, b);
            for (auto& l : label) {
              if (l == hi) {
                l = lo;
              }
            }
            changed = true;
          }
        }
      }
    }
    return std::set<element>(label.begin(), label.end()).size();
  }

  // All quandles of order n up to isomorphism, from every combination of
  // diagonal-fixing rows. Practical for n <= 4.
  inline std::vector<table> catalog(std::size_t n) {
    std::vector<std::vector<std::vector<element>>> rows(n);
    std::vector<element>                           p(n);
    std::iota(p.begin(), p.end(), element{0});
    do {
      for (element x = 0; x < n; ++x) {
        if (p[x] == x) {
          rows[x].push_back(p);
        }
      }
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<table>       found;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      table t(n);
      for (element x = 0; x < n; ++x) {
        t[x] = rows[x][pick[x]];
      }
      if (is_quandle(t)
          && std::none_of(found.begin(), found.end(),
                          [&](table const& f) { return isomorphic(f, t); })) {
        found.push_back(t);
      }
      std::size_t i = n;
      while (i > 0 && pick[i - 1] + 1 == rows[i - 1].size()) {
        pick[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
    }
    return found;
  }

}  // namespace oracle
