#include "qhom/quandle.hpp"

#include <algorithm>
#include <sstream>

namespace qhom {

  namespace {

    std::vector<element> closure_from(QuandleTable const&   q,
                                      std::vector<element>  members,
                                      std::vector<bool>&    in,
                                      std::size_t           first_new) {
      // members[0..first_new) are already closed among themselves.
      for (std::size_t i = first_new; i < members.size(); ++i) {
        element z = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
          element w = members[j];
          for (element p : {q(z, w), q(w, z)}) {
            if (!in[p]) {
              in[p] = true;
              members.push_back(p);
            }
          }
        }
      }
      return members;
    }

  }  // namespace

  char const* to_string(Axiom a) noexcept {
    switch (a) {
      case Axiom::none: return "none";
      case Axiom::idempotence: return "idempotence";
      case Axiom::left_divisibility: return "left_divisibility";
      case Axiom::self_distributivity: return "self_distributivity";
    }
    return "?";
  }

  std::string ValidationReport::describe() const {
    if (ok()) {
      return "ok";
    }
    std::ostringstream os;
    os << to_string(failed) << " fails at (" << join(witness, ",") << ")";
    return os.str();
  }

  ValidationReport verify_quandle(std::vector<std::vector<long long>> const& raw) {
    std::size_t const n = raw.size();
    if (n == 0) {
      throw input_error("quandle table must have at least one row");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (raw[x].size() != n) {
        throw input_error("row " + std::to_string(x) + " has " + std::to_string(raw[x].size())
                          + " entries, expected " + std::to_string(n));
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (raw[x][y] < 0 || static_cast<std::size_t>(raw[x][y]) >= n) {
          throw input_error("entry (" + std::to_string(x) + "," + std::to_string(y)
                            + ") = " + std::to_string(raw[x][y]) + " is out of range");
        }
      }
    }
    auto at = [&](std::size_t x, std::size_t y) {
      return static_cast<std::size_t>(raw[x][y]);
    };
    for (element x = 0; x < n; ++x) {
      if (at(x, x) != x) {
        return {Axiom::idempotence, {x}};
      }
    }
    for (element x = 0; x < n; ++x) {
      std::vector<bool> hit(n, false);
      for (std::size_t y = 0; y < n; ++y) {
        if (hit[at(x, y)]) {
          return {Axiom::left_divisibility, {x}};
        }
        hit[at(x, y)] = true;
      }
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        for (element z = 0; z < n; ++z) {
          if (at(x, at(y, z)) != at(at(x, y), at(x, z))) {
            return {Axiom::self_distributivity, {x, y, z}};
          }
        }
      }
    }
    return {};
  }

  invalid_quandle::invalid_quandle(ValidationReport r)
      : std::runtime_error("not a quandle: " + r.describe()), _report(std::move(r)) {}

  QuandleTable::QuandleTable(std::vector<std::vector<long long>> const& rows) {
    ValidationReport report = verify_quandle(rows);
    if (!report.ok()) {
      throw invalid_quandle(std::move(report));
    }
    std::vector<element> cells;
    cells.reserve(rows.size() * rows.size());
    for (auto const& r : rows) {
      for (long long v : r) {
        cells.push_back(static_cast<element>(v));
      }
    }
    *this = QuandleTable(rows.size(), std::move(cells), false);
  }

  QuandleTable::QuandleTable(std::size_t n, std::vector<element> cells, bool check)
      : _n(n), _cells(std::move(cells)), _ldiv(_cells.size()) {
    if (check) {
      if (n == 0 || _cells.size() != n * n) {
        throw input_error("flat table size does not match order");
      }
      for (element v : _cells) {
        if (v >= n) {
          throw input_error("table entry out of range");
        }
      }
      // Cheap checks first; distributivity is verified exhaustively below.
      ValidationReport report;
      for (element x = 0; x < n && report.ok(); ++x) {
        if ((*this)(x, x) != x) {
          report = {Axiom::idempotence, {x}};
        }
      }
      for (element x = 0; x < n && report.ok(); ++x) {
        std::vector<bool> hit(n, false);
        for (element y = 0; y < n; ++y) {
          if (hit[(*this)(x, y)]) {
            report = {Axiom::left_divisibility, {x}};
            break;
          }
          hit[(*this)(x, y)] = true;
        }
      }
      for (element x = 0; x < n && report.ok(); ++x) {
        for (element y = 0; y < n && report.ok(); ++y) {
          element xy = (*this)(x, y);
          for (element z = 0; z < n; ++z) {
            if ((*this)(x, (*this)(y, z)) != (*this)(xy, (*this)(x, z))) {
              report = {Axiom::self_distributivity, {x, y, z}};
              break;
            }
          }
        }
      }
      if (!report.ok()) {
        throw invalid_quandle(std::move(report));
      }
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        _ldiv[static_cast<std::size_t>(x) * n + (*this)(x, y)] = y;
      }
    }
  }

  QuandleTable QuandleTable::from_flat(std::size_t n, std::vector<element> cells) {
    return QuandleTable(n, std::move(cells), true);
  }

  QuandleTable QuandleTable::trivial(std::size_t n) {
    if (n == 0) {
      throw input_error("quandle order must be positive");
    }
    std::vector<element> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        cells[x * n + y] = static_cast<element>(y);
      }
    }
    return QuandleTable(n, std::move(cells), false);
  }

  QuandleTable QuandleTable::dihedral(std::size_t n) {
    if (n == 0) {
      throw input_error("quandle order must be positive");
    }
    std::vector<element> cells(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        cells[x * n + y] = static_cast<element>((2 * x + n - y) % n);
      }
    }
    return QuandleTable(n, std::move(cells), true);
  }

  std::vector<std::vector<long long>> QuandleTable::rows() const {
    std::vector<std::vector<long long>> out(_n, std::vector<long long>(_n));
    for (element x = 0; x < _n; ++x) {
      for (element y = 0; y < _n; ++y) {
        out[x][y] = (*this)(x, y);
      }
    }
    return out;
  }

  QuandleTable QuandleTable::relabel(std::span<element const> perm) const {
    if (perm.size() != _n) {
      throw input_error("relabeling has the wrong length");
    }
    std::vector<element> inv(_n, static_cast<element>(_n));
    for (element i = 0; i < _n; ++i) {
      if (perm[i] >= _n || inv[perm[i]] != _n) {
        throw input_error("relabeling is not a permutation");
      }
      inv[perm[i]] = i;
    }
    std::vector<element> cells(_n * _n);
    for (element i = 0; i < _n; ++i) {
      for (element j = 0; j < _n; ++j) {
        cells[static_cast<std::size_t>(i) * _n + j] = inv[(*this)(perm[i], perm[j])];
      }
    }
    return QuandleTable(_n, std::move(cells), false);
  }

  Partition ComponentPartition::as_partition() const {
    return Partition::from_classes(block_of.size(), blocks);
  }

  std::vector<std::size_t> ComponentPartition::size_profile() const {
    std::vector<std::size_t> sizes;
    for (auto const& b : blocks) {
      sizes.push_back(b.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  ComponentPartition components(QuandleTable const& q) {
    std::size_t const n = q.order();
    union_find        uf(n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        uf.unite(y, q(x, y));
      }
    }
    Partition          p = Partition::from_union_find(uf);
    ComponentPartition out;
    out.blocks = p.classes();
    out.block_of.resize(n);
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
      out.representative.push_back(out.blocks[b].front());
      for (element x : out.blocks[b]) {
        out.block_of[x] = b;
      }
    }
    return out;
  }

  char const* to_string(Property p) noexcept {
    switch (p) {
      case Property::trivial: return "trivial";
      case Property::medial: return "medial";
      case Property::two_reductive: return "two_reductive";
      case Property::latin: return "latin";
      case Property::connected: return "connected";
      case Property::involutory: return "involutory";
    }
    return "?";
  }

  std::vector<Property> const& all_properties() {
    static std::vector<Property> const props = {Property::trivial,
                                                Property::medial,
                                                Property::two_reductive,
                                                Property::latin,
                                                Property::connected,
                                                Property::involutory};
    return props;
  }

  Property parse_property(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '-', '_');
    for (Property p : all_properties()) {
      if (s == to_string(p)) {
        return p;
      }
    }
    throw input_error("unknown property '" + std::string(name) + "'");
  }

  PropertyCheck check_property(QuandleTable const& q, Property p) {
    element const n = static_cast<element>(q.order());
    switch (p) {
      case Property::trivial:
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            if (q(x, y) != y) {
              return {false, {x, y}};
            }
          }
        }
        return {};
      case Property::medial:
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            for (element z = 0; z < n; ++z) {
              for (element w = 0; w < n; ++w) {
                if (q(q(x, y), q(z, w)) != q(q(x, z), q(y, w))) {
                  return {false, {x, y, z, w}};
                }
              }
            }
          }
        }
        return {};
      case Property::two_reductive:
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            for (element z = 0; z < n; ++z) {
              if (q(q(x, y), z) != q(y, z)) {
                return {false, {x, y, z}};
              }
            }
          }
        }
        return {};
      case Property::latin:
        for (element y = 0; y < n; ++y) {
          std::vector<bool> hit(n, false);
          for (element x = 0; x < n; ++x) {
            if (hit[q(x, y)]) {
              return {false, {y}};
            }
            hit[q(x, y)] = true;
          }
        }
        return {};
      case Property::connected: {
        auto comps = components(q);
        for (element x = 0; x < n; ++x) {
          if (comps.block_of[x] != 0) {
            return {false, {x}};
          }
        }
        return {};
      }
      case Property::involutory:
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            if (q(x, q(x, y)) != y) {
              return {false, {x, y}};
            }
          }
        }
        return {};
    }
    throw input_error("unknown property");
  }

  bool is_homomorphism(QuandleTable const&      s,
                       QuandleTable const&      t,
                       std::span<element const> f) {
    if (f.size() != s.order()) {
      return false;
    }
    for (element v : f) {
      if (v >= t.order()) {
        return false;
      }
    }
    for (element x = 0; x < s.order(); ++x) {
      for (element y = 0; y < s.order(); ++y) {
        if (f[s(x, y)] != t(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  QuandleTable direct_power(QuandleTable const& q, std::size_t k, std::size_t budget) {
    if (k == 0) {
      throw input_error("direct power exponent must be positive");
    }
    std::size_t const n    = q.order();
    std::size_t       size = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (size > budget / n) {
        throw budget_error("direct power of order " + std::to_string(n) + " to the "
                           + std::to_string(k) + " exceeds the budget of "
                           + std::to_string(budget) + " elements");
      }
      size *= n;
    }
    std::vector<element> cells(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        std::size_t ra = a, rb = b, out = 0, scale = 1;
        for (std::size_t c = 0; c < k; ++c) {
          out += scale * q(static_cast<element>(ra % n), static_cast<element>(rb % n));
          ra /= n;
          rb /= n;
          scale *= n;
        }
        cells[a * size + b] = static_cast<element>(out);
      }
    }
    return QuandleTable::from_flat(size, std::move(cells));
  }

  std::vector<element> generated_subquandle(QuandleTable const&      q,
                                            std::span<element const> seeds) {
    if (seeds.empty()) {
      throw input_error("generated_subquandle needs at least one seed");
    }
    std::vector<bool>    in(q.order(), false);
    std::vector<element> members;
    for (element s : seeds) {
      if (s >= q.order()) {
        throw input_error("seed " + std::to_string(s) + " is out of range");
      }
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
    members = closure_from(q, std::move(members), in, 0);
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<element> greedy_generators(QuandleTable const& q) {
    std::size_t const    n = q.order();
    std::vector<element> gens;
    std::vector<element> closed;
    std::vector<bool>    in(n, false);
    while (closed.size() < n) {
      element     best      = 0;
      std::size_t best_size = 0;
      for (element x = 0; x < n; ++x) {
        if (in[x]) {
          continue;
        }
        std::vector<bool> trial_in = in;
        trial_in[x]                = true;
        std::vector<element> trial = closed;
        trial.push_back(x);
        trial = closure_from(q, std::move(trial), trial_in, closed.size());
        if (trial.size() > best_size) {
          best_size = trial.size();
          best      = x;
          if (best_size == n) {
            break;
          }
        }
      }
      gens.push_back(best);
      in[best] = true;
      closed.push_back(best);
      closed = closure_from(q, std::move(closed), in, closed.size() - 1);
    }
    return gens;
  }

  std::vector<std::vector<element>> all_subquandles(QuandleTable const& q) {
    std::size_t const n = q.order();
    if (n > 64) {
      throw budget_error("subquandle enumeration is limited to order 64");
    }
    auto to_mask = [](std::vector<element> const& xs) {
      std::uint64_t m = 0;
      for (element x : xs) {
        m |= std::uint64_t{1} << x;
      }
      return m;
    };
    std::vector<std::vector<element>> found;
    std::vector<std::uint64_t>        masks;
    std::vector<std::size_t>          frontier;
    auto add = [&](std::vector<element> s) {
      std::uint64_t m = to_mask(s);
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
        masks.push_back(m);
        found.push_back(std::move(s));
        frontier.push_back(found.size() - 1);
      }
    };
    for (element x = 0; x < n; ++x) {
      add({x});
    }
    while (!frontier.empty()) {
      std::size_t idx = frontier.back();
      frontier.pop_back();
      std::vector<element> base = found[idx];
      std::uint64_t        m    = masks[idx];
      for (element x = 0; x < n; ++x) {
        if (m & (std::uint64_t{1} << x)) {
          continue;
        }
        std::vector<element> seeds = base;
        seeds.push_back(x);
        add(generated_subquandle(q, seeds));
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return found;
  }

}  // namespace qhom
