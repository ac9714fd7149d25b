#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "qhom/quandle.hpp"

namespace qhom {

  namespace {

    std::vector<std::size_t> cycle_type(std::span<element const> perm) {
      std::vector<bool>        seen(perm.size(), false);
      std::vector<std::size_t> lengths;
      for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = perm[x]) {
          seen[x] = true;
          ++len;
        }
        lengths.push_back(len);
      }
      std::sort(lengths.begin(), lengths.end());
      return lengths;
    }

    // Label-independent element colours for q and r together, refined until
    // the number of classes stops growing. Colours are comparable across the
    // two quandles.
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
    joint_colours(QuandleTable const& q, QuandleTable const& r) {
      using signature = std::vector<std::size_t>;
      auto initial    = [](QuandleTable const& t) {
        auto                   comps = components(t);
        std::vector<signature> sig(t.order());
        for (element x = 0; x < t.order(); ++x) {
          sig[x] = cycle_type(t.row(x));
          sig[x].insert(sig[x].begin(), comps.blocks[comps.block_of[x]].size());
          std::vector<element> right(t.order());
          for (element y = 0; y < t.order(); ++y) {
            right[y] = t(y, x);
          }
          std::sort(right.begin(), right.end());
          auto images = std::unique(right.begin(), right.end()) - right.begin();
          sig[x].push_back(static_cast<std::size_t>(images));
        }
        return sig;
      };
      auto number = [](std::vector<signature> const& a, std::vector<signature> const& b) {
        std::map<signature, std::size_t> ids;
        for (auto const& s : a) {
          ids.emplace(s, 0);
        }
        for (auto const& s : b) {
          ids.emplace(s, 0);
        }
        std::size_t next = 0;
        for (auto& [s, id] : ids) {
          id = next++;
        }
        std::vector<std::size_t> ca, cb;
        for (auto const& s : a) {
          ca.push_back(ids[s]);
        }
        for (auto const& s : b) {
          cb.push_back(ids[s]);
        }
        return std::make_tuple(std::move(ca), std::move(cb), ids.size());
      };
      auto [cq, cr, classes] = number(initial(q), initial(r));
      while (true) {
        auto refine = [](QuandleTable const& t, std::vector<std::size_t> const& c) {
          std::vector<signature> sig(t.order());
          for (element x = 0; x < t.order(); ++x) {
            std::vector<std::array<std::size_t, 3>> nb;
            nb.reserve(t.order());
            for (element y = 0; y < t.order(); ++y) {
              nb.push_back({c[y], c[t(x, y)], c[t(y, x)]});
            }
            std::sort(nb.begin(), nb.end());
            sig[x].push_back(c[x]);
            for (auto const& a : nb) {
              sig[x].insert(sig[x].end(), a.begin(), a.end());
            }
          }
          return sig;
        };
        auto [nq, nr, next] = number(refine(q, cq), refine(r, cr));
        cq                  = std::move(nq);
        cr                  = std::move(nr);
        if (next == classes) {
          break;
        }
        classes = next;
      }
      return {cq, cr};
    }

    struct iso_search {
      QuandleTable const&             q;
      QuandleTable const&             r;
      std::vector<std::size_t> const& cq;
      std::vector<std::size_t> const& cr;
      std::vector<element> const&     gens;

      static constexpr element unset = ~element{0};

      // Assigns f(x) = y and closes under ▷ and left division. Returns false on
      // a conflict; the state is then garbage and the caller discards it.
      bool assign(std::vector<element>& f,
                  std::vector<element>& inv,
                  std::vector<element>& domain,
                  element               x,
                  element               y) const {
        std::vector<std::pair<element, element>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (f[a] != unset) {
            if (f[a] != b) {
              return false;
            }
            continue;
          }
          if (inv[b] != unset || cq[a] != cr[b]) {
            return false;
          }
          f[a]   = b;
          inv[b] = a;
          domain.push_back(a);
          for (element w : domain) {
            queue.emplace_back(q(a, w), r(b, f[w]));
            queue.emplace_back(q(w, a), r(f[w], b));
          }
        }
        return true;
      }

      bool search(std::size_t           depth,
                  std::vector<element>& f,
                  std::vector<element>& inv,
                  std::vector<element>& domain) const {
        if (depth == gens.size()) {
          return domain.size() == q.order();
        }
        element g = gens[depth];
        if (f[g] != unset) {
          return search(depth + 1, f, inv, domain);
        }
        for (element y = 0; y < r.order(); ++y) {
          if (inv[y] != unset || cr[y] != cq[g]) {
            continue;
          }
          auto f2 = f, inv2 = inv, domain2 = domain;
          if (assign(f2, inv2, domain2, g, y) && search(depth + 1, f2, inv2, domain2)) {
            f      = std::move(f2);
            inv    = std::move(inv2);
            domain = std::move(domain2);
            return true;
          }
        }
        return false;
      }
    };

  }  // namespace

  std::optional<std::vector<element>> is_isomorphic(QuandleTable const& q,
                                                    QuandleTable const& r) {
    if (q.order() != r.order()) {
      return std::nullopt;
    }
    if (components(q).size_profile() != components(r).size_profile()) {
      return std::nullopt;
    }
    auto [cq, cr] = joint_colours(q, r);
    {
      auto sq = cq, sr = cr;
      std::sort(sq.begin(), sq.end());
      std::sort(sr.begin(), sr.end());
      if (sq != sr) {
        return std::nullopt;
      }
    }
    std::vector<element> gens = greedy_generators(q);
    iso_search           s{q, r, cq, cr, gens};
    std::vector<element> f(q.order(), iso_search::unset), inv(r.order(), iso_search::unset);
    std::vector<element> domain;
    if (!s.search(0, f, inv, domain)) {
      return std::nullopt;
    }
    return f;
  }

}  // namespace qhom
