#include "qhom/hom.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qhom/congruence.hpp"

namespace qhom {

  char const* to_string(Engine e) noexcept {
    switch (e) {
      case Engine::brute: return "brute";
      case Engine::two_reductive_mesh: return "two_reductive_mesh";
      case Engine::general_mesh: return "general_mesh";
    }
    return "?";
  }

  std::optional<std::size_t> HomSet::index_of(std::vector<element> const& image) const {
    HomRecord key{image};
    auto      it = std::lower_bound(records.begin(), records.end(), key);
    if (it == records.end() || *it != key) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - records.begin());
  }

  std::string HomSet::serialize() const {
    std::ostringstream os;
    os << "homset " << source_order << ' ' << target_order << ' ' << records.size() << ' '
       << to_string(engine) << '\n';
    for (auto const& r : records) {
      os << join(r.image) << '\n';
    }
    return os.str();
  }

  namespace {

    constexpr element unset = ~element{0};

    class brute_search {
     public:
      brute_search(QuandleTable const& s, QuandleTable const& t, std::uint64_t budget)
          : _s(s), _t(t), _gens(greedy_generators(s)), _budget(budget) {}

      std::vector<HomRecord> run() {
        std::vector<element> h(_s.order(), unset);
        std::vector<element> domain;
        recurse(0, h, domain);
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      bool assign(std::vector<element>& h, std::vector<element>& domain, element x, element y) {
        std::vector<std::pair<element, element>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (h[a] != unset) {
            if (h[a] != b) {
              return false;
            }
            continue;
          }
          h[a] = b;
          domain.push_back(a);
          for (element w : domain) {
            queue.emplace_back(_s(a, w), _t(b, h[w]));
            queue.emplace_back(_s(w, a), _t(h[w], b));
          }
        }
        return true;
      }

      void recurse(std::size_t depth, std::vector<element>& h, std::vector<element>& domain) {
        if (++_states > _budget) {
          throw budget_error("homomorphism search exceeded " + std::to_string(_budget)
                             + " partial states");
        }
        if (depth == _gens.size()) {
          _found.push_back({h});
          return;
        }
        element g = _gens[depth];
        if (h[g] != unset) {
          recurse(depth + 1, h, domain);
          return;
        }
        for (element y = 0; y < _t.order(); ++y) {
          auto h2 = h, domain2 = domain;
          if (assign(h2, domain2, g, y)) {
            recurse(depth + 1, h2, domain2);
          }
        }
      }

      QuandleTable const&    _s;
      QuandleTable const&    _t;
      std::vector<element>   _gens;
      std::uint64_t          _budget;
      std::uint64_t          _states = 0;
      std::vector<HomRecord> _found;
    };

    void require_medial(QuandleTable const& t, char const* what) {
      if (auto chk = check_property(t, Property::medial); !chk) {
        throw precondition_error(std::string(what)
                                 + ": Hom(S,T) is a quandle under the pointwise operation only "
                                   "when T is medial; (x*y)*(z*w) != (x*z)*(y*w) at ("
                                 + join(chk.witness, ",") + ")");
      }
    }

    void require_two_reductive(QuandleTable const& t, char const* what) {
      if (auto chk = check_property(t, Property::two_reductive); !chk) {
        throw precondition_error(std::string(what) + ": target is not 2-reductive; (x*y)*z != y*z at ("
                                 + join(chk.witness, ",") + ")");
      }
    }

    // Calls f(g) for every g in {0..range-1}^len in lexicographic order.
    void for_each_tuple(std::size_t len, std::size_t range,
                        std::function<void(std::vector<std::size_t> const&)> const& f) {
      std::vector<std::size_t> g(len, 0);
      if (range == 0 && len > 0) {
        return;
      }
      while (true) {
        f(g);
        std::size_t i = len;
        while (i > 0 && ++g[i - 1] == range) {
          g[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
      }
    }

  }  // namespace

  HomSet enumerate_homs(QuandleTable const& s, QuandleTable const& t, std::uint64_t budget) {
    HomSet out{s.order(), t.order(), {}, Engine::brute};
    out.records = brute_search(s, t, budget).run();
    return out;
  }

  HomQuandle hom_quandle(QuandleTable const& s, QuandleTable const& t) {
    require_medial(t, "hom_quandle");
    return hom_quandle(t, enumerate_homs(s, t));
  }

  HomQuandle hom_quandle(QuandleTable const& t, HomSet homs) {
    require_medial(t, "hom_quandle");
    if (homs.target_order != t.order()) {
      throw input_error("hom set target does not match the target quandle");
    }
    std::size_t const    m = homs.size();
    std::size_t const    n = homs.source_order;
    std::vector<element> cells(m * m);
    std::vector<element> pointwise(n);
    for (std::size_t i = 0; i < m; ++i) {
      auto const& h = homs.records[i].image;
      for (std::size_t j = 0; j < m; ++j) {
        auto const& k = homs.records[j].image;
        for (std::size_t a = 0; a < n; ++a) {
          pointwise[a] = t(h[a], k[a]);
        }
        auto idx = homs.index_of(pointwise);
        if (!idx) {
          throw std::logic_error("pointwise product of homomorphisms left the hom set");
        }
        cells[i * m + j] = static_cast<element>(*idx);
      }
    }
    return {QuandleTable::from_flat(m, std::move(cells)), std::move(homs)};
  }

  std::uint64_t surjection_count(std::size_t m, std::size_t n) {
    if (n == 0) {
      return m == 0 ? 1 : 0;
    }
    if (m == 0) {
      return 0;
    }
    __int128 total = 0;
    __int128 binom = 1;  // C(n, j)
    for (std::size_t j = 1; j <= n; ++j) {
      binom = binom * static_cast<__int128>(n - j + 1) / static_cast<__int128>(j);
      __int128 power = 1;
      for (std::size_t e = 0; e < m; ++e) {
        power *= static_cast<__int128>(j);
      }
      total += ((n - j) % 2 == 0 ? 1 : -1) * binom * power;
    }
    return static_cast<std::uint64_t>(total);
  }

  std::vector<std::vector<element>> trivial_subquandles(QuandleTable const& t) {
    std::size_t const n = t.order();
    auto commute        = [&](element u, element v) { return t(u, v) == v && t(v, u) == u; };
    std::vector<std::vector<element>> out;
    std::vector<element>              cur;
    std::function<void(element)>      rec = [&](element start) {
      for (element v = start; v < n; ++v) {
        bool ok = std::all_of(cur.begin(), cur.end(), [&](element u) { return commute(u, v); });
        if (ok) {
          cur.push_back(v);
          out.push_back(cur);
          rec(v + 1);
          cur.pop_back();
        }
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  TrivResult triv_homs(QuandleTable const& s, QuandleTable const& t) {
    HomSet all = enumerate_homs(s, t);
    HomSet triv{s.order(), t.order(), {}, all.engine};
    for (auto const& r : all.records) {
      std::vector<element> img = r.image;
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      bool trivial = true;
      for (element u : img) {
        for (element v : img) {
          trivial = trivial && t(u, v) == v;
        }
      }
      if (trivial) {
        triv.records.push_back(r);
      }
    }
    std::size_t const m         = components(s).count();
    std::uint64_t     predicted = 0;
    for (auto const& u : trivial_subquandles(t)) {
      if (u.size() <= m) {
        predicted += surjection_count(m, u.size());
      }
    }
    return {std::move(triv), predicted};
  }

  namespace {

    // S/γ_S and T as 2-reductive meshes, with the bookkeeping needed to
    // translate group coordinates back to elements.
    struct reductive_setup {
      Quotient                 quotient;
      Decomposition            source;
      Decomposition            target;
      std::vector<std::size_t> source_component;  // S'-element -> mesh index
      std::vector<element>     source_local;      // S'-element -> group element
    };

    reductive_setup setup_two_reductive(QuandleTable const& s, QuandleTable const& t) {
      require_two_reductive(t, "count_homs_two_reductive");
      reductive_setup out{quotient(s, standard_congruence(s, CongruenceKind::two_reductive)),
                          {},
                          decompose_two_reductive(t),
                          {},
                          {}};
      out.source = decompose_two_reductive(out.quotient.table);

      // Components of S and S/γ_S correspond in order: γ_S lies inside
      // ker(c_S) and both orderings are by least element.
      auto cs  = components(s);
      auto csq = components(out.quotient.table);
      if (cs.count() != csq.count()) {
        throw std::logic_error("quotient by gamma changed the number of components");
      }
      for (std::size_t i = 0; i < cs.count(); ++i) {
        if (csq.block_of[out.quotient.projection[cs.representative[i]]] != i) {
          throw std::logic_error("quotient by gamma reordered the components");
        }
      }
      std::size_t const n = out.quotient.table.order();
      out.source_component.resize(n);
      out.source_local.resize(n);
      AffineMesh const& ms = out.source.mesh;
      for (std::size_t i = 0; i < ms.index_count(); ++i) {
        for (element a = 0; a < ms.groups[i].order(); ++a) {
          element x               = out.source.to_input[ms.offset(i) + a];
          out.source_component[x] = i;
          out.source_local[x]     = a;
        }
      }
      return out;
    }

    // The maps k_i of the 2-reductive criterion for g, or nothing if some k_i
    // is not a group homomorphism.
    std::optional<std::vector<std::vector<element>>> criterion_maps(AffineMesh const& ms,
                                                                    AffineMesh const& mt,
                                                                    std::vector<std::size_t> const& g) {
      std::size_t const                 r = ms.index_count();
      std::vector<std::vector<element>> maps;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<element> gens, targets;
        for (std::size_t j = 0; j < r; ++j) {
          gens.push_back(ms.consts[j][i]);
          targets.push_back(mt.consts[g[j]][g[i]]);
        }
        auto k = group_hom_extends(ms.groups[i], mt.groups[g[i]], gens, targets);
        if (!k) {
          return std::nullopt;
        }
        maps.push_back(std::move(*k));
      }
      return maps;
    }

  }  // namespace

  TwoReductiveCount count_homs_two_reductive(QuandleTable const& s, QuandleTable const& t) {
    reductive_setup   setup = setup_two_reductive(s, t);
    AffineMesh const& ms    = setup.source.mesh;
    AffineMesh const& mt    = setup.target.mesh;
    TwoReductiveCount out;
    for_each_tuple(ms.index_count(), mt.index_count(), [&](std::vector<std::size_t> const& g) {
      ComponentMapTerm term{g, false, 0};
      if (criterion_maps(ms, mt, g)) {
        term.admissible = true;
        term.product    = 1;
        for (std::size_t i : g) {
          term.product *= mt.groups[i].order();
        }
        out.count += term.product;
      }
      out.terms.push_back(std::move(term));
    });
    return out;
  }

  HomSet enumerate_homs_two_reductive(QuandleTable const& s, QuandleTable const& t) {
    reductive_setup   setup = setup_two_reductive(s, t);
    AffineMesh const& ms    = setup.source.mesh;
    AffineMesh const& mt    = setup.target.mesh;
    std::size_t const r     = ms.index_count();
    HomSet            out{s.order(), t.order(), {}, Engine::two_reductive_mesh};
    for_each_tuple(r, mt.index_count(), [&](std::vector<std::size_t> const& g) {
      auto maps = criterion_maps(ms, mt, g);
      if (!maps) {
        return;
      }
      // base-point images e_i range over T_{g(i)}
      std::vector<element> e(r, 0);
      while (true) {
        std::vector<element> image(s.order());
        for (element x = 0; x < s.order(); ++x) {
          element     p  = setup.quotient.projection[x];
          std::size_t i  = setup.source_component[p];
          auto const& Tg = mt.groups[g[i]];
          element     v  = Tg.add(e[i], (*maps)[i][setup.source_local[p]]);
          image[x]       = setup.target.to_input[mt.offset(g[i]) + v];
        }
        out.records.push_back({std::move(image)});
        std::size_t i = r;
        while (i > 0 && ++e[i - 1] == mt.groups[g[i - 1]].order()) {
          e[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    });
    std::sort(out.records.begin(), out.records.end());
    return out;
  }

  HomSet enumerate_mesh_homs(AffineMesh const& ms, AffineMesh const& mt, std::uint64_t budget) {
    for (auto const* m : {&ms, &mt}) {
      if (MeshReport rep = validate_mesh(*m); !rep.ok()) {
        throw input_error("invalid mesh: " + rep.describe());
      }
    }
    std::size_t const r  = ms.index_count();
    std::size_t const rt = mt.index_count();
    // group homomorphisms S_i -> T_j
    std::vector<std::vector<std::vector<std::vector<element>>>> ghoms(
        r, std::vector<std::vector<std::vector<element>>>(rt));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < rt; ++j) {
        ghoms[i][j] = all_group_homs(ms.groups[i], mt.groups[j]);
      }
    }
    HomSet        out{ms.total_order(), mt.total_order(), {}, Engine::general_mesh};
    std::uint64_t states = 0;
    auto          tick   = [&] {
      if (++states > budget) {
        throw budget_error("mesh homomorphism search exceeded " + std::to_string(budget)
                           + " partial states");
      }
    };

    for_each_tuple(r, rt, [&](std::vector<std::size_t> const& g) {
      std::vector<std::vector<element> const*> k(r, nullptr);
      std::vector<element>                     e(r, 0);

      // (i)  k_b ∘ σ_ab = τ_{g(a)g(b)} ∘ k_a
      auto linear_ok = [&](std::size_t a, std::size_t b) {
        auto const& sig = ms.phi[a][b];
        auto const& tau = mt.phi[g[a]][g[b]];
        for (element x = 0; x < ms.groups[a].order(); ++x) {
          if ((*k[b])[sig[x]] != tau[(*k[a])[x]]) {
            return false;
          }
        }
        return true;
      };
      // (ii) k_b(s_ab) = t_{g(a)g(b)} + τ_{g(a)g(b)}(e_a) - τ_{g(b)g(b)}(e_b)
      auto constant_ok = [&](std::size_t a, std::size_t b) {
        auto const& Tb  = mt.groups[g[b]];
        element     rhs = Tb.sub(Tb.add(mt.consts[g[a]][g[b]], mt.phi[g[a]][g[b]][e[a]]),
                             mt.phi[g[b]][g[b]][e[b]]);
        return (*k[b])[ms.consts[a][b]] == rhs;
      };

      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        tick();
        if (i == r) {
          std::vector<element> image;
          image.reserve(out.source_order);
          for (std::size_t c = 0; c < r; ++c) {
            auto const& Tg = mt.groups[g[c]];
            for (element a = 0; a < ms.groups[c].order(); ++a) {
              image.push_back(static_cast<element>(mt.offset(g[c]) + Tg.add((*k[c])[a], e[c])));
            }
          }
          out.records.push_back({std::move(image)});
          return;
        }
        for (auto const& ki : ghoms[i][g[i]]) {
          k[i]    = &ki;
          bool ok = true;
          for (std::size_t a = 0; a <= i && ok; ++a) {
            ok = linear_ok(a, i) && linear_ok(i, a);
          }
          if (!ok) {
            continue;
          }
          for (element ei = 0; ei < mt.groups[g[i]].order(); ++ei) {
            e[i]     = ei;
            bool cok = true;
            for (std::size_t a = 0; a <= i && cok; ++a) {
              cok = constant_ok(a, i) && constant_ok(i, a);
            }
            if (cok) {
              rec(i + 1);
            }
          }
        }
        k[i] = nullptr;
      };
      rec(0);
    });
    std::sort(out.records.begin(), out.records.end());
    return out;
  }

  EmbeddingReport hom_structure_two_reductive(QuandleTable const& s,
                                              QuandleTable const& t,
                                              std::size_t         budget) {
    require_two_reductive(t, "hom_structure_two_reductive");
    auto              cs = components(s);
    std::size_t const m  = cs.count();
    std::size_t const n  = t.order();
    QuandleTable      power = direct_power(t, m, budget);

    EmbeddingReport out;
    out.exponent    = m;
    out.power_order = power.order();

    HomQuandle hq = hom_quandle(s, t);
    out.hom_count = hq.homs.size();
    std::vector<element> code(hq.homs.size());
    for (std::size_t h = 0; h < hq.homs.size(); ++h) {
      std::size_t c = 0, scale = 1;
      for (std::size_t i = 0; i < m; ++i) {
        c += scale * hq.homs.records[h].image[cs.representative[i]];
        scale *= n;
      }
      code[h] = static_cast<element>(c);
    }
    out.image = code;
    std::sort(out.image.begin(), out.image.end());
    out.injective = std::adjacent_find(out.image.begin(), out.image.end()) == out.image.end();

    out.homomorphism = true;
    for (std::size_t h = 0; h < hq.homs.size() && out.homomorphism; ++h) {
      for (std::size_t k = 0; k < hq.homs.size(); ++k) {
        if (code[hq.table(static_cast<element>(h), static_cast<element>(k))]
            != power(code[h], code[k])) {
          out.homomorphism = false;
          break;
        }
      }
    }

    std::vector<bool> in(power.order(), false);
    for (element c : out.image) {
      in[c] = true;
    }
    auto pc                 = components(power);
    out.union_of_components = true;
    for (std::size_t b = 0; b < pc.count(); ++b) {
      auto const& block = pc.blocks[b];
      auto        hits  = std::count_if(block.begin(), block.end(), [&](element x) { return in[x]; });
      if (hits == 0) {
        continue;
      }
      if (static_cast<std::size_t>(hits) != block.size()) {
        out.union_of_components = false;
      } else {
        out.covered_components.push_back(b);
        out.covered_blocks.push_back(block);
      }
    }
    return out;
  }

  FunctorialImage compose_functorial(Composition         direction,
                                     HomRecord const&    f,
                                     HomSet const&       homs,
                                     QuandleTable const& target,
                                     QuandleTable const* post_target) {
    if (homs.target_order != target.order()) {
      throw input_error("hom set target does not match the given target quandle");
    }
    std::vector<std::vector<element>> mapped;
    std::size_t                       new_source = 0, new_target = 0;
    if (direction == Composition::pre) {
      for (element v : f.image) {
        if (v >= homs.source_order) {
          throw input_error("pre-composed map does not land in the hom set's source");
        }
      }
      new_source = f.image.size();
      new_target = homs.target_order;
      for (auto const& k : homs.records) {
        std::vector<element> img(new_source);
        for (std::size_t a = 0; a < new_source; ++a) {
          img[a] = k.image[f.image[a]];
        }
        mapped.push_back(std::move(img));
      }
    } else {
      if (post_target == nullptr) {
        throw input_error("post-composition needs the new target quandle");
      }
      if (f.image.size() != homs.target_order) {
        throw input_error("post-composed map must start at the hom set's target");
      }
      for (element v : f.image) {
        if (v >= post_target->order()) {
          throw input_error("post-composed map leaves its target");
        }
      }
      new_source = homs.source_order;
      new_target = post_target->order();
      for (auto const& k : homs.records) {
        std::vector<element> img(new_source);
        for (std::size_t a = 0; a < new_source; ++a) {
          img[a] = f.image[k.image[a]];
        }
        mapped.push_back(std::move(img));
      }
    }

    FunctorialImage out;
    out.homs = {new_source, new_target, {}, homs.engine};
    for (auto const& img : mapped) {
      out.homs.records.push_back({img});
    }
    std::sort(out.homs.records.begin(), out.homs.records.end());
    out.homs.records.erase(std::unique(out.homs.records.begin(), out.homs.records.end()),
                           out.homs.records.end());
    for (auto const& img : mapped) {
      out.index_map.push_back(*out.homs.index_of(img));
    }

    QuandleTable const& final_target = direction == Composition::pre ? target : *post_target;
    bool structured = check_property(target, Property::medial).holds
                      && check_property(final_target, Property::medial).holds;
    if (structured) {
      bool ok = true;
      for (std::size_t h = 0; h < homs.size() && ok; ++h) {
        for (std::size_t k = 0; k < homs.size() && ok; ++k) {
          auto const& hi = homs.records[h].image;
          auto const& ki = homs.records[k].image;
          for (std::size_t a = 0; a < new_source && ok; ++a) {
            element lhs, rhs;
            if (direction == Composition::pre) {
              lhs = target(hi[f.image[a]], ki[f.image[a]]);
              rhs = final_target(mapped[h][a], mapped[k][a]);
            } else {
              lhs = f.image[target(hi[a], ki[a])];
              rhs = final_target(mapped[h][a], mapped[k][a]);
            }
            ok = lhs == rhs;
          }
        }
      }
      out.respects_operation = ok;
    }
    return out;
  }

}  // namespace qhom
