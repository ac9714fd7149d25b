#include "qhom/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qhom {

  std::string join(std::vector<element> const& xs, char const* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i != 0) {
        os << sep;
      }
      os << xs[i];
    }
    return os.str();
  }

  union_find::union_find(std::size_t n) : _parent(n), _rank(n, 0) {
    std::iota(_parent.begin(), _parent.end(), element{0});
  }

  element union_find::find(element x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool union_find::unite(element a, element b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (_rank[a] < _rank[b]) {
      std::swap(a, b);
    }
    _parent[b] = a;
    if (_rank[a] == _rank[b]) {
      ++_rank[a];
    }
    return true;
  }

  Partition::Partition(std::vector<element> rep) : _rep(std::move(rep)) {
    std::size_t const n = _rep.size();
    _index.assign(n, 0);
    std::vector<std::size_t> slot(n, n);
    for (element x = 0; x < n; ++x) {
      element r = _rep[x];
      if (slot[r] == n) {
        slot[r] = _classes.size();
        _classes.emplace_back();
      }
      _index[x] = slot[r];
      _classes[slot[r]].push_back(x);
    }
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<element> rep(n);
    std::iota(rep.begin(), rep.end(), element{0});
    return Partition(std::move(rep));
  }

  Partition Partition::full(std::size_t n) {
    return Partition(std::vector<element>(n, 0));
  }

  Partition Partition::from_union_find(union_find& uf) {
    std::size_t const    n = uf.size();
    std::vector<element> least(n, static_cast<element>(n));
    for (element x = 0; x < n; ++x) {
      element r = uf.find(x);
      least[r]  = std::min(least[r], x);
    }
    std::vector<element> rep(n);
    for (element x = 0; x < n; ++x) {
      rep[x] = least[uf.find(x)];
    }
    return Partition(std::move(rep));
  }

  Partition Partition::from_classes(std::size_t                              n,
                                    std::vector<std::vector<element>> const& classes) {
    std::vector<bool> seen(n, false);
    union_find        uf(n);
    for (auto const& cls : classes) {
      if (cls.empty()) {
        throw input_error("partition has an empty class");
      }
      for (element x : cls) {
        if (x >= n || seen[x]) {
          throw input_error("partition classes must cover 0.." + std::to_string(n - 1)
                            + " exactly once");
        }
        seen[x] = true;
        uf.unite(cls.front(), x);
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw input_error("partition classes do not cover every element");
    }
    return from_union_find(uf);
  }

  Partition Partition::from_labels(std::vector<element> const& labels) {
    std::size_t const          n = labels.size();
    std::map<element, element> first;
    std::vector<element>       rep(n);
    for (element x = 0; x < n; ++x) {
      rep[x] = first.try_emplace(labels[x], x).first->second;
    }
    return Partition(std::move(rep));
  }

  std::vector<std::pair<element, element>> Partition::generating_pairs() const {
    std::vector<std::pair<element, element>> out;
    for (element x = 0; x < _rep.size(); ++x) {
      if (_rep[x] != x) {
        out.emplace_back(x, _rep[x]);
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.size() != size()) {
      return false;
    }
    for (element x = 0; x < _rep.size(); ++x) {
      if (!other.related(x, _rep[x])) {
        return false;
      }
    }
    return true;
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < _classes.size(); ++c) {
      if (c != 0) {
        os << " | ";
      }
      os << join(_classes[c]);
    }
    return os.str();
  }

}  // namespace qhom
