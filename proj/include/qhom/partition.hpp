#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhom/types.hpp"

namespace qhom {

  // Union-find over 0..n-1 with path halving and union by rank. Used as the
  // mutable workspace for closures; Partition is the immutable normal form.
  class union_find {
   public:
    explicit union_find(std::size_t n);

    element find(element x);
    // Returns true if two distinct classes were merged.
    bool unite(element a, element b);
    std::size_t size() const noexcept {
      return _parent.size();
    }

   private:
    std::vector<element>      _parent;
    std::vector<std::uint8_t> _rank;
  };

  // An equivalence relation on 0..n-1 in normal form: every element points to
  // the minimum of its class, classes are listed by ascending minimum.
  class Partition {
   public:
    Partition() = default;

    static Partition discrete(std::size_t n);
    static Partition full(std::size_t n);
    static Partition from_union_find(union_find& uf);
    // Each inner vector is one class. Throws input_error unless the classes
    // partition 0..n-1.
    static Partition from_classes(std::size_t                             n,
                                  std::vector<std::vector<element>> const& classes);
    // Class label for each element; equal labels mean related.
    static Partition from_labels(std::vector<element> const& labels);

    std::size_t size() const noexcept {
      return _rep.size();
    }
    std::size_t class_count() const noexcept {
      return _classes.size();
    }
    element representative(element x) const {
      return _rep.at(x);
    }
    bool related(element a, element b) const {
      return _rep.at(a) == _rep.at(b);
    }
    // Position of the class of x in ascending-minimum order.
    std::size_t class_index(element x) const {
      return _index.at(x);
    }
    std::vector<std::vector<element>> const& classes() const noexcept {
      return _classes;
    }
    bool is_discrete() const noexcept {
      return _classes.size() == _rep.size();
    }

    // Pairs (x, representative(x)) for every non-representative x. These
    // generate the relation under transitivity.
    std::vector<std::pair<element, element>> generating_pairs() const;

    // True if every class of *this lies inside a class of other.
    bool refines(Partition const& other) const;

    // `0 1 | 2`
    std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    explicit Partition(std::vector<element> rep);

    std::vector<element>              _rep;
    std::vector<std::size_t>          _index;
    std::vector<std::vector<element>> _classes;
  };

}  // namespace qhom
