#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quasikit/error.hpp"

namespace quasikit {

enum class OrderMode { Hasse, FullRelation };
enum class AggregateKind { Meet, Join };

/// A finite Heyting algebra: a bounded lattice whose binary meet/join/
/// implication tables are fully materialized and certified at construction.
/// Elements are opaque string tokens, stored sorted; all queries work on
/// dense indices.  Immutable after validation.
class HeytingAlgebra {
 public:
  // Builds from an element list and order pairs.  Hasse mode takes the
  // reflexive-transitive closure first; full-relation mode requires the
  // pairs to already be a poset.  Throws NotPoset / NotLattice /
  // NotResiduated.
  static HeytingAlgebra from_order(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& order,
                                   OrderMode mode);

  // Subsets of `atoms` ordered by inclusion; element names are
  // "{a,b}"-style sorted atom lists.
  static HeytingAlgebra powerset(std::vector<std::string> atoms);

  // elements[0] < elements[1] < ... < elements.back()
  static HeytingAlgebra chain(const std::vector<std::string>& elements);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // UnknownElement
  bool contains(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[at(a) * size() + at(b)]; }
  int meet(int a, int b) const { return meet_[at(a) * size() + at(b)]; }
  int join(int a, int b) const { return join_[at(a) * size() + at(b)]; }
  int imp(int a, int b) const { return imp_[at(a) * size() + at(b)]; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }

  // Fold of the binary table; meet of the empty set is top, join is bottom.
  int aggregate(AggregateKind kind, std::span<const int> subset) const;

  // Restriction to { x : x <= d }, revalidated with top = d.
  HeytingAlgebra downset(int d) const;

  // Structural identity: same element names and the same order relation.
  bool equivalent(const HeytingAlgebra& other) const;

 private:
  HeytingAlgebra() = default;
  int at(int e) const {
    require(e >= 0 && e < size(), "UnknownElement", "element index out of range");
    return e;
  }

  std::vector<std::string> names_;  // sorted lexicographically
  std::vector<char> leq_;           // size^2, row-major
  std::vector<int> meet_, join_, imp_;
  int top_ = -1, bottom_ = -1;
};

using LatticePtr = std::shared_ptr<const HeytingAlgebra>;

}  // namespace quasikit
