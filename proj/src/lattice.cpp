#include "quasikit/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quasikit {

namespace {

std::string atoms_name(const std::vector<std::string>& members) {
  std::string out = "{";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += members[k];
  }
  return out + "}";
}

}  // namespace

int HeytingAlgebra::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    fail("UnknownElement", "no lattice element named '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

bool HeytingAlgebra::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

HeytingAlgebra HeytingAlgebra::from_order(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& order, OrderMode mode) {
  require(!elements.empty(), "NotLattice", "empty element list has no top or bottom");
  std::sort(elements.begin(), elements.end());
  for (size_t k = 1; k < elements.size(); ++k)
    require(elements[k] != elements[k - 1], "NotPoset",
            "duplicate element id '" + elements[k] + "'");

  HeytingAlgebra L;
  L.names_ = std::move(elements);
  const int n = L.size();
  L.leq_.assign(static_cast<size_t>(n) * n, 0);
  auto leq_at = [&](int a, int b) -> char& { return L.leq_[static_cast<size_t>(a) * n + b]; };

  for (const auto& [lo, hi] : order) leq_at(L.index_of(lo), L.index_of(hi)) = 1;
  for (int a = 0; a < n; ++a) leq_at(a, a) = 1;

  if (mode == OrderMode::Hasse) {
    // reflexive-transitive closure
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (leq_at(a, k))
          for (int b = 0; b < n; ++b)
            if (leq_at(k, b)) leq_at(a, b) = 1;
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq_at(a, b))
          for (int c = 0; c < n; ++c)
            require(!leq_at(b, c) || leq_at(a, c), "NotPoset",
                    "order relation is not transitive at (" + L.names_[a] + "," +
                        L.names_[b] + "," + L.names_[c] + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(!(a != b && leq_at(a, b) && leq_at(b, a)), "NotPoset",
              "antisymmetry fails between '" + L.names_[a] + "' and '" + L.names_[b] + "'");

  // meets and joins as unique greatest lower / least upper bounds
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c) {
        if (!(leq_at(c, a) && leq_at(c, b))) continue;
        if (best == -1 || leq_at(best, c)) best = c;
      }
      if (best != -1)
        for (int c = 0; c < n; ++c)
          if (leq_at(c, a) && leq_at(c, b) && !leq_at(c, best)) best = -2;
      require(best >= 0, "NotLattice",
              "no meet for '" + L.names_[a] + "' and '" + L.names_[b] + "'");
      L.meet_[static_cast<size_t>(a) * n + b] = best;

      best = -1;
      for (int c = 0; c < n; ++c) {
        if (!(leq_at(a, c) && leq_at(b, c))) continue;
        if (best == -1 || leq_at(c, best)) best = c;
      }
      if (best != -1)
        for (int c = 0; c < n; ++c)
          if (leq_at(a, c) && leq_at(b, c) && !leq_at(best, c)) best = -2;
      require(best >= 0, "NotLattice",
              "no join for '" + L.names_[a] + "' and '" + L.names_[b] + "'");
      L.join_[static_cast<size_t>(a) * n + b] = best;
    }
  }

  L.top_ = 0;
  L.bottom_ = 0;
  for (int a = 1; a < n; ++a) {
    L.top_ = L.join_[static_cast<size_t>(L.top_) * n + a];
    L.bottom_ = L.meet_[static_cast<size_t>(L.bottom_) * n + a];
  }

  // imp(a,b) = max { c : a /\ c <= b }; the max must exist for every pair
  L.imp_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (leq_at(L.meet_[static_cast<size_t>(a) * n + c], b))
          best = (best == -1) ? c : L.join_[static_cast<size_t>(best) * n + c];
      // best is the join of the candidate set; it is the max iff it is itself
      // a candidate
      require(best >= 0 && leq_at(L.meet_[static_cast<size_t>(a) * n + best], b),
              "NotResiduated",
              "{ c : " + L.names_[a] + " /\\ c <= " + L.names_[b] + " } has no maximum");
      L.imp_[static_cast<size_t>(a) * n + b] = best;
    }
  }

  // eager law checks: residuation over all triples, modus ponens over pairs
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = L.imp_[static_cast<size_t>(b) * n + a];
      for (int c = 0; c < n; ++c) {
        bool lhs = leq_at(L.meet_[static_cast<size_t>(c) * n + b], a);
        bool rhs = leq_at(c, r);
        require(lhs == rhs, "NotResiduated", "residuation law fails");
      }
      int mp = L.meet_[static_cast<size_t>(a) * n + L.imp_[static_cast<size_t>(a) * n + b]];
      require(mp == L.meet_[static_cast<size_t>(a) * n + b], "NotResiduated",
              "modus ponens fails");
    }

  return L;
}

HeytingAlgebra HeytingAlgebra::powerset(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  const size_t n = atoms.size();
  require(n <= 16, "NotLattice", "powerset ground set too large");

  std::vector<std::string> names;
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) {
    std::vector<std::string> members;
    for (size_t k = 0; k < n; ++k)
      if (m & (1u << k)) members.push_back(atoms[k]);
    names.push_back(atoms_name(members));
    masks.push_back(m);
  }
  std::vector<std::pair<std::string, std::string>> order;
  for (size_t a = 0; a < masks.size(); ++a)
    for (size_t b = 0; b < masks.size(); ++b)
      if ((masks[a] & masks[b]) == masks[a]) order.emplace_back(names[a], names[b]);
  return from_order(names, order, OrderMode::FullRelation);
}

HeytingAlgebra HeytingAlgebra::chain(const std::vector<std::string>& elements) {
  std::vector<std::pair<std::string, std::string>> order;
  for (size_t k = 0; k + 1 < elements.size(); ++k)
    order.emplace_back(elements[k], elements[k + 1]);
  return from_order(elements, order, OrderMode::Hasse);
}

int HeytingAlgebra::aggregate(AggregateKind kind, std::span<const int> subset) const {
  int acc = (kind == AggregateKind::Meet) ? top_ : bottom_;
  for (int e : subset)
    acc = (kind == AggregateKind::Meet) ? meet(acc, e) : join(acc, e);
  return acc;
}

HeytingAlgebra HeytingAlgebra::downset(int d) const {
  at(d);
  std::vector<std::string> names;
  for (int x = 0; x < size(); ++x)
    if (leq(x, d)) names.push_back(names_[x]);
  std::vector<std::pair<std::string, std::string>> order;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (leq(a, d) && leq(b, d) && leq(a, b)) order.emplace_back(names_[a], names_[b]);
  // Down-sets of finite distributive lattices are distributive again; a
  // NotResiduated here would be an internal bug, so the revalidation is
  // deliberately the full constructor.
  return from_order(names, order, OrderMode::FullRelation);
}

bool HeytingAlgebra::equivalent(const HeytingAlgebra& other) const {
  return names_ == other.names_ && leq_ == other.leq_;
}

}  // namespace quasikit
