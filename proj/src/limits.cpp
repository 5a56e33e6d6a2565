#include "quasikit/limits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace quasikit {

namespace {

LabelFamily labels_of(const FP& a) {
  std::vector<LatticePtr> fam;
  for (int o = 0; o < a->base().object_count(); ++o) fam.push_back(a->labels().ptr(o));
  return LabelFamily(fam);
}

void require_shared_context(const FP& a, const FP& b) {
  require(a->base().equivalent(b->base()), "ObjectMismatch",
          "construction needs a shared base category");
  require(a->labels().compatible(b->labels()), "LabelMismatch",
          "construction needs a single shared label family");
}

// Union-find with deterministic roots.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Quotient of a fuzzy presheaf by a per-object class assignment.  Class
// names are "{member,...}" over sorted member names; membership is the join
// of the class.  The action must descend to classes.
struct Quotient {
  FP object;
  std::vector<std::vector<int>> elem_class;  // ambient elem -> class index (name-sorted)
};

bool quotient_action_descends(const FP& amb, const std::vector<std::vector<int>>& cls) {
  const FiniteCategory& C = amb->base();
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    // representative image per class
    std::vector<int> image_class(amb->size(d), -1);
    std::vector<int> seen_class;
    std::vector<int> first(amb->size(d), -1);
    for (int x = 0; x < amb->size(d); ++x) {
      int k = cls[d][x];
      int img = cls[c][amb->shape().apply(m, x)];
      if (first[k] == -1)
        first[k] = img;
      else if (first[k] != img)
        return false;
    }
    (void)image_class;
    (void)seen_class;
  }
  return true;
}

Quotient quotient_presheaf(const FP& amb, const std::vector<std::vector<int>>& cls) {
  const FiniteCategory& C = amb->base();
  require(quotient_action_descends(amb, cls), "ActionNotWellDefined",
          "quotient classes are not closed under the action");

  struct ClassItem {
    std::string name;
    std::vector<int> members;
  };
  std::vector<std::vector<ClassItem>> classes(C.object_count());
  std::vector<std::vector<int>> raw_to_sorted(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    int nclasses = 0;
    for (int x = 0; x < amb->size(o); ++x) nclasses = std::max(nclasses, cls[o][x] + 1);
    std::vector<ClassItem> items(nclasses);
    for (int x = 0; x < amb->size(o); ++x) items[cls[o][x]].members.push_back(x);
    for (auto& item : items) {
      item.name = "{";
      for (size_t k = 0; k < item.members.size(); ++k) {
        if (k) item.name += ",";
        item.name += amb->element_name(o, item.members[k]);
      }
      item.name += "}";
    }
    std::vector<int> order(nclasses);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return items[a].name < items[b].name; });
    raw_to_sorted[o].assign(nclasses, -1);
    for (int pos = 0; pos < nclasses; ++pos) {
      raw_to_sorted[o][order[pos]] = pos;
      classes[o].push_back(items[order[pos]]);
    }
  }

  PresheafBuilder b(amb->base_ptr());
  for (int o = 0; o < C.object_count(); ++o)
    for (const auto& item : classes[o]) b.add_element(o, item.name);
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (size_t k = 0; k < classes[d].size(); ++k) {
      int member = classes[d][k].members.front();
      b.set_action(m, static_cast<int>(k),
                   raw_to_sorted[c][cls[c][amb->shape().apply(m, member)]]);
    }
  }
  std::vector<std::vector<int>> memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = amb->labels().at(o);
    for (const auto& item : classes[o]) {
      int v = L.bottom();
      for (int x : item.members) v = L.join(v, amb->membership(o, x));
      memb[o].push_back(v);
    }
  }
  Quotient q;
  q.object = make_fp(
      FuzzyPresheaf::from_indices(std::move(b).finish(), labels_of(amb), std::move(memb)));
  q.elem_class.resize(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    q.elem_class[o].resize(amb->size(o));
    for (int x = 0; x < amb->size(o); ++x)
      q.elem_class[o][x] = raw_to_sorted[o][cls[o][x]];
  }
  return q;
}

}  // namespace

FP extremal_terminal(CategoryPtr base, const LabelFamily& labels) {
  const FiniteCategory& C = *base;
  PresheafBuilder b(base);
  for (int o = 0; o < C.object_count(); ++o) b.add_element(o, "*");
  for (int m = 0; m < C.morphism_count(); ++m) b.set_action(m, 0, 0);
  std::vector<std::vector<int>> memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) memb[o] = {labels.at(o).top()};
  return make_fp(FuzzyPresheaf::from_indices(std::move(b).finish(), labels, std::move(memb)));
}

FP extremal_initial(CategoryPtr base, const LabelFamily& labels) {
  const FiniteCategory& C = *base;
  PresheafBuilder b(base);
  std::vector<std::vector<int>> memb(C.object_count());
  return make_fp(FuzzyPresheaf::from_indices(std::move(b).finish(), labels, std::move(memb)));
}

ConeResult binary_product(const FP& A, const FP& B) {
  require_shared_context(A, B);
  const FiniteCategory& C = A->base();
  std::vector<std::pair<int, int>> pairs;
  Presheaf prod = presheaf_product(A->shape(), B->shape(), &pairs);
  std::vector<std::vector<int>> memb(C.object_count()), ca(C.object_count()),
      cb(C.object_count());
  size_t pos = 0;
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = A->labels().at(o);
    for (int k = 0; k < prod.size(o); ++k, ++pos) {
      auto [x, y] = pairs[pos];
      memb[o].push_back(L.meet(A->membership(o, x), B->membership(o, y)));
      ca[o].push_back(x);
      cb[o].push_back(y);
    }
  }
  FP P = make_fp(FuzzyPresheaf::from_indices(std::move(prod), labels_of(A), std::move(memb)));
  return {P,
          {FuzzyMorphism::from_indices(P, A, std::move(ca)),
           FuzzyMorphism::from_indices(P, B, std::move(cb))}};
}

ConeResult disjoint_union(const std::vector<FP>& parts) {
  require(!parts.empty(), "ObjectMismatch", "disjoint union needs at least one part");
  for (const auto& p : parts) require_shared_context(parts.front(), p);
  const FiniteCategory& C = parts.front()->base();

  struct Item {
    std::string name;
    int part, elem;
  };
  std::vector<std::vector<Item>> items(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    for (size_t p = 0; p < parts.size(); ++p)
      for (int x = 0; x < parts[p]->size(o); ++x)
        items[o].push_back({std::to_string(p) + ":" + parts[p]->element_name(o, x),
                            static_cast<int>(p), x});
    std::sort(items[o].begin(), items[o].end(),
              [](const Item& a, const Item& b) { return a.name < b.name; });
  }
  std::vector<std::vector<std::vector<int>>> pos(parts.size());
  for (size_t p = 0; p < parts.size(); ++p) {
    pos[p].resize(C.object_count());
    for (int o = 0; o < C.object_count(); ++o) pos[p][o].assign(parts[p]->size(o), -1);
  }
  for (int o = 0; o < C.object_count(); ++o)
    for (size_t k = 0; k < items[o].size(); ++k)
      pos[items[o][k].part][o][items[o][k].elem] = static_cast<int>(k);

  PresheafBuilder b(parts.front()->base_ptr());
  for (int o = 0; o < C.object_count(); ++o)
    for (const Item& it : items[o]) b.add_element(o, it.name);
  for (int m = 0; m < C.morphism_count(); ++m) {
    int d = C.dom(m), c = C.cod(m);
    for (size_t k = 0; k < items[d].size(); ++k) {
      const Item& it = items[d][k];
      b.set_action(m, static_cast<int>(k), pos[it.part][c][parts[it.part]->shape().apply(m, it.elem)]);
    }
  }
  std::vector<std::vector<int>> memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o)
    for (const Item& it : items[o])
      memb[o].push_back(parts[it.part]->membership(o, it.elem));
  FP U = make_fp(FuzzyPresheaf::from_indices(std::move(b).finish(), labels_of(parts.front()),
                                             std::move(memb)));
  ConeResult out;
  out.object = U;
  for (size_t p = 0; p < parts.size(); ++p)
    out.legs.push_back(FuzzyMorphism::from_indices(parts[p], U, pos[p]));
  return out;
}

ConeResult binary_coproduct(const FP& A, const FP& B) { return disjoint_union({A, B}); }

ConeResult pullback(const FuzzyMorphism& f, const FuzzyMorphism& g) {
  require(*f.dst() == *g.dst(), "ObjectMismatch", "pullback needs a shared codomain");
  ConeResult prod = binary_product(f.src(), g.src());
  const FiniteCategory& C = f.src()->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o)
    for (int k = 0; k < prod.object->size(o); ++k) {
      int x = prod.legs[0].apply(o, k), y = prod.legs[1].apply(o, k);
      if (f.apply(o, x) != g.apply(o, y)) continue;
      elems[o].push_back(k);
      memb[o].push_back(prod.object->membership(o, k));
    }
  Subobject s = make_subobject(prod.object, std::move(elems), std::move(memb));
  FuzzyMorphism incl = subobject_inclusion(s);
  return {incl.src(), {compose(prod.legs[0], incl), compose(prod.legs[1], incl)}};
}

ConeResult equalizer(const FuzzyMorphism& f, const FuzzyMorphism& g) {
  require(*f.src() == *g.src() && *f.dst() == *g.dst(), "ObjectMismatch",
          "equalizer needs a parallel pair");
  const FiniteCategory& C = f.src()->base();
  std::vector<std::vector<int>> elems(C.object_count()), memb(C.object_count());
  for (int o = 0; o < C.object_count(); ++o)
    for (int x = 0; x < f.src()->size(o); ++x)
      if (f.apply(o, x) == g.apply(o, x)) {
        elems[o].push_back(x);
        memb[o].push_back(f.src()->membership(o, x));
      }
  Subobject s = make_subobject(f.src(), std::move(elems), std::move(memb));
  FuzzyMorphism incl = subobject_inclusion(s);
  return {incl.src(), {incl}};
}

ConeResult pushout(const FuzzyMorphism& f, const FuzzyMorphism& g) {
  require(*f.src() == *g.src(), "ObjectMismatch", "pushout needs a shared domain");
  require_shared_context(f.dst(), g.dst());
  ConeResult un = disjoint_union({f.dst(), g.dst()});
  const FiniteCategory& C = f.src()->base();
  std::vector<std::vector<int>> cls(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    UnionFind uf(un.object->size(o));
    for (int d = 0; d < f.src()->size(o); ++d)
      uf.unite(un.legs[0].apply(o, f.apply(o, d)), un.legs[1].apply(o, g.apply(o, d)));
    // normalize roots to 0..k-1 in first-occurrence order
    std::vector<int> remap(un.object->size(o), -1);
    int next = 0;
    cls[o].resize(un.object->size(o));
    for (int x = 0; x < un.object->size(o); ++x) {
      int r = uf.find(x);
      if (remap[r] == -1) remap[r] = next++;
      cls[o][x] = remap[r];
    }
  }
  Quotient q = quotient_presheaf(un.object, cls);
  auto leg = [&](int which, const FP& part) {
    std::vector<std::vector<int>> comp(C.object_count());
    for (int o = 0; o < C.object_count(); ++o) {
      comp[o].resize(part->size(o));
      for (int x = 0; x < part->size(o); ++x)
        comp[o][x] = q.elem_class[o][un.legs[which].apply(o, x)];
    }
    return FuzzyMorphism::from_indices(part, q.object, std::move(comp));
  };
  return {q.object, {leg(0, f.dst()), leg(1, g.dst())}};
}

ConeResult coequalizer(const FuzzyMorphism& f, const FuzzyMorphism& g) {
  require(*f.src() == *g.src() && *f.dst() == *g.dst(), "ObjectMismatch",
          "coequalizer needs a parallel pair");
  const FP& B = f.dst();
  const FiniteCategory& C = B->base();
  std::vector<std::vector<int>> cls(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    UnionFind uf(B->size(o));
    for (int a = 0; a < f.src()->size(o); ++a) uf.unite(f.apply(o, a), g.apply(o, a));
    std::vector<int> remap(B->size(o), -1);
    int next = 0;
    cls[o].resize(B->size(o));
    for (int x = 0; x < B->size(o); ++x) {
      int r = uf.find(x);
      if (remap[r] == -1) remap[r] = next++;
      cls[o][x] = remap[r];
    }
  }
  Quotient q = quotient_presheaf(B, cls);
  return {q.object, {FuzzyMorphism::from_indices(B, q.object, q.elem_class)}};
}

std::vector<FP> fuzzy_representables(const CategoryPtr& base, const LabelFamily& labels,
                                     EnumBudget& budget) {
  const FiniteCategory& C = *base;
  std::vector<FP> out;
  for (int i = 0; i < C.object_count(); ++i) {
    Presheaf yon = yoneda(base, i);
    std::vector<std::pair<int, int>> flat;  // (obj, elem)
    for (int o = 0; o < C.object_count(); ++o)
      for (int x = 0; x < yon.size(o); ++x) flat.push_back({o, x});
    std::vector<int> digits(flat.size(), 0);
    while (true) {
      budget.spend();
      std::vector<std::vector<int>> memb(C.object_count());
      for (int o = 0; o < C.object_count(); ++o) memb[o].resize(yon.size(o));
      for (size_t k = 0; k < flat.size(); ++k)
        memb[flat[k].first][flat[k].second] = digits[k];
      out.push_back(
          make_fp(FuzzyPresheaf::from_indices(yon, labels, std::move(memb))));
      // odometer
      size_t k = 0;
      while (k < flat.size()) {
        if (++digits[k] < labels.at(flat[k].first).size()) break;
        digits[k] = 0;
        ++k;
      }
      if (k == flat.size()) break;
      if (flat.empty()) break;
    }
    if (flat.empty() && C.object_count() > 0) continue;
  }
  return out;
}

namespace {

bool components_commute(const FuzzyMorphism& lhs_outer, const FuzzyMorphism& lhs_inner,
                        const FuzzyMorphism& rhs_outer, const FuzzyMorphism& rhs_inner) {
  const FiniteCategory& C = lhs_inner.src()->base();
  for (int o = 0; o < C.object_count(); ++o)
    for (int x = 0; x < lhs_inner.src()->size(o); ++x)
      if (lhs_outer.apply(o, lhs_inner.apply(o, x)) !=
          rhs_outer.apply(o, rhs_inner.apply(o, x)))
        return false;
  return true;
}

// Counts fuzzy morphisms u : T -> apex with legs[k] . u == cone[k], stopping
// at two.  Candidates per element are the joint leg fibers.
int count_limit_mediators(const FP& T, const FP& apex,
                          const std::vector<const FuzzyMorphism*>& legs,
                          const std::vector<const FuzzyMorphism*>& cone,
                          EnumBudget& budget) {
  const FiniteCategory& C = T->base();
  std::vector<std::vector<std::vector<int>>> cand(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = T->labels().at(o);
    cand[o].resize(T->size(o));
    for (int t = 0; t < T->size(o); ++t)
      for (int p = 0; p < apex->size(o); ++p) {
        if (!L.leq(T->membership(o, t), apex->membership(o, p))) continue;
        bool ok = true;
        for (size_t k = 0; k < legs.size() && ok; ++k)
          ok = legs[k]->apply(o, p) == cone[k]->apply(o, t);
        if (ok) cand[o][t].push_back(p);
      }
  }
  return static_cast<int>(
      enumerate_constrained_transformations(T->shape(), apex->shape(), cand, budget, 2)
          .size());
}

// Counts fuzzy morphisms u : coapex -> T with u . legs[k] == cocone[k].
int count_colimit_mediators(const FP& coapex, const FP& T,
                            const std::vector<const FuzzyMorphism*>& legs,
                            const std::vector<const FuzzyMorphism*>& cocone,
                            EnumBudget& budget) {
  const FiniteCategory& C = T->base();
  std::vector<std::vector<std::vector<int>>> cand(C.object_count());
  for (int o = 0; o < C.object_count(); ++o) {
    const HeytingAlgebra& L = T->labels().at(o);
    cand[o].resize(coapex->size(o));
    std::vector<int> forced(coapex->size(o), -2);  // -2 free, -1 conflict
    for (size_t k = 0; k < legs.size(); ++k)
      for (int x = 0; x < legs[k]->src()->size(o); ++x) {
        int q = legs[k]->apply(o, x);
        int val = cocone[k]->apply(o, x);
        if (forced[q] == -2)
          forced[q] = val;
        else if (forced[q] != val)
          forced[q] = -1;
      }
    for (int q = 0; q < coapex->size(o); ++q) {
      if (forced[q] == -1) continue;  // no candidate: contradictory forcing
      if (forced[q] >= 0) {
        if (L.leq(coapex->membership(o, q), T->membership(o, forced[q])))
          cand[o][q].push_back(forced[q]);
      } else {
        for (int t = 0; t < T->size(o); ++t)
          if (L.leq(coapex->membership(o, q), T->membership(o, t)))
            cand[o][q].push_back(t);
      }
    }
  }
  return static_cast<int>(
      enumerate_constrained_transformations(coapex->shape(), T->shape(), cand, budget, 2)
          .size());
}

struct LimitProblem {
  std::vector<FP> feet;
  std::function<bool(const std::vector<const FuzzyMorphism*>&)> cone_ok;
  FP apex;
  std::vector<FuzzyMorphism> legs;
};

OracleReport run_limit_oracle(const LimitProblem& prob, EnumBudget& budget) {
  OracleReport rep;
  std::vector<const FuzzyMorphism*> own;
  for (const auto& l : prob.legs) own.push_back(&l);
  for (size_t k = 0; k < prob.feet.size(); ++k)
    require(*prob.legs[k].src() == *prob.apex && *prob.legs[k].dst() == *prob.feet[k],
            "ObjectMismatch", "candidate legs do not match the diagram");
  if (!prob.cone_ok(own)) {
    rep.ok = false;
    rep.detail = "candidate legs do not commute with the diagram";
    return rep;
  }

  std::vector<FP> tests =
      fuzzy_representables(prob.apex->base_ptr(), labels_of(prob.apex), budget);
  rep.test_objects = tests.size();
  for (size_t ti = 0; ti < tests.size(); ++ti) {
    const FP& T = tests[ti];
    std::vector<std::vector<FuzzyMorphism>> homs;
    for (const auto& foot : prob.feet)
      homs.push_back(enumerate_fuzzy_morphisms(T, foot, budget));
    // odometer over cone tuples
    std::vector<size_t> idx(prob.feet.size(), 0);
    bool any_empty = false;
    for (const auto& h : homs) any_empty |= h.empty();
    if (!prob.feet.empty() && any_empty) continue;
    while (true) {
      std::vector<const FuzzyMorphism*> cone;
      for (size_t k = 0; k < prob.feet.size(); ++k) cone.push_back(&homs[k][idx[k]]);
      if (prob.cone_ok(cone)) {
        ++rep.cones_checked;
        budget.spend();
        int n = count_limit_mediators(T, prob.apex, own, cone, budget);
        if (n != 1) {
          rep.ok = false;
          rep.detail = "cone from test object #" + std::to_string(ti) +
                       (n == 0 ? " admits no mediator" : " admits several mediators");
          rep.candidates_explored = budget.spent;
          return rep;
        }
      }
      size_t k = 0;
      while (k < idx.size()) {
        if (++idx[k] < homs[k].size()) break;
        idx[k] = 0;
        ++k;
      }
      if (k == idx.size()) break;
      if (idx.empty()) break;
    }
  }
  rep.candidates_explored = budget.spent;
  return rep;
}

struct ColimitProblem {
  std::vector<FP> feet;
  std::function<bool(const std::vector<const FuzzyMorphism*>&)> cocone_ok;
  FP coapex;
  std::vector<FuzzyMorphism> legs;
};

// Enumerates per-object set partitions as restricted growth strings.
std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::function<void(int, int)> rec = [&](int k, int maxv) {
    if (k == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[k] = v;
      rec(k + 1, std::max(maxv, v));
    }
  };
  rec(0, -1);
  return out;
}

OracleReport run_colimit_oracle(const ColimitProblem& prob, EnumBudget& budget) {
  OracleReport rep;
  std::vector<const FuzzyMorphism*> own;
  for (const auto& l : prob.legs) own.push_back(&l);
  for (size_t k = 0; k < prob.feet.size(); ++k)
    require(*prob.legs[k].src() == *prob.feet[k] && *prob.legs[k].dst() == *prob.coapex,
            "ObjectMismatch", "candidate legs do not match the diagram");
  if (!prob.cocone_ok(own)) {
    rep.ok = false;
    rep.detail = "candidate legs do not commute with the diagram";
    return rep;
  }

  const FiniteCategory& C = prob.coapex->base();

  // Self test: the candidate's own cocone must factor uniquely through it.
  {
    ++rep.test_objects;
    ++rep.cones_checked;
    int n = count_colimit_mediators(prob.coapex, prob.coapex, own, own, budget);
    if (n != 1) {
      rep.ok = false;
      rep.detail = n == 0 ? "candidate cannot mediate to itself"
                          : "identity mediator is not unique (dangling elements)";
      rep.candidates_explored = budget.spent;
      return rep;
    }
  }

  if (!prob.feet.empty()) {
    ConeResult un = disjoint_union(prob.feet);
    // canonical cocones: every quotient of the disjoint union whose classes
    // respect the action, with join membership
    std::vector<std::vector<std::vector<int>>> parts(C.object_count());
    for (int o = 0; o < C.object_count(); ++o)
      parts[o] = set_partitions(un.object->size(o));
    std::vector<size_t> idx(C.object_count(), 0);
    while (true) {
      budget.spend();
      std::vector<std::vector<int>> cls(C.object_count());
      for (int o = 0; o < C.object_count(); ++o) cls[o] = parts[o][idx[o]];
      if (quotient_action_descends(un.object, cls)) {
        Quotient q = quotient_presheaf(un.object, cls);
        std::vector<FuzzyMorphism> cocone;
        bool valid = true;
        for (size_t k = 0; k < prob.feet.size() && valid; ++k) {
          std::vector<std::vector<int>> comp(C.object_count());
          for (int o = 0; o < C.object_count(); ++o) {
            comp[o].resize(prob.feet[k]->size(o));
            for (int x = 0; x < prob.feet[k]->size(o); ++x)
              comp[o][x] = q.elem_class[o][un.legs[k].apply(o, x)];
          }
          cocone.push_back(
              FuzzyMorphism::from_indices(prob.feet[k], q.object, std::move(comp)));
        }
        std::vector<const FuzzyMorphism*> cone_ptrs;
        for (const auto& c : cocone) cone_ptrs.push_back(&c);
        if (valid && prob.cocone_ok(cone_ptrs)) {
          ++rep.test_objects;
          ++rep.cones_checked;
          int n = count_colimit_mediators(prob.coapex, q.object, own, cone_ptrs, budget);
          if (n != 1) {
            rep.ok = false;
            rep.detail = "quotient cocone admits " +
                         std::string(n == 0 ? "no mediator" : "several mediators");
            rep.candidates_explored = budget.spent;
            return rep;
          }
        }
      }
      size_t k = 0;
      while (k < idx.size()) {
        if (++idx[k] < parts[k].size()) break;
        idx[k] = 0;
        ++k;
      }
      if (k == idx.size()) break;
      if (idx.empty()) break;
    }
  } else {
    // initial object: the empty presheaf is the only quotient test
    FP empty = extremal_initial(prob.coapex->base_ptr(), labels_of(prob.coapex));
    ++rep.test_objects;
    ++rep.cones_checked;
    int n = count_colimit_mediators(prob.coapex, empty, {}, {}, budget);
    if (n != 1) {
      rep.ok = false;
      rep.detail = "no unique map to the empty presheaf";
      rep.candidates_explored = budget.spent;
      return rep;
    }
  }
  rep.candidates_explored = budget.spent;
  return rep;
}

}  // namespace

OracleReport verify_terminal(const FP& candidate, EnumBudget& budget) {
  LimitProblem prob;
  prob.cone_ok = [](const std::vector<const FuzzyMorphism*>&) { return true; };
  prob.apex = candidate;
  return run_limit_oracle(prob, budget);
}

OracleReport verify_initial(const FP& candidate, EnumBudget& budget) {
  ColimitProblem prob;
  prob.cocone_ok = [](const std::vector<const FuzzyMorphism*>&) { return true; };
  prob.coapex = candidate;
  return run_colimit_oracle(prob, budget);
}

OracleReport verify_product(const FP& A, const FP& B, const FP& apex,
                            const FuzzyMorphism& pa, const FuzzyMorphism& pb,
                            EnumBudget& budget) {
  LimitProblem prob;
  prob.feet = {A, B};
  prob.cone_ok = [](const std::vector<const FuzzyMorphism*>&) { return true; };
  prob.apex = apex;
  prob.legs = {pa, pb};
  return run_limit_oracle(prob, budget);
}

OracleReport verify_pullback(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& apex,
                             const FuzzyMorphism& pa, const FuzzyMorphism& pb,
                             EnumBudget& budget) {
  require(*f.dst() == *g.dst(), "ObjectMismatch", "pullback needs a shared codomain");
  LimitProblem prob;
  prob.feet = {f.src(), g.src()};
  prob.cone_ok = [&f, &g](const std::vector<const FuzzyMorphism*>& cone) {
    return components_commute(f, *cone[0], g, *cone[1]);
  };
  prob.apex = apex;
  prob.legs = {pa, pb};
  return run_limit_oracle(prob, budget);
}

OracleReport verify_equalizer(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& apex,
                              const FuzzyMorphism& inclusion, EnumBudget& budget) {
  require(*f.src() == *g.src() && *f.dst() == *g.dst(), "ObjectMismatch",
          "equalizer needs a parallel pair");
  LimitProblem prob;
  prob.feet = {f.src()};
  prob.cone_ok = [&f, &g](const std::vector<const FuzzyMorphism*>& cone) {
    return components_commute(f, *cone[0], g, *cone[0]);
  };
  prob.apex = apex;
  prob.legs = {inclusion};
  return run_limit_oracle(prob, budget);
}

OracleReport verify_coproduct(const FP& A, const FP& B, const FP& coapex,
                              const FuzzyMorphism& ia, const FuzzyMorphism& ib,
                              EnumBudget& budget) {
  ColimitProblem prob;
  prob.feet = {A, B};
  prob.cocone_ok = [](const std::vector<const FuzzyMorphism*>&) { return true; };
  prob.coapex = coapex;
  prob.legs = {ia, ib};
  return run_colimit_oracle(prob, budget);
}

OracleReport verify_pushout(const FuzzyMorphism& f, const FuzzyMorphism& g, const FP& coapex,
                            const FuzzyMorphism& qb, const FuzzyMorphism& qc,
                            EnumBudget& budget) {
  require(*f.src() == *g.src(), "ObjectMismatch", "pushout needs a shared domain");
  ColimitProblem prob;
  prob.feet = {f.dst(), g.dst()};
  prob.cocone_ok = [&f, &g](const std::vector<const FuzzyMorphism*>& cocone) {
    return components_commute(*cocone[0], f, *cocone[1], g);
  };
  prob.coapex = coapex;
  prob.legs = {qb, qc};
  return run_colimit_oracle(prob, budget);
}

OracleReport verify_coequalizer(const FuzzyMorphism& f, const FuzzyMorphism& g,
                                const FP& coapex, const FuzzyMorphism& q,
                                EnumBudget& budget) {
  require(*f.src() == *g.src() && *f.dst() == *g.dst(), "ObjectMismatch",
          "coequalizer needs a parallel pair");
  ColimitProblem prob;
  prob.feet = {f.dst()};
  prob.cocone_ok = [&f, &g](const std::vector<const FuzzyMorphism*>& cocone) {
    return components_commute(*cocone[0], f, *cocone[0], g);
  };
  prob.coapex = coapex;
  prob.legs = {q};
  return run_colimit_oracle(prob, budget);
}

}  // namespace quasikit
