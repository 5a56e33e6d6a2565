#include "quasikit/category.hpp"

#include <algorithm>
#include <map>

namespace quasikit {

int FiniteCategory::object_index(const std::string& name) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
  if (it == objects_.end() || *it != name)
    fail("UnknownObject", "no object named '" + name + "'");
  return static_cast<int>(it - objects_.begin());
}

int FiniteCategory::morphism_index(const std::string& name) const {
  auto it = std::lower_bound(
      morphisms_.begin(), morphisms_.end(), name,
      [](const MorphismData& m, const std::string& s) { return m.id < s; });
  if (it == morphisms_.end() || it->id != name)
    fail("UnknownObject", "no morphism named '" + name + "'");
  return static_cast<int>(it - morphisms_.begin());
}

int FiniteCategory::compose(int g, int f) const {
  require(cod(f) == dom(g), "CompositionGap",
          "morphisms '" + morphisms_[g].id + "' after '" + morphisms_[f].id +
              "' are not composable");
  int gf = compose_[g][f];
  require(gf >= 0, "CompositionGap",
          "no table entry for '" + morphisms_[g].id + "' after '" + morphisms_[f].id + "'");
  return gf;
}

std::vector<int> FiniteCategory::hom(int from, int to) const {
  require(from >= 0 && from < object_count() && to >= 0 && to < object_count(),
          "UnknownObject", "object index out of range");
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (dom(m) == from && cod(m) == to) out.push_back(m);
  return out;  // morphisms_ is id-sorted, so this is id order
}

bool FiniteCategory::equivalent(const FiniteCategory& other) const {
  if (objects_ != other.objects_ || morphism_count() != other.morphism_count())
    return false;
  for (int m = 0; m < morphism_count(); ++m) {
    if (morphisms_[m].id != other.morphisms_[m].id ||
        morphisms_[m].dom != other.morphisms_[m].dom ||
        morphisms_[m].cod != other.morphisms_[m].cod)
      return false;
  }
  return identity_ == other.identity_ && compose_ == other.compose_;
}

FiniteCategory FiniteCategory::validate(const Raw& raw) {
  FiniteCategory C;
  C.objects_ = raw.objects;
  std::sort(C.objects_.begin(), C.objects_.end());
  for (size_t k = 1; k < C.objects_.size(); ++k)
    require(C.objects_[k] != C.objects_[k - 1], "UnknownObject",
            "duplicate object id '" + C.objects_[k] + "'");

  require(raw.morphism_ids.size() == raw.morphism_dom.size() &&
              raw.morphism_ids.size() == raw.morphism_cod.size(),
          "CompositionGap", "morphism arrays have inconsistent lengths");
  for (size_t k = 0; k < raw.morphism_ids.size(); ++k) {
    MorphismData m;
    m.id = raw.morphism_ids[k];
    m.dom = C.object_index(raw.morphism_dom[k]);
    m.cod = C.object_index(raw.morphism_cod[k]);
    C.morphisms_.push_back(std::move(m));
  }
  std::sort(C.morphisms_.begin(), C.morphisms_.end(),
            [](const MorphismData& a, const MorphismData& b) { return a.id < b.id; });
  for (size_t k = 1; k < C.morphisms_.size(); ++k)
    require(C.morphisms_[k].id != C.morphisms_[k - 1].id, "CompositionGap",
            "duplicate morphism id '" + C.morphisms_[k].id + "'");

  require(raw.identity_of.size() == C.objects_.size(), "MissingIdentity",
          "one identity morphism required per object");
  C.identity_.assign(C.objects_.size(), -1);
  for (size_t o = 0; o < raw.identity_of.size(); ++o) {
    // raw.identity_of is parallel to raw.objects (pre-sort); map by name
    int obj = C.object_index(raw.objects[o]);
    int m = C.morphism_index(raw.identity_of[o]);
    require(C.dom(m) == obj && C.cod(m) == obj, "MissingIdentity",
            "identity of '" + raw.objects[o] + "' must be an endomorphism of it");
    C.identity_[obj] = m;
  }
  for (size_t o = 0; o < C.identity_.size(); ++o)
    require(C.identity_[o] >= 0, "MissingIdentity",
            "object '" + C.objects_[o] + "' has no identity");

  const int nm = C.morphism_count();
  C.compose_.assign(nm, std::vector<int>(nm, -1));
  for (const auto& [g, f, gf] : raw.compose) {
    int gi = C.morphism_index(g), fi = C.morphism_index(f), ri = C.morphism_index(gf);
    require(C.cod(fi) == C.dom(gi), "CompositionGap",
            "table entry composes non-composable pair (" + g + ", " + f + ")");
    require(C.dom(ri) == C.dom(fi) && C.cod(ri) == C.cod(gi), "CompositionGap",
            "table entry (" + g + ", " + f + ") has wrong endpoints");
    C.compose_[gi][fi] = ri;
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (C.cod(f) == C.dom(g))
        require(C.compose_[g][f] >= 0, "CompositionGap",
                "composable pair (" + C.morphisms_[g].id + ", " + C.morphisms_[f].id +
                    ") missing from the table");

  for (int f = 0; f < nm; ++f) {
    int idd = C.identity_[C.dom(f)], idc = C.identity_[C.cod(f)];
    require(C.compose_[f][idd] == f && C.compose_[idc][f] == f, "MissingIdentity",
            "identity laws fail at '" + C.morphisms_[f].id + "'");
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (C.cod(h) != C.dom(g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (C.cod(g) != C.dom(f)) continue;
        // f after (g after h) vs (f after g) after h
        require(C.compose_[f][C.compose_[g][h]] == C.compose_[C.compose_[f][g]][h],
                "NotAssociative",
                "associativity fails at (" + C.morphisms_[f].id + ", " +
                    C.morphisms_[g].id + ", " + C.morphisms_[h].id + ")");
      }
    }
  return C;
}

namespace {

// Builder that closes a generator set under composition using supplied
// reduction rules (pairs of composites known to collapse).
struct TableBuilder {
  std::vector<std::string> objects;
  std::vector<std::string> ids, doms, cods;
  std::vector<std::string> identities;  // parallel to objects
  std::map<std::pair<std::string, std::string>, std::string> table;

  void object(const std::string& o, const std::string& id_name) {
    objects.push_back(o);
    identities.push_back(id_name);
    arrow(id_name, o, o);
  }
  void arrow(const std::string& id, const std::string& d, const std::string& c) {
    ids.push_back(id);
    doms.push_back(d);
    cods.push_back(c);
  }
  void rule(const std::string& g, const std::string& f, const std::string& gf) {
    table[{g, f}] = gf;
  }

  FiniteCategory::Raw finish() {
    // identity rules
    auto dom_of = [&](const std::string& m) {
      for (size_t k = 0; k < ids.size(); ++k)
        if (ids[k] == m) return doms[k];
      fail("UnknownObject", m);
    };
    auto cod_of = [&](const std::string& m) {
      for (size_t k = 0; k < ids.size(); ++k)
        if (ids[k] == m) return cods[k];
      fail("UnknownObject", m);
    };
    auto id_of = [&](const std::string& o) {
      for (size_t k = 0; k < objects.size(); ++k)
        if (objects[k] == o) return identities[k];
      fail("UnknownObject", o);
    };
    for (const auto& m : ids) {
      table[{m, id_of(dom_of(m))}] = m;
      table[{id_of(cod_of(m)), m}] = m;
    }
    // close: every composable pair must be resolvable through the rules
    FiniteCategory::Raw raw;
    raw.objects = objects;
    raw.morphism_ids = ids;
    raw.morphism_dom = doms;
    raw.morphism_cod = cods;
    raw.identity_of = identities;
    for (const auto& g : ids)
      for (const auto& f : ids)
        if (cod_of(f) == dom_of(g)) {
          auto it = table.find({g, f});
          require(it != table.end(), "CompositionGap",
                  "schema builder left (" + g + ", " + f + ") unresolved");
          raw.compose.push_back({g, f, it->second});
        }
    return raw;
  }
};

}  // namespace

Schema build_schema(SchemaKind kind, int m, int n) {
  TableBuilder b;
  Schema schema;
  schema.kind = kind;
  switch (kind) {
    case SchemaKind::TerminalCategory: {
      b.object("*", "id");
      break;
    }
    case SchemaKind::Graph: {
      b.object("E", "id_E");
      b.object("V", "id_V");
      b.arrow("s", "E", "V");
      b.arrow("t", "E", "V");
      break;
    }
    case SchemaKind::Undirected: {
      b.object("E", "id_E");
      b.object("V", "id_V");
      b.arrow("s", "E", "V");
      b.arrow("t", "E", "V");
      b.arrow("sym", "E", "E");
      b.rule("sym", "sym", "id_E");
      b.rule("s", "sym", "t");
      b.rule("t", "sym", "s");
      break;
    }
    case SchemaKind::Reflexive: {
      b.object("E", "id_E");
      b.object("V", "id_V");
      b.arrow("s", "E", "V");
      b.arrow("t", "E", "V");
      b.arrow("refl", "V", "E");
      // refl.s and refl.t are genuinely new endomorphisms of E
      b.arrow("refl_s", "E", "E");
      b.arrow("refl_t", "E", "E");
      b.rule("s", "refl", "id_V");
      b.rule("t", "refl", "id_V");
      b.rule("refl", "s", "refl_s");
      b.rule("refl", "t", "refl_t");
      b.rule("s", "refl_s", "s");
      b.rule("t", "refl_s", "s");
      b.rule("s", "refl_t", "t");
      b.rule("t", "refl_t", "t");
      b.rule("refl_s", "refl", "refl");
      b.rule("refl_t", "refl", "refl");
      b.rule("refl_s", "refl_s", "refl_s");
      b.rule("refl_s", "refl_t", "refl_t");
      b.rule("refl_t", "refl_s", "refl_s");
      b.rule("refl_t", "refl_t", "refl_t");
      break;
    }
    case SchemaKind::UndirectedReflexive: {
      b.object("E", "id_E");
      b.object("V", "id_V");
      b.arrow("s", "E", "V");
      b.arrow("t", "E", "V");
      b.arrow("sym", "E", "E");
      b.arrow("refl", "V", "E");
      b.arrow("refl_s", "E", "E");
      b.arrow("refl_t", "E", "E");
      b.rule("sym", "sym", "id_E");
      b.rule("s", "sym", "t");
      b.rule("t", "sym", "s");
      b.rule("s", "refl", "id_V");
      b.rule("t", "refl", "id_V");
      b.rule("sym", "refl", "refl");
      b.rule("refl", "s", "refl_s");
      b.rule("refl", "t", "refl_t");
      b.rule("s", "refl_s", "s");
      b.rule("t", "refl_s", "s");
      b.rule("s", "refl_t", "t");
      b.rule("t", "refl_t", "t");
      b.rule("sym", "refl_s", "refl_s");
      b.rule("sym", "refl_t", "refl_t");
      b.rule("refl_s", "sym", "refl_t");
      b.rule("refl_t", "sym", "refl_s");
      b.rule("refl_s", "refl", "refl");
      b.rule("refl_t", "refl", "refl");
      b.rule("refl_s", "refl_s", "refl_s");
      b.rule("refl_s", "refl_t", "refl_t");
      b.rule("refl_t", "refl_s", "refl_s");
      b.rule("refl_t", "refl_t", "refl_t");
      break;
    }
    case SchemaKind::Hypergraph: {
      require(m >= 1 && n >= 0, "BadParams", "hypergraph needs m >= 1 and n >= 0");
      schema.hyper_sources = m;
      schema.hyper_targets = n;
      b.object("E", "id_E");
      b.object("V", "id_V");
      for (int k = 0; k < m; ++k) b.arrow("s" + std::to_string(k), "E", "V");
      for (int k = 0; k < n; ++k) b.arrow("t" + std::to_string(k), "E", "V");
      break;
    }
    case SchemaKind::Incidence: {
      b.object("E", "id_E");
      b.object("R", "id_R");
      b.object("V", "id_V");
      b.arrow("f", "R", "E");
      b.arrow("g", "R", "V");
      break;
    }
    case SchemaKind::TernaryConnection: {
      b.object("C", "id_C");
      b.object("P", "id_P");
      b.arrow("s", "C", "P");
      b.arrow("m", "C", "P");
      b.arrow("t", "C", "P");
      break;
    }
  }
  schema.category = std::make_shared<FiniteCategory>(FiniteCategory::validate(b.finish()));
  return schema;
}

std::optional<SchemaKind> schema_kind_from_string(const std::string& name) {
  if (name == "graph") return SchemaKind::Graph;
  if (name == "undirected") return SchemaKind::Undirected;
  if (name == "reflexive") return SchemaKind::Reflexive;
  if (name == "undirected-reflexive") return SchemaKind::UndirectedReflexive;
  if (name == "hypergraph") return SchemaKind::Hypergraph;
  if (name == "incidence") return SchemaKind::Incidence;
  if (name == "ternary-connection") return SchemaKind::TernaryConnection;
  if (name == "terminal-category") return SchemaKind::TerminalCategory;
  return std::nullopt;
}

std::string schema_kind_to_string(SchemaKind kind) {
  switch (kind) {
    case SchemaKind::Graph: return "graph";
    case SchemaKind::Undirected: return "undirected";
    case SchemaKind::Reflexive: return "reflexive";
    case SchemaKind::UndirectedReflexive: return "undirected-reflexive";
    case SchemaKind::Hypergraph: return "hypergraph";
    case SchemaKind::Incidence: return "incidence";
    case SchemaKind::TernaryConnection: return "ternary-connection";
    case SchemaKind::TerminalCategory: return "terminal-category";
  }
  return "?";
}

}  // namespace quasikit
