#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quasikit/error.hpp"

namespace quasikit {

struct MorphismData {
  std::string id;
  int dom = -1;
  int cod = -1;
};

/// A finite category given by explicit tables.  Stored exactly as drawn in
/// schema pictures (arrows E -> V); presheaves over it are covariant
/// functors on these arrows, which matches the usual contravariant
/// convention on the dual index category.
class FiniteCategory {
 public:
  struct Raw {
    std::vector<std::string> objects;
    std::vector<std::string> morphism_ids;
    std::vector<std::string> morphism_dom, morphism_cod;  // object names
    std::vector<std::string> identity_of;                 // per object name: morphism id
    std::vector<std::array<std::string, 3>> compose;      // [g, f, g.f]
  };

  // Validates identities, totality of composition on composable pairs, and
  // associativity over all triples.
  static FiniteCategory validate(const Raw& raw);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int o) const { return objects_.at(o); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const MorphismData& morphism(int m) const { return morphisms_.at(m); }
  int object_index(const std::string& name) const;    // UnknownObject
  int morphism_index(const std::string& name) const;  // UnknownObject
  int identity(int obj) const { return identity_.at(obj); }
  int dom(int m) const { return morphisms_.at(m).dom; }
  int cod(int m) const { return morphisms_.at(m).cod; }

  // g after f; requires cod(f) == dom(g).
  int compose(int g, int f) const;

  // All morphisms from `from` to `to`, in id order.
  std::vector<int> hom(int from, int to) const;

  bool equivalent(const FiniteCategory& other) const;

 private:
  FiniteCategory() = default;

  std::vector<std::string> objects_;      // sorted
  std::vector<MorphismData> morphisms_;   // sorted by id
  std::vector<int> identity_;             // per object
  std::vector<std::vector<int>> compose_;  // [g][f] or -1
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

enum class SchemaKind {
  Graph,
  Undirected,
  Reflexive,
  UndirectedReflexive,
  Hypergraph,
  Incidence,
  TernaryConnection,
  TerminalCategory,
};

/// One of the stock presheaf shapes (directed/undirected/reflexive graphs,
/// (m,n)-hypergraphs, incidence structures, the ternary-connection shape)
/// materialized to a full composition table.
struct Schema {
  SchemaKind kind;
  int hyper_sources = 0;  // m, for Hypergraph
  int hyper_targets = 0;  // n, for Hypergraph
  CategoryPtr category;
};

Schema build_schema(SchemaKind kind, int m = 0, int n = 0);
std::optional<SchemaKind> schema_kind_from_string(const std::string& name);
std::string schema_kind_to_string(SchemaKind kind);

}  // namespace quasikit
