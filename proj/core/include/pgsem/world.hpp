#pragma once

// A finite first-order world: entities, named attribute sets, binary
// relations, and the declarations the models need (which basic types live
// in the entity or truth space, which attributes generate the concept
// space).

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgsem {

class EntitySpace {
 public:
  EntitySpace() = default;
  /// Throws std::invalid_argument on duplicate identifiers.
  explicit EntitySpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws std::out_of_range for an unknown identifier.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const EntitySpace& a, const EntitySpace& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class SpaceKind { Entity, Truth };
enum class TensorRole { Subject, Object };

struct World {
  EntitySpace space;
  std::map<std::string, std::vector<bool>> attributes;
  std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> relations;
  std::map<std::string, SpaceKind> spaces;
  std::map<std::string, TensorRole> roles;
  /// Attributes generating the concept space, in pattern order.
  std::vector<std::string> primitives;

  const std::vector<bool>& attribute(const std::string& name) const;

  /// JSON with keys "entities" (names, or {"prefix": "a", "count": 30}),
  /// "attributes" (name -> members), "relations" (name -> [[x, y], ...]),
  /// "spaces", "roles" and "primitives". Members are entity names,
  /// 1-based indices, or "i-j" index ranges.
  static World parse_json(std::string_view text);
  static World load(const std::string& path);
};

}  // namespace pgsem
