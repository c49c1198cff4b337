#include "pgsem/world.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pgsem {

EntitySpace::EntitySpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], i).second) throw std::invalid_argument("duplicate entity '" + names_[i] + "'");
}

std::size_t EntitySpace::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown entity '" + std::string(name) + "'");
  return it->second;
}

const std::vector<bool>& World::attribute(const std::string& name) const {
  auto it = attributes.find(name);
  if (it == attributes.end()) throw std::out_of_range("world has no attribute '" + name + "'");
  return it->second;
}

namespace {

std::size_t checked_index(long long i, const EntitySpace& space) {
  if (i < 1 || static_cast<std::size_t>(i) > space.size())
    throw std::invalid_argument("entity index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(space.size()));
  return static_cast<std::size_t>(i - 1);
}

std::vector<std::size_t> members(const nlohmann::json& j, const EntitySpace& space) {
  std::vector<std::size_t> out;
  if (j.is_number_integer()) {
    out.push_back(checked_index(j.get<long long>(), space));
    return out;
  }
  if (!j.is_string()) throw std::invalid_argument("entity reference must be a name, an index or a range");
  const auto s = j.get<std::string>();
  if (auto dash = s.find('-'); dash != std::string::npos && dash > 0 &&
                               s.find_first_not_of("0123456789-") == std::string::npos) {
    const long long lo = std::stoll(s.substr(0, dash));
    const long long hi = std::stoll(s.substr(dash + 1));
    if (hi < lo) throw std::invalid_argument("empty entity range '" + s + "'");
    for (long long i = lo; i <= hi; ++i) out.push_back(checked_index(i, space));
    return out;
  }
  out.push_back(space.index_of(s));
  return out;
}

}  // namespace

World World::parse_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  World w;
  const auto& ents = doc.at("entities");
  std::vector<std::string> names;
  if (ents.is_array()) {
    for (const auto& e : ents) names.push_back(e.get<std::string>());
  } else {
    const auto prefix = ents.value("prefix", std::string("a"));
    const auto count = ents.at("count").get<std::size_t>();
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  }
  w.space = EntitySpace(std::move(names));

  if (doc.contains("attributes")) {
    for (const auto& [name, list] : doc.at("attributes").items()) {
      std::vector<bool> ind(w.space.size(), false);
      for (const auto& m : list)
        for (auto i : members(m, w.space)) ind[i] = true;
      w.attributes.emplace(name, std::move(ind));
    }
  }
  if (doc.contains("relations")) {
    for (const auto& [name, list] : doc.at("relations").items()) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& p : list) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("relation '" + name + "' needs pairs");
        for (auto x : members(p[0], w.space))
          for (auto y : members(p[1], w.space)) pairs.emplace_back(x, y);
      }
      w.relations.emplace(name, std::move(pairs));
    }
  }
  if (doc.contains("spaces")) {
    for (const auto& [type, kind] : doc.at("spaces").items()) {
      const auto k = kind.get<std::string>();
      if (k == "entity") w.spaces[type] = SpaceKind::Entity;
      else if (k == "truth") w.spaces[type] = SpaceKind::Truth;
      else throw std::invalid_argument("space of '" + type + "' must be entity or truth");
    }
  }
  if (doc.contains("roles")) {
    for (const auto& [type, role] : doc.at("roles").items()) {
      const auto r = role.get<std::string>();
      if (r == "subject") w.roles[type] = TensorRole::Subject;
      else if (r == "object") w.roles[type] = TensorRole::Object;
      else throw std::invalid_argument("role of '" + type + "' must be subject or object");
    }
  }
  if (doc.contains("primitives")) {
    for (const auto& p : doc.at("primitives")) {
      auto name = p.get<std::string>();
      if (!w.attributes.contains(name)) throw std::invalid_argument("primitive '" + name + "' is not an attribute");
      w.primitives.push_back(std::move(name));
    }
  }
  return w;
}

World World::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open world file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace pgsem
