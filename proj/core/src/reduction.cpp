#include "pgsem/pregroup/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pgsem::pregroup {

namespace {

using Links = std::vector<std::pair<std::size_t, std::size_t>>;

// Complete planar matchings of [lo, hi). Position lo is linked to some k,
// which splits the interval into the enclosed part (lo, k) and the rest.
class Matcher {
 public:
  Matcher(const Type& flat, const Poset& poset) : f_(flat.factors), poset_(poset) {}

  const std::vector<Links>& complete(std::size_t lo, std::size_t hi) {
    auto key = std::make_pair(lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Links> out;
    if (lo == hi) {
      out.emplace_back();
    } else if ((hi - lo) % 2 == 0) {
      for (std::size_t k = lo + 1; k < hi; k += 2) {
        if (!contractible(f_[lo], f_[k], poset_)) continue;
        const auto& inner = complete(lo + 1, k);
        if (inner.empty()) continue;
        const auto& rest = complete(k + 1, hi);
        for (const auto& a : inner) {
          for (const auto& b : rest) {
            Links l;
            l.reserve(1 + a.size() + b.size());
            l.emplace_back(lo, k);
            l.insert(l.end(), a.begin(), a.end());
            l.insert(l.end(), b.begin(), b.end());
            out.push_back(std::move(l));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const std::vector<SimpleType>& f_;
  const Poset& poset_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Links>> memo_;
};

}  // namespace

Type concatenate(std::span<const Type> types) {
  Type t;
  for (const auto& x : types) t = t * x;
  return t;
}

std::vector<Reduction> find_reductions(const Type& flat, const BasicType& target, const Poset& poset,
                                       std::size_t limit) {
  std::vector<Reduction> out;
  if (limit == 0) return out;
  const std::size_t n = flat.size();
  Matcher m(flat, poset);
  for (std::size_t s = 0; s < n; s += 2) {
    const auto& st = flat.factors[s];
    if (st.z != 0 || !poset.leq(st.base, target)) continue;
    const auto& left = m.complete(0, s);
    if (left.empty()) continue;
    const auto& right = m.complete(s + 1, n);
    for (const auto& a : left) {
      for (const auto& b : right) {
        Reduction r;
        r.links = a;
        r.links.insert(r.links.end(), b.begin(), b.end());
        std::sort(r.links.begin(), r.links.end());
        r.survivor = s;
        r.target = target;
        out.push_back(std::move(r));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Reduction& x, const Reduction& y) {
    if (x.links != y.links) return x.links < y.links;
    return x.survivor < y.survivor;
  });
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::vector<Reduction> find_reductions(std::span<const Type> types, const BasicType& target, const Poset& poset,
                                       std::size_t limit) {
  return find_reductions(concatenate(types), target, poset, limit);
}

bool validate(const Reduction& r, const Type& flat, const Poset& poset, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::size_t n = flat.size();
  std::vector<int> owner(n, -1);
  if (r.survivor >= n) return fail("survivor out of range");
  owner[r.survivor] = -2;
  for (std::size_t idx = 0; idx < r.links.size(); ++idx) {
    auto [i, j] = r.links[idx];
    if (!(i < j) || j >= n) return fail("link out of range");
    for (auto p : {i, j}) {
      if (owner[p] != -1) return fail("position " + std::to_string(p) + " used twice");
      owner[p] = static_cast<int>(idx);
    }
    if (!contractible(flat.factors[i], flat.factors[j], poset))
      return fail("link (" + std::to_string(i) + "," + std::to_string(j) + ") is not a contraction");
  }
  for (std::size_t p = 0; p < n; ++p)
    if (owner[p] == -1) return fail("position " + std::to_string(p) + " is neither linked nor the survivor");
  for (const auto& [i, j] : r.links) {
    for (const auto& [k, l] : r.links)
      if (i < k && k < j && j < l) return fail("links cross");
    if (i < r.survivor && r.survivor < j) return fail("survivor is enclosed by a link");
  }
  const auto& s = flat.factors[r.survivor];
  if (s.z != 0 || !poset.leq(s.base, r.target)) return fail("survivor " + to_string(s) + " does not reduce to " + r.target);
  return true;
}

std::string to_string(const Reduction& r) {
  std::ostringstream os;
  os << "links";
  for (const auto& [i, j] : r.links) os << " (" << i + 1 << "," << j + 1 << ")";
  if (r.links.empty()) os << " none";
  os << " survivor " << r.survivor + 1 << " -> " << r.target;
  return os.str();
}

std::string render_links(const Reduction& r, const Type& flat) {
  // Column of each factor in the printed type string.
  std::vector<std::size_t> col;
  std::string header;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) header += ' ';
    auto s = to_string(flat.factors[i]);
    col.push_back(header.size() + s.size() / 2);
    header += s;
  }
  std::size_t max_depth = 0;
  std::vector<std::size_t> height(r.links.size(), 0);
  // Height of an arc = 1 + max height of arcs it encloses.
  std::vector<std::size_t> order(r.links.size());
  for (std::size_t a = 0; a < order.size(); ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return r.links[x].second - r.links[x].first < r.links[y].second - r.links[y].first; });
  for (auto a : order) {
    height[a] = 0;
    for (auto b : order) {
      const auto& [i, j] = r.links[a];
      const auto& [k, l] = r.links[b];
      if (i < k && l < j) height[a] = std::max(height[a], height[b] + 1);
    }
    max_depth = std::max(max_depth, height[a] + 1);
  }
  std::vector<std::string> rows(max_depth, std::string(header.size(), ' '));
  for (std::size_t a = 0; a < r.links.size(); ++a) {
    const auto [i, j] = r.links[a];
    for (std::size_t h = 0; h < height[a]; ++h) {
      rows[h][col[i]] = '|';
      rows[h][col[j]] = '|';
    }
    auto& row = rows[height[a]];
    row[col[i]] = '\\';
    row[col[j]] = '/';
    for (std::size_t c = col[i] + 1; c < col[j]; ++c) row[c] = '_';
  }
  std::string out = header + "\n";
  for (const auto& row : rows) {
    auto end = row.find_last_not_of(' ');
    out += (end == std::string::npos ? std::string() : row.substr(0, end + 1)) + "\n";
  }
  out += std::string(col.empty() ? 0 : col[r.survivor], ' ') + "| " + r.target + "\n";
  return out;
}

}  // namespace pgsem::pregroup
