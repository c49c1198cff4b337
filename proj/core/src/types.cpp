#include "pgsem/pregroup/types.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pgsem::pregroup {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!(std::isalnum(c) || c == '_')) return false;
  return true;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Poset::Poset(std::vector<BasicType> elements, const std::vector<std::pair<BasicType, BasicType>>& declared)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!valid_identifier(elements_[i])) throw std::invalid_argument("invalid basic type name '" + elements_[i] + "'");
    if (!index_.emplace(elements_[i], i).second)
      throw std::invalid_argument("duplicate basic type '" + elements_[i] + "'");
  }
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : declared) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end())
      throw std::invalid_argument("order relation mentions undeclared type: " + a + " <= " + b);
    leq_[ia->second][ib->second] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw std::invalid_argument("basic-type order is not antisymmetric: " + elements_[i] + " and " +
                                    elements_[j] + " are mutually below each other");
}

Poset Poset::parse(std::string_view text) {
  std::vector<BasicType> elements;
  std::set<BasicType> seen;
  std::vector<std::pair<BasicType, BasicType>> pairs;
  auto declare = [&](const std::string& name) {
    if (!valid_identifier(name)) throw std::invalid_argument("invalid basic type name '" + name + "'");
    if (seen.insert(name).second) elements.push_back(name);
  };
  std::istringstream is{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    // a <= b <= c ...
    if (toks.size() % 2 == 0) throw std::invalid_argument("poset line " + std::to_string(line_no) + ": malformed");
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      declare(toks[i]);
      if (i + 1 < toks.size() && toks[i + 1] != "<=")
        throw std::invalid_argument("poset line " + std::to_string(line_no) + ": expected '<='");
      if (i >= 2) pairs.emplace_back(toks[i - 2], toks[i]);
    }
  }
  return Poset(std::move(elements), pairs);
}

Poset Poset::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open poset file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool Poset::leq(const BasicType& a, const BasicType& b) const {
  auto ia = index_.find(a);
  auto ib = index_.find(b);
  if (ia == index_.end() || ib == index_.end()) return false;
  return leq_[ia->second][ib->second];
}

SimpleType adjoint(const SimpleType& t, Side side) {
  return SimpleType{t.base, side == Side::Left ? t.z - 1 : t.z + 1};
}

Type operator*(const Type& a, const Type& b) {
  Type t = a;
  t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
  return t;
}

Type parse_type(std::string_view text, const Poset& poset) {
  Type t;
  for (const auto& tok : split_ws(text)) {
    SimpleType st;
    auto caret = tok.find('^');
    st.base = tok.substr(0, caret);
    if (!poset.contains(st.base)) throw std::invalid_argument("unknown basic type '" + st.base + "' in '" + tok + "'");
    if (caret != std::string::npos) {
      std::string suffix = tok.substr(caret + 1);
      if (suffix.empty() || (suffix.find_first_not_of('r') != std::string::npos &&
                             suffix.find_first_not_of('l') != std::string::npos))
        throw std::invalid_argument("malformed adjoint suffix in '" + tok + "'");
      const int k = static_cast<int>(suffix.size());
      st.z = suffix.front() == 'r' ? k : -k;
    }
    t.factors.push_back(std::move(st));
  }
  return t;
}

std::string to_string(const SimpleType& t) {
  if (t.z == 0) return t.base;
  return t.base + "^" + std::string(static_cast<std::size_t>(t.z > 0 ? t.z : -t.z), t.z > 0 ? 'r' : 'l');
}

std::string to_string(const Type& t) {
  std::string out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += ' ';
    out += to_string(t.factors[i]);
  }
  return out;
}

bool contractible(const SimpleType& s, const SimpleType& t, const Poset& poset) {
  if (t.z != s.z + 1) return false;
  return is_even(s) ? poset.leq(s.base, t.base) : poset.leq(t.base, s.base);
}

}  // namespace pgsem::pregroup
