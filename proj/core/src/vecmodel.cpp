#include "pgsem/vecmodel.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace pgsem::vecmodel {

ConceptVector pointwise(const ConceptVector& u, const ConceptVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("pointwise product of vectors of length " + std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
  ConceptVector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] * v[i];
  return w;
}

ConceptVector ones(std::size_t dim) { return ConceptVector(dim, Rational(1)); }
ConceptVector zeros(std::size_t dim) { return ConceptVector(dim, Rational(0)); }

ConceptVector product(const std::vector<ConceptVector>& us, std::size_t dim) {
  ConceptVector acc = ones(dim);
  for (const auto& u : us) acc = pointwise(acc, u);
  return acc;
}

VectorModel::VectorModel(std::size_t dim) {
  for (std::size_t i = 1; i <= dim; ++i) basis_.push_back("c" + std::to_string(i));
}

void VectorModel::bind(const std::string& word, const pregroup::Type& type, ConceptVector v) {
  if (v.size() != dim())
    throw std::invalid_argument("vector for '" + word + "' has length " + std::to_string(v.size()) +
                                ", basis has " + std::to_string(dim()));
  m_[{word, pregroup::to_string(type)}] = std::move(v);
}

bool VectorModel::contains(const std::string& word, const pregroup::Type& type) const {
  return m_.contains({word, pregroup::to_string(type)});
}

const ConceptVector& VectorModel::at(const std::string& word, const pregroup::Type& type) const {
  auto it = m_.find({word, pregroup::to_string(type)});
  if (it == m_.end()) throw UnboundEntry("no vector for '" + word + ": " + pregroup::to_string(type) + "'");
  return it->second;
}

VectorModel VectorModel::parse_json(std::string_view text, const pregroup::Poset& poset) {
  const auto doc = nlohmann::json::parse(text);
  VectorModel m(doc.at("basis").get<std::vector<std::string>>());
  for (const auto& e : doc.at("entries")) {
    ConceptVector v;
    for (const auto& c : e.at("vector")) v.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                                                    : parse_rational(c.dump()));
    m.bind(e.at("word").get<std::string>(), pregroup::parse_type(e.at("type").get<std::string>(), poset),
           std::move(v));
  }
  return m;
}

ConceptVector eval_vector_model(const VectorModel& m, const std::vector<std::pair<std::string, pregroup::Type>>& words,
                                const pregroup::Reduction& r, const pregroup::Poset& poset) {
  pregroup::Type flat;
  std::vector<ConceptVector> vs;
  for (const auto& [w, t] : words) {
    vs.push_back(m.at(w, t));
    flat = flat * t;
  }
  if (!words.empty()) {
    std::string why;
    if (!pregroup::validate(r, flat, poset, &why)) throw std::invalid_argument("reduction does not fit: " + why);
  }
  return product(vs, m.dim());
}

namespace {

void record(LawCheck& law, bool ok, const std::string& what) {
  ++law.cases;
  if (!ok && law.passed) {
    law.passed = false;
    law.detail = what;
  }
}

}  // namespace

std::vector<LawCheck> vmodel_category_laws(const std::vector<ConceptVector>& sample) {
  std::vector<LawCheck> laws;
  for (const char* name : {"associativity", "commutativity", "unit", "interchange", "compact closure",
                           "name equals morphism", "position insensitive"}) {
    laws.emplace_back();
    laws.back().name = name;
  }
  const std::size_t n = sample.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = sample[i];
    const auto& v = sample[(i + 1) % n];
    const auto& w = sample[(i + 2) % n];
    const auto& x = sample[(i + 3) % n];
    const auto e = ones(u.size());
    const std::string at = "sample " + std::to_string(i);
    record(laws[0], pointwise(pointwise(u, v), w) == pointwise(u, pointwise(v, w)), at);
    record(laws[1], pointwise(u, v) == pointwise(v, u), at);
    record(laws[2], pointwise(u, e) == u && pointwise(e, u) == u, at);
    // Composition and tensor are both ⊙: (u⊗v)∘(w⊗x) against (u∘w)⊗(v∘x).
    record(laws[3], pointwise(pointwise(u, v), pointwise(w, x)) == pointwise(pointwise(u, w), pointwise(v, x)), at);
    // ε = η = e, so (ε⊗1)∘(1⊗η) = (e⊙e)⊙(e⊙e) must be e.
    record(laws[4], pointwise(pointwise(e, e), pointwise(e, e)) == e, at);
    // The name I -> A^r⊗A of u is e⊙u and its coname is u⊙e.
    record(laws[5], pointwise(e, u) == u && pointwise(u, e) == u, at);
    std::vector<ConceptVector> order = {u, v, w, x};
    const auto ref = product(order, u.size());
    std::sort(order.begin(), order.end());
    bool same = true;
    do same = same && product(order, u.size()) == ref;
    while (std::next_permutation(order.begin(), order.end()));
    record(laws[6], same, at);
  }
  return laws;
}

RationalVector basis_tensor(std::size_t dim, const std::vector<std::size_t>& indices) {
  RationalVector v = {Rational(1)};
  for (auto i : indices) {
    RationalVector a(dim, Rational(0));
    a.at(i) = 1;
    v = linalg::kron(v, a);
  }
  return v;
}

Fact1Witness fact1_demo(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("Fact 1 needs dimension at least 2; in dimension 1 the map is the identity");
  using linalg::Matrix;
  Matrix eps(1, dim * dim);
  Matrix eta(dim * dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    eps(0, i * dim + i) = 1;
    eta(i * dim + i, 0) = 1;
  }
  const auto id = Matrix::identity(dim);
  Fact1Witness w;
  w.dim = dim;
  w.f = linalg::kron(id, eta) * linalg::kron(eps, id);
  w.witness = basis_tensor(dim, {0, 1, 0});
  w.image = w.f.apply(w.witness);
  w.kernel = linalg::kernel_basis(w.f);
  return w;
}

ConceptVector embed_subject(const ConceptVector& v) { return linalg::kron(v, ones(v.size())); }
ConceptVector embed_object(const ConceptVector& w) { return linalg::kron(ones(w.size()), w); }

}  // namespace pgsem::vecmodel
