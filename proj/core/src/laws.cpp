#include "pgsem/laws.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pgsem/conceptlogic.hpp"
#include "pgsem/fixtures.hpp"
#include "pgsem/funcmodel.hpp"
#include "pgsem/interp.hpp"
#include "pgsem/linalg.hpp"
#include "pgsem/pregroup/diagram.hpp"
#include "pgsem/pregroup/meaning.hpp"
#include "pgsem/pregroup/reduction.hpp"
#include "pgsem/random.hpp"
#include "pgsem/vecmodel.hpp"

namespace pgsem::laws {
namespace {

using random::Rng;
using funcmodel::Connective;
using funcmodel::Predicate;
using funcmodel::SVector;
using funcmodel::TruthClass;
using funcmodel::TruthValue;
using conceptlogic::DiagOp;
using conceptlogic::Projector;
using interp::PartitionScheme;
using vecmodel::ConceptVector;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& why) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = why();
    }
  }
  void fail(std::string why) {
    if (r_.passed) {
      r_.passed = false;
      r_.detail = std::move(why);
    }
  }
  void note(std::string text) {
    if (r_.passed) r_.detail = std::move(text);
  }
  std::size_t cases() const { return r_.cases; }
  Result result() const { return r_; }

 private:
  Result r_;
};

using CheckFn = std::function<std::vector<Result>(const Options&, Rng&)>;
struct Check {
  std::string name;
  CheckFn run;
};

template <class F>
Check single(std::string name, F body) {
  return Check{name, [name, body](const Options& o, Rng& rng) {
                 Tally t(name);
                 body(o, rng, t);
                 return std::vector<Result>{t.result()};
               }};
}

std::string vec_text(const RationalVector& v) { return to_string(std::span<const Rational>(v)); }

std::string pred_text(const Predicate& p) {
  std::string s;
  for (auto v : p.values()) s += v == TruthValue::Top ? 'T' : v == TruthValue::Bot ? 'F' : '0';
  return s;
}

Predicate from_mask(std::size_t n, std::size_t mask) {
  std::vector<TruthValue> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U ? TruthValue::Top : TruthValue::Bot;
  return Predicate(std::move(v));
}

// ---------------------------------------------------------------- pregroup

pregroup::Poset single_basic() { return pregroup::Poset({"a"}, {}); }

std::vector<Check> pregroup_checks() {
  using namespace pregroup;
  std::vector<Check> cs;

  cs.push_back(single("yanking", [](const Options&, Rng&, Tally& t) {
    const auto g = fixtures::load(fixtures::chips());
    for (const auto& a : g.poset.elements())
      for (int z = -2; z <= 2; ++z) {
        const SimpleType s{a, z};
        const Type one{{s}};
        const auto id = Diagram::identity(one).normalized();
        const auto r = adjoint(s, Side::Right), l = adjoint(s, Side::Left);
        const auto right = compose(tensor(Diagram::counit(s, r, g.poset), Diagram::identity(one)),
                                   tensor(Diagram::identity(one), Diagram::unit(r, s, g.poset)));
        const auto left = compose(tensor(Diagram::identity(one), Diagram::counit(l, s, g.poset)),
                                  tensor(Diagram::unit(s, l, g.poset), Diagram::identity(one)));
        t.check(right.normalized() == id, [&] { return "right snake on " + to_string(s); });
        t.check(left.normalized() == id, [&] { return "left snake on " + to_string(s); });
      }
  }));

  cs.push_back(single("cap over cup is not the identity", [](const Options&, Rng&, Tally& t) {
    const auto g = fixtures::load(fixtures::chips());
    for (const auto& a : g.poset.elements()) {
      const SimpleType s{a, 0};
      const auto r = adjoint(s, Side::Right);
      const Type one{{s}};
      const Type three{{s, r, s}};
      const auto f = compose(tensor(Diagram::identity(one), Diagram::unit(r, s, g.poset)),
                             tensor(Diagram::counit(s, r, g.poset), Diagram::identity(one)));
      t.check(f.normalized() != Diagram::identity(three).normalized(), [&] { return "on " + a; });
    }
  }));

  cs.push_back(single("type round trip", [](const Options& o, Rng& rng, Tally& t) {
    const auto g = fixtures::load(fixtures::chips());
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto ty = random::type(rng, g.poset, 8, 3);
      const auto text = to_string(ty);
      t.check(parse_type(text, g.poset) == ty, [&] { return "'" + text + "'"; });
    }
  }));

  cs.push_back(single("reductions validate", [](const Options& o, Rng& rng, Tally& t) {
    const auto g = fixtures::load(fixtures::chips());
    const auto a = single_basic();
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto& poset = i % 2 ? g.poset : a;
      const auto& el = poset.elements();
      const auto ty = i % 4 < 2 ? random::type(rng, poset, 9, 2)
                                : random::reducible(rng, poset, el[random::uniform(rng, 0, el.size() - 1)],
                                                    random::uniform(rng, 0, 5));
      std::size_t found = 0;
      for (const auto& target : el)
        for (const auto& r : find_reductions(ty, target, poset, 32)) {
          std::string why;
          ++found;
          t.check(validate(r, ty, poset, &why), [&] { return to_string(ty) + ": " + to_string(r) + ": " + why; });
        }
      if (i % 4 >= 2 && found == 0) t.fail("no reduction for reducible string " + to_string(ty));
    }
  }));

  return cs;
}

// --------------------------------------------------------------- funcmodel

bool all_value(const Predicate& p, TruthValue v) {
  return std::all_of(p.values().begin(), p.values().end(), [&](TruthValue x) { return x == v; });
}

void boolean_pair_laws(const Predicate& p, const Predicate& q, Tally& t) {
  using funcmodel::combine;
  using funcmodel::negate;
  const auto why = [&] { return "p=" + pred_text(p) + " q=" + pred_text(q); };
  t.check(combine(Connective::And, p, q) == combine(Connective::And, q, p), why);
  t.check(combine(Connective::Or, p, q) == combine(Connective::Or, q, p), why);
  t.check(combine(Connective::IfThen, p, q) == combine(Connective::Or, negate(p), q), why);
  t.check(negate(combine(Connective::And, p, q)) == combine(Connective::Or, negate(p), negate(q)), why);
  t.check(combine(Connective::And, p, combine(Connective::Or, p, q)) == p, why);
  auto sp = p.support(), sq = q.support();
  bool sub = true;
  for (std::size_t i = 0; i < sp.size(); ++i) sub = sub && (!sp[i] || sq[i]);
  t.check(funcmodel::logical_consequence(p, q) == sub, why);
}

void boolean_unary_laws(const Predicate& p, Tally& t) {
  using funcmodel::combine;
  using funcmodel::negate;
  const auto why = [&] { return "p=" + pred_text(p); };
  t.check(negate(negate(p)) == p, why);
  t.check(all_value(combine(Connective::And, p, negate(p)), TruthValue::Bot), why);
  t.check(all_value(combine(Connective::Or, p, negate(p)), TruthValue::Top), why);
  t.check(combine(Connective::And, p, p) == p, why);
}

void boolean_triple_laws(const Predicate& p, const Predicate& q, const Predicate& r, Tally& t) {
  using funcmodel::combine;
  const auto why = [&] { return "p=" + pred_text(p) + " q=" + pred_text(q) + " r=" + pred_text(r); };
  t.check(combine(Connective::And, p, combine(Connective::And, q, r)) ==
              combine(Connective::And, combine(Connective::And, p, q), r),
          why);
  t.check(combine(Connective::Or, p, combine(Connective::Or, q, r)) ==
              combine(Connective::Or, combine(Connective::Or, p, q), r),
          why);
  t.check(combine(Connective::And, p, combine(Connective::Or, q, r)) ==
              combine(Connective::Or, combine(Connective::And, p, q), combine(Connective::And, p, r)),
          why);
  t.check(combine(Connective::Or, p, combine(Connective::And, q, r)) ==
              combine(Connective::And, combine(Connective::Or, p, q), combine(Connective::Or, p, r)),
          why);
}

std::vector<Check> funcmodel_checks() {
  std::vector<Check> cs;

  cs.push_back(single("linearity", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 30);
      const auto p = random::predicate(rng, n);
      const auto x = random::any_vector(rng, n), y = random::any_vector(rng, n);
      const auto l = random::any_rational(rng), m = random::any_rational(rng);
      funcmodel::EntityVector z(n);
      for (std::size_t j = 0; j < n; ++j) z[j] = l * x[j] + m * y[j];
      t.check(apply_predicate(p, z) == l * apply_predicate(p, x) + m * apply_predicate(p, y),
              [&] { return "p=" + pred_text(p); });
    }
  }));

  cs.push_back(single("counting", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 30);
      const auto p = random::predicate(rng, n);
      const auto b = random::subset(rng, n);
      std::size_t tops = 0, bots = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (b[j]) {
          tops += p(j) == TruthValue::Top;
          bots += p(j) == TruthValue::Bot;
        }
      const SVector expect{Rational(static_cast<long>(tops)), Rational(static_cast<long>(bots))};
      t.check(apply_predicate(p, funcmodel::indicator(b)) == expect, [&] { return "p=" + pred_text(p); });
    }
  }));

  cs.push_back(single("scaling invariance", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const SVector v{random::unit_rational(rng) * random::uniform(rng, 0, 5),
                      random::unit_rational(rng) * random::uniform(rng, 0, 5)};
      Rational l = random::any_rational(rng);
      if (l <= 0) l = -l + 1;
      t.check(truth_class(l * v).tag == truth_class(v).tag, [&] { return to_string(v); });
    }
  }));

  cs.push_back(single("fundamental property", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 30);
      const auto p = random::predicate_on_A(rng, n);
      const auto x = random::nonnegative_vector(rng, n);
      const auto r = funcmodel::fundamental_check(p, x);
      t.check(r.agree(), [&] { return "p=" + pred_text(p) + " X=" + vec_text(x); });
    }
  }));

  cs.push_back(single("boolean algebra exhaustive", [](const Options&, Rng&, Tally& t) {
    // Triples go through tables of combine's results, indexed by support mask.
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::size_t top = std::size_t{1} << n;
      std::vector<Predicate> all;
      for (std::size_t m = 0; m < top; ++m) all.push_back(from_mask(n, m));
      const auto mask_of = [&](const Predicate& p) {
        std::size_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (p(i) == TruthValue::Zero) t.fail("connective left A: " + pred_text(p));
          if (p(i) == TruthValue::Top) m |= std::size_t{1} << i;
        }
        return m;
      };
      std::vector<std::size_t> and_t(top * top), or_t(top * top);
      for (std::size_t a = 0; a < top; ++a) {
        boolean_unary_laws(all[a], t);
        for (std::size_t b = 0; b < top; ++b) {
          boolean_pair_laws(all[a], all[b], t);
          and_t[a * top + b] = mask_of(funcmodel::combine(Connective::And, all[a], all[b]));
          or_t[a * top + b] = mask_of(funcmodel::combine(Connective::Or, all[a], all[b]));
        }
      }
      const auto AND = [&](std::size_t a, std::size_t b) { return and_t[a * top + b]; };
      const auto OR = [&](std::size_t a, std::size_t b) { return or_t[a * top + b]; };
      for (std::size_t a = 0; a < top; ++a)
        for (std::size_t b = 0; b < top; ++b)
          for (std::size_t c = 0; c < top; ++c) {
            const auto why = [&] { return "p=" + pred_text(all[a]) + " q=" + pred_text(all[b]) + " r=" + pred_text(all[c]); };
            t.check(AND(a, AND(b, c)) == AND(AND(a, b), c), why);
            t.check(OR(a, OR(b, c)) == OR(OR(a, b), c), why);
            t.check(AND(a, OR(b, c)) == OR(AND(a, b), AND(a, c)), why);
            t.check(OR(a, AND(b, c)) == AND(OR(a, b), OR(a, c)), why);
          }
    }
  }));

  cs.push_back(single("boolean algebra random", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto p = random::predicate_on_A(rng, 30), q = random::predicate_on_A(rng, 30),
                 r = random::predicate_on_A(rng, 30);
      boolean_unary_laws(p, t);
      boolean_pair_laws(p, q, t);
      boolean_triple_laws(p, q, r, t);
    }
  }));

  cs.push_back(single("negation double role", [](const Options& o, Rng& rng, Tally& t) {
    // not(p(X)) true iff p(X) false, but p(X) not true does not give not(p(X)) true.
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 12);
      const auto p = random::predicate_on_A(rng, n);
      const auto x = random::nonnegative_vector(rng, n);
      const auto v = apply_predicate(p, x);
      const bool neg_true = truth_class(funcmodel::connective_not(v)).tag == TruthClass::True;
      t.check(neg_true == (truth_class(v).tag == TruthClass::False), [&] { return to_string(v); });
      t.check(apply_predicate(funcmodel::negate(p), x) == funcmodel::connective_not(v),
              [&] { return "p=" + pred_text(p); });
    }
    const Predicate p({TruthValue::Top, TruthValue::Bot});
    const auto v = apply_predicate(p, {1, 1});
    const bool witness = truth_class(v).tag != TruthClass::True &&
                         truth_class(funcmodel::connective_not(v)).tag != TruthClass::True;
    t.check(witness, [] { return "mixed witness a1 + a2 is not mixed"; });
  }));

  return cs;
}

// ------------------------------------------------------------------ vmodel

std::vector<Check> vmodel_checks() {
  std::vector<Check> cs;

  cs.push_back(Check{"category", [](const Options& o, Rng& rng) {
                       std::vector<ConceptVector> sample;
                       const auto dim = random::uniform(rng, 2, 6);
                       for (std::size_t i = 0; i < std::max<std::size_t>(100, o.iters / 10); ++i)
                         sample.push_back(random::any_vector(rng, dim));
                       std::vector<Result> out;
                       for (const auto& law : vecmodel::vmodel_category_laws(sample)) {
                         Result r;
                         r.name = "category: " + law.name;
                         r.passed = law.passed;
                         r.cases = law.cases;
                         r.detail = law.detail;
                         out.push_back(std::move(r));
                       }
                       return out;
                     }});

  cs.push_back(single("product stays in the unit cube", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto dim = random::uniform(rng, 1, 8);
      const auto u = random::unit_vector(rng, dim), v = random::unit_vector(rng, dim);
      const auto w = vecmodel::pointwise(u, v);
      t.check(all_in_unit_interval(w), [&] { return vec_text(u) + " ⊙ " + vec_text(v); });
    }
  }));

  cs.push_back(single("zigzag kernel", [](const Options&, Rng&, Tally& t) {
    for (std::size_t d = 2; d <= 6; ++d) {
      const auto w = vecmodel::fact1_demo(d);
      const auto image = w.f.apply(w.witness);
      const bool zero = std::all_of(image.begin(), image.end(), [](const Rational& q) { return q == 0; });
      t.check(zero && w.image == image, [&] { return "dim " + std::to_string(d) + ": f(a1⊗a2⊗a1) ≠ 0"; });
      t.check(!w.kernel.empty() && w.f != linalg::Matrix::identity(d * d * d),
              [&] { return "dim " + std::to_string(d) + ": f is injective"; });
    }
  }));

  cs.push_back(single("reduction choice invariance", [](const Options& o, Rng& rng, Tally& t) {
    const auto poset = single_basic();
    const std::size_t want = std::max<std::size_t>(50, o.iters / 10);
    for (std::size_t attempt = 0; attempt < want * 100 && t.cases() < want; ++attempt) {
      const auto ty = random::reducible(rng, poset, "a", random::uniform(rng, 2, 4));
      const auto rs = pregroup::find_reductions(ty, "a", poset, 8);
      if (rs.size() < 2) continue;
      const auto dim = random::uniform(rng, 1, 5);
      vecmodel::VectorModel m(dim);
      std::vector<std::pair<std::string, pregroup::Type>> words;
      for (std::size_t i = 0; i < ty.size(); ++i) {
        const pregroup::Type one{{ty.factors[i]}};
        const auto w = "w" + std::to_string(i);
        m.bind(w, one, random::any_vector(rng, dim));
        words.emplace_back(w, one);
      }
      const auto first = eval_vector_model(m, words, rs[0], poset);
      for (std::size_t k = 1; k < rs.size(); ++k)
        t.check(eval_vector_model(m, words, rs[k], poset) == first,
                [&] { return to_string(ty) + ": " + to_string(rs[0]) + " vs " + to_string(rs[k]); });
    }
    if (t.cases() == 0) t.fail("no ambiguous type string found");
  }));

  return cs;
}

// ------------------------------------------------------------ conceptlogic

ConceptVector map2(const ConceptVector& x, const ConceptVector& y, Rational (*f)(const Rational&, const Rational&)) {
  ConceptVector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = f(x[i], y[i]);
  return z;
}

std::vector<bool> mask_bits(std::size_t n, std::size_t mask) {
  std::vector<bool> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1U;
  return b;
}

std::vector<Check> conceptlogic_checks() {
  using namespace conceptlogic;
  std::vector<Check> cs;
  using Scalar2 = Rational (*)(const Rational&, const Rational&);
  using Scalar1 = Rational (*)(const Rational&);
  const Scalar2 s_and = alg_and, s_or = alg_or, s_imp = alg_imp;
  const Scalar1 s_neg = alg_neg;

  cs.push_back(single("operators match vectors", [=](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 8);
      const auto x = random::unit_vector(rng, n), y = random::unit_vector(rng, n);
      const DiagOp dx = diag_of(x), dy = diag_of(y);
      const auto why = [&] { return vec_text(x) + ", " + vec_text(y); };
      t.check(alg_neg(dx) == diag_of(alg_neg(x)), why);
      t.check(alg_and(dx, dy) == diag_of(alg_and(x, y)), why);
      t.check(alg_or(dx, dy) == diag_of(alg_or(x, y)), why);
      t.check(alg_imp(dx, dy) == diag_of(alg_imp(x, y)), why);
      t.check(alg_and(x, y) == map2(x, y, s_and) && alg_or(x, y) == map2(x, y, s_or) &&
                  alg_imp(x, y) == map2(x, y, s_imp),
              why);
      ConceptVector nx(n);
      for (std::size_t j = 0; j < n; ++j) nx[j] = s_neg(x[j]);
      t.check(alg_neg(x) == nx, why);
    }
  }));

  cs.push_back(single("composition is the product", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 8);
      const auto x = random::any_vector(rng, n), y = random::any_vector(rng, n);
      const auto why = [&] { return vec_text(x) + ", " + vec_text(y); };
      t.check(diag_of(x).compose(diag_of(y)) == diag_of(vecmodel::pointwise(x, y)), why);
      t.check(diag_of(x).apply(y) == vecmodel::pointwise(x, y), why);
      t.check(diag_of(x).matrix() * diag_of(y).matrix() == diag_of(vecmodel::pointwise(x, y)).matrix(), why);
      t.check(alg_and(x, y) == vecmodel::pointwise(x, y), why);
    }
  }));

  cs.push_back(single("closure on the unit interval", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto a = random::unit_rational(rng), b = random::unit_rational(rng);
      const auto why = [&] { return to_string(a) + ", " + to_string(b); };
      t.check(b * (1 - a) >= 0 && (1 - a) * (1 - b) >= 0, why);
      t.check(in_unit_interval(alg_neg(a)) && in_unit_interval(alg_and(a, b)) && in_unit_interval(alg_or(a, b)) &&
                  in_unit_interval(alg_imp(a, b)),
              why);
    }
  }));

  cs.push_back(single("implication is one exactly at the corners", [](const Options&, Rng&, Tally& t) {
    for (int p = 0; p <= 8; ++p)
      for (int q = 0; q <= 8; ++q) {
        Rational a(p, 8), b(q, 8);
        a.canonicalize();
        b.canonicalize();
        t.check((alg_imp(a, b) == 1) == (a == 0 || b == 1), [&] { return to_string(a) + ", " + to_string(b); });
      }
  }));

  cs.push_back(single("boolean corners", [](const Options&, Rng&, Tally& t) {
    for (int p = 0; p <= 1; ++p)
      for (int q = 0; q <= 1; ++q) {
        const Rational a(p), b(q);
        const auto why = [&] { return std::to_string(p) + std::to_string(q); };
        t.check(alg_and(a, b) == (p && q), why);
        t.check(alg_or(a, b) == (p || q), why);
        t.check(alg_imp(a, b) == (!p || q), why);
        t.check(alg_neg(a) == !p, why);
      }
    const Rational h(1, 2);
    t.check(alg_and(h, h) == Rational(1, 4) && alg_and(h, h) != h, [] { return "1/2 ∧ 1/2 ≠ 1/4"; });
    t.check(!diag_of({h}).is_projector(), [] { return "D_(1/2) is idempotent"; });
  }));

  cs.push_back(single("consequence orders", [](const Options& o, Rng& rng, Tally& t) {
    std::size_t algebraic = 0;
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 6);
      auto x = random::unit_vector(rng, n, 4), y = random::unit_vector(rng, n, 4);
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = random::uniform(rng, 0, 2);
        if (c == 0) x[j] = 0;
        if (c == 1) y[j] = 1;
      }
      const DiagOp d = diag_of(x), e = diag_of(y);
      const bool alg = algebraic_consequence(d, e);
      algebraic += alg;
      const auto why = [&] { return vec_text(x) + ", " + vec_text(y); };
      t.check(!alg || probabilistic_consequence(d, e), why);
      t.check(alg == (e.compose(d) == d), why);
    }
    if (algebraic == 0) t.fail("no algebraic consequence was sampled");
    const DiagOp d({Rational(1, 2)}), e({Rational(3, 4)});
    t.check(probabilistic_consequence(d, e) && !algebraic_consequence(d, e),
            [] { return "1/2 <= 3/4 taken as algebraic"; });
  }));

  cs.push_back(single("diagonal round trip", [](const Options& o, Rng& rng, Tally& t) {
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 8);
      const auto x = random::any_vector(rng, n);
      t.check(vector_of(diag_of(x)) == x, [&] { return vec_text(x); });
      const auto b = random::boolean_vector(rng, n);
      t.check(diag_of(b).is_projector() && diag_of(b).matrix().is_idempotent(), [&] { return vec_text(b); });
    }
  }));

  cs.push_back(single("commuting projectors exhaustive", [](const Options&, Rng&, Tally& t) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t top = std::size_t{1} << n;
      for (std::size_t pm = 0; pm < top; ++pm)
        for (std::size_t qm = 0; qm < top; ++qm) {
          const auto p = Projector::diagonal(mask_bits(n, pm)), q = Projector::diagonal(mask_bits(n, qm));
          const DiagOp dp(p.matrix().diagonal_entries()), dq(q.matrix().diagonal_entries());
          const auto why = [&] { return "n=" + std::to_string(n) + " p=" + std::to_string(pm) + " q=" + std::to_string(qm); };
          t.check(geometric_consequence(p, q) == algebraic_consequence(dp, dq), why);
          if (!geometric_consequence(p, q) && !geometric_consequence(q, p)) continue;
          t.check(geo_and(p, q).matrix() == alg_and(dp, dq).matrix(), why);
          t.check(geo_or(p, q).matrix() == alg_or(dp, dq).matrix(), why);
          t.check(geo_imp(p, q).matrix() == alg_imp(dp, dq).matrix(), why);
          t.check(geo_neg(p).matrix() == alg_neg(dp).matrix(), why);
        }
    }
  }));

  cs.push_back(single("nested projectors share an eigenbasis", [](const Options& o, Rng& rng, Tally& t) {
    const std::size_t rounds = std::max<std::size_t>(50, o.iters / 10);
    for (std::size_t i = 0; i < rounds; ++i) {
      const auto n = random::uniform(rng, 2, 4);
      const auto kp = random::uniform(rng, 0, n);
      const auto kq = random::uniform(rng, kp, n);
      std::vector<RationalVector> vs;
      for (std::size_t j = 0; j < kq; ++j) vs.push_back(random::any_vector(rng, n, 3, 2));
      const auto small = linalg::Subspace::span(n, std::vector<RationalVector>(vs.begin(), vs.begin() + static_cast<long>(kp)));
      const auto big = linalg::Subspace::span(n, vs);
      auto p = Projector::onto(small), q = Projector::onto(big);
      if (random::coin(rng)) std::swap(p, q);
      const auto why = [&] { return "n=" + std::to_string(n) + " p=" + p.matrix().to_string(); };
      const auto basis = simultaneous_eigenbasis(p, q);
      if (!basis) {
        t.fail(why());
        continue;
      }
      const auto ap = eigenvalues_in(p.matrix(), *basis), aq = eigenvalues_in(q.matrix(), *basis);
      t.check(ap && aq && is_boolean(*ap) && is_boolean(*aq), why);
      if (!ap || !aq) continue;
      const auto check = [&](const Projector& g, const ConceptVector& expect) {
        const auto ev = eigenvalues_in(g.matrix(), *basis);
        t.check(ev && *ev == expect, why);
      };
      check(geo_and(p, q), alg_and(*ap, *aq));
      check(geo_or(p, q), alg_or(*ap, *aq));
      check(geo_imp(p, q), alg_imp(*ap, *aq));
      check(geo_imp(q, p), alg_imp(*aq, *ap));
      check(geo_neg(p), alg_neg(*ap));
    }
  }));

  cs.push_back(single("non-commuting product is not a projector", [](const Options&, Rng&, Tally& t) {
    const auto p = Projector::onto(linalg::Subspace::span(2, {{1, 0}}));
    const auto q = Projector::onto(linalg::Subspace::span(2, {{1, 1}}));
    const auto pq = p.matrix() * q.matrix();
    t.check(!pq.is_idempotent(), [] { return "P∘Q idempotent"; });
    t.check(pq != q.matrix() * p.matrix(), [] { return "P and Q commute"; });
    t.check(!simultaneous_eigenbasis(p, q), [] { return "eigenbasis found for non-nested projectors"; });
  }));

  return cs;
}

// ---------------------------------------------------------------- theorem1

// All partitions of 0..n-1 into at most kmax blocks, as restricted growth strings.
std::vector<PartitionScheme> set_partitions(std::size_t n, std::size_t kmax) {
  std::vector<PartitionScheme> out;
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<std::vector<std::size_t>> blocks(used);
      for (std::size_t j = 0; j < n; ++j) blocks[a[j]].push_back(j);
      out.push_back(PartitionScheme::from_blocks(n, std::move(blocks)));
      return;
    }
    for (std::size_t b = 0; b <= used && b < kmax; ++b) {
      a[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return out;
}

// q with J(p) -> J(q) = 1: full on every block that meets p.
Predicate consequent_of(Rng& rng, const Predicate& p, const PartitionScheme& s) {
  std::vector<bool> q = random::subset(rng, p.size());
  const auto sp = p.support();
  for (const auto& block : s.blocks()) {
    const bool meets = std::any_of(block.begin(), block.end(), [&](std::size_t i) { return sp[i]; });
    if (meets)
      for (auto i : block) q[i] = true;
  }
  return Predicate::from_indicator(q);
}

std::vector<Check> theorem1_checks() {
  std::vector<Check> cs;

  cs.push_back(single("random triples", [](const Options& o, Rng& rng, Tally& t) {
    std::size_t reflections = 0, connectives = 0;
    for (std::size_t i = 0; i < o.iters; ++i) {
      const auto n = random::uniform(rng, 1, 12);
      const auto s = random::partition(rng, n, random::uniform(rng, 1, n));
      const auto p = random::predicate_on_A(rng, n);
      const auto q = i % 2 ? consequent_of(rng, p, s) : random::predicate_on_A(rng, n);
      const auto r = interp::theorem1_suite(p, q, s);
      reflections += r.reflection_premise;
      connectives += r.connective_premise;
      t.check(r.passed(), [&] {
        return "p=" + pred_text(p) + " q=" + pred_text(q) + (r.negation ? "" : " negation") +
               (r.reflection ? "" : " reflection") + (r.connectives ? "" : " connectives");
      });
    }
    t.note(std::to_string(reflections) + " reflection premises, " + std::to_string(connectives) +
           " connective premises");
    if (reflections == 0 || connectives == 0) t.fail("premises never held");
  }));

  cs.push_back(single("constant blocks preserve connectives", [](const Options&, Rng&, Tally& t) {
    std::size_t hyp = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto schemes = set_partitions(n, 3);
      const std::size_t top = std::size_t{1} << n;
      for (const auto& s : schemes)
        for (std::size_t pm = 0; pm < top; ++pm)
          for (std::size_t qm = 0; qm < top; ++qm) {
            const auto p = from_mask(n, pm), q = from_mask(n, qm);
            try {
              hyp += interp::lemma1_check(p, q, s);
              t.check(true, [] { return std::string(); });
            } catch (const std::logic_error& e) {
              t.fail(std::string(e.what()) + " at p=" + pred_text(p) + " q=" + pred_text(q));
            }
          }
    }
    t.note(std::to_string(hyp) + " cases met the hypothesis");
  }));

  cs.push_back(single("varying blocks break connectives", [](const Options&, Rng&, Tally& t) {
    const auto s = PartitionScheme::from_blocks(2, {{0, 1}});
    const Predicate p({TruthValue::Top, TruthValue::Bot}), q({TruthValue::Bot, TruthValue::Top});
    t.check(!interp::lemma1_check(p, q, s), [] { return "hypothesis reported as met"; });
    const auto j_and = interp::interpret(funcmodel::combine(Connective::And, p, q), s);
    t.check(j_and != conceptlogic::alg_and(interp::interpret(p, s), interp::interpret(q, s)),
            [] { return "and preserved without the hypothesis"; });
  }));

  cs.push_back(single("singletons are an isomorphism", [](const Options&, Rng&, Tally& t) {
    const std::size_t n = 8;
    const auto s = PartitionScheme::singletons(n);
    std::vector<Predicate> all;
    std::vector<ConceptVector> js;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      all.push_back(from_mask(n, m));
      js.push_back(interp::interpret(all.back(), s));
      t.check(js.back() == funcmodel::indicator(all.back().support()), [&] { return pred_text(all.back()); });
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      t.check(interp::interpret(funcmodel::negate(all[a]), s) == conceptlogic::alg_neg(js[a]),
              [&] { return pred_text(all[a]); });
      for (std::size_t b = 0; b < all.size(); ++b) {
        const auto why = [&] { return pred_text(all[a]) + ", " + pred_text(all[b]); };
        t.check(interp::interpret(funcmodel::combine(Connective::And, all[a], all[b]), s) ==
                    conceptlogic::alg_and(js[a], js[b]),
                why);
        t.check(interp::interpret(funcmodel::combine(Connective::Or, all[a], all[b]), s) ==
                    conceptlogic::alg_or(js[a], js[b]),
                why);
        t.check(interp::interpret(funcmodel::combine(Connective::IfThen, all[a], all[b]), s) ==
                    conceptlogic::alg_imp(js[a], js[b]),
                why);
      }
    }
  }));

  cs.push_back(single("empty blocks break negation", [](const Options&, Rng&, Tally& t) {
    const auto with = PartitionScheme::from_blocks(4, {{0, 1}, {}, {2, 3}}, {}, true);
    const auto without = PartitionScheme::from_blocks(4, {{0, 1}, {2, 3}});
    const auto p = Predicate::constant(4, TruthValue::Top);
    t.check(!interp::preserves_negation(p, with), [] { return "negation preserved with an empty block"; });
    t.check(interp::preserves_negation(p, without), [] { return "negation fails without the empty block"; });
  }));

  return cs;
}

// -------------------------------------------------------------- transitive

std::vector<Check> transitive_checks() {
  std::vector<Check> cs;

  cs.push_back(single("embeddings multiply to the tensor", [](const Options& o, Rng& rng, Tally& t) {
    const std::size_t rounds = std::max<std::size_t>(100, o.iters / 10);
    for (std::size_t i = 0; i < rounds; ++i) {
      const auto d = random::uniform(rng, 1, 4);
      const auto v = random::any_vector(rng, d), w = random::any_vector(rng, d);
      const auto prod = vecmodel::pointwise(vecmodel::embed_subject(v), vecmodel::embed_object(w));
      t.check(prod == linalg::kron(v, w), [&] { return vec_text(v) + ", " + vec_text(w); });
      const auto verb = random::any_vector(rng, d * d);
      const auto s = vecmodel::product({vecmodel::embed_subject(v), verb, vecmodel::embed_object(w)}, d * d);
      bool ok = true;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) ok = ok && s[a * d + b] == v[a] * verb[a * d + b] * w[b];
      t.check(ok, [&] { return "verb " + vec_text(verb); });
    }
  }));

  cs.push_back(single("asymmetric verb", [](const Options&, Rng&, Tally& t) {
    const auto g = fixtures::load(fixtures::zoo());
    const funcmodel::FunctionalModel f(g.world);
    const auto mc = interp::build_MC(f, g.lexicon, interp::concept_space_of(g.world).working());
    const auto run = [&](const std::string& text) {
      const auto parses = pregroup::parse_sentence(pregroup::tokenize(text), g.lexicon, g.poset, "s", 1);
      if (parses.empty()) throw std::runtime_error("no parse for '" + text + "'");
      const auto value = funcmodel::eval_functional(f, pregroup::meaning_of(parses[0], g.lexicon, g.poset));
      return std::make_pair(std::get<SVector>(value), interp::eval_MC(mc, parses[0].words).value);
    };
    const auto [f1, m1] = run("cats chase dogs");
    const auto [f2, m2] = run("dogs chase cats");
    t.check(f1 != f2, [&] { return "F agrees: " + to_string(f1); });
    t.check(m1 != m2, [&] { return "M_C agrees: " + vec_text(m1); });
  }));

  return cs;
}

const std::map<std::string, std::vector<Check> (*)(), std::less<>>& registry() {
  static const std::map<std::string, std::vector<Check> (*)(), std::less<>> r{
      {"conceptlogic", conceptlogic_checks}, {"funcmodel", funcmodel_checks}, {"pregroup", pregroup_checks},
      {"theorem1", theorem1_checks},         {"transitive", transitive_checks}, {"vmodel", vmodel_checks},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"pregroup", "funcmodel", "vmodel", "conceptlogic", "theorem1", "transitive"};
}

std::vector<Result> run_suite(std::string_view suite, const Options& opts) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown law suite '" + std::string(suite) + "'");
  const auto checks = it->second();
  std::vector<std::future<std::vector<Result>>> jobs;
  for (const auto& c : checks)
    jobs.push_back(std::async(std::launch::async, [&c, &opts, suite] {
      auto rng = random::stream(opts.seed, std::string(suite) + "/" + c.name);
      std::vector<Result> rs;
      try {
        rs = c.run(opts, rng);
      } catch (const std::exception& e) {
        Result r;
        r.name = c.name;
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
        rs = {r};
      }
      for (auto& r : rs) r.suite = suite;
      return rs;
    }));
  std::vector<Result> out;
  for (auto& j : jobs)
    for (auto& r : j.get()) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Result& a, const Result& b) { return a.name < b.name; });
  return out;
}

std::vector<Result> run_all(const Options& opts) {
  std::vector<Result> out;
  for (const auto& s : suite_names())
    for (auto& r : run_suite(s, opts)) out.push_back(std::move(r));
  return out;
}

}  // namespace pgsem::laws
