#include "jetarc/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <bit>
#include <string>

#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

using TermList = std::vector<Term>;

TermList sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  TermList t = p.terms();
  if (order.kind() != MonomialOrder::Kind::GradedReverseLex)
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return t;
}


// a[ia..] - c * m * b[ib..], with both inputs sorted by order.
TermList subtract_scaled(const TermList& a, std::size_t ia, const Rational& c, const Monomial& m, const TermList& b,
                         std::size_t ib, const MonomialOrder& order) {
  TermList out;
  out.reserve(a.size() - ia + b.size() - ib);
  std::size_t i = ia, j = ib;
  Monomial bm;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      bm = b[j].monomial * m;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() && have_b) {
    int cmp = order.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{bm, -c * b[j].coefficient});
      ++j;
      load_b();
    } else {
      Rational s = a[i].coefficient - c * b[j].coefficient;
      if (s != 0) out.push_back(Term{bm, std::move(s)});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_b) {
    out.push_back(Term{bm, -c * b[j].coefficient});
    ++j;
    load_b();
  }
  return out;
}

class Reducer {
 public:
  Reducer(const MonomialOrder& order) : order_(order) {}

  // Full reduction of p by the given divisors.
  TermList reduce(TermList p, const std::vector<const TermList*>& divisors) const {
    TermList rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const Monomial& lt = p[pos].monomial;
      const TermList* div = nullptr;
      for (const TermList* d : divisors) {
        const Monomial& dm = d->front().monomial;
        if ((dm.support() & ~lt.support()) == 0 && dm.divides(lt)) {
          div = d;
          break;
        }
      }
      if (!div) {
        rem.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      Rational c = p[pos].coefficient / div->front().coefficient;
      Monomial q = lt.quotient(div->front().monomial);
      p = subtract_scaled(p, pos + 1, c, q, *div, 1, order_);
      pos = 0;
    }
    return rem;
  }

 private:
  const MonomialOrder& order_;
};

// Integer-coefficient term lists keep Buchberger fraction-free; elements are
// primitive with a positive leading coefficient.
struct ZTerm {
  Monomial monomial;
  Integer coefficient;
};
using ZTermList = std::vector<ZTerm>;

void make_primitive(ZTermList& t) {
  if (t.empty()) return;
  Integer g = 0;
  for (const auto& term : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  if (t.front().coefficient < 0) g = -g;
  if (g == 1) return;
  for (auto& term : t) mpz_divexact(term.coefficient.get_mpz_t(), term.coefficient.get_mpz_t(), g.get_mpz_t());
}

ZTermList to_integer(const TermList& t) {
  Integer den = 1;
  for (const auto& term : t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), term.coefficient.get_den_mpz_t());
  ZTermList out;
  out.reserve(t.size());
  for (const auto& term : t) {
    Integer c = den / term.coefficient.get_den();
    out.push_back(ZTerm{term.monomial, c * term.coefficient.get_num()});
  }
  make_primitive(out);
  return out;
}

TermList to_monic(const ZTermList& t) {
  TermList out;
  out.reserve(t.size());
  const Integer& lc = t.front().coefficient;
  for (const auto& term : t) {
    Rational c(term.coefficient, lc);
    c.canonicalize();
    out.push_back(Term{term.monomial, std::move(c)});
  }
  return out;
}

// a·p[ip..] - b·m·d[id..], with both inputs sorted by order.
ZTermList combine(const Integer& a, ZTermList&& p, std::size_t ip, const Integer& b, const Monomial& m,
                  const ZTermList& d, std::size_t id, const MonomialOrder& order) {
  ZTermList out;
  out.reserve(p.size() - ip + d.size() - id);
  bool scale_p = a != 1;
  std::size_t i = ip, j = id;
  Monomial dm;
  if (j < d.size()) dm = d[j].monomial * m;
  while (i < p.size() && j < d.size()) {
    int cmp = order.compare(p[i].monomial, dm);
    if (cmp > 0) {
      out.push_back(std::move(p[i]));
      if (scale_p) out.back().coefficient *= a;
      ++i;
      continue;
    }
    if (cmp < 0) {
      out.push_back(ZTerm{dm, 0});
      mpz_mul(out.back().coefficient.get_mpz_t(), b.get_mpz_t(), d[j].coefficient.get_mpz_t());
      mpz_neg(out.back().coefficient.get_mpz_t(), out.back().coefficient.get_mpz_t());
    } else {
      Integer& c = p[i].coefficient;
      if (scale_p) c *= a;
      mpz_submul(c.get_mpz_t(), b.get_mpz_t(), d[j].coefficient.get_mpz_t());
      if (c != 0) out.push_back(ZTerm{dm, std::move(c)});
      ++i;
    }
    if (++j < d.size()) dm = d[j].monomial * m;
  }
  for (; i < p.size(); ++i) {
    out.push_back(std::move(p[i]));
    if (scale_p) out.back().coefficient *= a;
  }
  for (; j < d.size(); ++j) {
    out.push_back(ZTerm{d[j].monomial * m, 0});
    mpz_mul(out.back().coefficient.get_mpz_t(), b.get_mpz_t(), d[j].coefficient.get_mpz_t());
    mpz_neg(out.back().coefficient.get_mpz_t(), out.back().coefficient.get_mpz_t());
  }
  return out;
}

// Full fraction-free reduction; the result is primitive (or empty).
ZTermList reduce_integer(ZTermList p, const std::vector<const ZTermList*>& divisors, const MonomialOrder& order) {
  ZTermList rem;
  Integer g, a, b;
  unsigned steps = 0;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Monomial& lt = p[pos].monomial;
    const ZTermList* div = nullptr;
    for (const ZTermList* d : divisors) {
      const Monomial& dm = d->front().monomial;
      if ((dm.support() & ~lt.support()) == 0 && dm.divides(lt)) {
        div = d;
        break;
      }
    }
    if (!div) {
      rem.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    const Integer& cd = div->front().coefficient;
    mpz_gcd(g.get_mpz_t(), p[pos].coefficient.get_mpz_t(), cd.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), cd.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), p[pos].coefficient.get_mpz_t(), g.get_mpz_t());
    if (a < 0) {
      a = -a;
      b = -b;
    }
    Monomial q = lt.quotient(div->front().monomial);
    p = combine(a, std::move(p), pos + 1, b, q, *div, 1, order);
    pos = 0;
    if (a != 1)
      for (auto& t : rem) t.coefficient *= a;
    if (++steps % 16 == 0) {
      // Strip the common content of rem and p together.
      Integer c = 0;
      for (const auto& t : rem) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coefficient.get_mpz_t());
      for (const auto& t : p) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coefficient.get_mpz_t());
      }
      if (c > 1) {
        for (auto& t : rem) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
        for (auto& t : p) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  make_primitive(rem);
  return rem;
}

struct Element {
  ZTermList terms;
  Monomial lm;
  unsigned sugar = 0;
  bool active = true;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const Budget& budget) : order_(order), budget_(budget) {}

  // Returns false once the unit ideal is detected.
  bool add_generator(const TermList& t, unsigned sugar) {
    ZTermList z = reduce_integer(to_integer(t), active_divisors(), order_);
    if (z.empty()) return true;
    if (z.front().monomial.is_one()) return false;
    insert(std::move(z), sugar);
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (++processed_ > budget_.max_pairs)
        throw BudgetExceeded("Groebner pair budget exceeded (" + std::to_string(budget_.max_pairs) + " pairs)");
      ZTermList s = reduce_integer(spoly(p), active_divisors(), order_);
      if (s.empty()) continue;
      if (s.front().monomial.is_one()) return false;
      insert(std::move(s), p.sugar);
    }
    return true;
  }

  // Minimal basis interreduced to the reduced basis.
  std::vector<TermList> reduced_basis() const {
    std::vector<const ZTermList*> minimal;
    for (const auto& e : elements_)
      if (e.active) minimal.push_back(&e.terms);
    std::vector<TermList> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const ZTermList*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      // Reduce the tail only: lead first, then the reduced tail scaled alike.
      ZTermList tail(minimal[k]->begin() + 1, minimal[k]->end());
      ZTermList head{minimal[k]->front()};
      TermList monic_head = to_monic(head);
      TermList reduced;
      if (!tail.empty()) {
        Integer lc = minimal[k]->front().coefficient;
        // Reduce lc^-1 · tail exactly in Q via the rational reducer.
        TermList qtail = to_monic_with(tail, lc);
        std::vector<const TermList*> qothers;
        for (const auto* o : others) qothers.push_back(&rational_cache(o));
        reduced = Reducer(order_).reduce(std::move(qtail), qothers);
      }
      monic_head.insert(monic_head.end(), reduced.begin(), reduced.end());
      out.push_back(std::move(monic_head));
    }
    std::sort(out.begin(), out.end(),
              [&](const TermList& a, const TermList& b) { return order_.compare(a.front().monomial, b.front().monomial) < 0; });
    return out;
  }

 private:
  static TermList to_monic_with(const ZTermList& t, const Integer& lc) {
    TermList out;
    for (const auto& term : t) {
      Rational c(term.coefficient, lc);
      c.canonicalize();
      out.push_back(Term{term.monomial, std::move(c)});
    }
    return out;
  }

  const TermList& rational_cache(const ZTermList* z) const {
    auto it = monic_cache_.find(z);
    if (it == monic_cache_.end()) it = monic_cache_.emplace(z, to_monic(*z)).first;
    return it->second;
  }

  std::vector<const ZTermList*> active_divisors() const {
    std::vector<const ZTermList*> d;
    for (const auto& e : elements_)
      if (e.active) d.push_back(&e.terms);
    return d;
  }

  ZTermList spoly(const Pair& p) const {
    const Element& a = elements_[p.i];
    const Element& b = elements_[p.j];
    Monomial ma = p.lcm.quotient(a.lm);
    Monomial mb = p.lcm.quotient(b.lm);
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.terms.front().coefficient.get_mpz_t(), b.terms.front().coefficient.get_mpz_t());
    Integer ca = b.terms.front().coefficient / g, cb = a.terms.front().coefficient / g;
    ZTermList left;
    left.reserve(a.terms.size());
    for (std::size_t k = 1; k < a.terms.size(); ++k)
      left.push_back(ZTerm{a.terms[k].monomial * ma, a.terms[k].coefficient});
    return combine(ca, std::move(left), 0, cb, mb, b.terms, 1, order_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    const Element& a = elements_[i];
    const Element& b = elements_[j];
    unsigned dl = order_.degree(lcm);
    unsigned sa = a.sugar + dl - order_.degree(a.lm);
    unsigned sb = b.sugar + dl - order_.degree(b.lm);
    return std::max(sa, sb);
  }

  // Gebauer–Moeller update.
  void insert(ZTermList t, unsigned sugar) {
    std::size_t h = elements_.size();
    Element e;
    e.lm = t.front().monomial;
    e.terms = std::move(t);
    e.sugar = std::max(sugar, order_.degree(e.lm));
    elements_.push_back(std::move(e));
    const Monomial& lmh = elements_[h].lm;

    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g)
      if (elements_[g].active) {
        Monomial l = Monomial::lcm(lmh, elements_[g].lm);
        c.push_back(Pair{g, h, l, 0});
      }
    std::vector<Pair> d;
    while (!c.empty()) {
      Pair p = std::move(c.back());
      c.pop_back();
      bool keep = lmh.coprime(elements_[p.i].lm);
      if (!keep) {
        keep = true;
        for (const auto& q : c)
          if (q.lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        if (keep)
          for (const auto& q : d)
            if (q.lcm.divides(p.lcm)) {
              keep = false;
              break;
            }
      }
      if (keep) d.push_back(std::move(p));
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      bool drop = lmh.divides(p.lcm) && !(Monomial::lcm(elements_[p.i].lm, lmh) == p.lcm) &&
                  !(Monomial::lcm(lmh, elements_[p.j].lm) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (lmh.coprime(elements_[p.i].lm)) continue;
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      next.push_back(std::move(p));
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (elements_[g].active && lmh.divides(elements_[g].lm)) elements_[g].active = false;
  }

  const MonomialOrder& order_;
  const Budget& budget_;
  std::deque<Element> elements_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
  mutable std::map<const ZTermList*, TermList> monic_cache_;
};

unsigned sugar_of(const Polynomial& p, const MonomialOrder& order) {
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, order.degree(t.monomial));
  return d;
}

Polynomial to_polynomial(const UniversePtr& universe, const TermList& t, const MonomialOrder& order) {
  if (order.kind() == MonomialOrder::Kind::GradedReverseLex) {
    return Polynomial::from_terms(universe, t);
  }
  return Polynomial::from_terms(universe, t);
}

Polynomial tag_polynomial(const UniversePtr& u, VarId t) { return Polynomial::variable(u, t); }

}  // namespace

// ---------------------------------------------------------------------------
// IdealPresentation

IdealPresentation::IdealPresentation(UniversePtr universe, std::vector<Polynomial> generators)
    : universe_(std::move(universe)) {
  for (auto& g : generators) add(g);
}

IdealPresentation IdealPresentation::unit(UniversePtr universe) {
  auto one = Polynomial::constant(universe, 1);
  return IdealPresentation(std::move(universe), {one});
}

bool IdealPresentation::has_unit_generator() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

void IdealPresentation::add(const Polynomial& p) {
  if (p.is_zero()) return;
  if (p.universe() == universe_) {
    generators_.push_back(p);
  } else {
    generators_.push_back(p.in(universe_));
  }
}

IdealPresentation IdealPresentation::in(const UniversePtr& larger) const {
  IdealPresentation out(larger);
  for (const auto& g : generators_) out.add(g);
  return out;
}

IdealPresentation operator+(const IdealPresentation& a, const IdealPresentation& b) {
  auto u = common_universe(a.universe_, b.universe_);
  IdealPresentation out(u);
  for (const auto& g : a.generators_) out.add(g);
  for (const auto& g : b.generators_) out.add(g);
  return out;
}

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(UniversePtr universe, MonomialOrder order, std::vector<std::vector<Term>> ordered)
    : universe_(std::move(universe)), order_(order), ordered_(std::move(ordered)) {
  for (const auto& t : ordered_) leading_.push_back(t.front().monomial);
}

bool GroebnerBasis::is_unit() const { return ordered_.size() == 1 && leading_[0].is_one(); }

std::vector<Polynomial> GroebnerBasis::basis() const {
  std::vector<Polynomial> out;
  out.reserve(ordered_.size());
  for (const auto& t : ordered_) out.push_back(to_polynomial(universe_, t, order_));
  return out;
}

GroebnerBasis groebner_basis(const IdealPresentation& ideal, const MonomialOrder& order, const Budget& budget) {
  const auto& u = ideal.universe();
  auto unit_basis = [&] {
    return GroebnerBasis(u, order, {TermList{Term{Monomial{}, Rational(1)}}});
  };
  if (ideal.has_unit_generator()) return unit_basis();
  Buchberger engine(order, budget);
  std::vector<const Polynomial*> gens;
  for (const auto& g : ideal.generators()) gens.push_back(&g);
  std::sort(gens.begin(), gens.end(), [](const Polynomial* a, const Polynomial* b) {
    if (a->total_degree() != b->total_degree()) return a->total_degree() < b->total_degree();
    return a->size() < b->size();
  });
  for (const Polynomial* g : gens)
    if (!engine.add_generator(sorted_terms(*g, order), sugar_of(*g, order))) return unit_basis();
  if (!engine.run()) return unit_basis();
  GroebnerBasis basis(u, order, engine.reduced_basis());
  for (const auto& g : ideal.generators())
    if (!normal_form(g, basis).is_zero())
      throw InvariantFailure("Groebner basis does not reduce its own generator " + g.to_string());
  return basis;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.universe()->is_prefix_of(*basis.universe()))
    throw ValidationError("universe mismatch in normal form");
  std::vector<const TermList*> divisors;
  for (std::size_t i = 0; i < basis.size(); ++i) divisors.push_back(&basis.ordered_terms(i));
  Reducer r(basis.order());
  TermList rem = r.reduce(sorted_terms(f, basis.order()), divisors);
  return Polynomial::from_terms(basis.universe(), std::move(rem));
}

bool contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

// ---------------------------------------------------------------------------
// Dimension

int max_independent_set(std::uint64_t variables, const std::vector<Monomial>& monomials) {
  std::vector<std::uint64_t> sets;
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
    // A monomial involving a variable outside the set never has its support
    // inside a subset of it.
    if (m.support() & ~variables) continue;
    sets.push_back(m.support());
  }
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto s : sets) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](std::uint64_t t) { return (t & ~s) == 0; });
    if (!redundant) minimal.push_back(s);
  }
  int n = std::popcount(variables);
  int best = n;
  // Smallest hitting set; dimension = n - best.
  auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t forbidden, int count) -> void {
    if (count >= best) return;
    const std::uint64_t* pick = nullptr;
    int pick_size = 65;
    for (const auto& s : minimal) {
      if (s & chosen) continue;
      int avail = std::popcount(s & ~forbidden);
      if (avail == 0) return;
      if (avail < pick_size) {
        pick_size = avail;
        pick = &s;
      }
    }
    if (!pick) {
      best = count;
      return;
    }
    if (count + 1 >= best) return;
    std::uint64_t options = *pick & ~forbidden;
    std::uint64_t excluded = forbidden;
    for (std::uint64_t m = options; m; m &= m - 1) {
      std::uint64_t bit = m & (~m + 1);
      self(self, chosen | bit, excluded, count + 1);
      excluded |= bit;
    }
  };
  rec(rec, 0, 0, 0);
  return n - best;
}

Dimension krull_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) return std::nullopt;
  std::size_t n = basis.universe()->size();
  std::uint64_t vars = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return max_independent_set(vars, basis.leading_monomials());
}

Dimension krull_dimension(const IdealPresentation& ideal, const Budget& budget) {
  if (ideal.is_zero()) return static_cast<int>(ideal.universe()->size());
  return krull_dimension(groebner_basis(ideal, MonomialOrder::grevlex(), budget));
}

// ---------------------------------------------------------------------------
// Ideal operations

std::pair<UniversePtr, VarId> with_tag_variable(const UniversePtr& universe) {
  VarId id = universe->size();
  return {universe->extended({"_t" + std::to_string(id)}), id};
}

GroebnerBasis elimination_basis(const IdealPresentation& i, const std::vector<VarId>& block, const Budget& budget) {
  auto order = MonomialOrder::block(block);
  GroebnerBasis full = groebner_basis(i, order, budget);
  std::vector<TermList> kept;
  for (std::size_t k = 0; k < full.size(); ++k)
    if ((full.leading_monomials()[k].support() & order.block_mask()) == 0) kept.push_back(full.ordered_terms(k));
  return GroebnerBasis(i.universe(), order, std::move(kept));
}

IdealPresentation eliminate(const IdealPresentation& i, const std::vector<VarId>& block, const Budget& budget) {
  if (block.empty()) return i;
  for (VarId v : block)
    if (v >= i.universe()->size()) throw ValidationError("elimination variable outside the universe");
  return elimination_basis(i, block, budget).ideal();
}

namespace {

// Drops the trailing tag variable from the universe of an eliminated ideal.
IdealPresentation restrict_to(const IdealPresentation& eliminated, const UniversePtr& base) {
  IdealPresentation out(base);
  for (const auto& g : eliminated.generators()) out.add(Polynomial::from_terms(base, g.terms()));
  return out;
}

}  // namespace

IdealPresentation intersect(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget) {
  auto base = common_universe(i.universe(), j.universe());
  auto [u, t] = with_tag_variable(base);
  Polynomial tv = tag_polynomial(u, t);
  Polynomial one_minus = Polynomial::constant(u, 1) - tv;
  IdealPresentation combined(u);
  for (const auto& g : i.generators()) combined.add(tv * g.in(u));
  for (const auto& g : j.generators()) combined.add(one_minus * g.in(u));
  return restrict_to(eliminate(combined, {t}, budget), base);
}

IdealPresentation ideal_quotient(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget) {
  auto base = common_universe(i.universe(), j.universe());
  IdealPresentation ii = i.in(base);
  if (j.has_unit_generator()) return ii;
  if (j.is_zero()) return IdealPresentation::unit(base);
  std::optional<IdealPresentation> acc;
  for (const auto& g : j.generators()) {
    IdealPresentation principal(base, {g.in(base)});
    IdealPresentation meet = intersect(ii, principal, budget);
    IdealPresentation q(base);
    for (const auto& h : meet.generators()) q.add(divide_exact(h, g.in(base)));
    acc = acc ? intersect(*acc, q, budget) : q;
  }
  return groebner_basis(*acc, MonomialOrder::grevlex(), budget).ideal();
}

IdealPresentation saturation(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget) {
  auto base = common_universe(i.universe(), j.universe());
  if (j.has_unit_generator()) return groebner_basis(i.in(base), MonomialOrder::grevlex(), budget).ideal();
  if (j.is_zero()) return IdealPresentation::unit(base);
  if (j.generators().size() == 1) {
    auto [u, t] = with_tag_variable(base);
    IdealPresentation extended = i.in(u);
    extended.add(Polynomial::constant(u, 1) - tag_polynomial(u, t) * j.generators()[0].in(u));
    IdealPresentation elim = restrict_to(eliminate(extended, {t}, budget), base);
    return groebner_basis(elim, MonomialOrder::grevlex(), budget).ideal();
  }
  IdealPresentation current = groebner_basis(i.in(base), MonomialOrder::grevlex(), budget).ideal();
  for (;;) {
    IdealPresentation next = ideal_quotient(current, j, budget);
    if (ideal_equal(current, next, budget)) return next;
    current = std::move(next);
  }
}

bool ideal_contains(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget) {
  GroebnerBasis g = groebner_basis(i, MonomialOrder::grevlex(), budget);
  return std::all_of(j.generators().begin(), j.generators().end(),
                     [&](const Polynomial& p) { return contains(g, p); });
}

bool ideal_equal(const IdealPresentation& i, const IdealPresentation& j, const Budget& budget) {
  auto base = common_universe(i.universe(), j.universe());
  auto a = groebner_basis(i.in(base), MonomialOrder::grevlex(), budget).basis();
  auto b = groebner_basis(j.in(base), MonomialOrder::grevlex(), budget).basis();
  return a == b;
}

bool radical_contains(const IdealPresentation& i, const Polynomial& f, const Budget& budget) {
  auto base = common_universe(i.universe(), f.universe());
  auto [u, t] = with_tag_variable(base);
  IdealPresentation extended = i.in(u);
  extended.add(Polynomial::constant(u, 1) - tag_polynomial(u, t) * f.in(u));
  return groebner_basis(extended, MonomialOrder::grevlex(), budget).is_unit();
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ValidationError("division by the zero polynomial");
  auto u = common_universe(f.universe(), g.universe());
  Polynomial rem = f.in(u);
  Polynomial quot(u);
  const Term& lead = g.terms().front();
  while (!rem.is_zero()) {
    const Term& t = rem.terms().front();
    if (!lead.monomial.divides(t.monomial))
      throw InvariantFailure("inexact polynomial division of " + f.to_string() + " by " + g.to_string());
    Polynomial step = Polynomial::monomial(u, t.monomial.quotient(lead.monomial), t.coefficient / lead.coefficient);
    quot += step;
    rem -= step * g.in(u);
  }
  return quot;
}

}  // namespace jetarc
