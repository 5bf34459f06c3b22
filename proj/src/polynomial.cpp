#include "jetarc/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

// Merge two sorted term lists with b scaled by sign.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back(Term{a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableUniverse

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables)
    throw ValidationError("too many variables (" + std::to_string(names_.size()) + ", max " +
                          std::to_string(kMaxVariables) + ")");
  for (VarId i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw ValidationError("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second) throw ValidationError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<VarId> VariableUniverse::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VarId VariableUniverse::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

UniversePtr VariableUniverse::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), more.begin(), more.end());
  return std::make_shared<const VariableUniverse>(std::move(all));
}

bool VariableUniverse::is_prefix_of(const VariableUniverse& other) const {
  if (names_.size() > other.names_.size()) return false;
  return std::equal(names_.begin(), names_.end(), other.names_.begin());
}

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const VariableUniverse>(std::move(names));
}

UniversePtr common_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return a;
  if (a->is_prefix_of(*b)) return b;
  if (b->is_prefix_of(*a)) return a;
  throw ValidationError("universe mismatch");
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw ValidationError("polynomial without a universe");
}

Polynomial Polynomial::constant(UniversePtr universe, const Rational& c) {
  return monomial(std::move(universe), Monomial{}, c);
}

Polynomial Polynomial::variable(UniversePtr universe, VarId v) {
  if (v >= universe->size()) throw ValidationError("unknown variable id " + std::to_string(v));
  return monomial(std::move(universe), Monomial::variable(v), 1);
}

Polynomial Polynomial::monomial(UniversePtr universe, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(universe));
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(UniversePtr universe, std::vector<Term> terms) {
  Polynomial p(std::move(universe));
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

std::uint64_t Polynomial::support() const {
  std::uint64_t s = 0;
  for (const auto& t : terms_) s |= t.monomial.support();
  return s;
}

Polynomial Polynomial::in(const UniversePtr& larger) const {
  if (!universe_->is_prefix_of(*larger)) throw ValidationError("universe mismatch");
  Polynomial p(larger);
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  universe_ = common_universe(universe_, other.universe_);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  universe_ = common_universe(universe_, other.universe_);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  auto universe = common_universe(a.universe_, b.universe_);
  if (a.is_zero() || b.is_zero()) return Polynomial(universe);
  if (b.terms_.size() == 1) {
    Polynomial p(universe);
    p.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_)
      p.terms_.push_back(Term{t.monomial * b.terms_[0].monomial, t.coefficient * b.terms_[0].coefficient});
    return p;  // multiplication by a monomial preserves the order
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back(Term{m, c});
  return Polynomial::from_terms(universe, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return a.universe_ == b.universe_ || a.universe_->is_prefix_of(*b.universe_) ||
         b.universe_->is_prefix_of(*a.universe_);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(universe_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient < 0;
    Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (magnitude != 1 || t.monomial.is_one()) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (std::uint64_t m = t.monomial.support(); m; m &= m - 1) {
      auto v = static_cast<VarId>(std::countr_zero(m));
      if (need_star) out << '*';
      out << universe_->name(v);
      if (unsigned e = t.monomial.exponent(v); e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const UniversePtr& universe) : text_(text), universe_(universe) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      std::size_t at = pos_;
      Integer e(digits());
      if (e <= 0) {
        pos_ = at;
        fail("exponent must be a positive integer");
      }
      if (e > 255) {
        pos_ = at;
        fail("exponent too large");
      }
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(universe_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto v = universe_->find(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(universe_, *v);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const UniversePtr& universe_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const UniversePtr& universe) {
  return Parser(text, universe).parse();
}

// ---------------------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& f, VarId v) {
  if (v >= f.universe()->size()) throw ValidationError("unknown variable id " + std::to_string(v));
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial.exponent(v);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set_exponent(v, e - 1);
    terms.push_back(Term{m, t.coefficient * e});
  }
  return Polynomial::from_terms(f.universe(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment) {
  UniversePtr target = assignment.empty() ? f.universe() : assignment.begin()->second.universe();
  for (const auto& [v, image] : assignment) target = common_universe(target, image.universe());
  for (std::uint64_t m = f.support(); m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    if (!assignment.count(v))
      throw ValidationError("missing assignment for variable '" + f.universe()->name(v) + "'");
  }
  std::map<std::pair<VarId, unsigned>, Polynomial> powers;
  auto power_of = [&](VarId v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(v).in(target).pow(e)).first;
    return it->second;
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::uint64_t m = t.monomial.support(); m; m &= m - 1) {
      auto v = static_cast<VarId>(std::countr_zero(m));
      prod = prod * power_of(v, t.monomial.exponent(v));
    }
    result += prod;
  }
  return result;
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : f.terms()) {
    Rational prod = t.coefficient;
    for (std::uint64_t m = t.monomial.support(); m; m &= m - 1) {
      auto v = static_cast<VarId>(std::countr_zero(m));
      if (v >= point.size()) throw ValidationError("evaluation point too short");
      prod *= power(point[v], t.monomial.exponent(v));
    }
    sum += prod;
  }
  return sum;
}

}  // namespace jetarc
