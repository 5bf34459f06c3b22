#include "jetarc/monomial.hpp"

#include <bit>

#include "jetarc/errors.hpp"

namespace jetarc {

namespace {

constexpr unsigned kMaxExponent = 255;

int restricted_grevlex(const Monomial& a, const Monomial& b, std::uint64_t mask) {
  unsigned da = 0, db = 0;
  for (std::uint64_t m = (a.support() | b.support()) & mask; m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    da += a.exponent(v);
    db += b.exponent(v);
  }
  if (da != db) return da > db ? 1 : -1;
  std::uint64_t m = (a.support() | b.support()) & mask;
  while (m) {
    auto v = static_cast<VarId>(63 - std::countl_zero(m));
    unsigned ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb ? 1 : -1;
    m &= ~(std::uint64_t{1} << v);
  }
  return 0;
}

int restricted_lex(const Monomial& a, const Monomial& b, std::uint64_t mask) {
  for (std::uint64_t m = (a.support() | b.support()) & mask; m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    unsigned ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

int restricted(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b, std::uint64_t mask) {
  return kind == MonomialOrder::Kind::Lex ? restricted_lex(a, b, mask) : restricted_grevlex(a, b, mask);
}

}  // namespace

Monomial Monomial::variable(VarId v, unsigned exponent) {
  Monomial m;
  m.set_exponent(v, exponent);
  return m;
}

void Monomial::set_exponent(VarId v, unsigned exponent) {
  if (v >= kMaxVariables) throw ValidationError("variable id out of range");
  if (exponent > kMaxExponent) throw BudgetExceeded("exponent overflow (max 255)");
  degree_ = degree_ - exps_[v] + exponent;
  exps_[v] = static_cast<std::uint8_t>(exponent);
  if (exponent)
    support_ |= std::uint64_t{1} << v;
  else
    support_ &= ~(std::uint64_t{1} << v);
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (std::uint64_t m = support_; m; m &= m - 1) {
    auto v = std::countr_zero(m);
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q = *this;
  for (std::uint64_t m = divisor.support_; m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    q.set_exponent(v, exps_[v] - divisor.exps_[v]);
  }
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial l = a;
  for (std::uint64_t m = b.support_; m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    if (b.exps_[v] > l.exps_[v]) l.set_exponent(v, b.exps_[v]);
  }
  return l;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial p = a;
  for (std::uint64_t m = b.support_; m; m &= m - 1) {
    auto v = static_cast<VarId>(std::countr_zero(m));
    p.set_exponent(v, unsigned{a.exps_[v]} + b.exps_[v]);
  }
  return p;
}

std::size_t Monomial::hash() const {
  std::size_t h = support_ * 0x9E3779B97F4A7C15ull;
  for (std::uint64_t m = support_; m; m &= m - 1) {
    auto v = std::countr_zero(m);
    h ^= (h << 6) + (h >> 2) + exps_[v] + 0x7F4A7C15u;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  std::uint64_t m = a.support() | b.support();
  while (m) {
    auto v = static_cast<VarId>(63 - std::countl_zero(m));
    unsigned ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb ? 1 : -1;
    m &= ~(std::uint64_t{1} << v);
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) { return restricted_lex(a, b, ~std::uint64_t{0}); }

MonomialOrder MonomialOrder::block(const std::vector<VarId>& eliminated, Kind inner, Kind outer) {
  if (inner == Kind::Block || outer == Kind::Block) throw ValidationError("nested block orders are not supported");
  MonomialOrder order(Kind::Block);
  order.inner_ = inner;
  order.outer_ = outer;
  for (VarId v : eliminated) {
    if (v >= kMaxVariables) throw ValidationError("variable id out of range");
    order.block_mask_ |= std::uint64_t{1} << v;
  }
  return order;
}

MonomialOrder MonomialOrder::product(const std::vector<std::vector<VarId>>& blocks) {
  MonomialOrder order(Kind::Block);
  std::uint64_t used = 0;
  std::vector<std::uint64_t> masks;
  for (const auto& b : blocks) {
    std::uint64_t mask = 0;
    for (VarId v : b) {
      if (v >= kMaxVariables) throw ValidationError("variable id out of range");
      if (used & (std::uint64_t{1} << v)) throw ValidationError("variable in two blocks");
      mask |= std::uint64_t{1} << v;
    }
    used |= mask;
    masks.push_back(mask);
  }
  if (masks.empty()) return grevlex();
  order.block_mask_ = masks.front();
  order.tail_blocks_.assign(masks.begin() + 1, masks.end());
  order.tail_blocks_.push_back(~used);
  return order;
}

MonomialOrder MonomialOrder::weighted(std::vector<unsigned> weights) {
  if (weights.size() > kMaxVariables) throw ValidationError("too many weights");
  for (unsigned w : weights)
    if (w == 0) throw ValidationError("weights must be positive");
  MonomialOrder order(Kind::Weighted);
  order.weights_ = std::make_shared<const std::vector<unsigned>>(std::move(weights));
  return order;
}

unsigned MonomialOrder::degree(const Monomial& m) const {
  if (kind_ != Kind::Weighted) return m.degree();
  unsigned d = 0;
  for (std::uint64_t s = m.support(); s; s &= s - 1) {
    auto v = static_cast<VarId>(std::countr_zero(s));
    d += m.exponent(v) * (v < weights_->size() ? (*weights_)[v] : 1);
  }
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Weighted: {
      unsigned da = degree(a), db = degree(b);
      if (da != db) return da > db ? 1 : -1;
      return grevlex_compare(a, b);
    }
    case Kind::GradedReverseLex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::Block:
      if (int c = restricted(inner_, a, b, block_mask_); c != 0) return c;
      if (tail_blocks_.empty()) return restricted(outer_, a, b, ~block_mask_);
      for (std::uint64_t mask : tail_blocks_)
        if (int c = restricted_grevlex(a, b, mask); c != 0) return c;
      return 0;
  }
  return 0;
}

}  // namespace jetarc
