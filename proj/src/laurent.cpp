#include "infgon/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace infgon {

namespace {

std::int64_t grade(const Monomial& m) {
  std::int64_t g = 0;
  for (const auto& [v, e] : m) g += e;
  return g;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  // "greater" comparator: leading (largest) monomial first in the map.
  const std::int64_t gl = grade(lhs), gr = grade(rhs);
  if (gl != gr) return gl > gr;
  auto it = lhs.begin();
  auto jt = rhs.begin();
  while (it != lhs.end() && jt != rhs.end()) {
    if (it->first != jt->first) {
      // The smaller variable is present with nonzero exponent on one side
      // only; positive exponent on the earlier variable wins lexicographically.
      if (it->first < jt->first) return it->second > 0;
      return jt->second < 0;
    }
    if (it->second != jt->second) return it->second > jt->second;
    ++it;
    ++jt;
  }
  if (it != lhs.end()) return it->second > 0;
  if (jt != rhs.end()) return jt->second < 0;
  return false;
}

void LaurentPoly::insert_term(Monomial m, BigInt c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::constant(BigInt c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(const VarId& v) {
  LaurentPoly p;
  p.terms_.emplace(Monomial{{v, 1}}, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, BigInt c) {
  LaurentPoly p;
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [m, c] : q.terms_) r.insert_term(m, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [m, c] : q.terms_) r.insert_term(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      Monomial m = mp;
      for (const auto& [v, e] : mq) {
        auto [it, fresh] = m.emplace(v, e);
        if (!fresh) {
          it->second += e;
          if (it->second == 0) m.erase(it);
        }
      }
      r.insert_term(std::move(m), cp * cq);
    }
  }
  return r;
}

BigInt LaurentPoly::specialize_ones() const {
  BigInt s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool printed = false;
    if (coeff != 1 || m.empty()) {
      out << coeff;
      printed = true;
    }
    for (const auto& [v, e] : m) {
      if (printed) out << "*";
      out << "x[" << v.a << "," << v.b.str() << "]";
      if (e != 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

namespace {

// Per-variable minimum exponent over all terms.
Monomial min_exponents(const LaurentPoly::TermMap& terms) {
  Monomial lo;
  std::map<VarId, bool> seen;
  for (const auto& [m, c] : terms) {
    for (const auto& [v, e] : m) {
      auto it = lo.find(v);
      if (it == lo.end())
        lo[v] = e;
      else
        it->second = std::min(it->second, e);
    }
  }
  // A variable missing from some term has exponent 0 there.
  for (auto& [v, e] : lo) {
    bool everywhere = true;
    for (const auto& [m, c] : terms)
      if (!m.count(v)) {
        everywhere = false;
        break;
      }
    if (!everywhere) e = std::min<std::int64_t>(e, 0);
  }
  return lo;
}

Monomial shift_monomial(const Monomial& m, const Monomial& by, int sign) {
  Monomial r = m;
  for (const auto& [v, e] : by) {
    auto [it, fresh] = r.emplace(v, sign * e);
    if (!fresh) {
      it->second += sign * e;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

LaurentPoly shift_poly(const LaurentPoly& p, const Monomial& by, int sign) {
  LaurentPoly r;
  for (const auto& [m, c] : p.terms())
    r = r + LaurentPoly::monomial(shift_monomial(m, by, sign), c);
  return r;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) fail(ErrorCode::InvalidInput, "division by zero polynomial");
  if (p.is_zero()) return LaurentPoly();

  // Normalize both operands to honest polynomials with per-variable minimum
  // exponent zero; the quotient picks up the monomial difference.
  const Monomial sp = min_exponents(p.terms());
  const Monomial sq = min_exponents(q.terms());
  LaurentPoly pn = shift_poly(p, sp, -1);
  const LaurentPoly qn = shift_poly(q, sq, -1);

  const auto& qlead = *qn.terms().begin();
  LaurentPoly quotient;
  while (!pn.is_zero()) {
    const auto& rlead = *pn.terms().begin();
    // Divide leading terms; failure anywhere means p is not a multiple of q.
    Monomial t = rlead.first;
    for (const auto& [v, e] : qlead.first) {
      auto [it, fresh] = t.emplace(v, -e);
      if (!fresh) {
        it->second -= e;
        if (it->second == 0) t.erase(it);
      }
    }
    for (const auto& [v, e] : t)
      if (e < 0) fail(ErrorCode::NonExactDivision, "leading term not divisible");
    if (rlead.second % qlead.second != 0)
      fail(ErrorCode::NonExactDivision, "leading coefficient not divisible");
    LaurentPoly term = LaurentPoly::monomial(std::move(t), rlead.second / qlead.second);
    quotient = quotient + term;
    pn = pn - term * qn;
  }

  return shift_poly(quotient, shift_monomial(sp, sq, -1), 1);
}

}  // namespace infgon
