#include "ade/field_tower.hpp"

#include <utility>

#include "ade/errors.hpp"

namespace ade {

namespace {
constexpr const char* kWhere = "core-algebra/field-tower";
}

FieldTower::FieldTower(int max_height) : max_height_(max_height) {}

const FieldTower::Level& FieldTower::level(int idx) const {
  if (idx < 1 || idx > height()) fail(Errc::Internal, "level index out of range", kWhere);
  return levels_[static_cast<std::size_t>(idx) - 1];
}

long FieldTower::abs_degree(int level) const {
  if (level < 0 || level > height()) fail(Errc::Internal, "level out of range", kWhere);
  long d = 1;
  for (int i = 1; i <= level; ++i) d *= levels_[static_cast<std::size_t>(i) - 1].degree;
  return d;
}

int FieldTower::add_level(std::string name, std::vector<FieldElem> lower_coeffs, bool verified) {
  if (height() >= max_height_)
    fail(Errc::TowerHeightExceeded,
         "tower height bound " + std::to_string(max_height_) + " exceeded", kWhere);
  int base = height();
  int degree = static_cast<int>(lower_coeffs.size());
  if (degree < 2) fail(Errc::Internal, "minimal polynomial degree must be >= 2", kWhere);
  for (auto& c : lower_coeffs)
    if (c.level > base) fail(Errc::TowerLevelMismatch, "minpoly coefficient above base level", kWhere);
  Level lv;
  lv.name = std::move(name);
  lv.degree = degree;
  lv.verified_irreducible = verified;
  lv.minpoly.reserve(lower_coeffs.size());
  for (auto& c : lower_coeffs) lv.minpoly.push_back(lift(c, base));
  levels_.push_back(std::move(lv));
  return height();
}

FieldElem FieldTower::zero(int level) const { return from_rational(Rational(0), level); }
FieldElem FieldTower::one(int level) const { return from_rational(Rational(1), level); }

FieldElem FieldTower::from_rational(const Rational& q, int level) const {
  FieldElem e;
  e.level = 0;
  e.rat = q;
  return lift(e, level);
}

FieldElem FieldTower::from_int(long v, int level) const { return from_rational(Rational(v), level); }

FieldElem FieldTower::generator(int level) const {
  if (level < 1 || level > height()) fail(Errc::Internal, "no generator at level 0", kWhere);
  FieldElem e;
  e.level = level;
  int d = this->level(level).degree;
  e.coef.assign(static_cast<std::size_t>(d), zero(level - 1));
  e.coef[1] = one(level - 1);
  return e;
}

FieldElem FieldTower::lift(const FieldElem& a, int level) const {
  if (a.level > level) fail(Errc::TowerLevelMismatch, "cannot lower a field element", kWhere);
  if (a.level == level) return a;
  FieldElem cur = a;
  for (int l = a.level + 1; l <= level; ++l) {
    FieldElem up;
    up.level = l;
    int d = this->level(l).degree;
    up.coef.assign(static_cast<std::size_t>(d), zero(l - 1));
    up.coef[0] = cur;
    cur = std::move(up);
  }
  return cur;
}

bool FieldTower::is_zero(const FieldElem& a) const {
  if (a.level == 0) return a.rat == 0;
  for (const auto& c : a.coef)
    if (!is_zero(c)) return false;
  return true;
}

bool FieldTower::is_rational(const FieldElem& a) const {
  if (a.level == 0) return true;
  if (!is_rational(a.coef[0])) return false;
  for (std::size_t j = 1; j < a.coef.size(); ++j)
    if (!is_zero(a.coef[j])) return false;
  return true;
}

Rational FieldTower::to_rational(const FieldElem& a) const {
  if (a.level == 0) return a.rat;
  if (!is_rational(a)) fail(Errc::TowerLevelMismatch, "element is not rational", kWhere);
  return to_rational(a.coef[0]);
}

bool FieldTower::equal(const FieldElem& a, const FieldElem& b) const {
  return is_zero(sub(a, b));
}

FieldElem FieldTower::add(const FieldElem& a, const FieldElem& b) const {
  int lv = std::max(a.level, b.level);
  FieldElem x = lift(a, lv), y = lift(b, lv);
  if (lv == 0) {
    x.rat += y.rat;
    return x;
  }
  for (std::size_t j = 0; j < x.coef.size(); ++j) x.coef[j] = add(x.coef[j], y.coef[j]);
  return x;
}

FieldElem FieldTower::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldTower::neg(const FieldElem& a) const {
  FieldElem r = a;
  if (r.level == 0) {
    r.rat = -r.rat;
    return r;
  }
  for (auto& c : r.coef) c = neg(c);
  return r;
}

FieldElem FieldTower::reduce(int level, std::vector<FieldElem> raw) const {
  // raw holds coefficients (at level-1) of a polynomial in the generator of
  // `level`, possibly of degree >= e; fold with x^e = -(lower part).
  const Level& lv = this->level(level);
  int e = lv.degree;
  for (int k = static_cast<int>(raw.size()) - 1; k >= e; --k) {
    FieldElem c = raw[static_cast<std::size_t>(k)];
    if (is_zero(c)) continue;
    raw[static_cast<std::size_t>(k)] = zero(level - 1);
    for (int j = 0; j < e; ++j) {
      raw[static_cast<std::size_t>(k - e + j)] =
          sub(raw[static_cast<std::size_t>(k - e + j)], mul(c, lv.minpoly[static_cast<std::size_t>(j)]));
    }
  }
  raw.resize(static_cast<std::size_t>(e), zero(level - 1));
  FieldElem out;
  out.level = level;
  out.coef = std::move(raw);
  return out;
}

FieldElem FieldTower::mul(const FieldElem& a, const FieldElem& b) const {
  int lv = std::max(a.level, b.level);
  FieldElem x = lift(a, lv), y = lift(b, lv);
  if (lv == 0) {
    x.rat *= y.rat;
    return x;
  }
  std::size_t n = x.coef.size(), m = y.coef.size();
  std::vector<FieldElem> raw(n + m - 1, zero(lv - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x.coef[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (is_zero(y.coef[j])) continue;
      raw[i + j] = add(raw[i + j], mul(x.coef[i], y.coef[j]));
    }
  }
  return reduce(lv, std::move(raw));
}

FieldElem FieldTower::mul_rat(const FieldElem& a, const Rational& q) const {
  FieldElem r = a;
  if (r.level == 0) {
    r.rat *= q;
    return r;
  }
  for (auto& c : r.coef) c = mul_rat(c, q);
  return r;
}

FieldElem FieldTower::inv(const FieldElem& a) const {
  if (is_zero(a)) fail(Errc::ZeroDivisor, "division by zero", kWhere);
  if (a.level == 0) {
    FieldElem r = a;
    r.rat = Rational(1) / r.rat;
    return r;
  }
  // Extended Euclid against the minimal polynomial over level-1.
  int lv = a.level;
  const Level& L = level(lv);
  upoly::UPoly m = L.minpoly;
  m.push_back(one(lv - 1));
  upoly::UPoly r0 = m, r1 = upoly::trimmed(*this, a.coef);
  upoly::UPoly s0 = {zero(lv - 1)}, s1 = {one(lv - 1)};
  while (true) {
    int d1 = upoly::deg(*this, r1);
    if (d1 < 0) fail(Errc::ZeroDivisor, "zero divisor in extension arithmetic", kWhere);
    if (d1 == 0) break;
    auto [q, r2] = upoly::divrem(*this, r0, r1);
    upoly::UPoly s2 = upoly::sub(*this, s0, upoly::mul(*this, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  FieldElem lead = r1[0];
  upoly::UPoly s = upoly::scale(*this, s1, inv(lead));
  auto [q2, rem] = upoly::divrem(*this, s, m);
  (void)q2;
  std::vector<FieldElem> raw = rem;
  return reduce(lv, std::move(raw));
}

FieldElem FieldTower::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem FieldTower::pow(const FieldElem& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElem r = one(a.level), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<Rational> FieldTower::flatten(const FieldElem& a) const {
  if (a.level == 0) return {a.rat};
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(abs_degree(a.level)));
  for (const auto& c : a.coef) {
    auto part = flatten(c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string FieldTower::str(const FieldElem& a) const {
  if (a.level == 0) return rational_str(a.rat);
  const std::string& g = level(a.level).name;
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < a.coef.size(); ++j) {
    if (is_zero(a.coef[j])) continue;
    std::string c = str(a.coef[j]);
    bool composite = c.find('+') != std::string::npos || c.find('*') != std::string::npos ||
                     (c.find('-') != std::string::npos && c.rfind('-') != 0);
    std::string term = composite ? "(" + c + ")" : c;
    if (j >= 1) {
      term = (c == "1" ? "" : term + "*");
      term += g;
      if (j >= 2) term += "^" + std::to_string(j);
    }
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  if (first) out = "0";
  return out;
}

std::vector<std::vector<Rational>> restrict_scalars(const FieldTower& t,
                                                    const std::vector<FieldElem>& row) {
  int lv = 0;
  for (const auto& e : row) lv = std::max(lv, e.level);
  long e = t.abs_degree(lv);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(e),
                                          std::vector<Rational>(row.size(), Rational(0)));
  for (std::size_t i = 0; i < row.size(); ++i) {
    auto coords = t.flatten(t.lift(row[i], lv));
    for (std::size_t j = 0; j < coords.size(); ++j) rows[j][i] = coords[j];
  }
  return rows;
}

namespace upoly {

int deg(const FieldTower& t, const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!t.is_zero(p[static_cast<std::size_t>(i)])) return i;
  return -1;
}

UPoly trimmed(const FieldTower& t, UPoly p) {
  int d = deg(t, p);
  p.resize(static_cast<std::size_t>(d + 1));
  return p;
}

bool is_zero(const FieldTower& t, const UPoly& p) { return deg(t, p) < 0; }

UPoly add(const FieldTower& t, const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), t.zero());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = t.add(r[i], b[i]);
  return trimmed(t, std::move(r));
}

UPoly sub(const FieldTower& t, const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), t.zero());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = t.sub(r[i], b[i]);
  return trimmed(t, std::move(r));
}

UPoly mul(const FieldTower& t, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, t.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (t.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (t.is_zero(b[j])) continue;
      r[i + j] = t.add(r[i + j], t.mul(a[i], b[j]));
    }
  }
  return trimmed(t, std::move(r));
}

UPoly scale(const FieldTower& t, const UPoly& a, const FieldElem& c) {
  UPoly r = a;
  for (auto& x : r) x = t.mul(x, c);
  return trimmed(t, std::move(r));
}

std::pair<UPoly, UPoly> divrem(const FieldTower& t, UPoly a, const UPoly& b) {
  int db = deg(t, b);
  if (db < 0) fail(Errc::ZeroDivisor, "division by zero polynomial", "core-algebra/upoly");
  FieldElem lead_inv = t.inv(b[static_cast<std::size_t>(db)]);
  a = trimmed(t, std::move(a));
  int da = deg(t, a);
  if (da < db) return {{}, std::move(a)};
  UPoly q(static_cast<std::size_t>(da - db + 1), t.zero());
  while (da >= db) {
    FieldElem c = t.mul(a[static_cast<std::size_t>(da)], lead_inv);
    q[static_cast<std::size_t>(da - db)] = c;
    for (int j = 0; j <= db; ++j) {
      std::size_t ai = static_cast<std::size_t>(da - db + j);
      a[ai] = t.sub(a[ai], t.mul(c, b[static_cast<std::size_t>(j)]));
    }
    a = trimmed(t, std::move(a));
    da = deg(t, a);
  }
  return {trimmed(t, std::move(q)), std::move(a)};
}

UPoly monic(const FieldTower& t, UPoly p) {
  int d = deg(t, p);
  if (d < 0) return p;
  FieldElem li = t.inv(p[static_cast<std::size_t>(d)]);
  return scale(t, trimmed(t, std::move(p)), li);
}

UPoly gcd_monic(const FieldTower& t, UPoly a, UPoly b) {
  a = trimmed(t, std::move(a));
  b = trimmed(t, std::move(b));
  while (!is_zero(t, b)) {
    auto [q, r] = divrem(t, a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(t, std::move(a));
}

FieldElem eval(const FieldTower& t, const UPoly& p, const FieldElem& x) {
  FieldElem acc = t.zero(x.level);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    acc = t.add(t.mul(acc, x), p[static_cast<std::size_t>(i)]);
  return acc;
}

UPoly derivative(const FieldTower& t, const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1, t.zero());
  for (std::size_t i = 1; i < p.size(); ++i)
    r[i - 1] = t.mul_rat(p[i], Rational(static_cast<long>(i)));
  return trimmed(t, std::move(r));
}

std::string str(const FieldTower& t, const UPoly& p, const std::string& var) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (t.is_zero(p[i])) continue;
    std::string c = t.str(p[i]);
    bool composite = c.find('+') != std::string::npos || c.find('*') != std::string::npos ||
                     (c.find('-') != std::string::npos && c.rfind('-') != 0);
    std::string term = composite ? "(" + c + ")" : c;
    if (i >= 1) {
      term = (c == "1" ? "" : term + "*");
      term += var;
      if (i >= 2) term += "^" + std::to_string(i);
    }
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  if (first) out = "0";
  return out;
}

}  // namespace upoly

}  // namespace ade
