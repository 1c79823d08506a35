#pragma once

#include <string>
#include <vector>

#include "ade/rational.hpp"

namespace ade {

/// Element of one level of a field tower over Q.  Level 0 holds a rational,
/// level L >= 1 holds the coefficient vector over level L-1 in the power basis
/// of that level's generator.  The vector length always equals the extension
/// degree of the level.
struct FieldElem {
  int level = 0;
  Rational rat;
  std::vector<FieldElem> coef;
};

/// Q extended by a chain of univariate minimal polynomials.  Levels are
/// appended during root finding; values are immutable, the tower itself is a
/// small value type and is cloned whenever a computation branches.
class FieldTower {
 public:
  struct Level {
    std::string name;
    // Lower coefficients c_0..c_{e-1} of the monic minimal polynomial
    // x^e + c_{e-1} x^{e-1} + ... + c_0, living at the base level.
    std::vector<FieldElem> minpoly;
    int degree = 0;
    // Irreducibility is certified over Q for degree <= 4.  Over extension
    // levels only linear factors are split off, so a non-split remainder is
    // accepted with this flag cleared.  Rank computations stay correct when
    // the modulus is merely square-free: the quotient is then a product of
    // fields and restriction of scalars preserves the row space dimension.
    bool verified_irreducible = true;
  };

  explicit FieldTower(int max_height = 3);

  int height() const { return static_cast<int>(levels_.size()); }
  int max_height() const { return max_height_; }
  const Level& level(int idx) const;
  long abs_degree(int level) const;

  /// Appends a level; coefficients must live at the current top level.
  /// Throws TowerHeightExceeded past the configured bound.
  int add_level(std::string name, std::vector<FieldElem> lower_coeffs, bool verified);

  FieldElem zero(int level = 0) const;
  FieldElem one(int level = 0) const;
  FieldElem from_rational(const Rational& q, int level = 0) const;
  FieldElem from_int(long v, int level = 0) const;
  FieldElem generator(int level) const;
  FieldElem lift(const FieldElem& a, int level) const;

  bool is_zero(const FieldElem& a) const;
  bool is_rational(const FieldElem& a) const;
  Rational to_rational(const FieldElem& a) const;
  bool equal(const FieldElem& a, const FieldElem& b) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul_rat(const FieldElem& a, const Rational& q) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, long e) const;

  /// Power-basis coordinates over Q; length abs_degree(a.level).
  std::vector<Rational> flatten(const FieldElem& a) const;
  std::string str(const FieldElem& a) const;

 private:
  FieldElem reduce(int level, std::vector<FieldElem> raw) const;

  std::vector<Level> levels_;
  int max_height_;
};

/// Expands one row of conditions over a degree-e level into e rows over Q.
/// Entries must share a level.  Rank over C of the conjugate family equals the
/// rank over Q of the expanded rows.
std::vector<std::vector<Rational>> restrict_scalars(const FieldTower& t,
                                                    const std::vector<FieldElem>& row);

// Dense univariate polynomials over a fixed tower level; index = power.
namespace upoly {

using UPoly = std::vector<FieldElem>;

int deg(const FieldTower& t, const UPoly& p);
UPoly trimmed(const FieldTower& t, UPoly p);
bool is_zero(const FieldTower& t, const UPoly& p);
UPoly add(const FieldTower& t, const UPoly& a, const UPoly& b);
UPoly sub(const FieldTower& t, const UPoly& a, const UPoly& b);
UPoly mul(const FieldTower& t, const UPoly& a, const UPoly& b);
UPoly scale(const FieldTower& t, const UPoly& a, const FieldElem& c);
/// Quotient and remainder; the divisor's leading coefficient must be invertible.
std::pair<UPoly, UPoly> divrem(const FieldTower& t, UPoly a, const UPoly& b);
UPoly monic(const FieldTower& t, UPoly p);
UPoly gcd_monic(const FieldTower& t, UPoly a, UPoly b);
FieldElem eval(const FieldTower& t, const UPoly& p, const FieldElem& x);
UPoly derivative(const FieldTower& t, const UPoly& p);
std::string str(const FieldTower& t, const UPoly& p, const std::string& var);

}  // namespace upoly

}  // namespace ade
