#include "folia/field/ratfunc.hpp"

#include "folia/error.hpp"

namespace folia {

RatFunc::RatFunc(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw InputError("zero denominator");
  if (num.nvars() != den.nvars()) throw InputError("rational function variable count mismatch");
  if (num.is_zero()) {
    num_ = Polynomial(num.nvars());
    den_ = Polynomial(num.nvars(), 1);
    return;
  }
  if (!den.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  canonicalize_scalars();
}

void RatFunc::canonicalize_scalars() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.nvars(), 1);
    return;
  }
  // Scale so that both parts are integral with joint content one.
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const Polynomial* p : {&num_, &den_}) {
    for (const auto& [e, c] : p->terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw InputError("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.nvars() != b.nvars()) throw InputError("rational function variable count mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    return RatFunc(a.num_ * b.den_.constant_value() + b.num_ * a.den_.constant_value(),
                   a.den_ * b.den_, RatFunc::Reduced{});
  }
  // Reduce only by the gcd of the denominators before the final normalize.
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial ad = divide_exact(a.den_, g);
  const Polynomial bd = divide_exact(b.den_, g);
  return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.nvars() != b.nvars()) throw InputError("rational function variable count mismatch");
  if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, RatFunc::Reduced{});
  }
  // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  return RatFunc(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                 divide_exact(a.den_, g2) * divide_exact(b.den_, g1), RatFunc::Reduced{});
}

RatFunc operator*(const RatFunc& a, const Rational& c) {
  if (c == 0) return RatFunc(a.nvars());
  return RatFunc(a.num_ * c, a.den_, RatFunc::Reduced{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero rational function");
  return RatFunc(den_, num_, Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero rational function");
  return a * b.inverse();
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return RatFunc(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)),
                 Reduced{});
}

RatFunc RatFunc::partial(std::size_t var) const {
  if (var >= nvars()) throw InputError("variable index out of range");
  if (den_.is_constant()) return RatFunc(num_.derivative(var), den_, Reduced{});
  // (n/d)' = (n' d - n d') / d^2
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::substitute(std::size_t var, const Rational& value) const {
  Polynomial d = den_.substitute(var, value);
  if (d.is_zero()) throw ArithmeticError("denominator vanishes under substitution");
  return RatFunc(num_.substitute(var, value), std::move(d));
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw ArithmeticError("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::extended(std::size_t new_nvars) const {
  return RatFunc(num_.extended(new_nvars), den_.extended(new_nvars), Reduced{});
}

RatFunc RatFunc::truncated(std::size_t new_nvars) const {
  return RatFunc(num_.truncated(new_nvars), den_.truncated(new_nvars), Reduced{});
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  const std::string n = num_.to_string(names);
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  const bool simple_num = num_.num_terms() == 1 && num_.leading_coefficient() > 0;
  const std::string d = den_.to_string(names);
  const bool simple_den = d.find_first_of("* ") == std::string::npos;
  std::string out = simple_num ? n : "(" + n + ")";
  out += "/";
  out += simple_den ? d : "(" + d + ")";
  return out;
}

}  // namespace folia
