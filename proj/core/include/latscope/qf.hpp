#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace latscope {

/// Exact element of the real quadratic biextension Q(sqrt2, sqrt3),
/// stored as a + b*sqrt2 + c*sqrt3 + d*sqrt6 with reduced rational
/// components.  Since {1, sqrt2, sqrt3, sqrt6} is a Q-basis, the
/// representation is canonical: component-wise equality is value equality
/// and the value is zero iff all components vanish.
class QF {
 public:
  QF() = default;
  QF(long n) : a_(n) {}  // NOLINT: implicit by design
  QF(const mpz_class& n) : a_(n) {}
  QF(const mpq_class& q) : a_(q) { a_.canonicalize(); }
  QF(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static QF sqrt2() { return QF(0, 1, 0, 0); }
  static QF sqrt3() { return QF(0, 0, 1, 0); }
  static QF sqrt6() { return QF(0, 0, 0, 1); }

  const mpq_class& c1() const { return a_; }
  const mpq_class& cr2() const { return b_; }
  const mpq_class& cr3() const { return c_; }
  const mpq_class& cr6() const { return d_; }

  bool is_zero() const;
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  /// The rational value; throws std::domain_error on irrational input.
  mpq_class to_rational() const;

  QF operator-() const { return QF(-a_, -b_, -c_, -d_); }
  QF& operator+=(const QF& o);
  QF& operator-=(const QF& o);
  QF& operator*=(const QF& o);
  QF& operator/=(const QF& o);

  friend QF operator+(QF x, const QF& y) { return x += y; }
  friend QF operator-(QF x, const QF& y) { return x -= y; }
  friend QF operator*(QF x, const QF& y) { return x *= y; }
  friend QF operator/(QF x, const QF& y) { return x /= y; }
  friend bool operator==(const QF& x, const QF& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QF& x, const QF& y) { return !(x == y); }

  QF inverse() const;

  /// Exact sign of the real value: -1, 0 or +1.  Decided by outward-rounded
  /// interval evaluation at doubling precision; a nonzero value always
  /// separates from 0 at finite precision and zero is recognised by the
  /// component check.
  int sign() const;

  bool operator<(const QF& y) const { return (*this - y).sign() < 0; }
  bool operator<=(const QF& y) const { return (*this - y).sign() <= 0; }
  bool operator>(const QF& y) const { return (*this - y).sign() > 0; }
  bool operator>=(const QF& y) const { return (*this - y).sign() >= 0; }

  /// Largest integer <= value.
  mpz_class floor() const;

  double to_double() const;

  /// Parses the literal grammar used across all interfaces:
  ///   expr ::= term (("+"|"-") term)*
  ///   term ::= rational | rational "*" const | const
  ///   const ::= "r2" | "r3" | "r6",  rational ::= int | int "/" posint
  /// Throws std::invalid_argument with an offset-tagged message.
  static QF parse(std::string_view text);

  /// Canonical literal; QF::parse(x.str()) == x.
  std::string str() const;

 private:
  mpq_class a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const QF& x);

/// Starting precision (bits) for sign refinement; reads
/// LATSCOPE_PRECISION_BITS once, default 128.
int sign_start_precision_bits();

}  // namespace latscope
