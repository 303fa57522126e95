#include "latscope/qf.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace latscope {

QF::QF(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

bool QF::is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

mpq_class QF::to_rational() const {
  if (!is_rational()) throw std::domain_error("QF value is irrational");
  return a_;
}

QF& QF::operator+=(const QF& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

QF& QF::operator-=(const QF& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

QF& QF::operator*=(const QF& o) {
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_ + 3 * c_ * o.c_ + 6 * d_ * o.d_;
  mpq_class b = a_ * o.b_ + b_ * o.a_ + 3 * (c_ * o.d_ + d_ * o.c_);
  mpq_class c = a_ * o.c_ + c_ * o.a_ + 2 * (b_ * o.d_ + d_ * o.b_);
  mpq_class d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  d.canonicalize();
  a_ = a;
  b_ = b;
  c_ = c;
  d_ = d;
  return *this;
}

QF QF::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero QF");
  // Multiply by the three nontrivial Galois conjugates; the product of all
  // four is the rational field norm.
  QF t2(a_, -b_, c_, -d_);    // sqrt2 -> -sqrt2
  QF t3(a_, b_, -c_, -d_);    // sqrt3 -> -sqrt3
  QF t23(a_, -b_, -c_, d_);   // both
  QF cof = t2 * t3 * t23;
  QF prod = *this * cof;
  mpq_class norm = prod.to_rational();
  mpq_class inv_norm = 1 / norm;
  return QF(cof.a_ * inv_norm, cof.b_ * inv_norm, cof.c_ * inv_norm,
            cof.d_ * inv_norm);
}

QF& QF::operator/=(const QF& o) { return *this *= o.inverse(); }

int sign_start_precision_bits() {
  static int bits = [] {
    const char* env = std::getenv("LATSCOPE_PRECISION_BITS");
    if (env != nullptr) {
      int v = std::atoi(env);
      if (v >= 16) return v;
    }
    return 128;
  }();
  return bits;
}

namespace {

// Accumulates coef*sqrt(rad) into the running interval [lo, hi].
void add_term(mpfr_t lo, mpfr_t hi, const mpq_class& coef, unsigned long rad,
              mpfr_prec_t prec) {
  if (coef == 0) return;
  mpfr_t s_lo, s_hi, t_lo, t_hi;
  mpfr_inits2(prec, s_lo, s_hi, t_lo, t_hi, (mpfr_ptr) nullptr);
  if (rad == 1) {
    mpfr_set_ui(s_lo, 1, MPFR_RNDD);
    mpfr_set_ui(s_hi, 1, MPFR_RNDU);
  } else {
    mpfr_sqrt_ui(s_lo, rad, MPFR_RNDD);
    mpfr_sqrt_ui(s_hi, rad, MPFR_RNDU);
  }
  if (coef > 0) {
    mpfr_mul_q(t_lo, s_lo, coef.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(t_hi, s_hi, coef.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(t_lo, s_hi, coef.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(t_hi, s_lo, coef.get_mpq_t(), MPFR_RNDU);
  }
  mpfr_add(lo, lo, t_lo, MPFR_RNDD);
  mpfr_add(hi, hi, t_hi, MPFR_RNDU);
  mpfr_clears(s_lo, s_hi, t_lo, t_hi, (mpfr_ptr) nullptr);
}

// Encloses the value in an outward-rounded interval at the given precision.
void enclose(const QF& x, mpfr_t lo, mpfr_t hi, mpfr_prec_t prec) {
  mpfr_set_q(lo, x.c1().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, x.c1().get_mpq_t(), MPFR_RNDU);
  add_term(lo, hi, x.cr2(), 2, prec);
  add_term(lo, hi, x.cr3(), 3, prec);
  add_term(lo, hi, x.cr6(), 6, prec);
}

}  // namespace

int QF::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(a_);
  for (mpfr_prec_t prec = sign_start_precision_bits();; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, (mpfr_ptr) nullptr);
    enclose(*this, lo, hi, prec);
    int result = 0;
    bool decided = false;
    if (mpfr_sgn(lo) > 0) {
      result = 1;
      decided = true;
    } else if (mpfr_sgn(hi) < 0) {
      result = -1;
      decided = true;
    }
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (decided) return result;
    if (prec > (mpfr_prec_t{1} << 24))
      throw std::logic_error("QF::sign failed to separate from zero");
  }
}

mpz_class QF::floor() const {
  if (is_rational()) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num().get_mpz_t(),
               a_.get_den().get_mpz_t());
    return q;
  }
  // Irrational values are never integers, so the interval floors agree at
  // some finite precision.
  for (mpfr_prec_t prec = sign_start_precision_bits();; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, (mpfr_ptr) nullptr);
    enclose(*this, lo, hi, prec);
    mpfr_floor(lo, lo);
    mpfr_floor(hi, hi);
    bool same = mpfr_equal_p(lo, hi) != 0;
    mpz_class result;
    if (same) mpfr_get_z(result.get_mpz_t(), lo, MPFR_RNDN);
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (same) return result;
    if (prec > (mpfr_prec_t{1} << 24))
      throw std::logic_error("QF::floor failed to converge");
  }
}

double QF::to_double() const {
  mpfr_t v, t;
  mpfr_inits2(128, v, t, (mpfr_ptr) nullptr);
  mpfr_set_q(v, a_.get_mpq_t(), MPFR_RNDN);
  auto acc = [&](const mpq_class& coef, unsigned long rad) {
    if (coef == 0) return;
    mpfr_sqrt_ui(t, rad, MPFR_RNDN);
    mpfr_mul_q(t, t, coef.get_mpq_t(), MPFR_RNDN);
    mpfr_add(v, v, t, MPFR_RNDN);
  };
  acc(b_, 2);
  acc(c_, 3);
  acc(d_, 6);
  double out = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clears(v, t, (mpfr_ptr) nullptr);
  return out;
}

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << "QF parse error at offset " << pos << ": " << what << " in \""
       << text << "\"";
    throw std::invalid_argument(os.str());
  }
  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }
  // const ::= "r2" | "r3" | "r6"; returns 0 if next token is not a const.
  int radical() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == 'r' &&
        (text[pos + 1] == '2' || text[pos + 1] == '3' || text[pos + 1] == '6')) {
      int rad = text[pos + 1] - '0';
      pos += 2;
      return rad;
    }
    return 0;
  }
};

}  // namespace

QF QF::parse(std::string_view text) {
  Lexer lex{text};
  mpq_class comp[4];  // 1, r2, r3, r6
  auto slot = [](int rad) { return rad == 2 ? 1 : rad == 3 ? 2 : 3; };
  bool first = true;
  while (true) {
    if (lex.eof()) {
      if (first) lex.fail("empty expression");
      break;
    }
    int term_sign = 1;
    if (!first) {
      char op = lex.peek();
      if (op == '+') {
        ++lex.pos;
      } else if (op == '-') {
        term_sign = -1;
        ++lex.pos;
      } else {
        lex.fail("expected '+' or '-'");
      }
    }
    // term ::= rational | rational "*" const | const
    int rad = lex.radical();
    mpq_class value;
    if (rad != 0) {
      value = 1;
    } else {
      mpz_class num = lex.integer();
      mpz_class den = 1;
      if (lex.peek() == '/') {
        ++lex.pos;
        den = lex.integer();
        if (den <= 0) lex.fail("denominator must be positive");
      }
      value = mpq_class(num, den);
      value.canonicalize();
      if (lex.peek() == '*') {
        ++lex.pos;
        rad = lex.radical();
        if (rad == 0) lex.fail("expected r2, r3 or r6 after '*'");
      }
    }
    if (term_sign < 0) value = -value;
    comp[rad == 0 ? 0 : slot(rad)] += value;
    first = false;
  }
  return QF(comp[0], comp[1], comp[2], comp[3]);
}

std::string QF::str() const {
  struct Part {
    const mpq_class* coef;
    const char* sym;
  };
  const Part parts[4] = {{&a_, ""}, {&b_, "r2"}, {&c_, "r3"}, {&d_, "r6"}};
  std::ostringstream os;
  bool first = true;
  for (const Part& p : parts) {
    if (*p.coef == 0) continue;
    mpq_class coef = *p.coef;
    if (first) {
      if (coef < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    if (p.sym[0] == '\0') {
      os << coef.get_str();
    } else if (coef == 1) {
      os << p.sym;
    } else {
      os << coef.get_str() << "*" << p.sym;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QF& x) { return os << x.str(); }

}  // namespace latscope
