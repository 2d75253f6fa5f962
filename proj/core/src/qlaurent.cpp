#include "qca/qlaurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

// Dense integer polynomials in one variable, ascending degree, no trailing
// zeros; the empty vector is zero.
using Poly = std::vector<mpz_class>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

mpz_class poly_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

Poly poly_primitive(Poly p) {
  if (p.empty())
    return p;
  mpz_class g = poly_content(p);
  if (p.back() < 0)
    g = -g;
  for (auto& c : p)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// r <- lc(b)^k * r mod b, computed step by step; only the result up to a
// constant factor matters to the caller.
Poly poly_pseudo_rem(Poly r, const Poly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const mpz_class lr = r.back();
    for (auto& c : r)
      c *= lb;
    for (std::size_t i = 0; i <= db; ++i)
      r[i + shift] -= lr * b[i];
    poly_trim(r);
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.empty())
    return b;
  if (b.empty())
    return a;
  mpz_class c;
  mpz_class ca = poly_content(a), cb = poly_content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = poly_primitive(std::move(a));
  b = poly_primitive(std::move(b));
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_pseudo_rem(a, b);
    a = std::move(b);
    b = poly_primitive(std::move(r));
  }
  a = poly_primitive(std::move(a));
  for (auto& x : a)
    x *= c;
  return a;
}

// Exact quotient a / b in Z[t]; nullopt when b does not divide a.
std::optional<Poly> poly_divexact(const Poly& a, const Poly& b) {
  if (a.empty())
    return Poly{};
  if (a.size() < b.size())
    return std::nullopt;
  Poly r = a;
  const std::size_t db = b.size() - 1;
  Poly quot(a.size() - db);
  const mpz_class& lb = b.back();
  mpz_class qc;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t()))
      return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    quot[shift] = qc;
    for (std::size_t i = 0; i <= db; ++i)
      r[i + shift] -= qc * b[i];
    poly_trim(r);
  }
  if (!r.empty())
    return std::nullopt;
  poly_trim(quot);
  return quot;
}

std::string render_exponent(std::int64_t h) {
  if (h % 2 == 0)
    return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

} // namespace

QLaurent::QLaurent(long constant) {
  if (constant != 0)
    coeffs_.emplace_back(constant);
}

QLaurent::QLaurent(const mpz_class& constant) {
  if (constant != 0)
    coeffs_.push_back(constant);
}

QLaurent::QLaurent(std::int64_t low, std::vector<mpz_class> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void QLaurent::trim() {
  poly_trim(coeffs_);
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const mpz_class& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (first != coeffs_.begin()) {
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
  }
}

QLaurent QLaurent::monomial(std::int64_t h, const mpz_class& c) {
  QLaurent r;
  if (c != 0) {
    r.low_ = h;
    r.coeffs_.push_back(c);
  }
  return r;
}

QLaurent QLaurent::from_terms(const std::vector<Term>& terms) {
  std::map<std::int64_t, mpz_class> acc;
  for (const auto& [h, c] : terms)
    acc[h] += c;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  if (acc.empty())
    return {};
  const std::int64_t lo = acc.begin()->first;
  const std::int64_t hi = acc.rbegin()->first;
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [h, c] : acc)
    dense[static_cast<std::size_t>(h - lo)] = c;
  return QLaurent(lo, std::move(dense));
}

bool QLaurent::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

bool QLaurent::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

mpz_class QLaurent::coeff(std::int64_t h) const {
  if (coeffs_.empty() || h < low_ || h > high())
    return 0;
  return coeffs_[static_cast<std::size_t>(h - low_)];
}

std::size_t QLaurent::num_terms() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

std::vector<QLaurent::Term> QLaurent::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  return out;
}

QLaurent QLaurent::shifted(std::int64_t dh) const {
  QLaurent r = *this;
  if (!r.coeffs_.empty())
    r.low_ += dh;
  return r;
}

QLaurent QLaurent::bar() const {
  if (coeffs_.empty())
    return {};
  std::vector<mpz_class> rev(coeffs_.rbegin(), coeffs_.rend());
  return QLaurent(-high(), std::move(rev));
}

QLaurent QLaurent::scale_exponents(std::int64_t factor) const {
  std::vector<Term> scaled;
  for (auto& [h, c] : terms())
    scaled.emplace_back(h * factor, c);
  return from_terms(scaled);
}

mpz_class QLaurent::at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_)
    s += c;
  return s;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  if (other.coeffs_.empty())
    return *this;
  if (coeffs_.empty())
    return *this = other;
  const std::int64_t lo = std::min(low_, other.low_);
  const std::int64_t hi = std::max(high(), other.high());
  if (lo < low_)
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(other.low_ - lo) + i] += other.coeffs_[i];
  trim();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) { return *this += -other; }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty())
    return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
  }
  return QLaurent(a.low_ + b.low_, std::move(out));
}

QLaurent& QLaurent::operator*=(const QLaurent& other) { return *this = *this * other; }

QLaurent& QLaurent::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_)
    c *= scalar;
  return *this;
}

std::strong_ordering compare(const QLaurent& a, const QLaurent& b) {
  auto ta = a.terms(), tb = b.terms();
  if (auto c = ta.size() <=> tb.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (auto c = ta[i].first <=> tb[i].first; c != 0)
      return c;
    const int s = cmp(ta[i].second, tb[i].second);
    if (s != 0)
      return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string QLaurent::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const mpz_class& c = coeffs_[idx];
    if (c == 0)
      continue;
    const std::int64_t h = low_ + static_cast<std::int64_t>(idx);
    mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    os << mag.get_str() << "*q^(" << render_exponent(h) << ")";
    first = false;
  }
  return os.str();
}

std::string QLaurent::to_pretty_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const mpz_class& c = coeffs_[idx];
    if (c == 0)
      continue;
    const std::int64_t h = low_ + static_cast<std::int64_t>(idx);
    const mpz_class mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (h == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1)
        os << mag.get_str() << "*";
      os << "q";
      if (h != 2)
        os << "^(" << render_exponent(h) << ")";
    }
    first = false;
  }
  return os.str();
}

namespace {

class TermParser {
public:
  explicit TermParser(std::string_view s) : s_(s) {}

  QLaurent parse() {
    std::vector<QLaurent::Term> terms;
    skip_ws();
    if (at_end())
      fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip_ws();
    }
    return QLaurent::from_terms(terms);
  }

private:
  QLaurent::Term parse_term(int sign) {
    mpz_class c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = mpz_class(parse_digits());
      have_coeff = true;
      skip_ws();
    }
    std::int64_t h = 0;
    if (!at_end() && (peek() == '*' || peek() == 'q')) {
      if (peek() == '*') {
        if (!have_coeff)
          fail("dangling '*'");
        get();
        skip_ws();
      }
      expect('q');
      h = 2;
      skip_ws();
      if (!at_end() && peek() == '^')
        h = parse_exponent();
    } else if (!have_coeff) {
      fail("expected a coefficient or 'q'");
    }
    return {h, sign * c};
  }

  // "^(e)" or "^(n/2)" or "^n", returns the half-exponent.
  std::int64_t parse_exponent() {
    expect('^');
    skip_ws();
    const bool paren = !at_end() && peek() == '(';
    if (paren)
      get();
    skip_ws();
    std::int64_t sign = 1;
    if (!at_end() && peek() == '-') {
      get();
      sign = -1;
    }
    std::int64_t num = std::stoll(parse_digits());
    skip_ws();
    std::int64_t h = 2 * num;
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      if (parse_digits() != "2")
        fail("only /2 denominators are allowed");
      h = num;
    }
    skip_ws();
    if (paren)
      expect(')');
    return sign * h;
  }

  std::string parse_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      d.push_back(get());
    if (d.empty())
      fail("expected digits");
    return d;
  }

  void expect(char c) {
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("QLaurent parse error at offset " + std::to_string(pos_) +
                     ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

QLaurent QLaurent::parse(std::string_view text) {
  return TermParser(text).parse();
}

std::optional<QLaurent> exact_divide(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero())
    throw DivisionByZero("exact_divide: division by zero");
  if (a.is_zero())
    return QLaurent{};
  // Both dense vectors have a nonzero constant term, so t^k factors are units
  // and divisibility reduces to divisibility in Z[t].
  auto q = poly_divexact(a.coeffs_, b.coeffs_);
  if (!q)
    return std::nullopt;
  return QLaurent(a.low_ - b.low_, std::move(*q));
}

QLaurent gcd(const QLaurent& a, const QLaurent& b) {
  Poly g = poly_gcd(a.coeffs_, b.coeffs_);
  if (!g.empty() && g.back() < 0)
    for (auto& c : g)
      c = -c;
  return QLaurent(0, std::move(g));
}

QLaurent gauss_binom(std::int64_t r, std::int64_t p, std::int64_t dhalf) {
  if (r < 0)
    throw PreconditionViolation("gauss_binom: r must be nonnegative");
  if (p < 0 || p > r)
    return {};
  p = std::min(p, r - p);
  // Work in t = q^{1/2}-units, then substitute t = q^{dhalf/2}.
  QLaurent acc(1);
  for (std::int64_t i = 1; i <= p; ++i) {
    const std::int64_t up = r - i + 1;
    QLaurent num = QLaurent::monomial(up) - QLaurent::monomial(-up);
    QLaurent den = QLaurent::monomial(i) - QLaurent::monomial(-i);
    auto next = exact_divide(acc * num, den);
    if (!next)
      throw InternalError("gauss_binom: partial product is not a polynomial");
    acc = std::move(*next);
  }
  return acc.scale_exponents(dhalf);
}

// QRational

QRational::QRational(QLaurent value) : num_(std::move(value)), den_(1) {}

QRational::QRational(QLaurent num, QLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw DivisionByZero("QRational: zero denominator");
  normalize();
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  if (!den_.is_monomial()) {
    QLaurent g = gcd(num_, den_);
    if (!g.is_one()) {
      auto n = exact_divide(num_, g);
      auto d = exact_divide(den_, g);
      if (!n || !d)
        throw InternalError("QRational: gcd does not divide");
      num_ = std::move(*n);
      den_ = std::move(*d);
    }
  } else if (den_.leading_coeff() != 1 && den_.leading_coeff() != -1) {
    // Monomial denominator c*q^{h/2}: only the integer content can cancel.
    mpz_class g;
    mpz_class cn = poly_content(num_.coeffs_);
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), den_.coeffs_[0].get_mpz_t());
    if (g != 1) {
      for (auto& c : num_.coeffs_)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.coeffs_[0].get_mpz_t(), den_.coeffs_[0].get_mpz_t(),
                   g.get_mpz_t());
    }
  }
  const std::int64_t shift = den_.low();
  num_ = num_.shifted(-shift);
  den_ = den_.shifted(-shift);
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const QLaurent& QRational::to_laurent() const {
  if (!is_laurent())
    throw NonIntegralQuotient("QRational " + to_string() +
                              " is not a Laurent polynomial");
  return num_;
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.den_ == b.den_) {
    if (a.is_laurent())
      return QRational(a.num_ + b.num_);
    return QRational(a.num_ + b.num_, a.den_);
  }
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  if (a.is_laurent() && b.is_laurent())
    return QRational(a.num_ * b.num_);
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero())
    throw DivisionByZero("QRational: division by zero");
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRational::to_string() const {
  if (is_laurent())
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

QRational qrational_divide(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero())
    throw DivisionByZero("qrational_divide: division by zero");
  return QRational(a, b);
}

} // namespace qca
