#include "qca/torus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

std::string render_exponent_vector(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] + b[i];
  return c;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[i] - b[i];
  return c;
}

Exponent scale(const Exponent& a, std::int64_t k) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = k * a[i];
  return c;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

} // namespace

SkewForm::SkewForm(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_skew_symmetric())
    throw PreconditionViolation("SkewForm: matrix is not skew-symmetric: " +
                                entries_.to_string());
}

GradingMatrix::GradingMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_symmetric())
    throw PreconditionViolation("GradingMatrix: matrix is not symmetric: " +
                                entries_.to_string());
}

bool same_form(const SkewForm& a, const SkewForm& b) { return &a == &b || a == b; }

TorusElement::TorusElement(SkewFormPtr form) : form_(std::move(form)) {
  if (!form_)
    throw PreconditionViolation("TorusElement: null form");
}

TorusElement::TorusElement(SkewFormPtr form, TermMap terms)
    : TorusElement(std::move(form)) {
  for (auto& [e, c] : terms) {
    if (e.size() != form_->dim())
      throw DimensionMismatch("TorusElement: exponent of length " +
                              std::to_string(e.size()) + " in a rank " +
                              std::to_string(form_->dim()) + " torus");
    if (!c.is_zero())
      terms_.emplace(e, std::move(c));
  }
}

TorusElement TorusElement::basis(SkewFormPtr form, Exponent e, QLaurent coeff) {
  TermMap t;
  t.emplace(std::move(e), std::move(coeff));
  return TorusElement(std::move(form), std::move(t));
}

TorusElement TorusElement::constant(SkewFormPtr form, QLaurent c) {
  const std::size_t m = form->dim();
  return basis(std::move(form), Exponent(m, 0), std::move(c));
}

QLaurent TorusElement::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QLaurent{} : it->second;
}

TorusElement TorusElement::scaled(const QLaurent& c) const {
  TorusElement r(form_);
  if (c.is_zero())
    return r;
  for (const auto& [e, x] : terms_)
    r.terms_.emplace(e, x * c);
  return r;
}

TorusElement TorusElement::shifted(std::int64_t dh) const {
  TorusElement r = *this;
  for (auto& [e, x] : r.terms_)
    x = x.shifted(dh);
  return r;
}

TorusElement TorusElement::operator-() const {
  TorusElement r = *this;
  for (auto& [e, x] : r.terms_)
    x = -x;
  return r;
}

void TorusElement::check_same_form(const TorusElement& other, const char* what) const {
  if (!same_form(*form_, *other.form_))
    throw PreconditionViolation(std::string(what) + ": elements of different tori");
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
  check_same_form(other, "TorusElement addition");
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
  return *this += -other;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  a.check_same_form(b, "torus_mul");
  TorusElement r(a.form_);
  for (const auto& [e, ce] : a.terms_) {
    const IntVector row = a.form_->row_of(e);
    for (const auto& [f, cf] : b.terms_) {
      QLaurent c = (ce * cf).shifted(dot(row, f));
      auto [it, inserted] = r.terms_.try_emplace(add(e, f), std::move(c));
      if (!inserted)
        it->second += c;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  return same_form(*a.form_, *b.form_) && a.terms_ == b.terms_;
}

std::strong_ordering compare(const TorusElement& a, const TorusElement& b) {
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0)
    return c;
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0)
      return c;
    if (auto c = compare(ia->second, ib->second); c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

std::string TorusElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << "(" << it->second.to_string() << ")*X^"
       << render_exponent_vector(it->first);
    first = false;
  }
  return os.str();
}

std::string TorusElement::render(const std::string& symbol) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const QLaurent& c = it->second;
    const std::string mono = symbol + "^" + render_exponent_vector(it->first);
    if (c.is_monomial()) {
      const bool negative = c.leading_coeff() < 0;
      const QLaurent mag = negative ? -c : c;
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      if (!mag.is_one())
        os << mag.to_pretty_string() << "*";
      os << mono;
    } else {
      os << (first ? "" : " + ") << "(" << c.to_pretty_string() << ")*" << mono;
    }
    first = false;
  }
  return os.str();
}

TorusElement basis_elem(const SkewFormPtr& form, const Exponent& e) {
  if (e.size() != form->dim())
    throw DimensionMismatch("basis_elem: exponent length differs from form rank");
  return TorusElement::basis(form, e);
}

TorusElement power(const TorusElement& x, std::int64_t n) {
  if (n < 0) {
    if (!x.is_monomial() || !x.leading().second.is_unit())
      throw NonInvertibleEntry("power: negative power of a non-monomial element " +
                               x.to_string());
    const auto& [e, c] = x.leading();
    // (c X^e)^{-1} = c^{-1} X^{-e}, since X^e X^{-e} = 1.
    QLaurent inv = QLaurent::monomial(-c.low(), c.leading_coeff());
    return power(TorusElement::basis(x.form(), scale(e, -1), inv), -n);
  }
  TorusElement result = TorusElement::constant(x.form(), QLaurent(1));
  TorusElement base = x;
  while (n > 0) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

TorusElement bar(const TorusElement& x) {
  TorusElement::TermMap t;
  for (const auto& [e, c] : x.terms())
    t.emplace(e, c.bar());
  return TorusElement(x.form(), std::move(t));
}

TorusElement twisted_bar(const TorusElement& x, const GradingMatrix& sigma) {
  if (sigma.dim() != x.dim())
    throw DimensionMismatch("twisted_bar: grading matrix rank differs");
  TorusElement::TermMap t;
  for (const auto& [e, c] : x.terms())
    t.emplace(e, c.bar().shifted(-sigma.degree(e)));
  return TorusElement(x.form(), std::move(t));
}

std::int64_t deg_sigma(const TorusElement& x, const GradingMatrix& sigma) {
  if (sigma.dim() != x.dim())
    throw DimensionMismatch("deg_sigma: grading matrix rank differs");
  if (x.is_zero())
    throw ZeroElement("deg_sigma: zero element has no degree");
  std::set<std::int64_t> degrees;
  for (const auto& [e, c] : x.terms())
    degrees.insert(sigma.degree(e));
  if (degrees.size() > 1) {
    std::ostringstream os;
    os << "deg_sigma: inhomogeneous element, degrees {";
    bool first = true;
    for (auto d : degrees) {
      os << (first ? "" : ", ") << d;
      first = false;
    }
    os << "}";
    throw Inhomogeneous(os.str());
  }
  return *degrees.begin();
}

std::int64_t d_of_b(const SkewForm& form, const Exponent& b) {
  if (b.size() != form.dim())
    throw DimensionMismatch("d_of_b: vector length differs from form rank");
  const IntVector row = form.row_of(b);
  const std::int64_t g = gcd_of(row);
  if (g == 0)
    throw KernelVector("d_of_b: " + render_exponent_vector(b) + " lies in ker Lambda");
  return g;
}

TorusElement p_element(const SkewFormPtr& form, const Exponent& b, Sign eps,
                       std::int64_t r) {
  if (r < 0)
    throw PreconditionViolation("p_element: r must be nonnegative");
  const std::int64_t d = d_of_b(*form, b);
  const int s = sign_value(eps);
  const Exponent eb = scale(b, s);
  const TorusElement one = TorusElement::constant(form, QLaurent(1));
  TorusElement acc = one;
  for (std::int64_t p = 1; p <= r; ++p) {
    TorusElement factor =
        one + TorusElement::basis(form, eb, QLaurent::monomial(s * (2 * p - 1) * d));
    acc = acc * factor;
  }
  return acc;
}

TorusElement rho_poly(const SkewFormPtr& form, const Exponent& b, Sign eps,
                      const Exponent& e) {
  if (e.size() != form->dim())
    throw DimensionMismatch("rho_poly: exponent length differs from form rank");
  const std::int64_t d = d_of_b(*form, b);
  const std::int64_t lam = (*form)(b, e);
  if (lam > 0)
    throw PositiveDegree("rho_poly: Lambda(b, e) = " + std::to_string(lam) +
                         " is positive");
  const std::int64_t r = -lam / d;
  const Exponent eb = scale(b, sign_value(eps));
  TorusElement::TermMap t;
  Exponent cur = e;
  for (std::int64_t p = 0; p <= r; ++p) {
    t.emplace(cur, gauss_binom(r, p, d));
    cur = add(cur, eb);
  }
  return TorusElement(form, std::move(t));
}

TorusElement solve_left(const TorusElement& a, const TorusElement& n) {
  if (!same_form(*a.form(), *n.form()))
    throw PreconditionViolation("solve_left: elements of different tori");
  if (a.is_zero())
    throw DivisionByZero("solve_left: zero divisor");
  if (n.is_zero())
    return TorusElement(a.form());
  const SkewForm& form = *a.form();
  const std::size_t m = form.dim();

  if (a.is_monomial() && a.leading().second.is_unit()) {
    TorusElement q = power(a, -1) * n;
    return q;
  }

  // Every exact quotient has its bounding box inside
  // [min(n) - min(a), max(n) - max(a)] coordinatewise.
  Exponent lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t nlo = INT64_MAX, nhi = INT64_MIN, alo = INT64_MAX, ahi = INT64_MIN;
    for (const auto& [e, c] : n.terms()) {
      nlo = std::min(nlo, e[i]);
      nhi = std::max(nhi, e[i]);
    }
    for (const auto& [e, c] : a.terms()) {
      alo = std::min(alo, e[i]);
      ahi = std::max(ahi, e[i]);
    }
    lo[i] = nlo - alo;
    hi[i] = nhi - ahi;
    if (lo[i] > hi[i])
      throw NotDivisible("solve_left: support of the dividend is too small");
  }

  std::vector<std::pair<Exponent, IntVector>> divisor_rows;
  for (const auto& [e, c] : a.terms())
    divisor_rows.emplace_back(e, form.row_of(e));

  std::map<Exponent, QRational> rem;
  for (const auto& [e, c] : n.terms())
    rem.emplace(e, QRational(c));
  std::map<Exponent, QRational> quotient;

  const auto& [lead_exp, lead_coeff] = a.leading();
  const IntVector lead_row = form.row_of(lead_exp);
  while (!rem.empty()) {
    const auto& [fr, cr] = *rem.rbegin();
    Exponent g = sub(fr, lead_exp);
    for (std::size_t i = 0; i < m; ++i)
      if (g[i] < lo[i] || g[i] > hi[i])
        throw NotDivisible("solve_left: quotient term X^" + render_exponent_vector(g) +
                           " leaves the admissible box");
    QRational cg = cr / QRational(lead_coeff.shifted(dot(lead_row, g)));
    for (const auto& [e, row] : divisor_rows) {
      QRational delta =
          QRational(a.terms().at(e).shifted(dot(row, g))) * cg;
      Exponent target = add(e, g);
      auto it = rem.find(target);
      if (it == rem.end()) {
        rem.emplace(std::move(target), -delta);
      } else {
        it->second = it->second - delta;
        if (it->second.is_zero())
          rem.erase(it);
      }
    }
    quotient.emplace(std::move(g), std::move(cg));
  }

  TorusElement::TermMap qt;
  for (auto& [e, c] : quotient) {
    if (!c.is_laurent())
      throw NonIntegralQuotient("solve_left: quotient coefficient " + c.to_string() +
                                " at X^" + render_exponent_vector(e) +
                                " is not in Z[q^{+-1/2}]");
    qt.emplace(e, c.num());
  }
  TorusElement q(a.form(), std::move(qt));
  if (!(a * q == n))
    throw InternalError("solve_left: verification a*q == n failed");
  return q;
}

std::vector<Exponent> center_kernel(const SkewForm& form) {
  return kernel_basis(form.matrix());
}

} // namespace qca
