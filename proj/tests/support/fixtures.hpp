#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qca/pairs.hpp"
#include "qca/seeds.hpp"
#include "qca/torus.hpp"

namespace qca::test {

// The 8 x 4 exchange matrix of the SL_3 example, columns labeled 3..6.
inline IntMatrix sl3_btilde() {
  return {{-1, 0, 0, 0},  {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, 0, 1, -1},
          {1, -1, 0, 1},  {0, 1, -1, 0}, {0, -1, 0, 1}, {0, 0, 0, -1}};
}

inline IntMatrix sl3_lambda() {
  return {{0, 0, -1, -1, -1, 0, 0, 0}, {0, 0, 0, -1, -1, -1, 0, 0},
          {1, 0, 0, 0, -1, 0, 1, 0},   {1, 1, 0, 0, 0, 0, 1, 1},
          {1, 1, 1, 0, 0, 1, 1, 1},    {0, 1, 0, 0, -1, 0, 0, 1},
          {0, 0, -1, -1, -1, 0, 0, 0}, {0, 0, 0, -1, -1, -1, 0, 0}};
}

inline ExchangeMatrix sl3_exchange() { return ExchangeMatrix({3, 4, 5, 6}, sl3_btilde()); }

inline CompatiblePair sl3_pair() { return check_compatible(make_form(sl3_lambda()), sl3_exchange()); }

// Parses expansions written like
//   "Y^{(1,-3)} + (q+1+q^{-1})(Y^{(0,-3)} + Y^{(-1,0)}) + (q^{3/2} + q^{-3/2}) Y^{(-2,0)}"
// into an element of the torus over `form`. A parenthesised group is a
// coefficient unless it mentions the basis symbol.
class ExpansionParser {
public:
  ExpansionParser(SkewFormPtr form, std::string_view text, char symbol = 'Y')
      : form_(std::move(form)), symbol_(symbol) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        s_.push_back(c == '{' ? '(' : c == '}' ? ')' : c);
  }

  TorusElement parse() {
    TorusElement x = sum();
    if (pos_ != s_.size())
      fail("trailing input");
    return x;
  }

private:
  TorusElement sum() {
    TorusElement x = product();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const bool minus = s_[pos_++] == '-';
      TorusElement y = product();
      x += minus ? -y : y;
    }
    return x;
  }

  TorusElement product() {
    TorusElement x = TorusElement::constant(form_, QLaurent(1));
    bool any = false;
    while (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != '-' && s_[pos_] != ')') {
      if (s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      x = x * factor();
      any = true;
    }
    if (!any)
      fail("empty product");
    return x;
  }

  TorusElement factor() {
    if (s_[pos_] == symbol_)
      return monomial();
    if (s_[pos_] == '(') {
      const std::size_t close = matching(pos_);
      const std::string inner = s_.substr(pos_ + 1, close - pos_ - 1);
      if (inner.find(symbol_) == std::string::npos) {
        pos_ = close + 1;
        return TorusElement::constant(form_, QLaurent::parse(inner));
      }
      ++pos_;
      TorusElement x = sum();
      expect(')');
      return x;
    }
    // a bare integer coefficient
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end])))
      ++end;
    if (end == pos_)
      fail("expected a factor");
    const std::string digits = s_.substr(pos_, end - pos_);
    pos_ = end;
    return TorusElement::constant(form_, QLaurent::parse(digits));
  }

  TorusElement monomial() {
    // both "Y^{(a,b)}" and "Y^(a,b)"
    expect(symbol_);
    expect('^');
    expect('(');
    const bool braced = pos_ < s_.size() && s_[pos_] == '(';
    if (braced)
      ++pos_;
    Exponent e;
    for (;;) {
      std::size_t used = 0;
      e.push_back(std::stoll(s_.substr(pos_), &used));
      pos_ += used;
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    if (braced)
      expect(')');
    return basis_elem(form_, e);
  }

  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      depth += s_[i] == '(' ? 1 : s_[i] == ')' ? -1 : 0;
      if (depth == 0)
        return i;
    }
    fail("unbalanced parentheses");
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("expansion parse error at " + std::to_string(pos_) + ": " + what +
                             " in \"" + s_ + "\"");
  }

  SkewFormPtr form_;
  char symbol_;
  std::string s_;
  std::size_t pos_ = 0;
};

inline TorusElement parse_expansion(const SkewFormPtr& form, std::string_view text) {
  return ExpansionParser(form, text).parse();
}

struct Rank2Golden {
  const char* type;
  std::int64_t b, c;
  // Y_3, Y_4, ... up to the last printed non-periodic variable.
  std::vector<const char*> expansions;
  // Index p with Y_p = Y_1 (and Y_{p+1} = Y_2).
  std::size_t period;
};

inline std::vector<Rank2Golden> rank2_goldens() {
  return {
      {"A2", 1, 1,
       {"Y^{(-1,1)} + Y^{(-1,0)}",
        "Y^{(0,-1)} + Y^{(-1,-1)} + Y^{(-1,0)}",
        "Y^{(1,-1)} + Y^{(0,-1)}"},
       6},
      {"B2", 1, 2,
       {"Y^{(-1,2)} + Y^{(-1,0)}",
        "Y^{(0,-1)} + Y^{(-1,-1)} + Y^{(-1,1)}",
        "Y^{(1,-2)} + (q^{1/2} + q^{-1/2}) Y^{(0,-2)} + Y^{(-1,-2)} + Y^{(-1,0)}",
        "Y^{(1,-1)} + Y^{(0,-1)}"},
       7},
      {"G2", 1, 3,
       {"Y^{(-1,3)} + Y^{(-1,0)}",
        "Y^{(0,-1)} + Y^{(-1,-1)} + Y^{(-1,2)}",
        "Y^{(1,-3)} + (q+1+q^{-1})(Y^{(0,-3)} + Y^{(-1,0)} + Y^{(-1,-3)})"
        " + Y^{(-2,3)} + (q^{3/2} + q^{-3/2}) Y^{(-2,0)} + Y^{(-2,-3)}",
        "Y^{(1,-2)} + (q^{1/2} + q^{-1/2}) Y^{(0,-2)} + Y^{(-1,-2)} + Y^{(-1,1)}",
        "Y^{(2,-3)} + (q+1+q^{-1})(Y^{(1,-3)} + Y^{(0,-3)}) + Y^{(-1,-3)} + Y^{(-1,0)}",
        "Y^{(1,-1)} + Y^{(0,-1)}"},
       9},
  };
}

// Y_1, ..., Y_count of the rank 2 algebra: Y_{p+2} is the variable created by
// the p-th of the alternating mutations mu_1, mu_2, mu_1, ...
inline std::vector<TorusElement> rank2_sequence(std::int64_t b, std::int64_t c,
                                                std::size_t count) {
  QuantumSeed s = initial_seed(rank2_pair(b, c));
  std::vector<TorusElement> ys{s.x(1), s.x(2)};
  for (std::size_t p = 3; p <= count; ++p) {
    const std::size_t k = p % 2 ? 1 : 2;
    s = mutate(s, k);
    ys.push_back(s.x(k));
  }
  return ys;
}

} // namespace qca::test
