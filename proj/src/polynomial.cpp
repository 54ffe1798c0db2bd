#include "curveta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "curveta/error.hpp"

namespace curveta {

Poly::Poly(const mpq_class& c) { add_term({0, 0}, c); }

Poly Poly::monomial(int a, int b, const mpq_class& c) {
  Poly p;
  p.add_term({a, b}, c);
  return p;
}

void Poly::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  mpq_class k = c;
  k.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, k);
  if (inserted) return;
  it->second += k;
  if (it->second == 0) terms_.erase(it);
}

mpq_class Poly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::order() const {
  if (is_zero()) return -1;
  int best = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) best = std::min(best, e.first + e.second);
  return best;
}

int Poly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.first + e.second);
  return best;
}

int Poly::degree_x() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.first);
  return best;
}

int Poly::degree_y() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.second);
  return best;
}

int Poly::x_valuation() const {
  if (is_zero()) return 0;
  int best = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) best = std::min(best, e.first);
  return best;
}

int Poly::y_valuation() const {
  if (is_zero()) return 0;
  int best = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) best = std::min(best, e.second);
  return best;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second == d) out.terms_.emplace(e, c);
  return out;
}

Poly Poly::divide_x_power(int k) const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first - k, e.second}, c);
  return out;
}

Poly Poly::divide_y_power(int k) const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first, e.second - k}, c);
  return out;
}

Poly Poly::compose(const Poly& X, const Poly& Y) const {
  std::vector<Poly> xp{Poly(1)}, yp{Poly(1)};
  for (int i = 0; i < degree_x(); ++i) xp.push_back(xp.back() * X);
  for (int i = 0; i < degree_y(); ++i) yp.push_back(yp.back() * Y);
  Poly out;
  for (const auto& [e, c] : terms_) out += (xp[e.first] * yp[e.second]) * c;
  return out;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  auto lead = std::max_element(terms_.begin(), terms_.end(), [](const auto& l, const auto& r) {
    return std::pair(l.first.second, l.first.first) < std::pair(r.first.second, r.first.first);
  });
  mpq_class inv = 1 / lead->second;
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  return out += o;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  return out -= o;
}

Poly Poly::operator-() const { return *this * mpq_class(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return out;
}

Poly Poly::operator*(const mpq_class& c) const {
  if (c == 0) return {};
  mpq_class k = c;
  k.canonicalize();
  Poly out = *this;
  for (auto& [e, coef] : out.terms_) coef *= k;
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, mpq_class>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    return std::pair(l.first.second, l.first.first) > std::pair(r.first.second, r.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(mag.get_str());
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      factors.push_back(k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k));
    };
    var("x", e.first);
    var("y", e.second);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " * " : "") << factors[i];
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << what << " at offset " << pos_ << " in \"" << s_ << "\"";
    throw Error(ErrorCode::ParseError, os.str());
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        acc = acc * mpq_class(1 / d.constant_term());
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  // Juxtaposition such as x^2y(y - x) multiplies.
  bool starts_factor() {
    skip();
    return pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y' || s_[pos_] == '(');
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (k > 10000) fail("exponent too large");
    return base.pow(static_cast<unsigned>(k));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? Poly::x() : Poly::y();
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

mpq_class eval(const UniPoly& f, const mpq_class& t) {
  mpq_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  std::size_t steps = 0;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (++steps > 2'000'000)
      throw Error(ErrorCode::ResourceLimit, "rational root search: coefficient too large");
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<mpq_class> rational_roots(const UniPoly& input) {
  UniPoly f = input;
  trim(f);
  std::set<mpq_class> roots;
  if (f.size() <= 1) return {};
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0) {
    roots.insert(0);
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (f.size() > 1) {
    mpz_class denom_lcm = 1;
    for (const auto& c : f) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f) ints.push_back(mpz_class(c * denom_lcm));
    for (const auto& p : positive_divisors(ints.front()))
      for (const auto& q : positive_divisors(ints.back()))
        for (int sign : {1, -1}) {
          mpq_class t(p * sign, q);
          t.canonicalize();
          if (eval(f, t) == 0) roots.insert(t);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace curveta
