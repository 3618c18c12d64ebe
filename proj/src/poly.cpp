#include "surftutte/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "surftutte/error.hpp"

namespace surftutte {

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(long value) : Poly(mpz_class(value)) {}

Poly::Poly(const mpz_class& value) {
  if (value != 0) terms_.emplace(Exponents{}, value);
}

Poly Poly::variable(std::string_view name) { return monomial(1, {{std::string(name), 1}}); }

Poly Poly::monomial(const mpz_class& coeff, const std::map<std::string, int>& powers) {
  Poly p;
  if (coeff == 0) return p;
  Exponents e;
  for (const auto& [name, exp] : powers) {
    p.vars_.push_back(name);
    e.push_back(exp);
  }
  p.terms_.emplace(std::move(e), coeff);
  p.normalize();
  return p;
}

Poly Poly::from_terms(std::vector<std::string> vars, const std::map<Exponents, mpz_class>& raw) {
  Poly p;
  p.vars_ = std::move(vars);
  for (const auto& [e, c] : raw)
    if (c != 0) p.terms_[e] += c;
  p.normalize();
  return p;
}

int Poly::exponent_of(const Exponents& e, std::string_view name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return 0;
  return e[static_cast<std::size_t>(it - vars_.begin())];
}

int Poly::min_degree(std::string_view name) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const int x = exponent_of(e, name);
    if (first || x < best) best = x;
    first = false;
  }
  return best;
}

int Poly::max_degree(std::string_view name) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const int x = exponent_of(e, name);
    if (first || x > best) best = x;
    first = false;
  }
  return best;
}

mpz_class Poly::coefficient(const std::map<std::string, int>& powers) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, exp] : powers) {
    if (exp == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    e[static_cast<std::size_t>(it - vars_.begin())] = exp;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Poly::align_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  TermMap next;
  for (auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    next.emplace(std::move(f), std::move(c));
  }
  terms_ = std::move(next);
  vars_ = vars;
}

void Poly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  bool all_used = std::all_of(used.begin(), used.end(), [](bool u) { return u; });
  bool sorted = std::is_sorted(vars_.begin(), vars_.end()) &&
                std::adjacent_find(vars_.begin(), vars_.end()) == vars_.end();
  if (all_used && sorted) return;

  // Merge duplicate names and drop unused columns.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) names.push_back(vars_[i]);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i])
      where[i] = static_cast<int>(std::lower_bound(names.begin(), names.end(), vars_[i]) - names.begin());
  TermMap next;
  for (auto& [e, c] : terms_) {
    Exponents f(names.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (where[i] >= 0) f[static_cast<std::size_t>(where[i])] += e[i];
    next[std::move(f)] += c;
  }
  for (auto it = next.begin(); it != next.end();) {
    if (it->second == 0)
      it = next.erase(it);
    else
      ++it;
  }
  terms_ = std::move(next);
  vars_ = std::move(names);
  // A merge of duplicate names can zero out a column; one more pass settles it.
  if (!terms_.empty()) {
    std::vector<bool> again(vars_.size(), false);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) again[i] = true;
    if (!std::all_of(again.begin(), again.end(), [](bool u) { return u; })) normalize();
  } else {
    vars_.clear();
  }
}

static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero()) return *this;
  auto vars = merged_vars(vars_, other.vars_);
  align_to(vars);
  Poly rhs = other;
  rhs.align_to(vars);
  for (auto& [e, c] : rhs.terms_) terms_[e] += c;
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  auto vars = merged_vars(a.vars_, b.vars_);
  Poly x = a, y = b;
  x.align_to(vars);
  y.align_to(vars);
  Poly r;
  r.vars_ = vars;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.terms_[e] += ca * cb;
    }
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

void Poly::add_term(const Exponents& e, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_monomial() || abs(terms_.begin()->second) != 1)
      throw Error(ErrorCode::NonLaurentResult,
                  "negative power of non-invertible element " + to_string());
    Poly inv;
    inv.vars_ = vars_;
    Exponents e = terms_.begin()->first;
    for (int& x : e) x = -x;
    inv.terms_.emplace(std::move(e), terms_.begin()->second);
    return inv.pow(-exponent);
  }
  Poly result(1L), base = *this;
  unsigned n = static_cast<unsigned>(exponent);
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  std::vector<const Poly*> bound(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) bound[i] = &it->second;
  }
  // Powers are cached per (variable, exponent).
  std::vector<std::map<int, Poly>> cache(vars_.size());
  auto power = [&](std::size_t i, int exp) -> const Poly& {
    auto it = cache[i].find(exp);
    if (it != cache[i].end()) return it->second;
    const Poly& b = *bound[i];
    if (exp < 0 && !(b.is_monomial() && abs(b.terms_.begin()->second) == 1))
      throw Error(ErrorCode::NonLaurentResult, "variable " + vars_[i] + " occurs with exponent " +
                                                   std::to_string(exp) + " but is bound to " + b.to_string());
    return cache[i].emplace(exp, b.pow(exp)).first->second;
  };

  Poly result;
  for (const auto& [e, c] : terms_) {
    std::map<std::string, int> free;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && !bound[i]) free[vars_[i]] = e[i];
    Poly term = monomial(c, free);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && bound[i]) term *= power(i, e[i]);
    result += term;
  }
  return result;
}

Poly Poly::scale_exponent(std::string_view name, int divisor) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return *this;
  const auto col = static_cast<std::size_t>(it - vars_.begin());
  Poly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[col] % divisor != 0)
      throw Error(ErrorCode::NonLaurentResult,
                  "exponent of " + std::string(name) + " not divisible by " + std::to_string(divisor));
    Exponents f = e;
    f[col] /= divisor;
    r.terms_.emplace(std::move(f), c);
  }
  r.normalize();
  return r;
}

Poly Poly::rename(std::string_view from, std::string_view to) const {
  Poly r;
  r.vars_ = vars_;
  for (auto& v : r.vars_)
    if (v == from) v = std::string(to);
  r.terms_ = terms_;
  r.normalize();
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    mpz_class mag = abs(c);
    std::string body;
    if (mono.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.get_str() + "*" + mono;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    skip();
    Poly result;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Poly term = parse_term();
      result += sign < 0 ? -term : term;
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::MalformedInput,
                "polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || (s_[start] == '-' && pos_ == start + 1)) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Poly parse_term() {
    mpz_class coeff = 1;
    std::map<std::string, int> powers;
    while (true) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        skip();
        int exp = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          exp = static_cast<int>(parse_integer().get_si());
        }
        powers[name] += exp;
      } else {
        fail("expected factor");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Poly::monomial(coeff, powers);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace surftutte
