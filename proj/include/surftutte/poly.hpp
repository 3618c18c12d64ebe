#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients.
//
// A polynomial stores its variable names in ascending (byte-wise) order and a
// map from integer exponent vectors to nonzero coefficients. Variables that no
// longer occur in any term are dropped after every operation, so two equal
// polynomials always have identical representations and identical
// canonical strings.
//
// Canonical text: terms sorted by total degree ascending, ties broken by
// descending lexicographic order of the exponent vector; each term is
// `coeff*var^exp*...` with coefficient 1 omitted and exponent 1 omitted,
// joined by " + " / " - ". The zero polynomial prints as "0".

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surftutte {

using Exponents = std::vector<int>;

struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Exponents, mpz_class, GradedOrder>;

  Poly() = default;
  Poly(long value);  // NOLINT: implicit integer constants read naturally in formulas
  explicit Poly(const mpz_class& value);

  static Poly variable(std::string_view name);
  static Poly monomial(const mpz_class& coeff, const std::map<std::string, int>& powers);
  // Parses the canonical grammar (and anything close to it: whitespace, a
  // leading sign, repeated variables in a term).
  static Poly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  // Exponent of `name` in `e` (a key of terms()).
  int exponent_of(const Exponents& e, std::string_view name) const;
  int min_degree(std::string_view name) const;
  int max_degree(std::string_view name) const;
  // Coefficient of the monomial with the given powers (0 if absent).
  mpz_class coefficient(const std::map<std::string, int>& powers) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Non-negative powers always; negative powers only for a monomial with a
  // unit coefficient (otherwise NonLaurentResult).
  Poly pow(int exponent) const;
  // Simultaneous substitution; unbound variables pass through unchanged.
  Poly substitute(const std::map<std::string, Poly>& bindings) const;
  // Divides every exponent of `name` by `divisor`; throws NonLaurentResult
  // when some exponent is not divisible.
  Poly scale_exponent(std::string_view name, int divisor) const;
  // Renames `from` to `to` (which must not already occur).
  Poly rename(std::string_view from, std::string_view to) const;

  std::string to_string() const;

  // Adds `coeff` times the monomial with exponent vector `e` over variables().
  // Used by accumulation loops that have already aligned their variables.
  void add_term(const Exponents& e, const mpz_class& coeff);

  // Builds a polynomial over the given (sorted, unique) variables from raw
  // terms; zero coefficients are skipped.
  static Poly from_terms(std::vector<std::string> vars, const std::map<Exponents, mpz_class>& raw);

 private:
  void align_to(const std::vector<std::string>& vars);
  void normalize();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace surftutte
