#pragma once

// Outcome of a verification run: the polynomials that were computed and one
// verdict per checked identity. A failing verdict carries a witness (the map
// text and, where relevant, the subgraph mask) that reproduces the failure.

#include <string>
#include <utility>
#include <vector>

#include "surftutte/poly.hpp"

namespace surftutte {

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
  std::string witness;
};

struct PolynomialReport {
  std::string input;
  std::vector<std::pair<std::string, Poly>> polynomials;
  std::vector<Verdict> verdicts;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {}, std::string witness = {});
  // Records lhs == rhs; on failure the detail shows both sides.
  void check_equal(std::string name, const Poly& lhs, const Poly& rhs, const std::string& witness = {});
  void append(const PolynomialReport& other);

  std::string to_text() const;
};

}  // namespace surftutte
