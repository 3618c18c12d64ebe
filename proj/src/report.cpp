#include "surftutte/report.hpp"

#include <algorithm>

namespace surftutte {

bool PolynomialReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

void PolynomialReport::check(std::string name, bool ok, std::string detail, std::string witness) {
  verdicts.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail), ok ? std::string{} : std::move(witness)});
}

void PolynomialReport::check_equal(std::string name, const Poly& lhs, const Poly& rhs, const std::string& witness) {
  const bool ok = lhs == rhs;
  check(std::move(name), ok, ok ? std::string{} : "lhs = " + lhs.to_string() + "\nrhs = " + rhs.to_string(), witness);
}

void PolynomialReport::append(const PolynomialReport& other) {
  polynomials.insert(polynomials.end(), other.polynomials.begin(), other.polynomials.end());
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

std::string PolynomialReport::to_text() const {
  std::string out;
  for (const auto& [name, p] : polynomials) out += name + " = " + p.to_string() + "\n";
  for (const auto& v : verdicts) {
    out += v.name + ": " + (v.pass ? "PASS" : "FAIL") + "\n";
    if (!v.pass) {
      if (!v.detail.empty()) out += v.detail + "\n";
      if (!v.witness.empty()) out += "witness:\n" + v.witness;
      if (!v.witness.empty() && v.witness.back() != '\n') out += "\n";
    }
  }
  return out;
}

}  // namespace surftutte
