// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "onelap/rational.hpp"

#include <cctype>

#include "onelap/error.hpp"

namespace onelap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateVertexInFace: return "DuplicateVertexInFace";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::MalformedSystem: return "MalformedSystem";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateNorm: return "DegenerateNorm";
    case ErrorCode::NegativeMu: return "NegativeMu";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::EmptyDimension: return "EmptyDimension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::NotAMotif: return "NotAMotif";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + original + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + original + "'");
  }
  if (negative) p = -p;
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::vector<Rational> clear_to_coprime_integers(const std::vector<Rational>& values) {
  Integer lcm_den = 1;
  for (const auto& v : values) {
    if (v != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  Integer g = 0;
  for (const auto& v : values) {
    Integer n = v.get_num() * (lcm_den / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    scaled.push_back(std::move(n));
  }
  if (g == 0) return values;
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto& n : scaled) out.emplace_back(Integer(n / g));
  return out;
}

}  // namespace onelap
