// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace onelap {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms with a
/// positive denominator; values built by parse_rational are canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", with an optional leading '-' on p only. Throws
/// Error(ParseError) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// Scales a non-zero vector by a positive factor so that all entries are
/// integers with gcd 1. The zero vector is returned unchanged.
std::vector<Rational> clear_to_coprime_integers(const std::vector<Rational>& values);

}  // namespace onelap
