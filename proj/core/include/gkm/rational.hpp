#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gkm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A vector over Q; the length is the torus rank of the ambient context.
using QVector = std::vector<Rational>;

/// Parses "p/q" (reduced or not) or a plain integer string.
Rational parse_rational(const std::string& text);

/// Emits "p" for integers and "p/q" (reduced, q > 0) otherwise.
std::string format_rational(const Rational& q);

bool is_zero(const QVector& v);
QVector negated(const QVector& v);
Rational dot(const QVector& a, const QVector& b);

}  // namespace gkm
