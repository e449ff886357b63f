#pragma once

#include <gmpxx.h>

#include <string>

namespace gramface {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gramface
