#ifndef MHA_SCALAR_HPP
#define MHA_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mha {

// Exact rationals. gmpxx keeps results of arithmetic canonical; values built
// from a numerator/denominator pair go through make_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

// Accepts "3", "-2", "1/3", "-5/10" (reduced on parse).
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

} // namespace mha

#endif // MHA_SCALAR_HPP
