#include "mha/scalar.hpp"

#include "mha/errors.hpp"

#include <cctype>
#include <string>

namespace mha {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw StructuralError("zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw StructuralError("empty scalar");
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') i = 1;
  bool slash = false;
  bool digit_seen = false;
  for (std::size_t j = i; j < t.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(t[j]))) {
      digit_seen = true;
    } else if (t[j] == '/' && !slash && digit_seen && j + 1 < t.size()) {
      slash = true;
      digit_seen = false;
    } else {
      throw StructuralError("malformed scalar '" + t + "'");
    }
  }
  if (!digit_seen) throw StructuralError("malformed scalar '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  Scalar s;
  if (s.set_str(t, 10) != 0) throw StructuralError("malformed scalar '" + t + "'");
  if (s.get_den() == 0) throw StructuralError("zero denominator in '" + t + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

} // namespace mha
