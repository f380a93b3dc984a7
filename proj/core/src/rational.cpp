#include "hrlab/rational.hpp"

#include "hrlab/error.hpp"

namespace hrlab {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::UsageError, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace hrlab
