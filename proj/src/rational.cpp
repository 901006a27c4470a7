#include "opreduce/rational.hpp"

#include <cctype>
#include <ostream>

#include "opreduce/errors.hpp"

namespace opreduce {

namespace {

bool looks_like_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!looks_like_integer(text)) {
      throw InputError("invalid rational literal \"" + text + "\"");
    }
    return Rational(mpq_class(mpz_class(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den)) {
    throw InputError("invalid rational literal \"" + text + "\"");
  }
  mpz_class d(den);
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace opreduce
