#include "cvxlat/rational.hpp"

#include <cctype>

#include "cvxlat/errors.hpp"

namespace cvxlat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace cvxlat
