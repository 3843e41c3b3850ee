#include "uplogic/rational.hpp"

#include "uplogic/error.hpp"

namespace uplogic {

Rat rat_frac(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  return Rat(num, den);
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

std::size_t coeff_bits(const Rat& q) {
  return bit_length(rat_num(q)) + bit_length(rat_den(q));
}

std::string rat_str(const Rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

std::optional<Rat> rat_parse(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](BigInt& out) -> bool {
    if (i >= text.size() || !isdigit((unsigned char)text[i])) return false;
    out = 0;
    while (i < text.size() && isdigit((unsigned char)text[i])) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return true;
  };
  BigInt num, den = 1;
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rat q(num, den);
  if (neg) q = -q;
  return q;
}

}  // namespace uplogic
