#include "liouville/rational.hpp"

#include <cctype>

#include <gmp.h>

#include "liouville/errors.hpp"

namespace liouville {

std::string to_fraction_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_literal(text);
    const Integer den{std::string(q)};
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(p)), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad_literal(text);
    Integer whole = ip.empty() ? Integer(0) : Integer(std::string(ip));
    Integer frac = fp.empty() ? Integer(0) : Integer(std::string(fp));
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(fp.size()));
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(body)) bad_literal(text);
    value = Rational(Integer(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

namespace {

std::optional<Integer> exact_integer_root(const Integer& v, unsigned n) {
  Integer root;
  int exact = mpz_root(root.backend().data(), v.backend().data(), n);
  if (!exact) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& r, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
  if (n == 1) return r;
  if (r.is_zero()) return Rational(0);
  const bool negative = r.sign() < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(r);
  if (negative) num = -num;
  auto pn = exact_integer_root(num, n);
  auto pd = exact_integer_root(boost::multiprecision::denominator(r), n);
  if (!pn || !pd) return std::nullopt;
  Rational out(*pn, *pd);
  return negative ? Rational(-out) : out;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::InvalidDiffeo: return "InvalidDiffeo";
    case ErrorCode::ZeroGerm: return "ZeroGerm";
    case ErrorCode::Undetermined: return "Undetermined";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotLiouville: return "NotLiouville";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::ResonantMultiplier: return "ResonantMultiplier";
    case ErrorCode::HamiltonianDependsOnZ: return "HamiltonianDependsOnZ";
    case ErrorCode::ComponentsDependOnZ: return "ComponentsDependOnZ";
    case ErrorCode::ZeroLinearPart: return "ZeroLinearPart";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace liouville
