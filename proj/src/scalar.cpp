#include "lieschur/scalar.hpp"

#include <cctype>
#include <charconv>
#include <tuple>
#include <utility>

namespace lieschur {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::jacobi_violation: return "JacobiViolation";
    case Errc::duplicate_bracket: return "DuplicateBracket";
    case Errc::not_an_ideal: return "NotAnIdeal";
    case Errc::not_central_ideal: return "NotCentralIdeal";
    case Errc::non_nilpotent: return "NonNilpotent";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::not_maximal_class: return "NotMaximalClass";
    case Errc::generator_search_failed: return "GeneratorSearchFailed";
    case Errc::empty_word: return "EmptyWord";
    case Errc::word_too_short: return "WordTooShort";
    case Errc::tuple_space_too_large: return "TupleSpaceTooLarge";
    case Errc::char_two_field: return "CharTwoField";
    case Errc::abelian_input: return "AbelianInput";
    case Errc::unknown_name: return "UnknownName";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::field_spec_error: return "FieldSpecError";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw Error(Errc::syntax_error, "malformed rational literal '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error(Errc::syntax_error, "malformed rational literal '" + std::string(text) + "'");
  const mpz_class d = parse_integer(den);
  if (d == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

// ---------------------------------------------------------------- ModP

namespace {

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

ModP::ModP(std::int64_t v, std::uint32_t modulus) : value_(v), modulus_(modulus) {
  if (modulus_ != 0) value_ = reduce(v, modulus_);
}

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_)
    throw Error(Errc::field_mismatch, "GF(" + std::to_string(a.modulus_) + ") vs GF(" +
                                          std::to_string(b.modulus_) + ")");
  return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

ModP& ModP::operator+=(const ModP& o) {
  modulus_ = common_modulus(*this, o);
  value_ += o.value_;
  if (modulus_ != 0) value_ = reduce(value_, modulus_);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  modulus_ = common_modulus(*this, o);
  value_ -= o.value_;
  if (modulus_ != 0) value_ = reduce(value_, modulus_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  modulus_ = common_modulus(*this, o);
  if (modulus_ != 0) {
    const auto a = static_cast<std::uint64_t>(reduce(value_, modulus_));
    const auto b = static_cast<std::uint64_t>(reduce(o.value_, modulus_));
    value_ = static_cast<std::int64_t>((a * b) % modulus_);
  } else {
    value_ *= o.value_;
  }
  return *this;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw Error(Errc::division_by_zero, "inverse of zero residue");
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw Error(Errc::field_mismatch, "cannot invert an unbound literal");
  }
  // extended Euclid on (value, p)
  std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return ModP(t0, modulus_);
}

bool operator==(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return reduce(a.value_, p) == reduce(b.value_, p);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- fields

PrimeField PrimeField::make(std::uint64_t p, bool allow_char_two) {
  if (p >= (1ULL << 31))
    throw Error(Errc::field_spec_error, "modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw Error(Errc::field_spec_error, std::to_string(p) + " is not prime");
  if (p == 2 && !allow_char_two)
    throw Error(Errc::field_spec_error,
                "characteristic 2 requires the explicit unsafe-char-2 override");
  return PrimeField(static_cast<std::uint32_t>(p));
}

ModP PrimeField::parse(std::string_view literal) const {
  if (literal.find('/') != std::string_view::npos)
    throw Error(Errc::syntax_error,
                "rational literal '" + std::string(literal) + "' not allowed in " + name());
  if (!is_integer_literal(literal))
    throw Error(Errc::syntax_error, "malformed integer literal '" + std::string(literal) + "'");
  const mpz_class v = parse_integer(literal);
  const mpz_class r = ((v % p_) + p_) % p_;
  return ModP(static_cast<std::int64_t>(r.get_si()), p_);
}

void PrimeField::check(const ModP& x) const {
  if (x.is_bound() && x.modulus() != p_)
    throw Error(Errc::field_mismatch,
                "GF(" + std::to_string(x.modulus()) + ") element in " + name());
}

FieldSpec FieldSpec::parse(std::string_view text, bool allow_char_two) {
  if (text == "Q") return FieldSpec{0};
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    const auto digits = text.substr(3, text.size() - 4);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      // validates primality and the char-2 policy
      const auto field = PrimeField::make(p, allow_char_two);
      return FieldSpec{field.characteristic()};
    }
  }
  throw Error(Errc::field_spec_error, "field must be 'Q' or 'GF(p)', got '" + std::string(text) + "'");
}

}  // namespace lieschur
