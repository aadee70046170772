#include "harmonia/field.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace harmonia {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPlucker: return "NotPlucker";
    case ErrorCode::CoincidentArguments: return "CoincidentArguments";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::LineInPlane: return "LineInPlane";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotCoplanar: return "NotCoplanar";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::NotConcurrent: return "NotConcurrent";
    case ErrorCode::CoincidentBase: return "CoincidentBase";
    case ErrorCode::DegenerateAuxiliaries: return "DegenerateAuxiliaries";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::ArgumentOffLine: return "ArgumentOffLine";
    case ErrorCode::IncidentCenterMirror: return "IncidentCenterMirror";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::NotAQuadrangle: return "NotAQuadrangle";
    case ErrorCode::DegenerateTangentData: return "DegenerateTangentData";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::DegeneratePointSet: return "DegeneratePointSet";
    case ErrorCode::PoleOnCurve: return "PoleOnCurve";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::PointOnGenerator: return "PointOnGenerator";
    case ErrorCode::CoplanarGenerators: return "CoplanarGenerators";
    case ErrorCode::PlaneNotThroughGenerator: return "PlaneNotThroughGenerator";
    case ErrorCode::PointNotOnGenerator: return "PointNotOnGenerator";
    case ErrorCode::NotRulesOfR: return "NotRulesOfR";
    case ErrorCode::PointOnSurface: return "PointOnSurface";
    case ErrorCode::PointNotOnSurface: return "PointNotOnSurface";
    case ErrorCode::TangentPlane: return "TangentPlane";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::DegenerateLiftChoice: return "DegenerateLiftChoice";
    case ErrorCode::DegenerateHexagon: return "DegenerateHexagon";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::UnrepresentableElement: return "UnrepresentableElement";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q" || s == "rational" || s == "rationals") return rational();
  if (s.size() > 4 && s.rfind("gf(", 0) == 0 && s.back() == ')') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 3, s.data() + s.size() - 1, p);
    if (ec == std::errc() && ptr == s.data() + s.size() - 1) return prime(p);
  }
  fail(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(Field field, long value) {
  if (field.is_rational())
    v_ = mpq_class(value);
  else
    v_ = Residue{reduce(value, field.modulus()), field.modulus()};
}

Scalar::Scalar(Field field, long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    v_ = std::move(q);
  } else {
    *this = Scalar(field, num) / Scalar(field, den);
  }
}

Scalar::Scalar(mpq_class q) {
  q.canonicalize();
  v_ = std::move(q);
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto mod = s.find("mod");
  try {
    if (mod != std::string::npos) {
      long k = std::stol(s.substr(0, mod));
      long p = std::stol(s.substr(mod + 3));
      if (p <= 0) fail(ErrorCode::ParseError, s);
      return Scalar(Field::prime(static_cast<std::uint32_t>(p)), k);
    }
    std::string trimmed;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    if (!trimmed.empty() && trimmed[0] == '+') trimmed.erase(0, 1);
    mpq_class q;
    if (trimmed.empty() || q.set_str(trimmed, 10) != 0) fail(ErrorCode::ParseError, "bad scalar '" + s + "'");
    if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, s);
    return Scalar(std::move(q));
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "bad scalar '" + s + "'");
  }
}

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&v_)) return Field::prime(r->modulus);
  return Field::rational();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(v_) == 1;
}

int Scalar::sign() const {
  if (std::holds_alternative<Residue>(v_)) fail(ErrorCode::Unsupported, "sign of a prime-field element");
  return sgn(std::get<mpq_class>(v_));
}

const mpq_class& Scalar::rational() const {
  if (std::holds_alternative<Residue>(v_)) fail(ErrorCode::FieldMismatch, "rational() on a prime-field element");
  return std::get<mpq_class>(v_);
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value;
  fail(ErrorCode::FieldMismatch, "residue() on a rational");
}

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index()) fail(ErrorCode::FieldMismatch, field().to_string() + " vs " + o.field().to_string());
  if (auto r = std::get_if<Residue>(&v_); r && r->modulus != std::get<Residue>(o.v_).modulus)
    fail(ErrorCode::FieldMismatch, field().to_string() + " vs " + o.field().to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.v_)) {
    r->value = mod_pow(r->value, r->modulus - 2, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(out.v_);
    q = 1 / q;
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.v_))
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  else
    std::get<mpq_class>(out.v_) = -std::get<mpq_class>(out.v_);
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + std::get<Residue>(o.v_).value) % r->modulus);
  else
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + r->modulus - std::get<Residue>(o.v_).value) % r->modulus);
  else
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto r = std::get_if<Residue>(&v_))
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * std::get<Residue>(o.v_).value % r->modulus);
  else
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (auto r = std::get_if<Scalar::Residue>(&a.v_)) return r->value == std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field());
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value) + " mod " + std::to_string(r->modulus);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, Field f) { return os << f.to_string(); }

}  // namespace harmonia
