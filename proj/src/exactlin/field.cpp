#include "torsionlab/exactlin/field.hpp"

#include <charconv>

#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    bool is_prime(std::uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint32_t reduce(long long n, std::uint32_t p) {
      long long r = n % static_cast<long long>(p);
      if (r < 0) {
        r += p;
      }
      return static_cast<std::uint32_t>(r);
    }

    std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
      std::uint64_t result = 1;
      std::uint64_t base   = a % p;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>(result);
    }
  }  // namespace

  Field Field::gf(std::uint32_t p) {
    if (!is_prime(p) || p > max_prime) {
      throw Error("unsupported field GF(" + std::to_string(p)
                  + "): need a prime <= 97");
    }
    return Field(p);
  }

  Field Field::parse(std::string_view text) {
    if (text == "Q") {
      return rationals();
    }
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
      auto          digits = text.substr(3, text.size() - 4);
      std::uint32_t p      = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) {
        return gf(p);
      }
    }
    throw Error("bad field spec '" + std::string(text) + "'");
  }

  std::string Field::to_string() const {
    return _p == 0 ? "Q" : "GF(" + std::to_string(_p) + ")";
  }

  Scalar::Scalar(Field f, long long n) : _field(f) {
    if (f.is_finite()) {
      _value = reduce(n, f.characteristic());
    } else {
      _value = Rational(n);
    }
  }

  Scalar::Scalar(Field f, Rational const& q) : _field(f) {
    if (f.is_finite()) {
      using boost::multiprecision::cpp_int;
      cpp_int const p   = f.characteristic();
      cpp_int       num = boost::multiprecision::numerator(q) % p;
      cpp_int       den = boost::multiprecision::denominator(q) % p;
      if (den == 0) {
        throw Error("denominator vanishes in " + f.to_string());
      }
      if (num < 0) {
        num += p;
      }
      auto n  = num.convert_to<std::uint32_t>();
      auto d  = den.convert_to<std::uint32_t>();
      auto pp = f.characteristic();
      _value  = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(n) * pow_mod(d, pp - 2, pp) % pp);
    } else {
      _value = q;
    }
  }

  void Scalar::check_same_field(Scalar const& other) const {
    if (_field != other._field) {
      throw FieldMismatch("field mismatch: " + _field.to_string() + " vs "
                          + other._field.to_string());
    }
  }

  bool Scalar::is_zero() const noexcept {
    if (_field.is_finite()) {
      return std::get<std::uint32_t>(_value) == 0;
    }
    return std::get<Rational>(_value) == 0;
  }

  bool Scalar::is_one() const noexcept {
    if (_field.is_finite()) {
      return std::get<std::uint32_t>(_value) == 1;
    }
    return std::get<Rational>(_value) == 1;
  }

  std::uint32_t Scalar::residue() const {
    if (!_field.is_finite()) {
      throw Error("residue() called on a rational scalar");
    }
    return std::get<std::uint32_t>(_value);
  }

  Rational Scalar::rational() const {
    if (_field.is_finite()) {
      return Rational(std::get<std::uint32_t>(_value));
    }
    return std::get<Rational>(_value);
  }

  Scalar Scalar::operator+(Scalar const& other) const {
    check_same_field(other);
    Scalar r(_field);
    if (_field.is_finite()) {
      auto p   = _field.characteristic();
      r._value = (std::get<std::uint32_t>(_value)
                  + std::get<std::uint32_t>(other._value))
                 % p;
    } else {
      r._value = std::get<Rational>(_value) + std::get<Rational>(other._value);
    }
    return r;
  }

  Scalar Scalar::operator-() const {
    Scalar r(_field);
    if (_field.is_finite()) {
      auto p   = _field.characteristic();
      auto v   = std::get<std::uint32_t>(_value);
      r._value = v == 0 ? 0u : p - v;
    } else {
      r._value = Rational(-std::get<Rational>(_value));
    }
    return r;
  }

  Scalar Scalar::operator-(Scalar const& other) const {
    return *this + (-other);
  }

  Scalar Scalar::operator*(Scalar const& other) const {
    check_same_field(other);
    Scalar r(_field);
    if (_field.is_finite()) {
      auto p   = _field.characteristic();
      r._value = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(std::get<std::uint32_t>(_value))
          * std::get<std::uint32_t>(other._value) % p);
    } else {
      r._value = std::get<Rational>(_value) * std::get<Rational>(other._value);
    }
    return r;
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw Error("inverse of zero");
    }
    Scalar r(_field);
    if (_field.is_finite()) {
      auto p   = _field.characteristic();
      r._value = pow_mod(std::get<std::uint32_t>(_value), p - 2, p);
    } else {
      r._value = Rational(1 / std::get<Rational>(_value));
    }
    return r;
  }

  Scalar Scalar::operator/(Scalar const& other) const {
    check_same_field(other);
    return *this * other.inverse();
  }

  bool Scalar::operator==(Scalar const& other) const {
    return _field == other._field && _value == other._value;
  }

  std::strong_ordering Scalar::operator<=>(Scalar const& other) const {
    check_same_field(other);
    if (_field.is_finite()) {
      return std::get<std::uint32_t>(_value)
             <=> std::get<std::uint32_t>(other._value);
    }
    auto const& a = std::get<Rational>(_value);
    auto const& b = std::get<Rational>(other._value);
    if (a < b) {
      return std::strong_ordering::less;
    }
    if (b < a) {
      return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string Scalar::to_string() const {
    if (_field.is_finite()) {
      return std::to_string(std::get<std::uint32_t>(_value));
    }
    return std::get<Rational>(_value).str();
  }

  Scalar parse_scalar(Field f, std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error("bad scalar '" + std::string(text) + "'");
      }
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!f.is_finite() && text.size() > 18) {
        return Scalar(f, Rational(std::string(text)));
      }
      return Scalar(f, parse_int(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!f.is_finite()) {
      Rational q{boost::multiprecision::cpp_int(std::string(num)),
                 boost::multiprecision::cpp_int(std::string(den))};
      return Scalar(f, q);
    }
    auto d = parse_int(den);
    if (d == 0) {
      throw Error("zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(f, Rational(parse_int(num), d));
  }

}  // namespace torsionlab
