#ifndef TORSIONLAB_EXACTLIN_FIELD_HPP_
#define TORSIONLAB_EXACTLIN_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace torsionlab {

  using Rational = boost::multiprecision::cpp_rational;

  //! A prime field GF(p) with p <= 97, or the rationals.
  class Field {
   public:
    static constexpr std::uint32_t max_prime = 97;

    //! Throws Error unless p is a prime no larger than max_prime.
    static Field gf(std::uint32_t p);
    static Field rationals() noexcept {
      return Field(0);
    }
    //! Accepts "GF(p)" or "Q".
    static Field parse(std::string_view text);

    bool is_finite() const noexcept {
      return _p != 0;
    }
    //! 0 for Q.
    std::uint32_t characteristic() const noexcept {
      return _p;
    }
    //! Number of elements, empty for Q.
    std::optional<std::uint64_t> order() const noexcept {
      if (_p == 0) {
        return std::nullopt;
      }
      return _p;
    }

    std::string to_string() const;

    bool operator==(Field const&) const = default;

   private:
    explicit constexpr Field(std::uint32_t p) noexcept : _p(p) {}
    std::uint32_t _p;
  };

  //! An exact scalar: a reduced residue mod p or a rational in lowest terms.
  class Scalar {
   public:
    Scalar() : Scalar(Field::gf(2)) {}
    explicit Scalar(Field f) : _field(f), _value(std::uint32_t{0}) {
      if (!f.is_finite()) {
        _value = Rational(0);
      }
    }
    Scalar(Field f, long long n);
    Scalar(Field f, Rational const& q);

    static Scalar zero(Field f) {
      return Scalar(f);
    }
    static Scalar one(Field f) {
      return Scalar(f, 1);
    }
    //! The i-th element of a finite field in enumeration order (residue i).
    static Scalar nth(Field f, std::uint64_t i) {
      return Scalar(f, static_cast<long long>(i));
    }

    Field field() const noexcept {
      return _field;
    }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    //! Residue in [0, p); only meaningful over GF(p).
    std::uint32_t residue() const;
    Rational rational() const;

    Scalar operator+(Scalar const& other) const;
    Scalar operator-(Scalar const& other) const;
    Scalar operator*(Scalar const& other) const;
    Scalar operator/(Scalar const& other) const;
    Scalar operator-() const;
    Scalar& operator+=(Scalar const& other) {
      return *this = *this + other;
    }
    Scalar& operator-=(Scalar const& other) {
      return *this = *this - other;
    }
    Scalar& operator*=(Scalar const& other) {
      return *this = *this * other;
    }

    //! Throws Error on zero.
    Scalar inverse() const;

    bool operator==(Scalar const& other) const;
    //! Total order used for canonical listings: residue order, or numeric
    //! order for rationals.
    std::strong_ordering operator<=>(Scalar const& other) const;

    std::string to_string() const;

   private:
    void check_same_field(Scalar const& other) const;

    Field                                 _field;
    std::variant<std::uint32_t, Rational> _value;
  };

  //! Parses an integer or a fraction "a/b" into the given field.
  Scalar parse_scalar(Field f, std::string_view text);

}  // namespace torsionlab

#endif  // TORSIONLAB_EXACTLIN_FIELD_HPP_
