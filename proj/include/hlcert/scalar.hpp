// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HLCERT_SCALAR_HPP_
#define HLCERT_SCALAR_HPP_

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlcert {

using Rational = mpq_class;
using Integer = mpz_class;

// Raised when an internal consistency check fails (a computed quantity that
// must be real has an imaginary part, two evaluation paths disagree, ...).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parses "p", "-p" or "p/q". Anything else (decimal points, exponents,
// whitespace) is rejected: floating-point input is never rationalized.
Rational ParseRational(std::string_view text);

// Canonical "p/q" with q > 0 and gcd(|p|, q) = 1. Integers keep the "/1".
std::string FormatRational(const Rational& value);

int Sign(const Rational& value);

// Exact complex number re + i*im with rational parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}  // NOLINT: implicit by design of the field
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational I() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool IsZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool IsReal() const { return sgn(im_) == 0; }

  GaussianRational Conj() const { return {re_, -im_}; }
  // |z|^2
  Rational Norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a,
                         const GaussianRational& b) {
    return !(a == b);
  }

  std::string ToString() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace hlcert

#endif  // HLCERT_SCALAR_HPP_
