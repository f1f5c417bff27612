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

#include "hlcert/scalar.hpp"

#include <cctype>
#include <ostream>

namespace hlcert {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) ||
      den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not an exact rational literal: '" +
                                std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int Sign(const Rational& value) { return sgn(value); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational norm = o.Norm();
  *this *= o.Conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string GaussianRational::ToString() const {
  if (IsReal()) return FormatRational(re_);
  return FormatRational(re_) + (sgn(im_) < 0 ? "-" : "+") +
         FormatRational(abs(im_)) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.ToString();
}

}  // namespace hlcert
