// Copyright 2026 The spherebound Authors
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

#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"

namespace spherebound {

mpq_class ParseRational(const std::string& text) {
  static const std::regex kFraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex kDecimal(
      R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, kFraction)) {
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1)
                                            : m[1].str(),
                  10);
    mpz_class den(m[2].str(), 10);
    if (den == 0) {
      Fail(ErrorCode::kNotRational, "rational: zero denominator in '" + text +
                                        "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, m, kDecimal) &&
      (m[2].length() > 0 || m[3].length() > 0)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      if (m[4].length() > 7) {
        Fail(ErrorCode::kNotRational, "rational: exponent too large in '" +
                                          text + "'");
      }
      exponent += std::stol(m[4].str());
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                             exponent < 0 ? -exponent
                                                          : exponent));
    mpq_class q = exponent < 0 ? mpq_class(mantissa, scale)
                               : mpq_class(mantissa * scale);
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    return q;
  }
  Fail(ErrorCode::kNotRational,
       "rational: '" + text +
           "' is not an exact rational (expected p, p/q, or a decimal)");
}

RationalJacobiFamily::RationalJacobiFamily(mpq_class alpha, mpq_class beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  alpha_.canonicalize();
  beta_.canonicalize();
  if (alpha_ <= -1 || beta_ <= -1) {
    Fail(ErrorCode::kOutOfRange,
         "jacobi: parameters must satisfy alpha > -1 and beta > -1");
  }
}

std::vector<mpq_class> RationalJacobiFamily::EvalAll(
    int k, const mpq_class& u) const {
  if (k < 0) {
    Fail(ErrorCode::kInvalidArgument, "jacobi: degree must be >= 0");
  }
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  out.emplace_back(1);
  if (k == 0) return out;
  const mpq_class s = alpha_ + beta_;
  mpq_class r1 = 1 + (s + 2) * (u - 1) / (2 * (alpha_ + 1));
  out.push_back(r1);
  const mpq_class diff_sq = (alpha_ - beta_) * s;
  for (int j = 1; j < k; ++j) {
    const mpq_class kk(j);
    const mpq_class a1 = 2 * kk + s + 1;
    const mpq_class a2 = 2 * kk + s + 2;
    const mpq_class a3 = kk + s + 1;
    const mpq_class a4 = kk + alpha_ + 1;
    const mpq_class a5 = 2 * kk + s;
    const mpq_class a6 = kk + beta_;
    const mpq_class a = (a1 * a2) / (2 * a3 * a4);
    const mpq_class b = (a1 * diff_sq) / (2 * a3 * a5 * a4);
    const mpq_class c = (kk * a6 * a2) / (a4 * a3 * a5);
    mpq_class next = (a * u + b) * out[static_cast<std::size_t>(j)] -
                     c * out[static_cast<std::size_t>(j) - 1];
    out.push_back(std::move(next));
  }
  return out;
}

mpq_class RationalJacobiFamily::Eval(int k, const mpq_class& u) const {
  if (u == 1) {
    if (k < 0) Fail(ErrorCode::kInvalidArgument, "jacobi: degree must be >= 0");
    return 1;
  }
  return EvalAll(k, u).back();
}

}  // namespace spherebound
