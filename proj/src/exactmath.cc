// Copyright 2026 The symmix Authors.
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

#include "symmix/exactmath.h"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "symmix/errors.h"

namespace symmix {
namespace {

// Triangular table rows_[r][i] = S(r, i), 0 <= i <= r.
class StirlingTable {
 public:
  Natural Get(unsigned r, unsigned i) {
    if (i > r) return 0;
    {
      std::shared_lock lock(mutex_);
      if (r < rows_.size()) return rows_[r][i];
    }
    std::unique_lock lock(mutex_);
    Grow(r);
    return rows_[r][i];
  }

 private:
  void Grow(unsigned r) {
    if (rows_.empty()) rows_.push_back({Natural(1)});
    while (rows_.size() <= r) {
      const auto& prev = rows_.back();
      const unsigned m = static_cast<unsigned>(rows_.size());
      std::vector<Natural> row(m + 1);
      row[0] = 0;
      for (unsigned i = 1; i <= m; ++i) {
        Natural above = i < prev.size() ? prev[i] : Natural(0);
        row[i] = i * above + prev[i - 1];
      }
      rows_.push_back(std::move(row));
    }
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<Natural>> rows_;
};

StirlingTable& Stirling() {
  static StirlingTable table;
  return table;
}

class BellTable {
 public:
  Natural Get(unsigned t) {
    {
      std::shared_lock lock(mutex_);
      if (t < values_.size()) return values_[t];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= t) {
      const unsigned m = static_cast<unsigned>(values_.size());
      Natural sum = m == 0 ? Natural(1) : Natural(0);
      for (unsigned q = 1; q <= m; ++q) sum += Stirling().Get(m, q);
      values_.push_back(sum);
    }
    return values_[t];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Natural> values_;
};

Natural PowerOfTen(unsigned long e) {
  Natural p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

Ratio PowerOfTen(long e) {
  if (e >= 0) return Ratio(PowerOfTen(static_cast<unsigned long>(e)));
  return Ratio(Natural(1), PowerOfTen(static_cast<unsigned long>(-e)));
}

// Nearest integer to a nonnegative rational, ties to even.
Natural RoundHalfEven(const Ratio& x) {
  Natural floor;
  mpz_fdiv_q(floor.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Ratio frac = x - Ratio(floor);
  const int c = cmp(frac, Ratio(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(floor.get_mpz_t()))) floor += 1;
  return floor;
}

}  // namespace

Natural binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Natural factorial(unsigned long n) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Natural stirling2(unsigned r, unsigned i) { return Stirling().Get(r, i); }

Natural bell(unsigned t) {
  static BellTable table;
  return table.Get(t);
}

Ratio make_ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  Ratio q(num, den);
  q.canonicalize();
  return q;
}

Ratio pow(const Ratio& base, unsigned long exponent) {
  Ratio out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime; only the sign needs fixing.
  out.canonicalize();
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer divide_exact(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw ConsistencyError("inexact division: " + num.get_str() + " / " +
                           den.get_str());
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::string to_decimal(const Ratio& value, int digits) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (value == 0) return "0";
  std::string out = value < 0 ? "-" : "";
  Ratio a = abs(value);

  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (a >= PowerOfTen(e + 1)) ++e;
  while (a < PowerOfTen(e)) --e;

  Natural m = RoundHalfEven(a * PowerOfTen(static_cast<long>(digits) - 1 - e));
  if (m == PowerOfTen(static_cast<unsigned long>(digits))) {
    m /= 10;
    ++e;
  }
  const std::string s = m.get_str();

  auto strip = [](std::string frac) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac;
  };

  if (e >= -4 && e < digits) {
    std::string whole, frac;
    if (e >= 0) {
      whole = s.substr(0, static_cast<size_t>(e) + 1);
      frac = s.substr(static_cast<size_t>(e) + 1);
    } else {
      whole = "0";
      frac = std::string(static_cast<size_t>(-e - 1), '0') + s;
    }
    frac = strip(frac);
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
  }

  std::string frac = strip(s.substr(1));
  out += s.substr(0, 1);
  if (!frac.empty()) out += "." + frac;
  out += e < 0 ? "e-" : "e+";
  std::string exp = std::to_string(e < 0 ? -e : e);
  if (exp.size() < 2) exp = "0" + exp;
  return out + exp;
}

std::string to_decimal(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  Ratio exact;
  mpq_set_d(exact.get_mpq_t(), value);
  return to_decimal(exact, digits);
}

}  // namespace symmix
