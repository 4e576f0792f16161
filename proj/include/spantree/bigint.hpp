#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spantree {

/// Arbitrary-precision signed integer.
///
/// Sign-and-magnitude over base-2^32 limbs, least significant limb first,
/// no trailing zero limbs (zero is the empty limb vector with positive sign).
/// Division truncates toward zero; every division in the fraction-free
/// elimination is exact, so the rounding direction never matters there.
class BigInt {
public:
  BigInt() = default;

  template <std::integral T>
  BigInt(T value) {
    if constexpr (std::is_signed_v<T>) {
      negative_ = value < 0;
      unsigned long long mag =
          negative_ ? 0ULL - static_cast<unsigned long long>(value)
                    : static_cast<unsigned long long>(value);
      assign_u64(mag);
    } else {
      assign_u64(value);
    }
  }

  /// Parse a decimal string: optional leading '-', then one or more digits.
  explicit BigInt(std::string_view decimal) {
    bool neg = false;
    if (!decimal.empty() && (decimal.front() == '-' || decimal.front() == '+')) {
      neg = decimal.front() == '-';
      decimal.remove_prefix(1);
    }
    if (decimal.empty())
      throw std::invalid_argument("BigInt: empty decimal string");
    for (char c : decimal)
      if (c < '0' || c > '9')
        throw std::invalid_argument("BigInt: invalid decimal digit");
    // Consume up to 9 digits at a time: value = value * 10^k + chunk.
    std::size_t pos = 0;
    while (pos < decimal.size()) {
      std::size_t take = std::min<std::size_t>(9, decimal.size() - pos);
      std::uint32_t chunk = 0;
      std::uint32_t scale = 1;
      for (std::size_t i = 0; i < take; ++i) {
        chunk = chunk * 10 + static_cast<std::uint32_t>(decimal[pos + i] - '0');
        scale *= 10;
      }
      mul_small_add(limbs_, scale, chunk);
      pos += take;
    }
    negative_ = neg;
    normalize();
  }

  static BigInt pow(BigInt base, unsigned long long exponent) {
    BigInt result(1);
    while (exponent != 0) {
      if (exponent & 1ULL)
        result = result * base;
      exponent >>= 1;
      if (exponent != 0)
        base = base * base;
    }
    return result;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }

  int signum() const {
    if (limbs_.empty())
      return 0;
    return negative_ ? -1 : 1;
  }

  BigInt abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
  }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty())
      r.negative_ = !r.negative_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_;
      r.normalize();
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    BigInt r;
    if (c == 0)
      return r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.negative_ = b.negative_;
    }
    r.normalize();
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero())
      return r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.negative_ = a.negative_ != b.negative_;
    r.normalize();
    return r;
  }

  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

  /// Quotient truncated toward zero and remainder with the dividend's sign.
  static std::pair<BigInt, BigInt> divrem(const BigInt& a, const BigInt& b) {
    if (b.is_zero())
      throw std::domain_error("BigInt: division by zero");
    auto [qm, rm] = divrem_mag(a.limbs_, b.limbs_);
    BigInt q, r;
    q.limbs_ = std::move(qm);
    q.negative_ = a.negative_ != b.negative_;
    q.normalize();
    r.limbs_ = std::move(rm);
    r.negative_ = a.negative_;
    r.normalize();
    return {std::move(q), std::move(r)};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    return divrem(a, b).first;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    return divrem(a, b).second;
  }

  bool operator==(const BigInt& other) const = default;

  std::strong_ordering operator<=>(const BigInt& other) const {
    if (negative_ != other.negative_)
      return negative_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, other.limbs_);
    if (negative_)
      c = -c;
    if (c < 0)
      return std::strong_ordering::less;
    if (c > 0)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (is_zero())
      return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;  // least significant first
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!work.empty() && work.back() == 0)
        work.pop_back();
      for (int i = 0; i < 9; ++i) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0')
      digits.pop_back();
    if (negative_)
      digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  /// Number of bits in the magnitude; 0 for zero.
  std::size_t bit_length() const {
    if (limbs_.empty())
      return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
  }

  /// Natural log of the value. Zero maps to -infinity, negatives are a
  /// domain error. Relative error is a few ulps (top 64 bits of the
  /// magnitude carry the mantissa), far inside the 1e-12 the bound
  /// computations need.
  double log_natural() const {
    if (negative_)
      throw std::domain_error("BigInt: log of negative value");
    if (is_zero())
      return -std::numeric_limits<double>::infinity();
    std::size_t bl = bit_length();
    if (bl <= 64)
      return std::log(static_cast<double>(to_u64_truncated()));
    std::size_t shift = bl - 64;
    std::uint64_t top = top_bits_64(shift);
    return std::log(static_cast<double>(top)) +
           static_cast<double>(shift) * 0.6931471805599453094;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

private:
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;

  void assign_u64(unsigned long long v) {
    limbs_.clear();
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
    if (limbs_.empty())
      negative_ = false;
  }

  void normalize() {
    while (!limbs_.empty() && limbs_.back() == 0)
      limbs_.pop_back();
    if (limbs_.empty())
      negative_ = false;
  }

  // Value as uint64, assuming bit_length() <= 64.
  std::uint64_t to_u64_truncated() const {
    std::uint64_t v = 0;
    if (!limbs_.empty())
      v = limbs_[0];
    if (limbs_.size() > 1)
      v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
  }

  // The 64 bits starting `shift` bits above the bottom, i.e. magnitude >> shift
  // truncated to 64 bits. Caller guarantees bit_length() == shift + 64.
  std::uint64_t top_bits_64(std::size_t shift) const {
    std::size_t idx = shift / 32;
    std::size_t off = shift % 32;
    auto limb = [&](std::size_t i) -> std::uint64_t {
      return i < limbs_.size() ? limbs_[i] : 0;
    };
    std::uint64_t lo = limb(idx) | (limb(idx + 1) << 32);
    if (off == 0)
      return lo;
    return (lo >> off) | (limb(idx + 2) << (64 - off));
  }

  // work = work * scale + addend (magnitude only).
  static void mul_small_add(std::vector<std::uint32_t>& work,
                            std::uint32_t scale, std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (auto& limb : work) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * scale + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry != 0) {
      work.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size())
      return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i])
        return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(longer.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(longer[i]) + carry +
                          (i < shorter.size() ? shorter[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0)
      r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    assert(borrow == 0);
    return r;
  }

  // Schoolbook product, column-wise with a 128-bit accumulator.
  static std::vector<std::uint32_t> mul_mag(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size());
    unsigned __int128 acc = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
      std::size_t hi = std::min(a.size(), k + 1);
      for (std::size_t i = lo; i < hi; ++i)
        acc += static_cast<std::uint64_t>(a[i]) *
               static_cast<std::uint64_t>(b[k - i]);
      r[k] = static_cast<std::uint32_t>(acc);
      acc >>= 32;
    }
    assert(acc == 0);
    return r;
  }

  static std::vector<std::uint32_t> shl_bits(
      const std::vector<std::uint32_t>& a, unsigned s) {
    if (s == 0)
      return a;
    std::vector<std::uint32_t> r(a.size());
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t cur = (static_cast<std::uint64_t>(a[i]) << s) | carry;
      r[i] = static_cast<std::uint32_t>(cur);
      carry = static_cast<std::uint32_t>(cur >> 32);
    }
    if (carry != 0)
      r.push_back(carry);
    return r;
  }

  static std::vector<std::uint32_t> shr_bits(std::vector<std::uint32_t> a,
                                             unsigned s) {
    if (s == 0)
      return a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint32_t next = i + 1 < a.size() ? a[i + 1] : 0;
      a[i] = (a[i] >> s) |
             static_cast<std::uint32_t>(static_cast<std::uint64_t>(next)
                                        << (32 - s));
    }
    return a;
  }

  // Knuth algorithm D on magnitudes: returns (quotient, remainder).
  static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
  divrem_mag(const std::vector<std::uint32_t>& a,
             const std::vector<std::uint32_t>& b) {
    assert(!b.empty());
    if (cmp_mag(a, b) < 0)
      return {{}, a};
    if (b.size() == 1) {
      std::vector<std::uint32_t> q(a.size());
      std::uint64_t rem = 0;
      std::uint64_t d = b[0];
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      while (!q.empty() && q.back() == 0)
        q.pop_back();
      std::vector<std::uint32_t> r;
      if (rem != 0)
        r.push_back(static_cast<std::uint32_t>(rem));
      return {std::move(q), std::move(r)};
    }

    // Normalize so the divisor's top limb has its high bit set.
    unsigned s = static_cast<unsigned>(std::countl_zero(b.back()));
    std::vector<std::uint32_t> bn = shl_bits(b, s);
    std::vector<std::uint32_t> an = shl_bits(a, s);
    const std::size_t n = bn.size();
    an.resize(a.size() + 1, 0);  // one extra high limb for the working prefix
    const std::size_t m = an.size() - 1 - n;

    std::vector<std::uint32_t> q(m + 1);
    const std::uint64_t btop = bn[n - 1];
    const std::uint64_t bsecond = bn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num =
          (static_cast<std::uint64_t>(an[j + n]) << 32) | an[j + n - 1];
      std::uint64_t qhat = num / btop;
      std::uint64_t rhat = num % btop;
      while (qhat >= (1ULL << 32) ||
             qhat * bsecond > ((rhat << 32) | an[j + n - 2])) {
        --qhat;
        rhat += btop;
        if (rhat >= (1ULL << 32))
          break;
      }

      // Multiply-subtract qhat * bn from an[j .. j+n].
      std::uint64_t carry = 0;
      std::int64_t borrow = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * bn[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(an[j + i]) -
                         static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
        an[j + i] = static_cast<std::uint32_t>(t);
        borrow = t < 0 ? 1 : 0;
      }
      std::int64_t t = static_cast<std::int64_t>(an[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
      an[j + n] = static_cast<std::uint32_t>(t);

      if (t < 0) {
        // qhat was one too large; add the divisor back.
        --qhat;
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t sum =
              static_cast<std::uint64_t>(an[j + i]) + bn[i] + c;
          an[j + i] = static_cast<std::uint32_t>(sum);
          c = sum >> 32;
        }
        an[j + n] = static_cast<std::uint32_t>(an[j + n] + c);
      }
      q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0)
      q.pop_back();
    an.resize(n);
    an = shr_bits(std::move(an), s);
    while (!an.empty() && an.back() == 0)
      an.pop_back();
    return {std::move(q), std::move(an)};
  }
};

}  // namespace spantree
