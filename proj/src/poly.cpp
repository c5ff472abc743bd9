// Copyright 2026 The polymatch developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//      http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymatch/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polymatch {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t wth) { return (wth + kWordBits - 1) / kWordBits; }

std::uint64_t top_mask(std::size_t wth) {
  const std::size_t rem = wth % kWordBits;
  return rem == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (kWordBits - rem));
}

void require_same_wth(const TruncatedPoly& a, const TruncatedPoly& b) {
  if (a.wth() != b.wth()) {
    throw std::invalid_argument("TruncatedPoly: mismatched w_th (" +
                                std::to_string(a.wth()) + " vs " +
                                std::to_string(b.wth()) + ")");
  }
}

}  // namespace

TruncatedPoly::TruncatedPoly(std::size_t w_th) : wth_(w_th) {
  if (w_th == 0) throw std::invalid_argument("TruncatedPoly: w_th must be >= 1");
  words_.assign(words_for(w_th), 0);
}

TruncatedPoly TruncatedPoly::monomial(std::uint64_t degree, std::size_t w_th) {
  TruncatedPoly p(w_th);
  if (degree < w_th) p.set_bit(static_cast<std::size_t>(degree));
  return p;
}

bool TruncatedPoly::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

bool TruncatedPoly::bit(std::size_t i) const {
  if (i >= wth_) return false;
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void TruncatedPoly::set_bit(std::size_t i) {
  if (i >= wth_) throw std::out_of_range("TruncatedPoly::set_bit past w_th");
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

std::optional<std::size_t> TruncatedPoly::min_degree() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0)
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

void TruncatedPoly::add_assign(const TruncatedPoly& other) {
  require_same_wth(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

void TruncatedPoly::xor_shifted(const TruncatedPoly& a, std::size_t shift) {
  require_same_wth(*this, a);
  if (shift >= wth_) return;
  const std::size_t word_off = shift / kWordBits;
  const std::size_t bit_off = shift % kWordBits;
  const std::size_t n = words_.size();
  if (bit_off == 0) {
    for (std::size_t i = word_off; i < n; ++i) words_[i] ^= a.words_[i - word_off];
  } else {
    for (std::size_t i = n; i-- > word_off;) {
      std::uint64_t v = a.words_[i - word_off] << bit_off;
      if (i > word_off) v |= a.words_[i - word_off - 1] >> (kWordBits - bit_off);
      words_[i] ^= v;
    }
  }
  mask_top();
}

std::optional<std::uint64_t> TruncatedPoly::as_monomial() const {
  std::optional<std::uint64_t> deg;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t w = words_[i];
    if (w == 0) continue;
    if (deg || (w & (w - 1)) != 0) return std::nullopt;  // more than one bit
    deg = i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(w));
  }
  return deg;
}

TruncatedPoly TruncatedPoly::truncated(std::size_t new_wth) const {
  if (new_wth == 0 || new_wth > wth_)
    throw std::invalid_argument("TruncatedPoly::truncated: bad width");
  TruncatedPoly r(new_wth);
  std::copy_n(words_.begin(), r.words_.size(), r.words_.begin());
  r.mask_top();
  return r;
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
  TruncatedPoly r = *this;
  r.add_assign(o);
  return r;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  TruncatedPoly r(wth_ ? wth_ : o.wth());
  mul_into(r, *this, o);
  return r;
}

void TruncatedPoly::mask_top() { words_.back() &= top_mask(wth_); }

std::string TruncatedPoly::to_hex() const {
  const std::size_t digits = (wth_ + 3) / 4;
  std::string s(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit0 = 4 * d;
    unsigned nib = 0;
    for (unsigned b = 0; b < 4; ++b)
      if (bit(bit0 + b)) nib |= 1u << b;
    s[digits - 1 - d] = kHex[nib];
  }
  return s;
}

TruncatedPoly TruncatedPoly::from_hex(std::string_view hex, std::size_t w_th) {
  TruncatedPoly p(w_th);
  std::size_t bit0 = 0;
  for (std::size_t i = hex.size(); i-- > 0; bit0 += 4) {
    const char c = hex[i];
    unsigned nib;
    if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a') + 10;
    else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A') + 10;
    else throw std::invalid_argument("TruncatedPoly::from_hex: bad digit");
    for (unsigned b = 0; b < 4; ++b) {
      if (!(nib & (1u << b))) continue;
      if (bit0 + b >= w_th)
        throw std::invalid_argument("TruncatedPoly::from_hex: digit past w_th");
      p.set_bit(bit0 + b);
    }
  }
  return p;
}

namespace detail {

void mul_words_ref(std::uint64_t* out, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t n_words,
                   std::size_t wth) {
  // Shift-and-XOR over the set bits of b; the serial reference kernel.
  for (std::size_t j = 0; j < n_words; ++j) {
    std::uint64_t w = b[j];
    while (w != 0) {
      const std::size_t s =
          j * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      if (s >= wth) break;
      const std::size_t word_off = s / kWordBits;
      const std::size_t bit_off = s % kWordBits;
      if (bit_off == 0) {
        for (std::size_t i = word_off; i < n_words; ++i) out[i] ^= a[i - word_off];
      } else {
        for (std::size_t i = n_words; i-- > word_off;) {
          std::uint64_t v = a[i - word_off] << bit_off;
          if (i > word_off) v |= a[i - word_off - 1] >> (kWordBits - bit_off);
          out[i] ^= v;
        }
      }
    }
  }
}

}  // namespace detail

void mul_into(TruncatedPoly& dst, const TruncatedPoly& a,
              const TruncatedPoly& b) {
  require_same_wth(a, b);
  if (dst.wth() != a.wth()) dst = TruncatedPoly(a.wth());

  // dst may be stale from a previous use; zero it.
  std::uint64_t* out = const_cast<std::uint64_t*>(dst.words().data());
  const std::size_t n = dst.num_words();
  std::fill_n(out, n, 0);

  if (a.is_zero() || b.is_zero()) return;
  if (auto d = a.as_monomial()) {
    dst.xor_shifted(b, static_cast<std::size_t>(*d));
    return;
  }
  if (auto d = b.as_monomial()) {
    dst.xor_shifted(a, static_cast<std::size_t>(*d));
    return;
  }
  if (clmul_available()) {
    detail::mul_words_clmul(out, a.words().data(), b.words().data(), n);
  } else {
    detail::mul_words_ref(out, a.words().data(), b.words().data(), n, a.wth());
  }
  out[n - 1] &= top_mask(a.wth());
}

void fma_into(TruncatedPoly& acc, const TruncatedPoly& x,
              const TruncatedPoly& y, TruncatedPoly& scratch) {
  if (x.is_zero() || y.is_zero()) return;
  if (auto d = x.as_monomial()) {
    acc.xor_shifted(y, static_cast<std::size_t>(*d));
    return;
  }
  if (auto d = y.as_monomial()) {
    acc.xor_shifted(x, static_cast<std::size_t>(*d));
    return;
  }
  mul_into(scratch, x, y);
  acc.add_assign(scratch);
}

}  // namespace polymatch
