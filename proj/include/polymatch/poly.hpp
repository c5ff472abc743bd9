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

#ifndef POLYMATCH_POLY_H
#define POLYMATCH_POLY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polymatch {

/// Element of F2[X]/(X^w_th): a polynomial with bit coefficients where
/// X^w_th = 0. Bit i of the packed word array is the coefficient of X^i
/// (least-significant word first). The truncation width w_th is a runtime
/// parameter carried by every value; it need not be a multiple of 64.
///
/// Values are immutable in spirit: all operators return new values, the
/// mutating helpers (add_assign, xor_shifted) exist for inner loops that
/// accumulate into a local. Operations on operands with different w_th
/// throw std::invalid_argument.
class TruncatedPoly {
 public:
  TruncatedPoly() = default;  // null value (w_th == 0); only assignable
  explicit TruncatedPoly(std::size_t w_th);

  /// X^degree, or the zero polynomial when degree >= w_th.
  static TruncatedPoly monomial(std::uint64_t degree, std::size_t w_th);
  static TruncatedPoly one(std::size_t w_th) { return monomial(0, w_th); }

  std::size_t wth() const { return wth_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool is_zero() const;
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i);

  /// Index of the lowest set bit; nullopt for the zero polynomial.
  /// Degree 0 (constant term) is a legitimate answer and is distinct
  /// from "no terms at all".
  std::optional<std::size_t> min_degree() const;

  /// this ^= other (coefficient-wise addition over F2).
  void add_assign(const TruncatedPoly& other);
  /// this ^= (a << shift), truncated at w_th. No-op when shift >= w_th.
  void xor_shifted(const TruncatedPoly& a, std::size_t shift);

  /// If the value is exactly X^d, returns d.
  std::optional<std::uint64_t> as_monomial() const;

  /// Reduce to the low new_wth coefficients (new_wth <= w_th).
  TruncatedPoly truncated(std::size_t new_wth) const;

  TruncatedPoly operator+(const TruncatedPoly& o) const;
  TruncatedPoly operator*(const TruncatedPoly& o) const;
  bool operator==(const TruncatedPoly& o) const = default;

  /// Hex string of the bit vector, most significant nibble first, fixed
  /// width ceil(w_th/4): the lowest coefficient is the least significant
  /// hex digit of the printed number.
  std::string to_hex() const;
  static TruncatedPoly from_hex(std::string_view hex, std::size_t w_th);

 private:
  void mask_top();
  std::vector<std::uint64_t> words_;
  std::size_t wth_ = 0;
};

/// dst = a * b. Reuses dst's storage; dst may not alias a or b.
void mul_into(TruncatedPoly& dst, const TruncatedPoly& a,
              const TruncatedPoly& b);

/// acc += x * y, with scratch providing reusable storage for the general
/// case. Monomial operands reduce to a single shifted XOR.
void fma_into(TruncatedPoly& acc, const TruncatedPoly& x,
              const TruncatedPoly& y, TruncatedPoly& scratch);

/// True when the carry-less-multiply hardware path is compiled in and the
/// CPU supports it. The portable shift-XOR kernel is always available and
/// bit-exact with the hardware path.
bool clmul_available();

namespace detail {
// Word-level kernels: out[0..n_words) ^= product of a and b truncated to
// n_words words; callers mask the top word. Exposed for tests and the
// benchmark tool.
void mul_words_ref(std::uint64_t* out, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t n_words,
                   std::size_t wth);
void mul_words_clmul(std::uint64_t* out, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t n_words);
}  // namespace detail

}  // namespace polymatch

#endif
