#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecc_spectra/errors.hpp"

namespace ecc_spectra {

/// Generating sequence (a1, ..., al) of a C-graph. Part i receives a_i vertices.
///
/// Parts are numbered from 1 in the accessors below so that parity arguments
/// ("odd parts", "even parts") read the same way as the construction.
class GeneratingSequence {
 public:
  explicit GeneratingSequence(std::vector<int> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw InvalidSequence("generating sequence must not be empty");
    for (int a : alphas_) {
      if (a < 1) throw InvalidSequence("every part size must be >= 1, got " + std::to_string(a));
    }
  }

  /// Parses "a1,a2,...,al". Whitespace around entries is tolerated.
  static GeneratingSequence parse(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
        throw InvalidSequence("cannot parse part size '" + std::string(token) + "' in '" +
                              std::string(text) + "'");
      }
      values.push_back(value);
      pos = comma + 1;
    }
    return GeneratingSequence(std::move(values));
  }

  std::span<const int> alphas() const noexcept { return alphas_; }
  std::size_t length() const noexcept { return alphas_.size(); }

  /// Size of part i, 1 <= i <= length().
  int part_size(std::size_t i) const { return alphas_.at(i - 1); }
  int last_part_size() const noexcept { return alphas_.back(); }

  /// Number of vertices n.
  std::size_t order() const noexcept {
    return static_cast<std::size_t>(std::accumulate(alphas_.begin(), alphas_.end(), 0));
  }

  bool is_even_length() const noexcept { return alphas_.size() % 2 == 0; }

  /// k = l / 2; only meaningful for even l.
  std::size_t half_length() const noexcept { return alphas_.size() / 2; }

  /// l = 2k even, k >= 2 and a_2k >= 2.
  bool in_main_scope() const noexcept {
    return is_even_length() && half_length() >= 2 && last_part_size() >= 2;
  }

  /// a1 + a3 + ... (parts with odd 1-based index).
  std::int64_t odd_part_sum() const noexcept {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < alphas_.size(); i += 2) sum += alphas_[i];
    return sum;
  }

  /// a2 + a4 + ...
  std::int64_t even_part_sum() const noexcept {
    std::int64_t sum = 0;
    for (std::size_t i = 1; i < alphas_.size(); i += 2) sum += alphas_[i];
    return sum;
  }

  /// First vertex index (0-based) of part i (1-based). Parts are contiguous.
  std::size_t part_offset(std::size_t i) const {
    std::size_t offset = 0;
    for (std::size_t j = 1; j < i; ++j) offset += static_cast<std::size_t>(alphas_.at(j - 1));
    return offset;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(alphas_[i]);
    }
    return out;
  }

  friend bool operator==(const GeneratingSequence&, const GeneratingSequence&) = default;

 private:
  std::vector<int> alphas_;
};

inline void require_main_scope(const GeneratingSequence& seq) {
  if (!seq.in_main_scope()) {
    throw OutOfScope("sequence " + seq.to_string() +
                     " is outside the main scope (need even length 2k, k >= 2, last part >= 2)");
  }
}

}  // namespace ecc_spectra
