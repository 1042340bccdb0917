#ifndef ENDS_WORD_HPP
#define ENDS_WORD_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ends {

/// A generator or its formal inverse. Letters are encoded as 2*g for the
/// generator g and 2*g+1 for its inverse, so the natural order on codes is
/// the shortlex letter order: generators as declared, positive before inverse.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter from_code(int code) { return Letter(static_cast<std::uint16_t>(code)); }
  static constexpr Letter positive(int generator) { return from_code(2 * generator); }
  static constexpr Letter negative(int generator) { return from_code(2 * generator + 1); }

  constexpr int code() const { return code_; }
  constexpr int generator() const { return code_ >> 1; }
  constexpr bool is_inverse() const { return (code_ & 1) != 0; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint16_t code) : code_(code) {}
  std::uint16_t code_ = 0;
};

using Word = std::vector<Letter>;

/// Cancels adjacent g g^-1 pairs until none remain.
Word free_reduce(std::span<const Letter> w);

/// Free reduction followed by removal of matching first/last letters.
Word cyclically_reduce(std::span<const Letter> w);

Word inverse(std::span<const Letter> w);

/// Freely reduced product u*v.
Word multiply(std::span<const Letter> u, std::span<const Letter> v);

Word rotate(std::span<const Letter> w, std::size_t shift);

bool is_freely_reduced(std::span<const Letter> w);

/// Length first, then lexicographic in letter order.
bool shortlex_less(std::span<const Letter> a, std::span<const Letter> b);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

}  // namespace ends

#endif  // ENDS_WORD_HPP
