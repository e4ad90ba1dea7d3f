#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indep {

using Point = std::uint32_t;

/// A bijection on {1..n}, stored 0-based as a dense image table.
///
/// Products follow the right-to-left convention used for cycle
/// multiplication: `compose(p, q)` applies `q` first, then `p`, so the
/// string "(1 2)(1 2 3)" denotes compose((1 2), (1 2 3)) = (2 3).
class Permutation {
public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// From 0-based images. Throws ParseError if `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }

  /// 0-based image of the 0-based point `x`.
  Point operator[](std::size_t x) const noexcept { return images_[x]; }

  /// 1-based image of the 1-based point `x`.
  Point apply(Point x) const { return images_.at(x - 1) + 1; }

  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  /// Canonical order: lexicographic on the image table; identity is least.
  friend std::strong_ordering operator<=>(const Permutation &lhs,
                                          const Permutation &rhs) = default;

private:
  Permutation() = default;
  std::vector<Point> images_;
};

/// Parse cycle notation, e.g. "e", "()", "(1 3)(2 4)", "(1,10)" or, for
/// degree <= 9 only, juxtaposed digits "(12)(123)". Cycles are multiplied
/// right to left.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle notation: disjoint cycles, smallest point first in each
/// cycle, cycles sorted by their smallest point, fixed points omitted,
/// points space separated, identity printed "e".
std::string format(const Permutation &p);

/// x -> p(q(x)).
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);

/// h g h^-1.
Permutation conjugate(const Permutation &g, const Permutation &h);

/// Smallest k >= 1 with p^k = e (the lcm of the cycle lengths).
std::uint64_t element_order(const Permutation &p);

Permutation power(const Permutation &p, std::uint64_t k);

/// Cycle lengths (including fixed points as 1-cycles), sorted ascending.
std::vector<std::size_t> cycle_type(const Permutation &p);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

} // namespace indep

template <> struct std::hash<indep::Permutation> {
  std::size_t operator()(const indep::Permutation &p) const noexcept;
};
