#include "indep/perm.hpp"

#include "indep/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace indep {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0)
    throw ParseError("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty())
    throw ParseError("permutation degree must be positive");
  std::vector<bool> seen(images.size());
  for (Point y : images) {
    if (y >= images.size() || seen[y])
      throw ParseError("image table is not a bijection");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree)
      : text_(text), degree_(degree) {}

  Permutation run() {
    Permutation result(degree_);
    skip_space();
    if (pos_ == text_.size())
      fail("empty input");
    if (text_[pos_] == 'e') {
      ++pos_;
      skip_space();
      if (pos_ != text_.size())
        fail("trailing characters after identity");
      return result;
    }
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(')
        fail("expected '('");
      ++pos_;
      auto cycle = read_cycle();
      result = compose(result, cycle_to_perm(cycle));
      skip_space();
    }
    return result;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("cycle notation '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::vector<Point> read_cycle() {
    std::vector<Point> points;
    for (;;) {
      while (pos_ < text_.size() &&
             (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == ','))
        ++pos_;
      if (pos_ == text_.size())
        fail("unterminated cycle");
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(std::string("unexpected character '") + c + "'");
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string_view token = text_.substr(start, pos_ - start);
      if (degree_ <= 9) {
        // Juxtaposed single digits: "(123)" is the cycle 1 -> 2 -> 3.
        for (char d : token)
          push_point(points, static_cast<std::uint64_t>(d - '0'));
      } else {
        std::uint64_t value = 0;
        for (char d : token) {
          value = value * 10 + static_cast<std::uint64_t>(d - '0');
          if (value > degree_)
            break;
        }
        push_point(points, value);
      }
    }
    return points;
  }

  void push_point(std::vector<Point> &points, std::uint64_t value) {
    if (value == 0)
      fail("points are numbered from 1");
    if (value > degree_)
      fail("point " + std::to_string(value) + " exceeds degree " +
           std::to_string(degree_));
    auto p = static_cast<Point>(value - 1);
    if (std::find(points.begin(), points.end(), p) != points.end())
      fail("repeated point " + std::to_string(value) + " in one cycle");
    points.push_back(p);
  }

  Permutation cycle_to_perm(const std::vector<Point> &cycle) const {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return Permutation::from_images(std::move(images));
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw ParseError("degree must be positive");
  return CycleParser(text, degree).run();
}

std::string format(const Permutation &p) {
  std::string out;
  std::vector<bool> seen(p.degree());
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = p[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = p[q[x]];
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[p[x]] = static_cast<Point>(x);
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation &g, const Permutation &h) {
  return compose(compose(h, g), inverse(h));
}

std::vector<std::size_t> cycle_type(const Permutation &p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree());
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t element_order(const Permutation &p) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p))
    order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

Permutation power(const Permutation &p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1)
      result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << format(p);
}

} // namespace indep

std::size_t
std::hash<indep::Permutation>::operator()(const indep::Permutation &p) const noexcept {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ull;
  for (indep::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
