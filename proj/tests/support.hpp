#pragma once

#include "indep/group.hpp"
#include "indep/perm.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace testing_support {

inline indep::Permutation P(const std::string &text, std::size_t degree) {
  return indep::parse_cycles(text, degree);
}

inline indep::FiniteGroup G(const std::vector<std::string> &gens, std::size_t degree) {
  std::vector<indep::Permutation> perms;
  for (const auto &g : gens)
    perms.push_back(P(g, degree));
  return indep::FiniteGroup::generated_by(std::move(perms), degree);
}

inline indep::Permutation random_perm(std::size_t n, std::mt19937_64 &rng) {
  std::vector<indep::Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return indep::Permutation::from_images(std::move(images));
}

inline std::vector<std::string> formatted(std::span<const indep::Permutation> xs) {
  std::vector<std::string> out;
  for (const auto &x : xs)
    out.push_back(indep::format(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

// Naive closure: multiply everything by everything until nothing new shows
// up. Independent of the library's closure routine.
inline std::vector<indep::Permutation> naive_closure(std::vector<indep::Permutation> gens,
                                                     std::size_t degree) {
  std::vector<indep::Permutation> set{indep::Permutation(degree)};
  for (auto &g : gens)
    set.push_back(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const auto snapshot = set;
    for (const auto &x : snapshot)
      for (const auto &y : snapshot) {
        auto z = indep::compose(x, y);
        if (!std::binary_search(snapshot.begin(), snapshot.end(), z)) {
          set.push_back(z);
          grew = true;
        }
      }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

} // namespace testing_support

namespace testing_support {

// Every subgroup generated by at most two elements of `elements`, via the
// naive closure. For S3 and S4 this is every subgroup.
inline std::vector<std::vector<indep::Permutation>>
naive_two_generated(const std::vector<indep::Permutation> &elements, std::size_t degree) {
  std::vector<std::vector<indep::Permutation>> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j)
      out.push_back(naive_closure({elements[i], elements[j]}, degree));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<indep::Permutation> all_perms(std::size_t n) {
  std::vector<indep::Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<indep::Permutation> out;
  do
    out.push_back(indep::Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace testing_support

namespace testing_support {

// All total maps G -> G, kept when they are homomorphisms. An odometer over
// |G|^|G| tables; each table is rejected at its first failing product.
inline std::vector<std::vector<indep::ElemIndex>> brute_force_endomorphisms(const indep::FiniteGroup &g) {
  const std::size_t n = g.order();
  std::vector<std::vector<indep::ElemIndex>> mult(n, std::vector<indep::ElemIndex>(n));
  for (indep::ElemIndex x = 0; x < n; ++x)
    for (indep::ElemIndex y = 0; y < n; ++y)
      mult[x][y] = g.at(compose(g.element(x), g.element(y)));
  std::vector<std::vector<indep::ElemIndex>> found;
  std::vector<indep::ElemIndex> table(n, 0);
  while (true) {
    bool hom = true;
    for (indep::ElemIndex x = 0; x < n && hom; ++x)
      for (indep::ElemIndex y = 0; y < n && hom; ++y)
        hom = table[mult[x][y]] == mult[table[x]][table[y]];
    if (hom)
      found.push_back(table);
    std::size_t k = 0;
    while (k < n && ++table[k] == n)
      table[k++] = 0;
    if (k == n)
      break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

} // namespace testing_support
