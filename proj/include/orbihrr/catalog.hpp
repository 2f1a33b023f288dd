#pragma once

#include <cstddef>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/groups.hpp"

// Small named groups and representations used by the CLI self-test and the
// test suites.
namespace orbihrr::catalog {

/// S_n generated by the transposition (0 1) and the n-cycle (0 1 ... n-1).
inline GroupHandle symmetric_group(std::size_t n) {
  Permutation swap(n), cycle(n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<std::uint32_t>(i);
    cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  }
  if (n >= 2) std::swap(swap[0], swap[1]);
  return group_from_generators(n, {swap, cycle});
}

/// μ_n as the cyclic group generated by the n-cycle.
inline GroupHandle cyclic_group(std::size_t n) {
  Permutation cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return group_from_generators(n, {cycle});
}

/// The character x^k of μ_n: generator ↦ ζ_n^k.
inline Representation cyclic_character(const GroupHandle& mu_n, long k) {
  int n = static_cast<int>(mu_n->order());
  std::vector<CMatrix> gens{CMatrix(1, 1, {Cyclotomic::root_of_unity(n, k)})};
  return Representation(mu_n, n, 1, std::move(gens));
}

/// Two-dimensional irreducible representation of S_3 over Q(ζ_3):
/// (0 1) ↦ [[0,1],[1,0]], (0 1 2) ↦ diag(ζ_3, ζ_3^2).
inline Representation s3_standard(const GroupHandle& s3) {
  if (s3->order() != 6 || s3->generators().size() != 2)
    throw std::invalid_argument("s3_standard expects S_3 from catalog::symmetric_group(3)");
  CMatrix swap(2, 2, {0, 1, 1, 0});
  CMatrix rot(2, 2, {Cyclotomic::root_of_unity(3, 1), 0, 0, Cyclotomic::root_of_unity(3, 2)});
  return Representation(s3, 3, 2, {swap, rot}, true);
}

}  // namespace orbihrr::catalog
