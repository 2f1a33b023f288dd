#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "orbihrr/cyclotomic.hpp"
#include "orbihrr/errors.hpp"
#include "orbihrr/linalg.hpp"

namespace orbihrr {

/// Permutation of {0, ..., n-1} in one-line notation: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultMaxGroupOrder = 10080;

/// (a * b)(i) = a(b(i)): b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline int permutation_sign(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct ConjClass {
  std::size_t representative = 0;  // element id
  std::size_t size = 0;
  std::size_t centralizer_order = 0;
  std::size_t representative_order = 0;
};

/// Finite permutation group with every element enumerated.
///
/// Elements are numbered in breadth-first order from the identity (id 0);
/// each carries a word over the generators with element = g_{w_0} * g_{w_1} * ...
/// Conjugacy classes are listed in order of first appearance, so class 0 is
/// the identity class.
class PermGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& element(std::size_t id) const { return elements_.at(id); }
  const std::vector<std::size_t>& word(std::size_t id) const { return words_.at(id); }
  /// BFS parent: element(id) = element(parent(id)) * generator(word(id).back()).
  std::size_t parent(std::size_t id) const { return parents_.at(id); }
  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t id) const { return class_of_.at(id); }

  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::out_of_range("permutation is not an element of the group");
    return it->second;
  }

  std::size_t multiply(std::size_t a, std::size_t b) const { return index_of(compose(elements_[a], elements_[b])); }
  std::size_t inverse(std::size_t a) const { return index_of(invert(elements_[a])); }

  bool is_abelian() const noexcept { return classes_.size() == elements_.size(); }

 private:
  friend std::shared_ptr<const PermGroup> group_from_generators(std::size_t, std::vector<Permutation>,
                                                               std::size_t);
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> parents_;
  std::map<Permutation, std::size_t> index_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupHandle = std::shared_ptr<const PermGroup>;

/// Enumerates the closure of `generators` by BFS, then partitions it into
/// conjugacy classes by brute force.
///
/// Throws std::invalid_argument for a malformed permutation and GroupTooLarge
/// when the closure exceeds `max_order`.
inline GroupHandle group_from_generators(std::size_t degree, std::vector<Permutation> generators,
                                         std::size_t max_order = kDefaultMaxGroupOrder) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be at least 1");
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator length does not match the degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw std::invalid_argument("generator is not a bijection");
      hit[v] = true;
    }
  }
  std::shared_ptr<PermGroup> group(new PermGroup());
  group->degree_ = degree;
  group->generators_ = std::move(generators);

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  group->elements_.push_back(identity);
  group->words_.emplace_back();
  group->parents_.push_back(0);
  group->index_.emplace(identity, 0);
  for (std::size_t head = 0; head < group->elements_.size(); ++head) {
    for (std::size_t j = 0; j < group->generators_.size(); ++j) {
      Permutation next = compose(group->elements_[head], group->generators_[j]);
      if (group->index_.count(next)) continue;
      if (group->elements_.size() >= max_order)
        throw GroupTooLarge("group closure exceeds the bound of " + std::to_string(max_order) + " elements");
      std::vector<std::size_t> w = group->words_[head];
      w.push_back(j);
      group->index_.emplace(next, group->elements_.size());
      group->elements_.push_back(std::move(next));
      group->words_.push_back(std::move(w));
      group->parents_.push_back(head);
    }
  }

  const std::size_t n = group->elements_.size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  group->class_of_.assign(n, kUnassigned);
  std::vector<Permutation> inverses(n);
  for (std::size_t h = 0; h < n; ++h) inverses[h] = invert(group->elements_[h]);
  for (std::size_t g = 0; g < n; ++g) {
    if (group->class_of_[g] != kUnassigned) continue;
    const std::size_t cls = group->classes_.size();
    ConjClass c;
    c.representative = g;
    const Permutation& pg = group->elements_[g];
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t conj = group->index_.at(compose(compose(group->elements_[h], pg), inverses[h]));
      if (group->class_of_[conj] == kUnassigned) {
        group->class_of_[conj] = cls;
        ++c.size;
      }
      if (compose(group->elements_[h], pg) == compose(pg, group->elements_[h])) ++c.centralizer_order;
    }
    Permutation power = pg;
    c.representative_order = 1;
    while (power != identity) {
      power = compose(power, pg);
      ++c.representative_order;
    }
    group->classes_.push_back(c);
  }
  return group;
}

using CMatrix = Matrix<Cyclotomic>;

/// Representation φ: G -> GL_d(Q(ζ_N)) given by one matrix per generator.
///
/// The image of every element is computed once at construction by
/// multiplying generator matrices along its word.
class Representation {
 public:
  /// With `verify`, checks φ(g)φ(h) = φ(gh) for all pairs and throws
  /// ConsistencyError on failure.
  Representation(GroupHandle group, int cyclotomic_order, std::size_t dim, std::vector<CMatrix> generator_images,
                 bool verify = false)
      : group_(std::move(group)), order_(cyclotomic_order), dim_(dim), gens_(std::move(generator_images)) {
    if (!group_) throw std::invalid_argument("representation needs a group");
    if (gens_.size() != group_->generators().size())
      throw Mismatch("representation needs one matrix per group generator");
    for (const auto& m : gens_)
      if (m.rows() != dim_ || m.cols() != dim_) throw Mismatch("generator matrix has the wrong size");
    images_.reserve(group_->order());
    images_.push_back(CMatrix::identity(dim_));
    for (std::size_t id = 1; id < group_->order(); ++id) {
      images_.push_back(images_[group_->parent(id)] * gens_[group_->word(id).back()]);
    }
    if (verify) this->verify();
  }

  const GroupHandle& group() const noexcept { return group_; }
  int cyclotomic_order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<CMatrix>& generator_images() const noexcept { return gens_; }
  const CMatrix& image(std::size_t element) const { return images_.at(element); }

  /// Brute-force homomorphism and element-order checks.
  void verify() const {
    const std::size_t n = group_->order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!(images_[a] * images_[b] == images_[group_->multiply(a, b)]))
          throw ConsistencyError("generator matrices do not define a homomorphism");
    for (const auto& c : group_->classes()) {
      CMatrix p = CMatrix::identity(dim_);
      for (std::size_t k = 0; k < c.representative_order; ++k) p = p * images_[c.representative];
      if (!(p == CMatrix::identity(dim_))) throw ConsistencyError("phi(g)^ord(g) is not the identity");
    }
  }

  static Representation trivial(const GroupHandle& g) {
    std::vector<CMatrix> gens(g->generators().size(), CMatrix::identity(1));
    return Representation(g, 1, 1, std::move(gens));
  }

  static Representation sign(const GroupHandle& g) {
    std::vector<CMatrix> gens;
    for (const auto& p : g->generators()) gens.emplace_back(1, 1, std::vector<Cyclotomic>{permutation_sign(p)});
    return Representation(g, 1, 1, std::move(gens));
  }

  /// Natural action on C^degree: e_i ↦ e_{g(i)}.
  static Representation permutation(const GroupHandle& g) {
    std::vector<CMatrix> gens;
    for (const auto& p : g->generators()) {
      CMatrix m(g->degree(), g->degree());
      for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = Cyclotomic(1);
      gens.push_back(std::move(m));
    }
    return Representation(g, 1, g->degree(), std::move(gens));
  }

  /// Left regular representation on C[G].
  static Representation regular(const GroupHandle& g) {
    std::vector<CMatrix> gens;
    const std::size_t n = g->order();
    for (const auto& p : g->generators()) {
      CMatrix m(n, n);
      for (std::size_t h = 0; h < n; ++h) m(g->index_of(compose(p, g->element(h))), h) = Cyclotomic(1);
      gens.push_back(std::move(m));
    }
    return Representation(g, 1, n, std::move(gens));
  }

 private:
  GroupHandle group_;
  int order_;
  std::size_t dim_;
  std::vector<CMatrix> gens_;
  std::vector<CMatrix> images_;
};

inline void check_same_group(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw Mismatch("representations of different groups");
}

/// φ^∨ with generator matrices (φ(s)^{-1})^T.
inline Representation rep_dual(const Representation& a) {
  std::vector<CMatrix> gens;
  for (const auto& m : a.generator_images()) gens.push_back(m.inverse().transpose());
  return Representation(a.group(), a.cyclotomic_order(), a.dim(), std::move(gens));
}

inline Representation rep_dsum(const Representation& a, const Representation& b) {
  check_same_group(a, b);
  std::vector<CMatrix> gens;
  for (std::size_t i = 0; i < a.generator_images().size(); ++i)
    gens.push_back(block_diag(a.generator_images()[i], b.generator_images()[i]));
  return Representation(a.group(), std::lcm(a.cyclotomic_order(), b.cyclotomic_order()), a.dim() + b.dim(),
                        std::move(gens));
}

inline Representation rep_tensor(const Representation& a, const Representation& b) {
  check_same_group(a, b);
  std::vector<CMatrix> gens;
  for (std::size_t i = 0; i < a.generator_images().size(); ++i)
    gens.push_back(kron(a.generator_images()[i], b.generator_images()[i]));
  return Representation(a.group(), std::lcm(a.cyclotomic_order(), b.cyclotomic_order()), a.dim() * b.dim(),
                        std::move(gens));
}

/// Class function: one value per conjugacy class, in the group's class order.
struct Character {
  std::vector<Cyclotomic> values;

  friend bool operator==(const Character&, const Character&) = default;
};

inline Character character_of(const Representation& rep) {
  Character chi;
  for (const auto& c : rep.group()->classes()) chi.values.push_back(rep.image(c.representative).trace());
  return chi;
}

/// dim Hom(V, W)^G as the exact rank of the averaging projector
/// (1/|G|) Σ_g (a(g)^{-1})^T ⊗ b(g). Its trace must be the same nonnegative
/// integer; otherwise the representations are inconsistent.
inline std::size_t hom_fixed_dim_oracle(const Representation& a, const Representation& b) {
  check_same_group(a, b);
  const auto& g = *a.group();
  const std::size_t n = a.dim() * b.dim();
  CMatrix projector(n, n);
  for (std::size_t e = 0; e < g.order(); ++e) projector += kron(a.image(e).inverse().transpose(), b.image(e));
  projector *= Cyclotomic(Rational(1, static_cast<long>(g.order())));
  Cyclotomic trace = projector.trace();
  std::size_t rank = projector.rank();
  if (!trace.is_rational() || !trace.to_rational().is_integer() || trace.to_rational().sign() < 0)
    throw ConsistencyError("projector trace " + trace.to_string() + " is not a nonnegative integer");
  if (trace.to_rational() != Rational(static_cast<long>(rank)))
    throw ConsistencyError("projector rank and trace disagree");
  return rank;
}

}  // namespace orbihrr
