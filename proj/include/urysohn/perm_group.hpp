#ifndef URYSOHN_PERM_GROUP_HPP
#define URYSOHN_PERM_GROUP_HPP

#include "urysohn/permutation.hpp"
#include "urysohn/rng.hpp"

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace urysohn {

/// Element-indexed view of a finite group; identity is element 0.
/// Metric computations are written against this interface so enumerated
/// permutation groups and coset quotients share one code path.
class GroupView {
public:
  virtual ~GroupView() = default;
  virtual std::size_t order() const = 0;
  virtual int mult(int a, int b) const = 0;
  virtual int inv(int a) const = 0;
};

/// Permutation group generated by a list of permutations.
struct PermutationGroup {
  int degree;
  std::vector<Permutation> generators;
};

/// Breadth-first closure of a generating set. Element order is canonical:
/// identity first, then BFS levels in generator order — stable across runs,
/// which the byte-identical-rerun contract relies on.
class EnumeratedGroup : public GroupView {
public:
  /// Throws if the closure exceeds cap.
  static EnumeratedGroup enumerate(const PermutationGroup &group, std::size_t cap);

  std::size_t order() const override { return elems_.size(); }
  int mult(int a, int b) const override {
    return index_.at(elems_[a].compose(elems_[b]).key());
  }
  int inv(int a) const override { return inv_[a]; }

  int degree() const { return degree_; }
  const Permutation &element(int i) const { return elems_[i]; }
  const std::vector<Permutation> &elements() const { return elems_; }
  const std::vector<int> &generator_indices() const { return gen_indices_; }

  std::optional<int> index_of(const Permutation &p) const {
    auto it = index_.find(p.key());
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  /// BFS decomposition: element i != 0 equals element(parent[i]) * generator(via[i]).
  int parent(int i) const { return parent_[i]; }
  int via_generator(int i) const { return via_[i]; }
  std::size_t generator_count() const { return gens_.size(); }
  const Permutation &generator(int i) const { return gens_[i]; }

  /// Conjugacy classes, each sorted, ordered by least member.
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// All normal subgroups as sorted element lists (unions of conjugacy
  /// classes closed under multiplication). Intended for small groups.
  std::vector<std::vector<int>> normal_subgroups() const;

private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> inv_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::vector<int> gen_indices_;
};

/// Lazily represented direct power G^m: elements are m-tuples of element
/// indices, never enumerated. Coordinatewise product and seeded uniform
/// sampling are the whole interface.
class DirectPowerGroup {
public:
  DirectPowerGroup(std::shared_ptr<const EnumeratedGroup> base, long long m)
      : base_(std::move(base)), m_(m) {}

  long long power() const { return m_; }
  const EnumeratedGroup &base() const { return *base_; }

  std::vector<int> identity() const { return std::vector<int>(m_, 0); }
  std::vector<int> sample(Rng &rng) const {
    std::vector<int> t(m_);
    for (long long i = 0; i < m_; ++i)
      t[i] = static_cast<int>(rng.below(base_->order()));
    return t;
  }
  std::vector<int> mult(const std::vector<int> &a, const std::vector<int> &b) const {
    std::vector<int> r(m_);
    for (long long i = 0; i < m_; ++i)
      r[i] = base_->mult(a[i], b[i]);
    return r;
  }
  /// Coordinatewise action on tuples over a base-set action.
  template <typename Apply>
  std::vector<int> act(const std::vector<int> &g, const std::vector<int> &x, Apply &&apply) const {
    std::vector<int> r(m_);
    for (long long i = 0; i < m_; ++i)
      r[i] = apply(g[i], x[i]);
    return r;
  }

private:
  std::shared_ptr<const EnumeratedGroup> base_;
  long long m_;
};

/// Left cosets of a normal subgroup; element i of the quotient is the coset
/// whose least base-element index is rep(i). Throws if H is not normal.
class QuotientGroup : public GroupView {
public:
  QuotientGroup(std::shared_ptr<const EnumeratedGroup> base, std::vector<int> subgroup);

  std::size_t order() const override { return reps_.size(); }
  int mult(int a, int b) const override {
    return coset_of_[base_->mult(reps_[a], reps_[b])];
  }
  int inv(int a) const override { return coset_of_[base_->inv(reps_[a])]; }

  int coset_of(int base_elem) const { return coset_of_[base_elem]; }
  int rep(int coset) const { return reps_[coset]; }
  const std::vector<int> &subgroup() const { return subgroup_; }
  const EnumeratedGroup &base() const { return *base_; }

  static bool is_normal(const EnumeratedGroup &g, const std::vector<int> &subgroup);

private:
  std::shared_ptr<const EnumeratedGroup> base_;
  std::vector<int> subgroup_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
};

} // namespace urysohn

#endif
