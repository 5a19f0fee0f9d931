#include "urysohn/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace urysohn {

EnumeratedGroup EnumeratedGroup::enumerate(const PermutationGroup &group, std::size_t cap) {
  EnumeratedGroup g;
  g.degree_ = group.degree;
  g.gens_ = group.generators;
  for (const auto &p : g.gens_)
    if (p.degree() != group.degree)
      throw std::invalid_argument("enumerate: generator degree mismatch");

  Permutation id(group.degree);
  g.elems_.push_back(id);
  g.index_[id.key()] = 0;
  g.parent_.push_back(-1);
  g.via_.push_back(-1);
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (std::size_t gi = 0; gi < g.gens_.size(); ++gi) {
      Permutation next = g.elems_[head].compose(g.gens_[gi]);
      auto key = next.key();
      if (g.index_.count(key))
        continue;
      if (g.elems_.size() >= cap)
        throw std::runtime_error("enumerate: group order exceeds cap " + std::to_string(cap));
      g.index_[key] = static_cast<int>(g.elems_.size());
      g.elems_.push_back(std::move(next));
      g.parent_.push_back(static_cast<int>(head));
      g.via_.push_back(static_cast<int>(gi));
    }
  }
  g.inv_.resize(g.elems_.size());
  for (std::size_t i = 0; i < g.elems_.size(); ++i)
    g.inv_[i] = g.index_.at(g.elems_[i].inverse().key());
  g.gen_indices_.reserve(g.gens_.size());
  for (const auto &p : g.gens_)
    g.gen_indices_.push_back(g.index_.at(p.key()));
  return g;
}

std::vector<std::vector<int>> EnumeratedGroup::conjugacy_classes() const {
  const int n = static_cast<int>(order());
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (cls[x] != -1)
      continue;
    std::vector<int> c;
    for (int g = 0; g < n; ++g) {
      int y = mult(mult(g, x), inv_[g]);
      if (cls[y] == -1) {
        cls[y] = static_cast<int>(classes.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<std::vector<int>> EnumeratedGroup::normal_subgroups() const {
  auto classes = conjugacy_classes();
  const std::size_t nc = classes.size();
  if (nc > 20)
    throw std::runtime_error("normal_subgroups: too many conjugacy classes");
  // class 0 is {identity}; try every union of classes containing it
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (1u << (nc - 1)); ++mask) {
    std::vector<int> elems = classes[0];
    std::size_t sz = 1;
    for (std::size_t c = 1; c < nc; ++c)
      if (mask & (1u << (c - 1))) {
        elems.insert(elems.end(), classes[c].begin(), classes[c].end());
        sz += classes[c].size();
      }
    if (order() % sz != 0)
      continue;
    std::sort(elems.begin(), elems.end());
    std::set<int> s(elems.begin(), elems.end());
    bool closed = true;
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (!s.count(mult(elems[i], elems[j]))) {
          closed = false;
          break;
        }
    if (closed)
      out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  return out;
}

bool QuotientGroup::is_normal(const EnumeratedGroup &g, const std::vector<int> &subgroup) {
  std::set<int> h(subgroup.begin(), subgroup.end());
  if (!h.count(0))
    return false;
  for (int a : subgroup)
    for (int b : subgroup)
      if (!h.count(g.mult(a, b)))
        return false;
  for (int gi : g.generator_indices())
    for (int x : subgroup)
      if (!h.count(g.mult(g.mult(gi, x), g.inv(gi))))
        return false;
  return true;
}

QuotientGroup::QuotientGroup(std::shared_ptr<const EnumeratedGroup> base,
                             std::vector<int> subgroup)
    : base_(std::move(base)), subgroup_(std::move(subgroup)) {
  if (!is_normal(*base_, subgroup_))
    throw std::invalid_argument("QuotientGroup: subgroup is not normal");
  const int n = static_cast<int>(base_->order());
  coset_of_.assign(n, -1);
  // ascending scan: the first unassigned element is the least member of its
  // coset, so representatives and coset ids follow base element order
  for (int x = 0; x < n; ++x) {
    if (coset_of_[x] != -1)
      continue;
    int id = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (int h : subgroup_)
      coset_of_[base_->mult(x, h)] = id;
  }
  // identity coset is element 0 of the quotient by the scan order
  if (coset_of_[0] != 0)
    throw std::logic_error("QuotientGroup: identity coset is not id 0");
}

} // namespace urysohn
