#include "rsum/family.hpp"

#include <algorithm>

#include "rsum/errors.hpp"

namespace rsum {

namespace {

bool same_domain(const Residue& a, const Residue& b) { return a.modulus() == b.modulus(); }
bool same_domain(const LatticePoint& a, const LatticePoint& b) { return a.dim() == b.dim(); }

}  // namespace

template <class E>
SetFamily<E>::SetFamily(std::vector<std::vector<E>> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("a family needs at least one set");
  const E* reference = nullptr;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto& set = members_[i];
    if (set.empty()) throw InputError("set A_" + std::to_string(i + 1) + " is empty");
    for (const auto& e : set) {
      if (reference == nullptr) {
        reference = &e;
      } else if (!same_domain(*reference, e)) {
        throw InputError("family mixes elements from different domains");
      }
    }
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto& set = members_[i];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InputError("set A_" + std::to_string(i + 1) + " has repeated elements");
    }
  }
}

template <class E>
SetFamily<E> SetFamily<E>::repeated(std::vector<E> set, std::size_t n) {
  if (n == 0) throw InputError("a family needs at least one set");
  return SetFamily(std::vector<std::vector<E>>(n, std::move(set)));
}

template <class E>
std::vector<std::size_t> SetFamily<E>::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

template <class E>
std::vector<E> SetFamily<E>::universe() const {
  std::vector<E> all;
  for (const auto& m : members_) all.insert(all.end(), m.begin(), m.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

template <class E>
bool SetFamily<E>::is_uniform() const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const auto& m) { return m == members_.front(); });
}

template <class E>
SetFamily<E> SetFamily<E>::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != members_.size()) throw InputError("permutation length mismatch");
  std::vector<std::vector<E>> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(members_.at(i));
  return SetFamily(std::move(out));
}

template class SetFamily<Residue>;
template class SetFamily<LatticePoint>;

ZpFamily make_zp_family(PrimeModulus p, const std::vector<std::vector<std::int64_t>>& sets) {
  std::vector<std::vector<Residue>> members;
  for (const auto& s : sets) {
    std::vector<Residue> m;
    for (auto v : s) m.emplace_back(v, p);
    members.push_back(std::move(m));
  }
  return ZpFamily(std::move(members));
}

std::vector<LatticePoint> make_int_set(const std::vector<std::int64_t>& values) {
  std::vector<LatticePoint> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(LatticePoint{v});
  return out;
}

LatticeFamily make_int_family(const std::vector<std::vector<std::int64_t>>& sets) {
  std::vector<std::vector<LatticePoint>> members;
  for (const auto& s : sets) members.push_back(make_int_set(s));
  return LatticeFamily(std::move(members));
}

TorsionBound torsion_of(const ZpFamily& family) { return min_torsion(family[0][0].modulus()); }

TorsionBound torsion_of(const LatticeFamily& family) {
  return min_torsion(TorsionFree{family[0][0].dim()});
}

std::string domain_label(const ZpFamily& family) {
  return "F" + std::to_string(family[0][0].modulus().value());
}

std::string domain_label(const LatticeFamily& family) {
  const auto r = family[0][0].dim();
  return r == 1 ? std::string("Z") : "Z^" + std::to_string(r);
}

template <class E>
std::string set_to_string(const std::vector<E>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ',';
    s += rsum::to_string(set[i]);
  }
  s += '}';
  return s;
}

template <class E>
std::string to_string(const SetFamily<E>& family) {
  std::string s;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) s += ';';
    s += set_to_string(family[i]);
  }
  return s;
}

template std::string set_to_string(const std::vector<Residue>&);
template std::string set_to_string(const std::vector<LatticePoint>&);
template std::string to_string(const SetFamily<Residue>&);
template std::string to_string(const SetFamily<LatticePoint>&);

}  // namespace rsum
