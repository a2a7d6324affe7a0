#ifndef RSUM_FAMILY_HPP
#define RSUM_FAMILY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rsum/domain.hpp"

namespace rsum {

/// An ordered list (A_1, ..., A_n) of nonempty finite sets over one domain.
/// Each member is stored sorted; duplicates and mixed domains are rejected.
template <class E>
class SetFamily {
 public:
  using element_type = E;

  explicit SetFamily(std::vector<std::vector<E>> members);

  /// (A, A, ..., A) with n slots.
  static SetFamily repeated(std::vector<E> set, std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<E>& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<std::vector<E>>& members() const noexcept { return members_; }
  std::vector<std::size_t> sizes() const;

  /// Sorted union of all members.
  std::vector<E> universe() const;

  /// All members equal as sets.
  bool is_uniform() const;

  /// The same sets in a different slot order.
  SetFamily permuted(const std::vector<std::size_t>& order) const;

 private:
  std::vector<std::vector<E>> members_;
};

using ZpFamily = SetFamily<Residue>;
using LatticeFamily = SetFamily<LatticePoint>;

/// Convenience constructors from raw integers.
ZpFamily make_zp_family(PrimeModulus p, const std::vector<std::vector<std::int64_t>>& sets);
LatticeFamily make_int_family(const std::vector<std::vector<std::int64_t>>& sets);
std::vector<LatticePoint> make_int_set(const std::vector<std::int64_t>& values);

TorsionBound torsion_of(const ZpFamily& family);
TorsionBound torsion_of(const LatticeFamily& family);

/// "F7", "Z", "Z^3".
std::string domain_label(const ZpFamily& family);
std::string domain_label(const LatticeFamily& family);

/// "{0,1,2};{0,3}" in slot order with sorted members.
template <class E>
std::string to_string(const SetFamily<E>& family);

template <class E>
std::string set_to_string(const std::vector<E>& set);

}  // namespace rsum

#endif  // RSUM_FAMILY_HPP
