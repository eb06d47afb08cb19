#ifndef HICOMM_PARTIAL_CONGRUENCE_HPP
#define HICOMM_PARTIAL_CONGRUENCE_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hicomm/algebra.hpp"
#include "hicomm/element.hpp"

namespace hicomm {

// Union-find over a growing finite set of discovered elements of a
// computable algebra. Pairs are only ever added, so the relation is a sound
// lower bound of any congruence containing the seeded pairs.
class PartialCongruence {
 public:
  explicit PartialCongruence(std::uint32_t element_cap = 1 << 20) : cap_(element_cap) {}

  // Registers an element (no-op if already known).
  void add(Elem e);
  void unite(Elem a, Elem b);
  // Unrelated unless both known and in one class; equal elements are always
  // related.
  bool related(Elem a, Elem b) const;

  const std::vector<Elem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  // All related ordered pairs (a, b), a != b, among discovered elements, in
  // deterministic (discovery-order) enumeration.
  std::vector<std::pair<Elem, Elem>> related_pairs() const;

  // Members of the class of e, in discovery order.
  std::vector<Elem> class_of(Elem e) const;

 private:
  friend void pc_close(PartialCongruence& pc, const ComputableAlgebra& A,
                       const std::vector<Elem>& ambient);

  std::uint32_t slot(Elem e);
  int find(std::uint32_t x) const;

  std::uint32_t cap_;
  std::unordered_map<Elem, std::uint32_t> index_;
  std::vector<Elem> elems_;
  mutable std::vector<std::uint32_t> parent_;
};

// Adds, until stable, images of componentwise-related tuples drawn from
// `ambient`: whenever tuples a and b over ambient satisfy a_d ~ b_d for all
// d, the images A(a) and A(b) are united (and discovered). The ambient set
// itself does not grow during closure.
void pc_close(PartialCongruence& pc, const ComputableAlgebra& A,
              const std::vector<Elem>& ambient);

}  // namespace hicomm

#endif  // HICOMM_PARTIAL_CONGRUENCE_HPP
