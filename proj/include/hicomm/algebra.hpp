#ifndef HICOMM_ALGEBRA_HPP
#define HICOMM_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hicomm/element.hpp"

namespace hicomm {

struct FiniteOp {
  std::string symbol;
  int arity = 0;
  // Row-major table: the entry for (a_0, ..., a_{k-1}) sits at
  // sum_d a_d * N^(k-1-d).
  std::vector<std::uint8_t> table;
};

// A finite algebra given by operation tables over carrier {0, ..., N-1}.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, std::vector<FiniteOp> ops);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const std::vector<FiniteOp>& ops() const { return ops_; }
  const FiniteOp& op(std::string_view symbol) const;

  std::uint8_t apply(const FiniteOp& f, std::span<const std::uint8_t> args) const;
  std::uint8_t apply(std::string_view symbol, std::span<const std::uint8_t> args) const;

 private:
  std::string name_;
  int size_ = 0;
  std::vector<FiniteOp> ops_;
};

// Loads and validates the JSON document
//   {"name": str, "size": N, "operations": [{"symbol", "arity", "table"}]}.
FiniteAlgebra load_finite_algebra(std::istream& in);
FiniteAlgebra load_finite_algebra_file(const std::string& path);

// An algebra with one operation over a carrier that is never materialized;
// the evaluator is total, pure and deterministic.
class ComputableAlgebra {
 public:
  using Eval = std::function<Elem(ElementStore&, std::span<const Elem>)>;

  ComputableAlgebra(std::string name, int arity, Eval eval)
      : name_(std::move(name)), arity_(arity),
        store_(std::make_unique<ElementStore>()), eval_(std::move(eval)) {}

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  ElementStore& store() const { return *store_; }

  Elem apply(std::span<const Elem> args) const;

 private:
  std::string name_;
  int arity_;
  std::unique_ptr<ElementStore> store_;
  Eval eval_;
};

// The algebra with an n-ary operation t whose only non-free values occur on
// tuples drawn from {r[4i]^[j], r[4i+2]^[j]} with a common i and j:
// writing f(d) = 0 or 1 for the two choices, the value is r[i]^[j+1] when
// f = (1,...,1,0), r[i+1]^[j+1] when f = (1,...,1), and o[i,(g)]^[j] with
// g = f restricted to the first n-1 coordinates otherwise. All remaining
// tuples map to the formal injection node s(args).
ComputableAlgebra an_algebra(int n);

// Evaluates the special case split directly (shared with an_algebra).
Elem an_apply(ElementStore& store, int n, std::span<const Elem> args);

// The binary algebra with absorbing constant o: t(o, y) = o and
// t(x, y) = s(x, y) otherwise.
ComputableAlgebra sec3_algebra();

}  // namespace hicomm

#endif  // HICOMM_ALGEBRA_HPP
