#include "hicomm/algebra.hpp"

#include <fstream>
#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "hicomm/errors.hpp"

namespace hicomm {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ValidationError("operation table size overflows");
    }
    r *= base;
  }
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size, std::vector<FiniteOp> ops)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
  if (size_ < 1) throw ValidationError("algebra size must be >= 1");
  if (size_ > 255) throw ValidationError("algebra size must be <= 255");
  std::set<std::string> seen;
  for (const FiniteOp& f : ops_) {
    if (f.arity < 0) throw ValidationError("operation arity must be >= 0");
    if (!seen.insert(f.symbol).second) {
      throw ValidationError("duplicate operation symbol '" + f.symbol + "'");
    }
    std::uint64_t want = pow_u64(static_cast<std::uint64_t>(size_), f.arity);
    if (f.table.size() != want) {
      throw ValidationError("operation '" + f.symbol + "' table has " +
                            std::to_string(f.table.size()) + " entries, expected " +
                            std::to_string(want));
    }
    for (std::uint8_t v : f.table) {
      if (v >= size_) {
        throw ValidationError("operation '" + f.symbol + "' table entry " + std::to_string(v) +
                              " out of range for size " + std::to_string(size_));
      }
    }
  }
}

const FiniteOp& FiniteAlgebra::op(std::string_view symbol) const {
  for (const FiniteOp& f : ops_) {
    if (f.symbol == symbol) return f;
  }
  throw ValidationError("unknown operation symbol '" + std::string(symbol) + "'");
}

std::uint8_t FiniteAlgebra::apply(const FiniteOp& f, std::span<const std::uint8_t> args) const {
  if (static_cast<int>(args.size()) != f.arity) {
    throw ValidationError("arity mismatch for operation '" + f.symbol + "'");
  }
  std::size_t idx = 0;
  for (std::uint8_t a : args) {
    if (a >= size_) throw ValidationError("argument out of range");
    idx = idx * static_cast<std::size_t>(size_) + a;
  }
  return f.table[idx];
}

std::uint8_t FiniteAlgebra::apply(std::string_view symbol,
                                  std::span<const std::uint8_t> args) const {
  return apply(op(symbol), args);
}

FiniteAlgebra load_finite_algebra(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    std::string name = doc.value("name", std::string("algebra"));
    if (!doc.contains("size") || !doc["size"].is_number_unsigned()) {
      throw ParseError("algebra document needs an unsigned \"size\"");
    }
    int size = doc["size"].get<int>();
    if (size < 1 || size > 255) throw ValidationError("algebra size out of range");
    std::vector<FiniteOp> ops;
    if (doc.contains("operations")) {
      if (!doc["operations"].is_array()) throw ParseError("\"operations\" must be an array");
      for (const auto& jop : doc["operations"]) {
        FiniteOp f;
        f.symbol = jop.at("symbol").get<std::string>();
        f.arity = jop.at("arity").get<int>();
        for (const auto& v : jop.at("table")) {
          if (!v.is_number_unsigned()) throw ParseError("table entries must be naturals");
          std::uint64_t x = v.get<std::uint64_t>();
          if (x >= static_cast<std::uint64_t>(size)) {
            throw ValidationError("table entry " + std::to_string(x) + " out of range for size " +
                                  std::to_string(size));
          }
          f.table.push_back(static_cast<std::uint8_t>(x));
        }
        ops.push_back(std::move(f));
      }
    }
    return FiniteAlgebra(std::move(name), size, std::move(ops));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra document: ") + e.what());
  }
}

FiniteAlgebra load_finite_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path + "'");
  return load_finite_algebra(in);
}

Elem ComputableAlgebra::apply(std::span<const Elem> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw ValidationError("arity mismatch for computable algebra '" + name_ + "'");
  }
  return eval_(*store_, args);
}

Elem an_apply(ElementStore& store, int n, std::span<const Elem> args) {
  // Try the special case split; any mismatch falls through to s(args).
  bool special = true;
  std::uint64_t i = 0, j = 0;
  unsigned fmask = 0;
  for (int d = 0; d < n && special; ++d) {
    const ElemNode& nd = store.node(args[d]);
    if (nd.kind != ElemKind::r) {
      special = false;
      break;
    }
    std::uint64_t q = nd.i >> 2;
    std::uint64_t rem = nd.i & 3;
    unsigned bit;
    if (rem == 0) {
      bit = 0;
    } else if (rem == 2) {
      bit = 1;
    } else {
      special = false;
      break;
    }
    if (d == 0) {
      i = q;
      j = nd.j;
    } else if (q != i || nd.j != j) {
      special = false;
      break;
    }
    fmask |= bit << d;
  }
  if (special) {
    const unsigned all = (1u << n) - 1;
    const unsigned all_but_last = (1u << (n - 1)) - 1;
    if (fmask == all_but_last) return store.rel(i, checked_add(j, 1));
    if (fmask == all) return store.rel(checked_add(i, 1), checked_add(j, 1));
    return store.oel(i, j, fmask & all_but_last, n - 1);
  }
  return store.snode(args);
}

ComputableAlgebra an_algebra(int n) {
  if (n < 2) throw ValidationError("an_algebra requires n >= 2");
  return ComputableAlgebra(
      "A" + std::to_string(n), n,
      [n](ElementStore& store, std::span<const Elem> args) { return an_apply(store, n, args); });
}

ComputableAlgebra sec3_algebra() {
  return ComputableAlgebra("absorbing-pair", 2,
                           [](ElementStore& store, std::span<const Elem> args) {
                             if (store.kind(args[0]) == ElemKind::oatom) return store.oatom();
                             return store.snode(args);
                           });
}

}  // namespace hicomm
