#ifndef HICOMM_ELEMENT_HPP
#define HICOMM_ELEMENT_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hicomm {

// Interned element handle. Equality of handles from the same store is
// structural equality of the elements they denote.
using Elem = std::uint32_t;

enum class ElemKind : std::uint8_t {
  fin,    // carrier index of a finite algebra
  oatom,  // the distinguished constant `o`
  r,      // r[i]^[j]
  o,      // o[i,(g...)]^[j]
  s,      // s(e,...,e), a formal injection node
};

struct ElemNode {
  ElemKind kind = ElemKind::fin;
  std::uint8_t glen = 0;       // number of bits in g (kind o)
  std::uint64_t i = 0;         // index i (r, o) or carrier value (fin)
  std::uint64_t j = 0;         // superscript j (r, o)
  std::uint64_t gbits = 0;     // g packed little-endian, bit k = g(k) (kind o)
  std::vector<Elem> kids;      // children (kind s)

  bool operator==(const ElemNode& other) const = default;
};

// Hash-consing store. Structural equality of stored elements reduces to
// handle equality; a node is never created twice. Interning is serialized
// with a mutex; node lookup by handle needs no lock because nodes live in
// a deque and are immutable once published.
class ElementStore {
 public:
  ElementStore() = default;
  ElementStore(const ElementStore&) = delete;
  ElementStore& operator=(const ElementStore&) = delete;

  Elem fin(std::uint64_t value);
  Elem oatom();
  Elem rel(std::uint64_t i, std::uint64_t j);
  Elem oel(std::uint64_t i, std::uint64_t j, std::uint64_t gbits, int glen);
  Elem snode(std::span<const Elem> kids);

  const ElemNode& node(Elem e) const { return nodes_[e]; }
  ElemKind kind(Elem e) const { return nodes_[e].kind; }
  std::size_t size() const;

 private:
  struct NodeHash {
    std::size_t operator()(const ElemNode& n) const;
  };

  Elem intern(ElemNode&& n);

  mutable std::mutex mu_;
  std::deque<ElemNode> nodes_;
  std::unordered_map<ElemNode, Elem, NodeHash> index_;
};

// Canonical text form, grammar:
//   element := nat | `o` | `r[` nat `]^[` nat `]`
//            | `o[` nat `,(` bit {`,` bit} `)]^[` nat `]`
//            | `s(` element {`,` element} `)`
// Whitespace between tokens is ignored.
std::string element_render(const ElementStore& store, Elem e);
Elem element_parse(ElementStore& store, std::string_view text);

// u64 addition that refuses to wrap. Element indices only ever grow by
// small increments, so hitting this is a logic error, not a data error.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace hicomm

#endif  // HICOMM_ELEMENT_HPP
