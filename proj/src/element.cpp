#include "hicomm/element.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "hicomm/errors.hpp"

namespace hicomm {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ValidationError("element index overflow");
  }
  return r;
}

std::size_t ElementStore::NodeHash::operator()(const ElemNode& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind);
  auto mix = [&h](std::uint64_t v) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(n.i);
  mix(n.j);
  mix(n.gbits);
  mix(n.glen);
  for (Elem k : n.kids) mix(k);
  return h;
}

Elem ElementStore::intern(ElemNode&& n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = index_.find(n);
  if (it != index_.end()) return it->second;
  Elem id = static_cast<Elem>(nodes_.size());
  nodes_.push_back(n);
  index_.emplace(std::move(n), id);
  return id;
}

Elem ElementStore::fin(std::uint64_t value) {
  ElemNode n;
  n.kind = ElemKind::fin;
  n.i = value;
  return intern(std::move(n));
}

Elem ElementStore::oatom() {
  ElemNode n;
  n.kind = ElemKind::oatom;
  return intern(std::move(n));
}

Elem ElementStore::rel(std::uint64_t i, std::uint64_t j) {
  ElemNode n;
  n.kind = ElemKind::r;
  n.i = i;
  n.j = j;
  return intern(std::move(n));
}

Elem ElementStore::oel(std::uint64_t i, std::uint64_t j, std::uint64_t gbits, int glen) {
  if (glen < 1 || glen > 63) throw ValidationError("o-element g length out of range");
  ElemNode n;
  n.kind = ElemKind::o;
  n.i = i;
  n.j = j;
  n.gbits = gbits & ((std::uint64_t{1} << glen) - 1);
  n.glen = static_cast<std::uint8_t>(glen);
  return intern(std::move(n));
}

Elem ElementStore::snode(std::span<const Elem> kids) {
  ElemNode n;
  n.kind = ElemKind::s;
  n.kids.assign(kids.begin(), kids.end());
  return intern(std::move(n));
}

std::size_t ElementStore::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return nodes_.size();
}

std::string element_render(const ElementStore& store, Elem e) {
  const ElemNode& n = store.node(e);
  std::ostringstream out;
  switch (n.kind) {
    case ElemKind::fin:
      out << n.i;
      break;
    case ElemKind::oatom:
      out << "o";
      break;
    case ElemKind::r:
      out << "r[" << n.i << "]^[" << n.j << "]";
      break;
    case ElemKind::o: {
      out << "o[" << n.i << ",(";
      for (int k = 0; k < n.glen; ++k) {
        if (k) out << ",";
        out << ((n.gbits >> k) & 1);
      }
      out << ")]^[" << n.j << "]";
      break;
    }
    case ElemKind::s: {
      out << "s(";
      for (std::size_t k = 0; k < n.kids.size(); ++k) {
        if (k) out << ",";
        out << element_render(store, n.kids[k]);
      }
      out << ")";
      break;
    }
  }
  return out.str();
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of element text");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos) +
                       " in element text");
    }
    ++pos;
  }
  std::uint64_t nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected number at position " + std::to_string(pos) + " in element text");
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError("number too large in element text");
      }
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
};

Elem parse_element(ElementStore& store, Scanner& sc) {
  char c = sc.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    return store.fin(sc.nat());
  }
  if (c == 'r') {
    ++sc.pos;
    sc.expect('[');
    std::uint64_t i = sc.nat();
    sc.expect(']');
    sc.expect('^');
    sc.expect('[');
    std::uint64_t j = sc.nat();
    sc.expect(']');
    return store.rel(i, j);
  }
  if (c == 'o') {
    ++sc.pos;
    sc.skip_ws();
    if (sc.pos < sc.text.size() && sc.text[sc.pos] == '[') {
      ++sc.pos;
      std::uint64_t i = sc.nat();
      sc.expect(',');
      sc.expect('(');
      std::uint64_t gbits = 0;
      int glen = 0;
      while (true) {
        std::uint64_t b = sc.nat();
        if (b > 1) throw ParseError("g entries must be bits");
        if (glen >= 63) throw ParseError("g too long");
        gbits |= (b << glen);
        ++glen;
        if (sc.peek() == ',') {
          ++sc.pos;
          continue;
        }
        break;
      }
      sc.expect(')');
      sc.expect(']');
      sc.expect('^');
      sc.expect('[');
      std::uint64_t j = sc.nat();
      sc.expect(']');
      return store.oel(i, j, gbits, glen);
    }
    return store.oatom();
  }
  if (c == 's') {
    ++sc.pos;
    sc.expect('(');
    std::vector<Elem> kids;
    kids.push_back(parse_element(store, sc));
    while (sc.peek() == ',') {
      ++sc.pos;
      kids.push_back(parse_element(store, sc));
    }
    sc.expect(')');
    return store.snode(kids);
  }
  throw ParseError(std::string("unexpected character '") + c + "' in element text");
}

}  // namespace

Elem element_parse(ElementStore& store, std::string_view text) {
  Scanner sc{text};
  Elem e = parse_element(store, sc);
  if (!sc.done()) throw ParseError("trailing input after element");
  return e;
}

}  // namespace hicomm
