#ifndef HICOMM_CUBE_HPP
#define HICOMM_CUBE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "hicomm/errors.hpp"

namespace hicomm {

// Vertex-labeled n-dimensional cube. Vertex f : n -> 2 is stored at the
// integer index whose bit k equals f(k); bit 0 is coordinate 0.
template <typename V>
struct Cube {
  int dim = 0;
  std::vector<V> verts;  // size 2^dim

  bool operator==(const Cube&) const = default;
  auto operator<=>(const Cube&) const = default;

  V& at(unsigned f) { return verts[f]; }
  const V& at(unsigned f) const { return verts[f]; }
};

// Ordered pair along one axis: `a` at pivot-coordinate 0, `b` at 1.
template <typename V>
struct Line {
  V a;
  V b;
  bool constant() const { return a == b; }
  bool operator==(const Line&) const = default;
};

// 2x2 face; own coordinate 0 is the original axis with the smaller number.
template <typename V>
struct Square {
  std::array<V, 4> verts;  // index = bit(lo axis) + 2*bit(hi axis)
  bool constant() const {
    return verts[0] == verts[1] && verts[1] == verts[2] && verts[2] == verts[3];
  }
  bool operator==(const Square&) const = default;
};

template <typename V>
struct CubeLines {
  std::vector<Line<V>> support;  // f != 1, in increasing packed-f order
  Line<V> pivot;                 // f = 1
};

template <typename V>
struct CubeSquares {
  std::vector<Square<V>> support;
  Square<V> pivot;
};

template <typename V>
Cube<V> gcube(int n, int i, const V& x, const V& y) {
  if (i < 0 || i >= n) throw ValidationError("gcube: axis out of range");
  Cube<V> c;
  c.dim = n;
  c.verts.resize(std::size_t{1} << n);
  for (unsigned f = 0; f < c.verts.size(); ++f) {
    c.verts[f] = ((f >> i) & 1) ? y : x;
  }
  return c;
}

template <typename V>
bool is_constant(const Cube<V>& c) {
  for (const V& v : c.verts) {
    if (!(v == c.verts[0])) return false;
  }
  return true;
}

// Sub-cube selected by fixing some coordinates; free coordinates keep their
// relative order.
template <typename V>
Cube<V> subcube(const Cube<V>& h, const std::map<int, int>& assignment) {
  unsigned fixed_mask = 0;
  unsigned fixed_bits = 0;
  for (auto [coord, bit] : assignment) {
    if (coord < 0 || coord >= h.dim) throw ValidationError("subcube: coordinate out of range");
    if (bit != 0 && bit != 1) throw ValidationError("subcube: assignment must be 0/1");
    fixed_mask |= 1u << coord;
    if (bit) fixed_bits |= 1u << coord;
  }
  std::vector<int> free_coords;
  for (int k = 0; k < h.dim; ++k) {
    if (!(fixed_mask & (1u << k))) free_coords.push_back(k);
  }
  Cube<V> out;
  out.dim = static_cast<int>(free_coords.size());
  out.verts.resize(std::size_t{1} << out.dim);
  for (unsigned u = 0; u < out.verts.size(); ++u) {
    unsigned f = fixed_bits;
    for (std::size_t k = 0; k < free_coords.size(); ++k) {
      if ((u >> k) & 1) f |= 1u << free_coords[k];
    }
    out.verts[u] = h.verts[f];
  }
  return out;
}

// The (i)-cross section lines, split into support (f != 1) and pivot (f = 1).
template <typename V>
CubeLines<V> lines(const Cube<V>& h, int i) {
  if (h.dim < 1) throw ValidationError("lines: cube must have dimension >= 1");
  if (i < 0 || i >= h.dim) throw ValidationError("lines: axis out of range");
  CubeLines<V> out;
  const unsigned rest = static_cast<unsigned>(h.dim) - 1;
  const unsigned count = 1u << rest;
  std::vector<int> other;
  for (int k = 0; k < h.dim; ++k) {
    if (k != i) other.push_back(k);
  }
  for (unsigned f = 0; f < count; ++f) {
    unsigned base = 0;
    for (unsigned k = 0; k < rest; ++k) {
      if ((f >> k) & 1) base |= 1u << other[k];
    }
    Line<V> line{h.verts[base], h.verts[base | (1u << i)]};
    if (f + 1 == count) {
      out.pivot = std::move(line);
    } else {
      out.support.push_back(std::move(line));
    }
  }
  return out;
}

// The (i,j)-cross section squares, split into support and pivot.
template <typename V>
CubeSquares<V> squares(const Cube<V>& h, int i, int j) {
  if (h.dim < 2) throw ValidationError("squares: cube must have dimension >= 2");
  if (i == j) throw ValidationError("squares: axes must differ");
  if (i < 0 || i >= h.dim || j < 0 || j >= h.dim) {
    throw ValidationError("squares: axis out of range");
  }
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  CubeSquares<V> out;
  const unsigned rest = static_cast<unsigned>(h.dim) - 2;
  const unsigned count = 1u << rest;
  std::vector<int> other;
  for (int k = 0; k < h.dim; ++k) {
    if (k != i && k != j) other.push_back(k);
  }
  for (unsigned f = 0; f < count; ++f) {
    unsigned base = 0;
    for (unsigned k = 0; k < rest; ++k) {
      if ((f >> k) & 1) base |= 1u << other[k];
    }
    Square<V> sq;
    for (unsigned b = 0; b < 4; ++b) {
      unsigned v = base;
      if (b & 1) v |= 1u << lo;
      if (b & 2) v |= 1u << hi;
      sq.verts[b] = h.verts[v];
    }
    if (f + 1 == count) {
      out.pivot = std::move(sq);
    } else {
      out.support.push_back(std::move(sq));
    }
  }
  return out;
}

// True when the square's rows or columns are constant, i.e. it equals
// gcube_i^2(x, y) for some axis i.
template <typename V>
bool is_gcube_square(const Square<V>& s) {
  const bool cols = s.verts[0] == s.verts[2] && s.verts[1] == s.verts[3];
  const bool rows = s.verts[0] == s.verts[1] && s.verts[2] == s.verts[3];
  return cols || rows;
}

// Returns the axis i such that c = gcube_i(x, y), or -1 if there is none.
// Constant cubes match every axis; axis 0 is reported for those.
template <typename V>
int gcube_axis(const Cube<V>& c) {
  for (int i = 0; i < c.dim; ++i) {
    const V& x = c.verts[0];
    const V& y = c.verts[1u << i];
    bool ok = true;
    for (unsigned f = 0; f < c.verts.size() && ok; ++f) {
      ok = c.verts[f] == (((f >> i) & 1) ? y : x);
    }
    if (ok) return i;
  }
  return -1;
}

}  // namespace hicomm

#endif  // HICOMM_CUBE_HPP
