#include "hicomm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hicomm/errors.hpp"

namespace hicomm {

Partition Partition::zero(int n) {
  Partition p;
  p.block_.resize(n);
  for (int i = 0; i < n; ++i) p.block_[i] = i;
  p.num_blocks_ = n;
  return p;
}

Partition Partition::one(int n) {
  Partition p;
  p.block_.assign(n, 0);
  p.num_blocks_ = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_block_ids(const std::vector<int>& ids) {
  Partition p;
  p.block_.resize(ids.size());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, inserted] = relabel.emplace(ids[i], static_cast<int>(relabel.size()));
    p.block_[i] = it->second;
  }
  p.num_blocks_ = static_cast<int>(relabel.size());
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n, -1);
  int label = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n) throw ValidationError("partition block entry out of range");
      if (ids[x] != -1) throw ValidationError("partition blocks overlap");
      ids[x] = label;
    }
    ++label;
  }
  for (int x = 0; x < n; ++x) {
    if (ids[x] == -1) throw ValidationError("partition blocks do not cover the carrier");
  }
  return from_block_ids(ids);
}

bool Partition::leq(const Partition& other) const {
  if (size() != other.size()) throw ValidationError("partition size mismatch");
  std::vector<int> image(num_blocks_, -1);
  for (int x = 0; x < size(); ++x) {
    int& img = image[block_[x]];
    if (img == -1) {
      img = other.block_[x];
    } else if (img != other.block_[x]) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int x = 0; x < size(); ++x) out[block_[x]].push_back(x);
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw ValidationError("partition size mismatch");
  std::vector<int> ids(p.size());
  std::map<std::pair<int, int>, int> relabel;
  for (int x = 0; x < p.size(); ++x) {
    auto key = std::make_pair(p.block_of(x), q.block_of(x));
    auto [it, inserted] = relabel.emplace(key, static_cast<int>(relabel.size()));
    ids[x] = it->second;
  }
  return Partition::from_block_ids(ids);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  if (n <= 0) return out;
  // Restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
  std::vector<int> a(n, 0);
  while (true) {
    out.push_back(Partition::from_block_ids(a));
    int k = n - 1;
    for (; k >= 1; --k) {
      int maxPrefix = 0;
      for (int t = 0; t < k; ++t) maxPrefix = std::max(maxPrefix, a[t]);
      if (a[k] <= maxPrefix) {
        ++a[k];
        for (int t = k + 1; t < n; ++t) a[t] = 0;
        break;
      }
    }
    if (k == 0) break;
  }
  return out;
}

std::string partition_render(const Partition& p) {
  std::ostringstream out;
  out << "[";
  auto blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out << ",";
    out << "[";
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k) out << ",";
      out << blocks[b][k];
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

struct PartScanner {
  std::string_view text;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of partition text");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "' in partition text");
    ++pos;
  }
  int nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected number in partition text");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw ParseError("partition entry too large");
      ++pos;
    }
    return static_cast<int>(v);
  }
};

}  // namespace

Partition partition_parse(std::string_view text, int expect_n) {
  PartScanner sc{text};
  sc.expect('[');
  std::vector<std::vector<int>> blocks;
  int max_entry = -1;
  if (sc.peek() != ']') {
    while (true) {
      sc.expect('[');
      std::vector<int> block;
      if (sc.peek() != ']') {
        while (true) {
          int v = sc.nat();
          max_entry = std::max(max_entry, v);
          block.push_back(v);
          if (sc.peek() == ',') {
            ++sc.pos;
            continue;
          }
          break;
        }
      }
      sc.expect(']');
      blocks.push_back(std::move(block));
      if (sc.peek() == ',') {
        ++sc.pos;
        continue;
      }
      break;
    }
  }
  sc.expect(']');
  sc.skip_ws();
  if (sc.pos != sc.text.size()) throw ParseError("trailing input after partition");
  int n = expect_n >= 0 ? expect_n : max_entry + 1;
  if (expect_n >= 0 && max_entry >= expect_n) {
    throw ValidationError("partition entry out of range for carrier");
  }
  return Partition::from_blocks(n, blocks);
}

}  // namespace hicomm
