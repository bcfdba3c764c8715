#include "altnf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "altnf/error.hpp"

namespace altnf {

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw error("permutation degree must be >= 1, got " + std::to_string(n));
  std::vector<int> images(n);
  for (int v = 1; v <= n; ++v)
    images[v - 1] = v;
  return Permutation(std::move(images));
}

Permutation Permutation::three_cycle(int i, int n) {
  if (n < 3)
    throw error("three_cycle needs degree >= 3, got " + std::to_string(n));
  if (i < 1 || i > n - 2)
    throw error("three_cycle index " + std::to_string(i) +
                " out of range [1, " + std::to_string(n - 2) + "] for degree " +
                std::to_string(n));
  Permutation p = identity(n);
  p._images[i - 1] = i + 1;
  p._images[i] = i + 2;
  p._images[i + 1] = i;
  return p;
}

Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
  int n = degree();
  if (n < 1)
    throw error("permutation must have degree >= 1");
  std::vector<char> seen(n, 0);
  for (int v : _images) {
    if (v < 1 || v > n)
      throw error("image " + std::to_string(v) + " out of range [1, " +
                  std::to_string(n) + "]");
    if (seen[v - 1])
      throw error("not a bijection: image " + std::to_string(v) + " repeats");
    seen[v - 1] = 1;
  }
}

int Permutation::operator()(int v) const {
  if (v < 1 || v > degree())
    throw error("point " + std::to_string(v) + " out of range [1, " +
                std::to_string(degree()) + "]");
  return _images[v - 1];
}

int Permutation::preimage(int v) const {
  if (v < 1 || v > degree())
    throw error("point " + std::to_string(v) + " out of range [1, " +
                std::to_string(degree()) + "]");
  for (int u = 1; u <= degree(); ++u)
    if (_images[u - 1] == v)
      return u;
  throw error("corrupt permutation: no preimage for " + std::to_string(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(degree());
  for (int v = 1; v <= degree(); ++v)
    inv[_images[v - 1] - 1] = v;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw error("degree mismatch in composition: " +
                std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (int v = 1; v <= p.degree(); ++v)
    images[v - 1] = p._images[q._images[v - 1] - 1];
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int v = 1; v <= degree(); ++v)
    if (_images[v - 1] != v)
      return false;
  return true;
}

int Permutation::parity() const {
  int n = degree();
  std::vector<char> seen(n, 0);
  int ncycles = 0;
  for (int v = 1; v <= n; ++v) {
    if (seen[v - 1])
      continue;
    ++ncycles;
    int u = v;
    while (!seen[u - 1]) {
      seen[u - 1] = 1;
      u = _images[u - 1];
    }
  }
  return (n - ncycles) % 2;
}

int Permutation::order() const {
  Permutation acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++k;
  }
  return k;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  int n = degree();
  std::vector<char> seen(n, 0);
  for (int v = 1; v <= n; ++v) {
    if (seen[v - 1] || _images[v - 1] == v) {
      seen[v - 1] = 1;
      continue;
    }
    std::vector<int> cycle;
    int u = v;
    while (!seen[u - 1]) {
      cycle.push_back(u);
      seen[u - 1] = 1;
      u = _images[u - 1];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::uint64_t Permutation::packed() const {
  if (degree() > 16)
    throw error("packed() supports degree <= 16, got " +
                std::to_string(degree()));
  std::uint64_t key = 0;
  for (int v : _images)
    key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

std::size_t PermutationHash::operator()(const Permutation &p) const {
  // FNV-1a over the image bytes; degrees here are small.
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_perm(const Permutation &p) {
  std::string out;
  for (int v = 1; v <= p.degree(); ++v) {
    if (v > 1)
      out += ',';
    out += std::to_string(p(v));
  }
  return out;
}

std::string format_perm_cycles(const Permutation &p) {
  auto cs = p.cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

// Positions reported in parse errors are 1-based.
struct Scanner {
  const std::string &text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos;
  }
  int read_int() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos;
    if (pos == start)
      throw parse_error("expected a number", start + 1);
    return std::stoi(text.substr(start, pos - start));
  }
};

Permutation parse_cycles(const std::string &text, int n) {
  Scanner s{text};
  std::vector<int> images(n);
  for (int v = 1; v <= n; ++v)
    images[v - 1] = v;
  std::vector<char> listed(n, 0);

  s.skip_ws();
  while (!s.done()) {
    if (s.peek() != '(')
      throw parse_error("expected '('", s.pos + 1);
    ++s.pos;
    std::vector<int> cycle;
    s.skip_ws();
    while (!s.done() && s.peek() != ')') {
      std::size_t at = s.pos + 1;
      int v = s.read_int();
      if (v < 1 || v > n)
        throw parse_error("point " + std::to_string(v) + " out of range [1, " +
                              std::to_string(n) + "]",
                          at);
      if (listed[v - 1])
        throw parse_error("point " + std::to_string(v) +
                              " appears in more than one place",
                          at);
      listed[v - 1] = 1;
      cycle.push_back(v);
      s.skip_ws();
    }
    if (s.done())
      throw parse_error("unterminated cycle", s.pos + 1);
    ++s.pos; // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    s.skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation parse_one_line(const std::string &text, int n) {
  Scanner s{text};
  std::vector<int> images;
  s.skip_ws();
  while (true) {
    std::size_t at = s.pos + 1;
    int v = s.read_int();
    if (v < 1 || v > n)
      throw parse_error("image " + std::to_string(v) + " out of range [1, " +
                            std::to_string(n) + "]",
                        at);
    images.push_back(v);
    s.skip_ws();
    if (s.done())
      break;
    if (s.peek() != ',')
      throw parse_error("expected ','", s.pos + 1);
    ++s.pos;
    s.skip_ws();
  }
  if (static_cast<int>(images.size()) != n)
    throw parse_error("expected " + std::to_string(n) + " images, got " +
                          std::to_string(images.size()),
                      text.size());
  return Permutation(std::move(images));
}

} // namespace

Permutation parse_perm(const std::string &text, int n) {
  if (n < 1)
    throw error("permutation degree must be >= 1, got " + std::to_string(n));
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos)
    throw parse_error("empty permutation text", 1);
  if (text[first] == '(')
    return parse_cycles(text, n);
  return parse_one_line(text, n);
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << format_perm_cycles(p);
}

} // namespace altnf
