#include "avgord/perm.hpp"

#include <algorithm>
#include <numeric>

namespace avgord {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  std::iota(p.images_.begin(), p.images_.end(), static_cast<std::uint8_t>(0));
  return p;
}

Permutation Permutation::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v]) throw DomainError("image sequence is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree) throw DomainError("cycle point out of range");
      if (used[static_cast<std::size_t>(from)])
        throw DomainError("point repeated across cycles of one permutation");
      used[static_cast<std::size_t>(from)] = true;
      p.images_[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw DomainError("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = images_[x];
      ++len;
    }
    ord = lcm_u64(ord, len);
  }
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    std::vector<int> cyc;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(static_cast<int>(x));
      x = images_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::str() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += "(";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cyc[i] + 1);
    }
    out += ")";
  }
  return out;
}

std::uint64_t Permutation::pack() const {
  std::uint64_t key = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    key |= static_cast<std::uint64_t>(images_[x]) << (8 * x);
  return key;
}

}  // namespace avgord
