#include "mgw/subset.hpp"

#include "mgw/error.hpp"

namespace mgw {

SubsetMask SubsetMask::from_labels(std::span<const int> labels, int n) {
  SubsetMask out;
  for (int x : labels) {
    if (x < 1 || x > n) {
      throw InputError("label " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    if (out.contains(x)) throw InputError("label " + std::to_string(x) + " repeated");
    out = out.with(x);
  }
  return out;
}

std::vector<int> SubsetMask::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int x : labels()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

}  // namespace mgw
