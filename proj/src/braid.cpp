#include "cjmm/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cjmm/error.hpp"

namespace cjmm {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw Error(ErrorKind::InvalidArgument, "a braid needs at least one strand");
  }
  for (int k : letters_) {
    if (k == 0 || std::abs(k) > strands_ - 1) {
      throw Error(ErrorKind::InvalidArgument, "braid letter " + std::to_string(k) +
                                                  " out of range for " + std::to_string(strands_) +
                                                  " strands");
    }
  }
}

BraidWord BraidWord::mirror() const {
  std::vector<int> m(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    m[i] = -letters_[i];
  }
  return BraidWord(strands_, std::move(m));
}

BraidWord BraidWord::stabilized(int sign) const {
  std::vector<int> m = letters_;
  m.push_back(sign > 0 ? strands_ : -strands_);
  return BraidWord(strands_ + 1, std::move(m));
}

BraidWord BraidWord::rotated(std::size_t k) const {
  if (letters_.empty()) {
    return *this;
  }
  std::vector<int> m = letters_;
  std::rotate(m.begin(), m.begin() + static_cast<long>(k % m.size()), m.end());
  return BraidWord(strands_, std::move(m));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  out << strands_ << ":[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out << (i ? "," : "") << letters_[i];
  }
  out << "]";
  return out.str();
}

int closure_component_count(const BraidWord& b) {
  std::vector<int> perm(b.strands());
  std::iota(perm.begin(), perm.end(), 0);
  for (int k : b.letters()) {
    const int i = std::abs(k) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(b.strands(), false);
  int cycles = 0;
  for (int i = 0; i < b.strands(); ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
    }
  }
  return cycles;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int k : b.letters()) {
    w += k > 0 ? 1 : -1;
  }
  return w;
}

void require_knot(const BraidWord& b) {
  const int c = closure_component_count(b);
  if (c != 1) {
    throw Error(ErrorKind::NotAKnot,
                "braid " + b.to_string() + " closes to " + std::to_string(c) + " components");
  }
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 0) {
    throw Error(ErrorKind::InvalidArgument, "torus_braid expects p >= 1, q >= 0");
  }
  std::vector<int> letters;
  for (int r = 0; r < q; ++r) {
    for (int i = 1; i < p; ++i) {
      letters.push_back(i);
    }
  }
  return BraidWord(p, std::move(letters));
}

}  // namespace cjmm
