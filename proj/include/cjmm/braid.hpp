#pragma once

#include <string>
#include <vector>

namespace cjmm {

/// Word in the Artin generators; letter k stands for sigma_|k| with sign(k).
class BraidWord {
 public:
  BraidWord() : strands_(1) {}
  /// Throws InvalidArgument unless 1 <= |k| <= strands - 1 for every letter.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Negates every letter.
  BraidWord mirror() const;
  /// Adds a strand and the letter +-strands (Markov stabilization).
  BraidWord stabilized(int sign) const;
  /// Cyclic rotation by k letters (conjugation).
  BraidWord rotated(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Number of cycles of the closure permutation.
int closure_component_count(const BraidWord& b);

/// Sum of letter signs.
int writhe(const BraidWord& b);

/// Throws NotAKnot unless the closure has exactly one component.
void require_knot(const BraidWord& b);

/// (sigma_1 ... sigma_{p-1})^q on p strands, for p, q > 0.
BraidWord torus_braid(int p, int q);

}  // namespace cjmm
