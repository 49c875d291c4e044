#pragma once

namespace qn {

// Deliberate defects used only by the mutation-sensitivity tests.
enum class Mutation {
  None,
  DropTjEkQ,         // q^{[j+k>n]} factor in the t_j e_k rule becomes 1
  FlipParity,        // opposite-algebra parity in the level recursion is inverted
  PerturbAExponent,  // exponent of (q - q^{-1}) in A_{mi}^+ is off by one
};

Mutation active_mutation();
void set_mutation(Mutation m);

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m) : prev_(active_mutation()) { set_mutation(m); }
  ~ScopedMutation() { set_mutation(prev_); }
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation prev_;
};

}  // namespace qn
