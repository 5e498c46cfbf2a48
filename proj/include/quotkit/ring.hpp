// Polynomial ring descriptors.
//
// A Ring fixes an ordered list of variables, each tagged as a fiber variable
// (the x's, graded) or a base variable (the y's, ungraded parameters). All
// polynomials, matrices and modules carry a shared pointer to their ring;
// mixing values from different rings is a logic error and throws.
#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quotkit {

enum class VarRole { Fiber, Base };

// Exponent vector; length always equals the ring's variable count.
using Expo = std::vector<int>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(std::vector<std::string> names, std::vector<VarRole> roles);

  // n+1 fiber variables prefix0..prefixn, no base variables.
  static RingPtr fiber(const std::string& prefix, int count);

  // Fiber variables first, then base variables; grading is in the fiber block.
  static RingPtr family(const std::string& fiber_prefix, int fiber_count,
                        const std::string& base_prefix, int base_count);

  int size() const { return static_cast<int>(names_.size()); }
  int fiber_count() const { return fiber_count_; }
  int base_count() const { return size() - fiber_count_; }
  const std::string& name(int i) const { return names_.at(i); }
  VarRole role(int i) const { return roles_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  // Total degree in the fiber variables only.
  int fiber_degree(const Expo& e) const;
  // Total degree over all variables.
  int total_degree(const Expo& e) const;

  bool same(const RingPtr& other) const { return this == other.get(); }

  // Subring on the base variables only (they become the new ring's fiber
  // variables so ideal machinery applies to them directly). Memoized, so all
  // callers share one ring instance.
  RingPtr base_subring() const;

  // Subring on the fiber variables only; memoized.
  RingPtr fiber_subring() const;

  // This ring with extra fiber variables appended (used for radical
  // membership via an auxiliary variable).
  RingPtr extended(const std::vector<std::string>& extra_names) const;

 private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
  int fiber_count_ = 0;
  mutable std::mutex cache_mutex_;
  mutable RingPtr base_cache_;
  mutable RingPtr fiber_cache_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get()) throw std::logic_error("ring mismatch");
}

}  // namespace quotkit
