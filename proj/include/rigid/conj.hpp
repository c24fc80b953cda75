#pragma once

#include <map>
#include <string>
#include <vector>

#include "rigid/weyl.hpp"

namespace rigid {

struct ConjClassRecord {
  ExtAffElt rep;
  std::string label;  // reduced word of rep, e.g. "s0s2"
  int min_length = 0;
  NewtonPoint newton;
  Subset J_O = 0;
  bool elliptic = false;
  std::vector<ExtAffElt> min_reps;
};

struct Descent {
  std::vector<ExtAffElt> min_reps;  // plateau at the minimum reached
  int min_length = 0;
  std::vector<std::string> path;    // conjugating generators, in order
};

/// Order on representatives: length, affine reflections in the reduced word, word string.
bool canonical_less(const AffineWeyl& aw, const ExtAffElt& a, const ExtAffElt& b);

Descent descend_to_minimal(const AffineWeyl& aw, const ExtAffElt& e, std::size_t budget = 1000000);

class ClassList {
 public:
  ClassList() = default;
  explicit ClassList(std::vector<ConjClassRecord> records);

  const std::vector<ConjClassRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const ConjClassRecord& operator[](std::size_t i) const { return records_[i]; }
  /// Index of the class having e as a minimal-length member, or -1.
  int index_of_min(const ExtAffElt& e) const;
  int index_of_label(const std::string& label) const;
  std::size_t num_elliptic() const;

 private:
  std::vector<ConjClassRecord> records_;
  std::map<ExtAffElt, int> by_min_;
};

/// Newton-zero classes with min length <= L - 2, sorted by (min_length, label).
/// With check_stability the enumeration is repeated at L + 2 (UnstableAtBound).
ClassList newton_zero_classes(const AffineWeyl& aw, int L = 8, bool check_stability = true);

/// Index into classes; NotFound when absent.
int classify(const AffineWeyl& aw, const ExtAffElt& e, const ClassList& classes);

bool brute_force_conjugacy_oracle(const AffineWeyl& aw, const ExtAffElt& a, const ExtAffElt& b, int bound);

struct CountIdentityTerm {
  Subset J = 0;
  std::size_t elliptic_classes = 0;         // finite-order elliptic classes of X x| W_J modulo N_J
  std::size_t quotient_elliptic_classes = 0;  // same count in the semisimple quotient of J
};

struct CountIdentityReport {
  std::vector<CountIdentityTerm> terms;
  std::size_t total = 0;
  std::size_t quotient_total = 0;
  std::size_t class_count = 0;
  bool holds = false;
};

/// Subsets of the simple roots up to w(J) = J'; the least bitmask represents each class.
std::vector<Subset> subset_class_reps(const FinWeylGroup& W);
CountIdentityReport count_identity_check(const AffineWeyl& aw, const ClassList& classes);

}  // namespace rigid
