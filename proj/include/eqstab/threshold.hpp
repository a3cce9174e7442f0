#ifndef EQSTAB_THRESHOLD_HPP
#define EQSTAB_THRESHOLD_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqstab/exact_core.hpp"

namespace eqstab {

// No sign change of P_k below 4(k+1). The bound n_k* < 4(k+1) holds for all
// k >= 1, so this signals an implementation bug, never an expected state.
class BoundViolation : public std::runtime_error {
 public:
  explicit BoundViolation(int k);
  int order() const { return k_; }

 private:
  int k_;
};

struct ThresholdRecord {
  int k;
  int n_star;                   // first n >= 2k+1 with P_k(n) >= 0
  bool bound_ok;                // n_star < 4(k+1)
  std::optional<int> gap_prev;  // n_k* - n_{k-1}*, filled by range scans
};

// Scans n = 2k+1, 2k+2, ... and returns the first nonnegative sign.
ThresholdRecord threshold_linear(int k);

// Binary search over [2k+1, 4k+3]; correct because P_k(n) < 0 for
// 2k+1 <= n < n_k* and P_k(n) >= 0 for n >= n_k*. Self-checks
// P_k(n_star - 1) < 0 after the search.
ThresholdRecord threshold_binary(int k);

enum class Classification { Minimizing, Unstable, NotAdmissible };

const char* to_string(Classification c);

// NotAdmissible when n < 2k+1 (the equator map is not in W^{k,2});
// otherwise Minimizing iff P_k(n) >= 0, Unstable iff P_k(n) < 0.
Classification classify(const OrderDim& od);

// Per-k thresholds for k in [k_lo, k_hi], gap_prev filled for k > k_lo.
// jobs > 1 distributes the independent searches across threads; the result
// order is by k regardless.
std::vector<ThresholdRecord> threshold_range(int k_lo, int k_hi, bool binary = true,
                                             int jobs = 1);

struct GapReport {
  int k_lo = 0;
  int k_hi = 0;
  std::map<int, int> gap_counts;  // gap value -> number of occurrences
  // Lower index k of each pair (k, k+1) with n_{k+1}* - n_k* >= 3 / == 1.
  std::vector<int> positions_ge3;
  std::vector<int> positions_eq1;
  std::vector<ThresholdRecord> records;
};

GapReport gap_analysis(int k_lo, int k_hi, int jobs = 1);

}  // namespace eqstab

#endif
