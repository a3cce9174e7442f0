#include "eqstab/threshold.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

namespace eqstab {

BoundViolation::BoundViolation(int k)
    : std::runtime_error("bound-violated: no sign change of P_k below 4(k+1) for k = " +
                         std::to_string(k)),
      k_(k) {}

namespace {

void check_args(int k) {
  if (k < 1) throw std::invalid_argument("threshold: k must be >= 1");
}

ThresholdRecord make_record(int k, int n_star) {
  if (n_star == 2 * k + 1) {
    // P_k(2k+1) < 0 for every k >= 1; a nonnegative sign here means the
    // sign evaluation itself is broken.
    throw std::logic_error("threshold: P_k(2k+1) >= 0 for k = " + std::to_string(k));
  }
  return ThresholdRecord{k, n_star, n_star < 4 * (k + 1), std::nullopt};
}

}  // namespace

ThresholdRecord threshold_linear(int k) {
  check_args(k);
  for (int n = 2 * k + 1; n <= 4 * k + 3; ++n) {
    if (p_sign(OrderDim(k, n)) >= 0) return make_record(k, n);
  }
  throw BoundViolation(k);
}

ThresholdRecord threshold_binary(int k) {
  check_args(k);
  int lo = 2 * k + 1, hi = 4 * k + 4;  // half-open [lo, hi)
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (p_sign(OrderDim(k, mid)) >= 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo > 4 * k + 3) throw BoundViolation(k);
  if (lo - 1 >= 2 * k + 1 && p_sign(OrderDim(k, lo - 1)) >= 0) {
    throw std::logic_error("threshold_binary: P_k(n_star - 1) >= 0 for k = " + std::to_string(k));
  }
  return make_record(k, lo);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Minimizing:
      return "Minimizing";
    case Classification::Unstable:
      return "Unstable";
    default:
      return "NotAdmissible";
  }
}

Classification classify(const OrderDim& od) {
  if (!od.sobolev_admissible()) return Classification::NotAdmissible;
  return p_sign(od) >= 0 ? Classification::Minimizing : Classification::Unstable;
}

std::vector<ThresholdRecord> threshold_range(int k_lo, int k_hi, bool binary, int jobs) {
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("threshold_range: need 1 <= k_lo <= k_hi");
  const int count = k_hi - k_lo + 1;
  std::vector<ThresholdRecord> out(count, ThresholdRecord{0, 0, false, std::nullopt});

  auto run_one = [&](int idx) {
    int k = k_lo + idx;
    out[idx] = binary ? threshold_binary(k) : threshold_linear(k);
  };

  if (jobs <= 1 || count < 4) {
    for (int i = 0; i < count; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    int width = std::min(jobs, count);
    pool.reserve(width);
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  for (int i = 1; i < count; ++i) out[i].gap_prev = out[i].n_star - out[i - 1].n_star;
  return out;
}

GapReport gap_analysis(int k_lo, int k_hi, int jobs) {
  if (k_lo < 1 || k_hi <= k_lo) throw std::invalid_argument("gap_analysis: need 1 <= k_lo < k_hi");
  GapReport report;
  report.k_lo = k_lo;
  report.k_hi = k_hi;
  report.records = threshold_range(k_lo, k_hi, /*binary=*/true, jobs);
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    int gap = *report.records[i].gap_prev;
    report.gap_counts[gap] += 1;
    int lower_k = report.records[i - 1].k;
    if (gap >= 3) report.positions_ge3.push_back(lower_k);
    if (gap == 1) report.positions_eq1.push_back(lower_k);
  }
  return report;
}

}  // namespace eqstab
