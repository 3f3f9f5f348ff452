#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace xygap {

/// Kahan-Babuska accumulator in long double.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0.0L;
  long double carry_ = 0.0L;
};

/// Sums terms in descending order of magnitude. Takes the vector by value
/// since it is sorted in place.
inline long double sum_descending(std::vector<long double> terms) {
  std::sort(terms.begin(), terms.end(), [](long double a, long double b) {
    return std::fabs(a) > std::fabs(b);
  });
  CompensatedSum acc;
  for (long double t : terms) acc.add(t);
  return acc.value();
}

}  // namespace xygap
