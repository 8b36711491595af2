#include "coffin/exactnum/power_comparison.hpp"

namespace coffin::exactnum {

LogComparison compare_log(const BigInt& a, const BigInt& b, long p, long q) {
  if (a <= 1 || b <= 1) throw DomainError("compare_log needs a > 1 and b > 1");
  if (q <= 0) throw DomainError("compare_log needs q > 0");
  LogComparison out;
  out.lhs = pow(a, static_cast<unsigned>(q));
  if (p <= 0) {
    // log_b(a) > 0 >= p/q.
    out.rhs = 1;
    out.ordering = std::strong_ordering::greater;
    return out;
  }
  out.rhs = pow(b, static_cast<unsigned>(p));
  out.ordering = compare(BigRational(out.lhs), BigRational(out.rhs));
  return out;
}

}  // namespace coffin::exactnum
