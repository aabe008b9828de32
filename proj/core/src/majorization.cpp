#include "polycomp/majorization.hpp"

#include <numeric>

namespace polycomp {

IntSeq::IntSeq(std::vector<long long> values) : v_(std::move(values)) {
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i - 1] < v_[i])
      throw ValidationError("sequence is not non-increasing at position " + std::to_string(i + 1));
}

IntSeq IntSeq::from_ints(const std::vector<int>& values) {
  return IntSeq(std::vector<long long>(values.begin(), values.end()));
}

long long IntSeq::at(int i) const {
  if (i < 1 || i > size()) throw InternalError("IntSeq::at out of range");
  return v_[static_cast<std::size_t>(i - 1)];
}

ExtInt IntSeq::at_ext(int i) const {
  if (i < 1) return ExtInt::pos_inf();
  if (i > size()) return ExtInt::neg_inf();
  return ExtInt::finite(at(i));
}

long long IntSeq::sum() const { return std::accumulate(v_.begin(), v_.end(), 0ll); }

long long IntSeq::prefix(int k) const {
  if (k < 0) k = 0;
  if (k > size()) k = size();
  return std::accumulate(v_.begin(), v_.begin() + k, 0ll);
}

int IntSeq::positive_count() const {
  int n = 0;
  for (long long v : v_)
    if (v > 0) ++n;
  return n;
}

bool majorize(const IntSeq& c, const std::vector<long long>& a) {
  if (static_cast<std::size_t>(c.size()) != a.size())
    throw ValidationError("majorization length mismatch");
  long long pc = 0, pa = 0;
  for (int k = 1; k <= c.size(); ++k) {
    pc += c.at(k);
    pa += a[static_cast<std::size_t>(k - 1)];
    if (k < c.size() && pc > pa) return false;
  }
  return pc == pa;
}

bool majorize(const IntSeq& c, const IntSeq& a) { return majorize(c, a.values()); }

int h_index(const IntSeq& c, const IntSeq& d, int j) {
  const int q = c.size();
  const int x = q - d.size();
  if (j < 1 || j > x) throw ValidationError("h_index j out of range");
  // d_{i-j+1} = -inf beyond the stored range guarantees existence at
  // i = q - x + j at the latest, where c_i is still finite.
  for (int i = 1; i <= q; ++i)
    if (d.at_ext(i - j + 1) < c.at_ext(i)) return i;
  throw InternalError("h_index found no admissible index");
}

GenMajorizationDetail gen_majorize_detail(const IntSeq& c, const IntSeq& d,
                                          const std::vector<long long>& a) {
  const int q = c.size();
  const int x = q - d.size();
  if (x < 0 || static_cast<std::size_t>(x) != a.size())
    throw ValidationError("generalized majorization length mismatch: |c| must equal |d| + |a|");
  GenMajorizationDetail out;
  for (int i = 1; i <= d.size(); ++i)
    if (!(ExtInt::finite(c.at(i + x)) <= ExtInt::finite(d.at(i)))) out.tail_bound = false;
  long long asum = 0;
  for (int j = 1; j <= x; ++j) {
    int h = h_index(c, d, j);
    long long lhs = c.prefix(h) - d.prefix(h - j);
    asum += a[static_cast<std::size_t>(j - 1)];
    out.lhs.push_back(lhs);
    out.rhs.push_back(asum);
    if (lhs > asum) out.prefix_bounds = false;
  }
  out.total_lhs = c.sum();
  out.total_rhs = d.sum() + asum;
  out.total_equal = out.total_lhs == out.total_rhs;
  return out;
}

bool gen_majorize(const IntSeq& c, const IntSeq& d, const std::vector<long long>& a) {
  return gen_majorize_detail(c, d, a).holds();
}

bool gen_majorize(const IntSeq& c, const IntSeq& d, const IntSeq& a) {
  return gen_majorize(c, d, a.values());
}

}  // namespace polycomp
