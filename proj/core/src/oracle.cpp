#include "polycomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <thread>

namespace polycomp {

namespace {

int coeffs_per_candidate(const SearchSpace& s) {
  return s.added_rows * s.source.cols() * (s.degree_bound + 1);
}

// Decode candidate index -> W by base-p digits, low coefficient first.
PolyMatrix decode_candidate(const SearchSpace& s, unsigned long long idx) {
  const Field& f = s.field();
  const std::uint64_t p = f.modulus();
  const int n = s.source.cols();
  PolyMatrix w(f, s.added_rows, n);
  for (int i = 0; i < s.added_rows; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<FieldElem> cs;
      cs.reserve(static_cast<std::size_t>(s.degree_bound) + 1);
      for (int k = 0; k <= s.degree_bound; ++k) {
        cs.push_back(FieldElem::from_int(f, static_cast<long long>(idx % p)));
        idx /= p;
      }
      w.at(i, j) = Poly::from_coeffs(f, std::move(cs));
    }
  return w;
}

}  // namespace

unsigned long long SearchSpace::size() const {
  if (field().is_rational())
    throw ValidationError("oracle search space must be over a finite field");
  const std::uint64_t p = field().modulus();
  unsigned long long total = 1;
  for (int k = 0; k < coeffs_per_candidate(*this); ++k) {
    if (total > (1ull << 63) / p) return 1ull << 63;
    total *= p;
  }
  return total;
}

bool AchievableSet::contains(const StructuralData& d) const {
  return witness_for(d) != nullptr;
}

const PolyMatrix* AchievableSet::witness_for(const StructuralData& d) const {
  std::string k = d.key();
  auto it = std::lower_bound(items.begin(), items.end(), d,
                             [](const StructuralData& a, const StructuralData& b) {
                               return a.key() < b.key();
                             });
  if (it == items.end() || !(it->key() == k)) return nullptr;
  return &witnesses[static_cast<std::size_t>(it - items.begin())];
}

AchievableSet enumerate_completions(const SearchSpace& space, unsigned long long budget,
                                    bool randomized_fallback, std::uint64_t seed,
                                    unsigned long long samples) {
  const unsigned long long total = space.size();
  std::vector<unsigned long long> candidates;
  bool exhaustive = true;
  if (total > budget) {
    if (!randomized_fallback)
      throw BudgetError("search space of " + std::to_string(total) +
                        " candidates exceeds the budget of " + std::to_string(budget));
    exhaustive = false;
    std::mt19937_64 rng(seed);
    candidates.reserve(samples);
    for (unsigned long long i = 0; i < samples; ++i)
      candidates.push_back(rng() % total);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }

  const unsigned long long count = exhaustive ? total : candidates.size();
  struct Hit {
    StructuralData data;
    unsigned long long index;
  };
  auto scan = [&](unsigned long long lo, unsigned long long hi, std::vector<Hit>& out) {
    for (unsigned long long k = lo; k < hi; ++k) {
      unsigned long long idx = exhaustive ? k : candidates[k];
      PolyMatrix w = decode_candidate(space, idx);
      PolyMatrix stacked = PolyMatrix::vstack(space.source, w);
      StructuralData d = complete_structural_data(stacked);
      if (space.rank_increment &&
          d.rank != rank_over_function_field(space.source) + *space.rank_increment)
        continue;
      out.push_back({std::move(d), idx});
    }
  };

  unsigned threads = std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  if (count < 1024) threads = 1;
  std::vector<std::vector<Hit>> buckets(threads);
  if (threads == 1) {
    scan(0, count, buckets[0]);
  } else {
    std::vector<std::thread> pool;
    unsigned long long chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      unsigned long long lo = t * chunk, hi = std::min(count, (t + 1) * chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, t] { scan(lo, hi, buckets[t]); });
    }
    for (auto& th : pool) th.join();
  }

  // Deterministic merge: keep the witness of smallest encoding index per key.
  std::map<std::string, Hit> merged;
  for (auto& bucket : buckets)
    for (auto& hit : bucket) {
      std::string k = hit.data.key();
      auto it = merged.find(k);
      if (it == merged.end() || hit.index < it->second.index)
        merged.insert_or_assign(k, std::move(hit));
    }
  AchievableSet set;
  set.exhaustive = exhaustive;
  for (auto& [k, hit] : merged) {
    set.items.push_back(std::move(hit.data));
    set.witnesses.push_back(decode_candidate(space, hit.index));
  }
  return set;
}

std::string target_key(const PrescribedData& t) {
  std::string k = to_string(t.mode) + "|z" + std::to_string(t.z) + "|x" + std::to_string(t.x);
  auto polys = [&](const char* tag, const std::optional<std::vector<Poly>>& v) {
    k += std::string("|") + tag;
    if (!v) return;
    for (const Poly& p : *v) {
      for (const auto& c : p.coeffs()) k += c.to_string() + ",";
      k += ";";
    }
  };
  auto ints = [&](const char* tag, const std::optional<std::vector<int>>& v) {
    k += std::string("|") + tag;
    if (!v) return;
    for (int i : *v) k += std::to_string(i) + ",";
  };
  polys("e", t.numerators);
  polys("p", t.denominators);
  ints("q", t.orders);
  k += "|q1";
  if (t.first_order) k += std::to_string(*t.first_order);
  ints("d", t.col_indices);
  ints("v", t.row_indices);
  return k;
}

namespace {

PrescribedData project(const StructuralData& tuple, const StructuralData& src, Mode mode,
                       int z) {
  PrescribedData t;
  t.mode = mode;
  t.z = z;
  t.x = tuple.rank - src.rank;
  const bool chains = mode == Mode::complete || mode == Mode::fin_inf_col ||
                      mode == Mode::fin_inf_row || mode == Mode::fin_inf ||
                      mode == Mode::fin_only || mode == Mode::fin_first_order;
  const bool orders = mode == Mode::complete || mode == Mode::fin_inf_col ||
                      mode == Mode::fin_inf_row || mode == Mode::fin_inf ||
                      mode == Mode::inf_only;
  if (chains) t.numerators = tuple.eta;
  if (orders) t.orders = tuple.orders;
  if (mode == Mode::fin_first_order) t.first_order = tuple.orders.front();
  if (mode == Mode::complete || mode == Mode::fin_inf_col) t.col_indices = tuple.col_indices;
  if (mode == Mode::complete || mode == Mode::fin_inf_row) t.row_indices = tuple.row_indices;
  return t;
}

bool tuple_matches(const StructuralData& tuple, const PrescribedData& t,
                   const StructuralData& src) {
  if (tuple.rank != src.rank + t.x) return false;
  if (t.numerators && tuple.eta != *t.numerators) return false;
  if (t.orders && tuple.orders != *t.orders) return false;
  if (t.first_order && (tuple.rank == 0 || tuple.orders.front() != *t.first_order))
    return false;
  if (t.col_indices && tuple.col_indices != *t.col_indices) return false;
  if (t.row_indices && tuple.row_indices != *t.row_indices) return false;
  return true;
}

// One-family-at-a-time perturbations; random targets are almost always
// wildly infeasible and exercise nothing.
void near_misses(const PrescribedData& base, const Field& field,
                 std::vector<PrescribedData>& out) {
  auto push = [&](PrescribedData t) { out.push_back(std::move(t)); };
  if (base.orders) {
    for (std::size_t i = 0; i < base.orders->size(); ++i)
      for (int dlt : {-1, +1}) {
        PrescribedData t = base;
        (*t.orders)[i] += dlt;
        std::sort(t.orders->begin(), t.orders->end());
        push(std::move(t));
      }
  }
  if (base.first_order) {
    for (int dlt : {-1, +1}) {
      PrescribedData t = base;
      *t.first_order += dlt;
      push(std::move(t));
    }
  }
  if (base.numerators) {
    std::vector<Poly> bumps = {Poly::variable(field)};
    if (!field.is_rational() && field.modulus() == 2)
      bumps.push_back(Poly::from_ints(field, {1, 1}));
    for (std::size_t i = 0; i < base.numerators->size(); ++i)
      for (const Poly& b : bumps) {
        PrescribedData t = base;
        (*t.numerators)[i] = (*t.numerators)[i] * b;
        push(std::move(t));
        if (Poly::divides(b, (*base.numerators)[i])) {
          PrescribedData s = base;
          (*s.numerators)[i] = Poly::div_exact((*s.numerators)[i], b);
          push(std::move(s));
        }
      }
  }
  auto perturb_indices = [&](std::optional<std::vector<int>> PrescribedData::*fam) {
    if (!(base.*fam)) return;
    for (std::size_t i = 0; i < (base.*fam)->size(); ++i)
      for (int dlt : {-1, +1}) {
        PrescribedData t = base;
        (*(t.*fam))[i] += dlt;
        std::sort((t.*fam)->begin(), (t.*fam)->end(), std::greater<int>());
        push(std::move(t));
      }
  };
  perturb_indices(&PrescribedData::col_indices);
  perturb_indices(&PrescribedData::row_indices);
}

bool admissible_target(const PrescribedData& t, const StructuralData& src, int degree_cap) {
  // The search is degree-complete only up to the cap implied by the space.
  if (t.orders && !t.orders->empty() && -t.orders->front() > degree_cap) return false;
  if (t.first_order && -*t.first_order > degree_cap) return false;
  if (t.mode == Mode::fin_first_order && src.rank + t.x == 0) return false;
  try {
    t.validate_against(src, Ring::polynomial);
  } catch (const ValidationError&) {
    if (t.x < 0 || t.x > std::min(t.z, src.cols - src.rank))
      return true;  // hypothesis-violated targets stay: both sides must reject
    return false;
  }
  return true;
}

}  // namespace

std::vector<PrescribedData> project_targets(const AchievableSet& ach, const StructuralData& src,
                                            Mode mode, int z, int degree_cap) {
  std::map<std::string, PrescribedData> targets;
  std::vector<PrescribedData> raw;
  for (const StructuralData& tuple : ach.items) {
    if (tuple.rank < src.rank || tuple.rank - src.rank > std::min(z, src.cols - src.rank))
      continue;
    if (mode == Mode::fin_first_order && tuple.rank == 0) continue;
    PrescribedData base = project(tuple, src, mode, z);
    raw.push_back(base);
    near_misses(base, src.field, raw);
  }
  for (PrescribedData& t : raw) {
    if (!admissible_target(t, src, degree_cap)) continue;
    targets.emplace(target_key(t), std::move(t));
  }
  std::vector<PrescribedData> out;
  out.reserve(targets.size());
  for (auto& [k, t] : targets) out.push_back(std::move(t));
  return out;
}

OracleReport differential_test(const SearchSpace& space, Mode mode, unsigned long long budget) {
  return differential_test(space, mode, enumerate_completions(space, budget));
}

OracleReport differential_test(const SearchSpace& space, Mode mode, const AchievableSet& ach) {
  StructuralData src = complete_structural_data(space.source);
  OracleReport rep;
  rep.mode = mode;
  rep.kind = "search-differential";
  rep.exhaustive = ach.exhaustive;
  for (const PrescribedData& t : project_targets(ach, src, mode, space.added_rows,
                                                 space.degree_bound)) {
    Verdict v = check_row_completion(src, t, Ring::polynomial);
    bool searched = std::any_of(ach.items.begin(), ach.items.end(),
                                [&](const StructuralData& tu) {
                                  return tuple_matches(tu, t, src);
                                });
    ++rep.targets_checked;
    if (searched) ++rep.feasible_targets;
    // Finite-only targets carry no order, so no degree bound makes the
    // search complete; only the soundness direction is decidable there.
    bool disagree = mode == Mode::fin_only ? (searched && !v.feasible())
                                           : (v.feasible() != searched);
    if (disagree) rep.disagreements.push_back({target_key(t), v.feasible(), searched});
  }
  return rep;
}

namespace {

void partitions_into(int total, int parts, std::vector<int>& acc,
                     const std::function<void(const std::vector<int>&)>& f, int cap = -1) {
  if (parts == 0) {
    if (total == 0) f(acc);
    return;
  }
  int hi = cap < 0 ? total : std::min(cap, total);
  for (int v = hi; v >= 0; --v) {
    if (static_cast<long long>(v) * parts < total) break;  // cannot reach the total
    acc.push_back(v);
    partitions_into(total - v, parts - 1, acc, f, v);
    acc.pop_back();
  }
}

void for_each_partition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  if (total < 0) return;
  std::vector<int> acc;
  partitions_into(total, parts, acc, f);
}

// Monic chains beta_1 | ... | beta_len with sum of degrees equal to total:
// multiplier tuples m_1..m_len with sum_i (len-i+1) deg(m_i) = total.
void monic_chains(const Field& f, int len, int total, std::vector<Poly>& chain,
                  const std::function<void(const std::vector<Poly>&)>& cb) {
  if (len == 0) {
    if (total == 0) cb(chain);
    return;
  }
  const int weight = len;  // the next multiplier divides all later entries
  Poly prev = chain.empty() ? Poly::one(f) : chain.back();
  for (int d = 0; d * weight <= total; ++d) {
    for (const Poly& m : monic_polys_of_degree(f, d)) {
      chain.push_back(prev * m);
      monic_chains(f, len - 1, total - d * weight, chain, cb);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<Poly> monic_polys_of_degree(const Field& f, int degree) {
  if (f.is_rational()) throw ValidationError("finite enumeration needs a finite field");
  std::vector<Poly> out;
  const std::uint64_t p = f.modulus();
  unsigned long long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (unsigned long long idx = 0; idx < count; ++idx) {
    std::vector<FieldElem> cs(static_cast<std::size_t>(degree) + 1, FieldElem::zero(f));
    unsigned long long rest = idx;
    for (int i = 0; i < degree; ++i) {
      cs[static_cast<std::size_t>(i)] = FieldElem::from_int(f, static_cast<long long>(rest % p));
      rest /= p;
    }
    cs[static_cast<std::size_t>(degree)] = FieldElem::one(f);
    out.push_back(Poly::from_coeffs(f, std::move(cs)));
  }
  return out;
}

OracleReport projection_coherence_test(const SearchSpace& space, Mode mode,
                                       unsigned long long budget) {
  return projection_coherence_test(space, mode, enumerate_completions(space, budget));
}

OracleReport projection_coherence_test(const SearchSpace& space, Mode mode,
                                       const AchievableSet& ach) {
  StructuralData src = complete_structural_data(space.source);
  const Field& f = src.field;
  OracleReport rep;
  rep.mode = mode;
  rep.kind = "projection-coherence";
  rep.exhaustive = ach.exhaustive;

  auto complete_feasible = [&](PrescribedData full) {
    full.mode = Mode::complete;
    try {
      return check_row_completion(src, full, Ring::polynomial).feasible();
    } catch (const ValidationError&) {
      return false;
    }
  };

  // Enumerate full extensions of a partial target; every omitted family is
  // capped through the vanishing structural sum.
  auto exists_extension = [&](const PrescribedData& t) -> bool {
    const int r = src.rank, n = src.cols, m = src.rows, x = t.x, z = t.z;
    const int rx = r + x;
    const int d_parts = n - r - x;
    const int v_parts = m + z - r - x;
    bool found = false;
    auto with_dv = [&](PrescribedData base, int budget_dv) {
      for (int sd = 0; sd <= budget_dv && !found; ++sd) {
        for_each_partition(sd, d_parts, [&](const std::vector<int>& d) {
          if (found) return;
          for_each_partition(budget_dv - sd, v_parts, [&](const std::vector<int>& v) {
            if (found) return;
            PrescribedData full = base;
            full.col_indices = d;
            full.row_indices = v;
            if (complete_feasible(full)) found = true;
          });
        });
      }
    };
    long long chain_deg = 0;
    if (t.numerators)
      for (const Poly& e : *t.numerators) chain_deg += e.degree().value();
    long long order_sum = 0;
    if (t.orders)
      for (int q : *t.orders) order_sum += q;

    switch (mode) {
      case Mode::fin_inf_col: {
        long long sv = -(chain_deg + order_sum);
        for (int c : *t.col_indices) sv -= c;
        if (sv < 0) return false;
        PrescribedData base = t;
        for_each_partition(static_cast<int>(sv), v_parts, [&](const std::vector<int>& v) {
          if (found) return;
          PrescribedData full = base;
          full.row_indices = v;
          if (complete_feasible(full)) found = true;
        });
        return found;
      }
      case Mode::fin_inf_row: {
        long long sd = -(chain_deg + order_sum);
        for (int v : *t.row_indices) sd -= v;
        if (sd < 0) return false;
        for_each_partition(static_cast<int>(sd), d_parts, [&](const std::vector<int>& d) {
          if (found) return;
          PrescribedData full = t;
          full.col_indices = d;
          if (complete_feasible(full)) found = true;
        });
        return found;
      }
      case Mode::fin_inf: {
        long long s = -(chain_deg + order_sum);
        if (s < 0) return false;
        with_dv(t, static_cast<int>(s));
        return found;
      }
      case Mode::inf_only: {
        long long s = -order_sum;
        if (s < 0) return false;
        for (int sb = 0; sb <= s && !found; ++sb) {
          std::vector<Poly> chain;
          monic_chains(f, rx, sb, chain, [&](const std::vector<Poly>& beta) {
            if (found) return;
            PrescribedData base = t;
            base.numerators = beta;
            with_dv(base, static_cast<int>(s) - sb);
          });
        }
        return found;
      }
      case Mode::fin_first_order: {
        const int q1 = *t.first_order;
        long long cap = -chain_deg;  // sum of orders can be at most this
        if (static_cast<long long>(q1) * rx > cap) return false;
        // Non-decreasing order sequences starting at q1.
        std::vector<int> qs(static_cast<std::size_t>(rx), q1);
        std::function<void(int, long long)> rec = [&](int pos, long long sum) {
          if (found) return;
          if (pos == rx) {
            long long sdv = -(chain_deg + sum);
            if (sdv < 0) return;
            PrescribedData base = t;
            base.first_order.reset();
            base.orders = qs;
            base.numerators = t.numerators;
            with_dv(base, static_cast<int>(sdv));
            return;
          }
          int lo = pos == 0 ? q1 : qs[static_cast<std::size_t>(pos - 1)];
          if (pos == 0) {
            qs[0] = q1;
            rec(1, sum + q1);
            return;
          }
          for (int v = lo; sum + v + static_cast<long long>(rx - pos - 1) * v <= cap; ++v) {
            qs[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, sum + v);
          }
        };
        rec(0, 0);
        return found;
      }
      default:
        throw ValidationError("projection coherence is defined for the partial modes");
    }
  };

  for (const PrescribedData& t : project_targets(ach, src, mode, space.added_rows,
                                                 space.degree_bound)) {
    bool partial;
    try {
      partial = check_row_completion(src, t, Ring::polynomial).feasible();
    } catch (const ValidationError&) {
      continue;
    }
    if (t.x < 0 || t.x > std::min(t.z, src.cols - src.rank)) continue;
    bool projected = exists_extension(t);
    ++rep.targets_checked;
    if (projected) ++rep.feasible_targets;
    if (partial != projected)
      rep.disagreements.push_back({target_key(t), partial, projected});
  }
  return rep;
}

PolyMatrix random_instance(const Field& f, int rows, int cols, int max_deg, std::uint64_t seed) {
  if (rows < 0 || cols < 0 || max_deg < 0) throw ValidationError("bad random instance shape");
  std::mt19937_64 rng(seed);
  PolyMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
      std::vector<FieldElem> cs;
      for (int k = 0; k <= d; ++k) {
        if (f.is_rational()) {
          long long num = static_cast<long long>(rng() % 9) - 4;
          long long den = 1 + static_cast<long long>(rng() % 3);
          cs.push_back(FieldElem::from_mpq(mpq_class(static_cast<long>(num),
                                                     static_cast<long>(den))));
        } else {
          cs.push_back(FieldElem::from_int(f, static_cast<long long>(rng() % f.modulus())));
        }
      }
      m.at(i, j) = Poly::from_coeffs(f, std::move(cs));
    }
  return m;
}

RatMatrix random_rational_instance(const Field& f, int rows, int cols, int max_deg,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolyMatrix nums = random_instance(f, rows, cols, max_deg, rng());
  RatMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
      std::vector<FieldElem> cs;
      for (int k = 0; k < d; ++k) {
        if (f.is_rational())
          cs.push_back(FieldElem::from_int(f, static_cast<long long>(rng() % 5) - 2));
        else
          cs.push_back(FieldElem::from_int(f, static_cast<long long>(rng() % f.modulus())));
      }
      cs.push_back(FieldElem::one(f));  // monic denominator
      Poly den = Poly::from_coeffs(f, std::move(cs));
      if (den.is_zero()) den = Poly::one(f);
      m.at(i, j) = RatFunc::make(nums.at(i, j), den);
    }
  return m;
}

}  // namespace polycomp
