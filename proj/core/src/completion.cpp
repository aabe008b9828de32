#include "polycomp/completion.hpp"

#include <algorithm>

namespace polycomp {

std::string to_string(Ring r) { return r == Ring::polynomial ? "poly" : "rational"; }

std::string to_string(Mode m) {
  switch (m) {
    case Mode::complete: return "complete";
    case Mode::fin_inf_col: return "fin-inf-col";
    case Mode::fin_inf_row: return "fin-inf-row";
    case Mode::fin_inf: return "fin-inf";
    case Mode::inf_only: return "inf";
    case Mode::fin_only: return "fin";
    case Mode::fin_first_order: return "fin-first-order";
  }
  return "?";
}

std::optional<Mode> mode_from_string(const std::string& s) {
  for (Mode m : {Mode::complete, Mode::fin_inf_col, Mode::fin_inf_row, Mode::fin_inf,
                 Mode::inf_only, Mode::fin_only, Mode::fin_first_order})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::optional<Ring> ring_from_string(const std::string& s) {
  if (s == "poly") return Ring::polynomial;
  if (s == "rational") return Ring::rational;
  return std::nullopt;
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::hypothesis_violated: return "hypothesis-violated";
  }
  return "?";
}

long long delta(const RatFunc& f, const RatFunc& g, long long p, long long q) {
  return Poly::lcm(f.num(), g.num()).degree().value() -
         Poly::gcd(f.den(), g.den()).degree().value() + std::max(p, q);
}

long long delta(const RatFunc& f, const RatFunc& g) {
  return Poly::lcm(f.num(), g.num()).degree().value() -
         Poly::gcd(f.den(), g.den()).degree().value();
}

long long delta(const RatFunc& f, long long p) {
  return f.num().degree().value() - f.den().degree().value() + p;
}

long long delta(const RatFunc& f) {
  return f.num().degree().value() - f.den().degree().value();
}

bool lcm_scaled_identity_check(const Poly& phi, const Poly& eta, const Poly& psi,
                               const Poly& eps, const Poly& pi) {
  if (!Poly::divides(phi, pi) || !Poly::divides(psi, pi))
    throw ValidationError("lcm identity: phi and psi must divide pi");
  if (!Poly::gcd(phi, eta).is_one() || !Poly::gcd(psi, eps).is_one())
    throw ValidationError("lcm identity: fractions must be reduced");
  Poly lhs = Poly::lcm(Poly::div_exact(pi, phi) * eta, Poly::div_exact(pi, psi) * eps);
  Poly rhs = (Poly::div_exact(pi, Poly::gcd(phi, psi)) * Poly::lcm(eta, eps)).monic();
  return lhs == rhs;
}

int ell_index(const IntSeq& c, const std::vector<long long>& a, int x) {
  long long pc = 0, pa = 0;
  for (int j = 1; j <= x; ++j) {
    pc += c.at(j);
    pa += a[static_cast<std::size_t>(j - 1)];
    if (pc > pa) return j;
  }
  return x + 1;
}

namespace {

std::string ii(long long v) { return std::to_string(v); }

std::string seq_str(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string seq_str(const std::vector<int>& v) {
  return seq_str(std::vector<long long>(v.begin(), v.end()));
}

void add(std::vector<Condition>& t, std::string id, std::string desc, bool holds,
         std::string lhs = "", std::string rhs = "") {
  t.push_back({std::move(id), std::move(desc), holds, std::move(lhs), std::move(rhs)});
}

Verdict settle(std::vector<Condition> trace) {
  Verdict v;
  v.trace = std::move(trace);
  v.status = Feasibility::feasible;
  for (const Condition& c : v.trace)
    if (!c.holds) v.status = Feasibility::infeasible;
  return v;
}

// Bundles a source and a target with the boundary conventions of the
// theorems: increasing chains are 1 below range and 0 above, decreasing
// denominator chains are 1 above range, order sequences are -inf below and
// +inf above. All indices are 1-based.
struct Ctx {
  Field field;
  int r = 0, m = 0, n = 0, z = 0, x = 0, rx = 0;
  const std::vector<Poly>* s_eta = nullptr;
  const std::vector<Poly>* s_phi = nullptr;
  const std::vector<int>* s_ord = nullptr;
  IntSeq c, u;
  std::vector<Poly> t_num, t_den;
  std::vector<int> t_ord;
  IntSeq d, v;
  bool has_chains = false, has_orders = false, has_d = false, has_v = false;

  const Poly& eta(int i) const { return (*s_eta)[static_cast<std::size_t>(i - 1)]; }
  const Poly& phi(int i) const { return (*s_phi)[static_cast<std::size_t>(i - 1)]; }
  long long p(int i) const { return (*s_ord)[static_cast<std::size_t>(i - 1)]; }
  ExtInt p_ext(int i) const {
    if (i < 1) return ExtInt::neg_inf();
    if (i > r) return ExtInt::pos_inf();
    return ExtInt::finite(p(i));
  }

  Poly eps_at(int i) const {
    if (i < 1) return Poly::one(field);
    if (i > rx) return Poly::zero(field);
    return t_num[static_cast<std::size_t>(i - 1)];
  }
  Poly psi_at(int i) const {
    if (i < 1) return Poly::zero(field);
    if (i > rx) return Poly::one(field);
    return t_den[static_cast<std::size_t>(i - 1)];
  }
  const Poly& eps_in(int i) const {
    if (i < 1 || i > rx) throw InternalError("target numerator index out of range");
    return t_num[static_cast<std::size_t>(i - 1)];
  }
  const Poly& psi_in(int i) const {
    if (i < 1 || i > rx) throw InternalError("target denominator index out of range");
    return t_den[static_cast<std::size_t>(i - 1)];
  }
  long long q(int i) const {
    if (i < 1 || i > rx) throw InternalError("target order index out of range");
    return t_ord[static_cast<std::size_t>(i - 1)];
  }
  ExtInt q_ext(int i) const {
    if (i < 1) return ExtInt::neg_inf();
    if (i > rx) return ExtInt::pos_inf();
    return ExtInt::finite(q(i));
  }

  long long SV() const { return v.sum(); }
  long long SU() const { return u.sum(); }

  long long d4(int i, int k) const {  // Delta(eta_i/phi_i, eps_k/psi_k, p_i, q_k)
    return Poly::lcm(eta(i), eps_in(k)).degree().value() -
           Poly::gcd(phi(i), psi_in(k)).degree().value() + std::max(p(i), q(k));
  }
  long long d4nf(int i, int k) const {  // Delta(eta_i/phi_i, eps_k/psi_k)
    return Poly::lcm(eta(i), eps_in(k)).degree().value() -
           Poly::gcd(phi(i), psi_in(k)).degree().value();
  }
  long long d2t(int k) const {  // Delta(eps_k/psi_k, q_k)
    return eps_in(k).degree().value() - psi_in(k).degree().value() + q(k);
  }
  long long d1t(int k) const {  // Delta(eps_k/psi_k)
    return eps_in(k).degree().value() - psi_in(k).degree().value();
  }
  long long d2s(int i) const {  // Delta(eta_i/phi_i, p_i)
    return eta(i).degree().value() - phi(i).degree().value() + p(i);
  }
  long long d1s(int i) const {  // Delta(eta_i/phi_i)
    return eta(i).degree().value() - phi(i).degree().value();
  }
};

Ctx make_ctx(const StructuralData& src, const PrescribedData& tgt) {
  Ctx cx;
  cx.field = src.field;
  cx.r = src.rank;
  cx.m = src.rows;
  cx.n = src.cols;
  cx.z = tgt.z;
  cx.x = tgt.x;
  cx.rx = src.rank + tgt.x;
  cx.s_eta = &src.eta;
  cx.s_phi = &src.phi;
  cx.s_ord = &src.orders;
  cx.c = IntSeq::from_ints(src.col_indices);
  cx.u = IntSeq::from_ints(src.row_indices);
  if (tgt.numerators) {
    cx.has_chains = true;
    cx.t_num = *tgt.numerators;
    if (tgt.denominators)
      cx.t_den = *tgt.denominators;
    else
      cx.t_den.assign(cx.t_num.size(), Poly::one(cx.field));
  }
  if (tgt.orders) {
    cx.has_orders = true;
    cx.t_ord = *tgt.orders;
  }
  if (tgt.col_indices) {
    cx.has_d = true;
    cx.d = IntSeq::from_ints(*tgt.col_indices);
  }
  if (tgt.row_indices) {
    cx.has_v = true;
    cx.v = IntSeq::from_ints(*tgt.row_indices);
  }
  return cx;
}

// eps_i | eta_i | eps_{i+shift}; out-of-range target entries are 0 above the
// chain, so the upper divisibility also enforces the rank-growth cap when
// the loop runs past r.
void eval_interlace_num(const Ctx& cx, int shift, std::vector<Condition>& t,
                        const std::string& id) {
  bool ok = true;
  std::string detail = "holds for all i";
  int top = std::max(cx.r, cx.rx - shift);
  for (int i = 1; i <= top; ++i) {
    Poly source_i = i <= cx.r ? cx.eta(i) : Poly::zero(cx.field);
    bool lower = Poly::divides(cx.eps_at(i), source_i);
    bool upper = Poly::divides(source_i, cx.eps_at(i + shift));
    if (!(lower && upper)) {
      ok = false;
      detail = "fails at i=" + ii(i);
      break;
    }
  }
  add(t, id, "numerator interlacing eps_i | eta_i | eps_{i+" + ii(shift) + "}", ok, detail, "");
}

void eval_interlace_den(const Ctx& cx, int shift, std::vector<Condition>& t,
                        const std::string& id) {
  bool ok = true;
  std::string detail = "holds for all i";
  for (int i = 1; i <= cx.r; ++i) {
    bool lower = Poly::divides(cx.psi_at(i + shift), cx.phi(i));
    bool upper = Poly::divides(cx.phi(i), cx.psi_at(i));
    if (!(lower && upper)) {
      ok = false;
      detail = "fails at i=" + ii(i);
      break;
    }
  }
  add(t, id, "denominator interlacing psi_{i+" + ii(shift) + "} | phi_i | psi_i", ok, detail, "");
}

void eval_interlace_orders(const Ctx& cx, int shift, std::vector<Condition>& t,
                           const std::string& id) {
  bool ok = true;
  std::string detail = "holds for all i";
  for (int i = 1; i <= cx.r; ++i) {
    ExtInt pi = ExtInt::finite(cx.p(i));
    if (!(cx.q_ext(i) <= pi && pi <= cx.q_ext(i + shift))) {
      ok = false;
      detail = "fails at i=" + ii(i);
      break;
    }
  }
  add(t, id, "order interlacing q_i <= p_i <= q_{i+" + ii(shift) + "}", ok, detail, "");
}

void eval_eta_count(const Ctx& cx, std::vector<Condition>& t) {
  int src_pos = cx.u.positive_count();
  int tgt_pos = cx.v.positive_count();
  add(t, "eta-count", "count of positive row indices must not drop", tgt_pos >= src_pos,
      ii(tgt_pos), ii(src_pos));
}

void eval_gen_majorize(const IntSeq& big, const IntSeq& small, const std::vector<long long>& a,
                       const std::string& prefix, const std::string& desc,
                       std::vector<Condition>& t) {
  GenMajorizationDetail g = gen_majorize_detail(big, small, a);
  add(t, prefix + "-tail", desc + ": tail bound", g.tail_bound, "", "");
  bool pb = g.prefix_bounds;
  std::string lhs, rhs;
  for (std::size_t j = 0; j < g.lhs.size(); ++j)
    if (g.lhs[j] > g.rhs[j]) {
      lhs = ii(g.lhs[j]);
      rhs = ii(g.rhs[j]) + " at j=" + ii(static_cast<long long>(j + 1));
      break;
    }
  add(t, prefix + "-prefix", desc + ": h_j prefix sums", pb, lhs, rhs);
  add(t, prefix + "-total", desc + ": total sums equal", g.total_equal, ii(g.total_lhs),
      ii(g.total_rhs));
}

// --- sequence builders ------------------------------------------------

std::vector<long long> diff_prefix(const std::vector<long long>& prefix) {
  std::vector<long long> out;
  out.reserve(prefix.size());
  long long prev = 0;
  for (long long s : prefix) {
    out.push_back(s - prev);
    prev = s;
  }
  return out;
}

SeqBuilderOutput build_row_side_rational(const Ctx& cx) {
  SeqBuilderOutput out;
  const long long base = cx.SV() - cx.SU();
  for (int j = 1; j <= cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.r + j; ++i) s += cx.d2t(i + cx.x - j);
    for (int i = 1; i <= cx.r; ++i) s -= cx.d4(i, i + cx.x - j);
    out.a_prefix.push_back(s);
  }
  for (int j = 1; j <= cx.z - cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.r - j; ++i) s += cx.d2t(i + cx.x + j);
    for (int i = 1; i <= cx.r - j; ++i) s -= cx.d4(i, i + cx.x + j);
    out.b_prefix.push_back(s);
  }
  out.a = diff_prefix(out.a_prefix);
  out.b = diff_prefix(out.b_prefix);
  return out;
}

// The polynomial-display builders of the complete row completion theorem,
// with deg lcm and max sums kept separate as displayed.
SeqBuilderOutput build_row_side_polynomial(const Ctx& cx) {
  SeqBuilderOutput out;
  const long long base = cx.SV() - cx.SU();
  for (int j = 1; j <= cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.r + j; ++i) s += cx.eps_in(i + cx.x - j).degree().value();
    for (int i = 1; i <= cx.r + j; ++i) s += cx.q(i + cx.x - j);
    for (int i = 1; i <= cx.r; ++i)
      s -= Poly::lcm(cx.eta(i), cx.eps_in(i + cx.x - j)).degree().value();
    for (int i = 1; i <= cx.r; ++i) s -= std::max(cx.p(i), cx.q(i + cx.x - j));
    out.a_prefix.push_back(s);
  }
  for (int j = 1; j <= cx.z - cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.r - j; ++i) s += cx.eps_in(i + cx.x + j).degree().value();
    for (int i = 1; i <= cx.r - j; ++i) s += cx.q(i + cx.x + j);
    for (int i = 1; i <= cx.r - j; ++i)
      s -= Poly::lcm(cx.eta(i), cx.eps_in(i + cx.x + j)).degree().value();
    for (int i = 1; i <= cx.r - j; ++i) s -= std::max(cx.p(i), cx.q(i + cx.x + j));
    out.b_prefix.push_back(s);
  }
  out.a = diff_prefix(out.a_prefix);
  out.b = diff_prefix(out.b_prefix);
  return out;
}

// Column-side builders: prefix sums written against sum(c) - sum(d). The b
// display's initial segment over the target chain is folded as total minus
// tail so every j up to z-x stays within the chain.
SeqBuilderOutput build_column_side(const Ctx& cx) {
  SeqBuilderOutput out;
  long long base = cx.c.sum() - cx.d.sum();
  for (int i = 1; i <= cx.r; ++i) base += cx.d2s(i);
  for (int j = 1; j <= cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.x - j; ++i) s -= cx.d2t(i);
    for (int i = 1; i <= cx.r; ++i) s -= cx.d4(i, i + cx.x - j);
    out.a_prefix.push_back(s);
  }
  long long all_d2 = 0;
  for (int i = 1; i <= cx.rx; ++i) all_d2 += cx.d2t(i);
  for (int j = 1; j <= cx.z - cx.x; ++j) {
    long long s = base - all_d2;
    for (int i = 1; i <= cx.r - j; ++i) s += cx.d2t(i + cx.x + j);
    for (int i = 1; i <= cx.r - j; ++i) s -= cx.d4(i, i + cx.x + j);
    out.b_prefix.push_back(s);
  }
  out.a = diff_prefix(out.a_prefix);
  out.b = diff_prefix(out.b_prefix);
  return out;
}

// Degree-shifted reformulation with e_i = p_i - p_1 and f_i = q_i - q_1;
// identical numbers to the row-side polynomial builder.
SeqBuilderOutput build_degree_fixed(const Ctx& cx) {
  if (cx.r < 1) throw ValidationError("degree-fixed builder needs a nonzero source");
  SeqBuilderOutput out;
  const long long p1 = cx.p(1);
  const long long q1 = cx.q(1);
  auto e = [&](int i) { return cx.p(i) - p1; };
  auto f = [&](int k) { return cx.q(k) - q1; };
  const long long base = cx.SV() - cx.SU();
  for (int j = 1; j <= cx.x; ++j) {
    long long s = base + static_cast<long long>(j) * q1;
    for (int i = 1; i <= cx.r + j; ++i) s += cx.eps_in(i + cx.x - j).degree().value();
    for (int i = 1; i <= cx.r + j; ++i) s += f(i + cx.x - j);
    for (int i = 1; i <= cx.r; ++i)
      s -= Poly::lcm(cx.eta(i), cx.eps_in(i + cx.x - j)).degree().value();
    for (int i = 1; i <= cx.r; ++i) s -= std::max(e(i) + p1 - q1, f(i + cx.x - j));
    out.a_prefix.push_back(s);
  }
  for (int j = 1; j <= cx.z - cx.x; ++j) {
    long long s = base;
    for (int i = 1; i <= cx.r - j; ++i) s += cx.eps_in(i + cx.x + j).degree().value();
    for (int i = 1; i <= cx.r - j; ++i) s += f(i + cx.x + j);
    for (int i = 1; i <= cx.r - j; ++i)
      s -= Poly::lcm(cx.eta(i), cx.eps_in(i + cx.x + j)).degree().value();
    for (int i = 1; i <= cx.r - j; ++i) s -= std::max(e(i) + p1 - q1, f(i + cx.x + j));
    out.b_prefix.push_back(s);
  }
  out.a = diff_prefix(out.a_prefix);
  out.b = diff_prefix(out.b_prefix);
  return out;
}

// a' of the finite+infinite prescription, defined without minimal indices.
SeqBuilderOutput build_fin_inf_only(const Ctx& cx) {
  SeqBuilderOutput out;
  for (int j = 1; j <= cx.x; ++j) {
    long long s = 0;
    for (int i = 1; i <= cx.r + j; ++i) s += cx.d2t(i + cx.x - j);
    for (int i = 1; i <= cx.r; ++i) s -= cx.d4(i, i + cx.x - j);
    out.a_prefix.push_back(s);
  }
  out.a = diff_prefix(out.a_prefix);
  return out;
}

void add_seq_info(std::vector<Condition>& t, const SeqBuilderOutput& seqs) {
  if (!seqs.a.empty()) add(t, "seq-a", "built a-sequence", true, seq_str(seqs.a), "");
  if (!seqs.b.empty()) add(t, "seq-b", "built b-sequence", true, seq_str(seqs.b), "");
}

// --- complete-data evaluators ------------------------------------------

Verdict eval_complete_rational(const Ctx& cx) {
  std::vector<Condition> t;
  eval_eta_count(cx, t);
  eval_interlace_num(cx, cx.z, t, "interlace-num");
  eval_interlace_den(cx, cx.z, t, "interlace-den");
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  SeqBuilderOutput seqs = build_row_side_rational(cx);
  add_seq_info(t, seqs);
  eval_gen_majorize(cx.c, cx.d, seqs.a, "col-gmaj", "c -<' (d, a)", t);
  eval_gen_majorize(cx.v, cx.u, seqs.b, "row-gmaj", "v -<' (u, b)", t);
  long long lhs = 0;
  for (int i = 1; i <= cx.r; ++i) lhs += cx.d4(i, i + cx.x) - cx.d2t(i + cx.x);
  long long rhs = cx.SV() - cx.SU();
  bool holds = cx.x == 0 ? lhs == rhs : lhs <= rhs;
  add(t, "degree-sum",
      std::string("Delta degree sum") + (cx.x == 0 ? " (equality required, x=0)" : ""), holds,
      ii(lhs), ii(rhs));
  return settle(std::move(t));
}

Verdict eval_complete_polynomial(const Ctx& cx) {
  std::vector<Condition> t;
  eval_eta_count(cx, t);
  eval_interlace_num(cx, cx.z, t, "interlace-fin");
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  SeqBuilderOutput seqs = build_row_side_polynomial(cx);
  add_seq_info(t, seqs);
  eval_gen_majorize(cx.c, cx.d, seqs.a, "col-gmaj", "c -<' (d, a)", t);
  eval_gen_majorize(cx.v, cx.u, seqs.b, "row-gmaj", "v -<' (u, b)", t);
  long long lhs = 0, rhs = cx.SV() - cx.SU();
  for (int i = 1; i <= cx.r; ++i) {
    lhs += Poly::lcm(cx.eta(i), cx.eps_in(i + cx.x)).degree().value();
    lhs += std::max(cx.p(i), cx.q(i + cx.x));
    rhs += cx.eps_in(i + cx.x).degree().value() + cx.q(i + cx.x);
  }
  bool holds = cx.x == 0 ? lhs == rhs : lhs <= rhs;
  add(t, "degree-sum",
      std::string("lcm/max degree sum") + (cx.x == 0 ? " (equality required, x=0)" : ""), holds,
      ii(lhs), ii(rhs));
  return settle(std::move(t));
}

std::optional<Verdict> hypothesis_x_range(const StructuralData& src, const PrescribedData& tgt) {
  if (tgt.z < 0) throw ValidationError("z must be non-negative");
  int cap = std::min(tgt.z, src.cols - src.rank);
  if (tgt.x >= 0 && tgt.x <= cap) return std::nullopt;
  Verdict v;
  v.status = Feasibility::hypothesis_violated;
  add(v.trace, "hypothesis-x-range", "0 <= x <= min(z, n-r) must hold", false, ii(tgt.x),
      "0.." + ii(cap));
  return v;
}

void require_mode(const PrescribedData& tgt, Mode m) {
  if (tgt.mode != m)
    throw ValidationError("target mode is " + to_string(tgt.mode) + ", predicate expects " +
                          to_string(m));
}

PrescribedData scaled_polynomial_target(const Ctx& cx, const PrescribedData& tgt,
                                        const Poly& psi1) {
  PrescribedData out = tgt;
  std::vector<Poly> nums;
  for (int i = 1; i <= cx.rx; ++i)
    nums.push_back(Poly::div_exact(psi1 * cx.eps_in(i), cx.psi_in(i)));
  out.numerators = std::move(nums);
  out.denominators.reset();
  if (tgt.orders) {
    std::vector<int> ords = *tgt.orders;
    for (int& o : ords) o -= psi1.degree().value();
    out.orders = std::move(ords);
  }
  if (tgt.first_order) out.first_order = *tgt.first_order - psi1.degree().value();
  return out;
}

}  // namespace

void PrescribedData::validate_against(const StructuralData& source, Ring ring) const {
  source.validate();
  if (ring == Ring::polynomial && !source.is_polynomial())
    throw ValidationError("polynomial-ring predicate on non-polynomial source data");
  if (z < 0) throw ValidationError("z must be non-negative");
  if (x < 0 || x > std::min(z, source.cols - source.rank))
    throw ValidationError("x outside 0..min(z, n-r)");
  const int rx = source.rank + x;

  const bool wants_chains = mode == Mode::complete || mode == Mode::fin_inf_col ||
                            mode == Mode::fin_inf_row || mode == Mode::fin_inf ||
                            mode == Mode::fin_only || mode == Mode::fin_first_order;
  const bool wants_orders = mode == Mode::complete || mode == Mode::fin_inf_col ||
                            mode == Mode::fin_inf_row || mode == Mode::fin_inf ||
                            mode == Mode::inf_only;
  const bool wants_first = mode == Mode::fin_first_order;
  const bool wants_d = mode == Mode::complete || mode == Mode::fin_inf_col;
  const bool wants_v = mode == Mode::complete || mode == Mode::fin_inf_row;

  auto presence = [&](bool present, bool wanted, const char* fam) {
    if (wanted && !present)
      throw ValidationError("mode " + to_string(mode) + " requires " + fam);
    if (!wanted && present)
      throw ValidationError("mode " + to_string(mode) + " must omit " + fam);
  };
  presence(numerators.has_value(), wants_chains, "target numerators");
  presence(orders.has_value(), wants_orders, "target orders");
  presence(first_order.has_value(), wants_first, "first_order");
  presence(col_indices.has_value(), wants_d, "target column indices");
  presence(row_indices.has_value(), wants_v, "target row indices");
  if (denominators && !wants_chains)
    throw ValidationError("mode " + to_string(mode) + " must omit target denominators");

  if (wants_chains) {
    const auto& num = *numerators;
    if (static_cast<int>(num.size()) != rx)
      throw ValidationError("target chain must have r+x = " + std::to_string(rx) + " entries");
    std::vector<Poly> den =
        denominators ? *denominators : std::vector<Poly>(num.size(), Poly::one(source.field));
    if (den.size() != num.size())
      throw ValidationError("target denominator chain length mismatch");
    for (int i = 0; i < rx; ++i) {
      if (!(num[i].field() == source.field) || !(den[i].field() == source.field))
        throw ValidationError("target chain entry from wrong field");
      if (num[i].is_zero() || !num[i].is_monic())
        throw ValidationError("target numerators must be monic and nonzero");
      if (den[i].is_zero() || !den[i].is_monic())
        throw ValidationError("target denominators must be monic and nonzero");
      if (!Poly::gcd(num[i], den[i]).is_one())
        throw ValidationError("target fractions must be irreducible");
      if (ring == Ring::polynomial && !den[i].is_one())
        throw ValidationError("polynomial-ring target must have trivial denominators");
      if (i + 1 < rx) {
        if (!Poly::divides(num[i], num[i + 1]))
          throw ValidationError("target numerator chain divisibility fails");
        if (!Poly::divides(den[i + 1], den[i]))
          throw ValidationError("target denominator chain divisibility fails");
      }
    }
  }
  if (wants_orders) {
    if (static_cast<int>(orders->size()) != rx)
      throw ValidationError("target orders must have r+x = " + std::to_string(rx) + " entries");
    for (std::size_t i = 1; i < orders->size(); ++i)
      if ((*orders)[i - 1] > (*orders)[i])
        throw ValidationError("target orders must be non-decreasing");
  }
  auto partition_check = [](const std::vector<int>& w, int count, const char* what) {
    if (static_cast<int>(w.size()) != count)
      throw ValidationError(std::string("expected ") + std::to_string(count) + " " + what);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0) throw ValidationError(std::string("negative ") + what);
      if (i > 0 && w[i - 1] < w[i])
        throw ValidationError(std::string(what) + " must be non-increasing");
    }
  };
  if (wants_d) partition_check(*col_indices, source.cols - source.rank - x, "target column indices");
  if (wants_v)
    partition_check(*row_indices, source.rows + z - source.rank - x, "target row indices");
}

PrescribedData PrescribedData::transposed_for_columns() const {
  PrescribedData out = *this;
  std::swap(out.col_indices, out.row_indices);
  if (mode == Mode::fin_inf_col)
    out.mode = Mode::fin_inf_row;
  else if (mode == Mode::fin_inf_row)
    out.mode = Mode::fin_inf_col;
  return out;
}

SeqBuilderOutput build_sequences(const StructuralData& source, const PrescribedData& target,
                                 BuilderVariant variant, Ring ring) {
  Ctx cx = make_ctx(source, target);
  if (!cx.has_chains || !cx.has_orders)
    throw ValidationError("sequence builders need target chains and orders");
  if (static_cast<int>(cx.t_num.size()) != cx.rx ||
      static_cast<int>(cx.t_den.size()) != cx.rx ||
      static_cast<int>(cx.t_ord.size()) != cx.rx)
    throw ValidationError("sequence builders need chains and orders of length r+x");
  if (target.z < 0 || target.x < 0 || target.x > target.z)
    throw ValidationError("sequence builders need 0 <= x <= z");
  switch (variant) {
    case BuilderVariant::row_side:
      if (!cx.has_v) throw ValidationError("row-side builder needs target row indices");
      return ring == Ring::polynomial ? build_row_side_polynomial(cx)
                                      : build_row_side_rational(cx);
    case BuilderVariant::column_side:
      if (!cx.has_d) throw ValidationError("column-side builder needs target column indices");
      return build_column_side(cx);
    case BuilderVariant::degree_fixed:
      if (ring != Ring::polynomial)
        throw ValidationError("degree-fixed builder is a polynomial-ring form");
      if (!cx.has_v) throw ValidationError("degree-fixed builder needs target row indices");
      return build_degree_fixed(cx);
    case BuilderVariant::fin_inf_only:
      return build_fin_inf_only(cx);
  }
  throw InternalError("unknown builder variant");
}

Verdict exists_with_data(const StructuralData& data, Ring ring) {
  data.validate();
  if (ring == Ring::polynomial && !data.is_polynomial())
    throw ValidationError("polynomial existence check on non-polynomial data");
  std::vector<Condition> t;
  long long s = data.structural_sum();
  add(t, "sum-identity", "sum(c)+sum(u)+sum(orders)+sum(deg eta)-sum(deg phi) = 0", s == 0,
      ii(s), "0");
  return settle(std::move(t));
}

Verdict exists_with_eigenstructure(const std::vector<Poly>& alpha, const std::vector<int>& mults,
                                   const std::vector<int>& col_indices,
                                   const std::vector<int>& row_indices, int degree, int rows,
                                   int cols) {
  const int r = static_cast<int>(alpha.size());
  if (static_cast<int>(mults.size()) != r)
    throw ValidationError("eigenstructure: one multiplicity per invariant factor");
  if (r > std::min(rows, cols)) throw ValidationError("eigenstructure: rank exceeds dimensions");
  if (static_cast<int>(col_indices.size()) != cols - r ||
      static_cast<int>(row_indices.size()) != rows - r)
    throw ValidationError("eigenstructure: minimal index counts mismatch");
  if (degree < 0) throw ValidationError("eigenstructure: negative degree");
  for (int i = 0; i < r; ++i) {
    if (alpha[static_cast<std::size_t>(i)].is_zero() ||
        !alpha[static_cast<std::size_t>(i)].is_monic())
      throw ValidationError("eigenstructure: invariant factors must be monic");
    if (i + 1 < r && !Poly::divides(alpha[static_cast<std::size_t>(i)],
                                    alpha[static_cast<std::size_t>(i + 1)]))
      throw ValidationError("eigenstructure: invariant factor chain fails");
    if (i + 1 < r &&
        mults[static_cast<std::size_t>(i)] > mults[static_cast<std::size_t>(i + 1)])
      throw ValidationError("eigenstructure: multiplicities must be non-decreasing");
  }
  std::vector<Condition> t;
  bool e1 = r == 0 || mults.front() == 0;
  add(t, "e1-zero", "first partial multiplicity of infinity is 0", e1,
      r == 0 ? "none" : ii(mults.front()), "0");
  long long s = 0;
  for (int c : col_indices) s += c;
  for (int u : row_indices) s += u;
  for (int e : mults) s += e;
  for (const Poly& a : alpha) s += a.degree().value();
  long long target = static_cast<long long>(r) * degree;
  add(t, "sum-identity", "sum(c)+sum(u)+sum(e)+sum(deg alpha) = r*d", s == target, ii(s),
      ii(target));
  return settle(std::move(t));
}

Verdict interlace_finite(const StructuralData& source, const std::vector<Poly>& target_num,
                         const std::vector<Poly>& target_den, int extra_rows, int extra_cols,
                         Ring ring) {
  source.validate();
  if (extra_rows < 0 || extra_cols < 0)
    throw ValidationError("interlace_finite: negative border size");
  if (ring == Ring::polynomial && !source.is_polynomial())
    throw ValidationError("polynomial interlacing on non-polynomial source");
  const int len = static_cast<int>(target_num.size());
  std::vector<Poly> den =
      target_den.empty() ? std::vector<Poly>(target_num.size(), Poly::one(source.field))
                         : target_den;
  if (static_cast<int>(den.size()) != len)
    throw ValidationError("interlace_finite: chain length mismatch");
  for (int i = 0; i < len; ++i) {
    if (target_num[static_cast<std::size_t>(i)].is_zero() ||
        !target_num[static_cast<std::size_t>(i)].is_monic() ||
        den[static_cast<std::size_t>(i)].is_zero() ||
        !den[static_cast<std::size_t>(i)].is_monic())
      throw ValidationError("interlace_finite: chains must be monic");
    if (!Poly::gcd(target_num[static_cast<std::size_t>(i)], den[static_cast<std::size_t>(i)])
             .is_one())
      throw ValidationError("interlace_finite: target fractions must be irreducible");
    if (ring == Ring::polynomial && !den[static_cast<std::size_t>(i)].is_one())
      throw ValidationError("interlace_finite: polynomial ring needs trivial denominators");
    if (i + 1 < len) {
      if (!Poly::divides(target_num[static_cast<std::size_t>(i)],
                         target_num[static_cast<std::size_t>(i + 1)]))
        throw ValidationError("interlace_finite: numerator chain fails");
      if (!Poly::divides(den[static_cast<std::size_t>(i + 1)], den[static_cast<std::size_t>(i)]))
        throw ValidationError("interlace_finite: denominator chain fails");
    }
  }

  const int shift = extra_rows + extra_cols;
  const Field& f = source.field;
  auto tnum = [&](int i) -> Poly {
    if (i < 1) return Poly::one(f);
    if (i > len) return Poly::zero(f);
    return target_num[static_cast<std::size_t>(i - 1)];
  };
  auto tden = [&](int i) -> Poly {
    if (i > len) return Poly::one(f);
    return den[static_cast<std::size_t>(i - 1)];
  };
  std::vector<Condition> t;
  bool ok_num = true, ok_den = true;
  std::string where_num = "holds for all i", where_den = "holds for all i";
  const int top = std::max(source.rank, len - shift);
  for (int i = 1; i <= top; ++i) {
    Poly eta_i = i <= source.rank ? source.eta[static_cast<std::size_t>(i - 1)]
                                  : Poly::zero(f);
    if (ok_num &&
        !(Poly::divides(tnum(i), eta_i) && Poly::divides(eta_i, tnum(i + shift)))) {
      ok_num = false;
      where_num = "fails at i=" + ii(i);
    }
    if (i <= source.rank) {
      const Poly& phi_i = source.phi[static_cast<std::size_t>(i - 1)];
      if (ok_den && !(Poly::divides(tden(i + shift), phi_i) && Poly::divides(phi_i, tden(i)))) {
        ok_den = false;
        where_den = "fails at i=" + ii(i);
      }
    }
  }
  add(t, "interlace-num", "eps_i | eta_i | eps_{i+z+q}", ok_num, where_num, "");
  if (ring == Ring::rational)
    add(t, "interlace-den", "psi_{i+z+q} | phi_i | psi_i", ok_den, where_den, "");
  else if (!ok_den)
    throw InternalError("trivial denominators failed interlacing");
  return settle(std::move(t));
}

Verdict complete_row_completion(const StructuralData& source, const PrescribedData& target,
                                Ring ring) {
  require_mode(target, Mode::complete);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  if (ring == Ring::polynomial) return eval_complete_polynomial(cx);

  Verdict rat = eval_complete_rational(cx);
  // Proof-path consistency: the rational predicate must agree with the
  // polynomial one on psi_1-scaled data whenever the scaling applies.
  Poly phi1 = source.rank > 0 ? source.phi.front() : Poly::one(source.field);
  Poly psi1 = cx.rx > 0 ? cx.psi_in(1) : Poly::one(source.field);
  if (Poly::divides(phi1, psi1)) {
    StructuralData scaled_src = scale_data(source, psi1);
    PrescribedData scaled_tgt = scaled_polynomial_target(cx, target, psi1);
    Ctx scx = make_ctx(scaled_src, scaled_tgt);
    Verdict poly = eval_complete_polynomial(scx);
    SeqBuilderOutput srat = build_row_side_rational(cx);
    SeqBuilderOutput spoly = build_row_side_polynomial(scx);
    if (poly.status != rat.status || srat.a != spoly.a || srat.b != spoly.b)
      throw InternalError(
          "rational completion verdict disagrees with the scaled polynomial route");
  }
  return rat;
}

Verdict fin_inf_col_completion(const StructuralData& source, const PrescribedData& target,
                               Ring ring) {
  require_mode(target, Mode::fin_inf_col);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  std::vector<Condition> t;
  eval_interlace_num(cx, cx.z, t, ring == Ring::polynomial ? "interlace-fin" : "interlace-num");
  if (ring == Ring::rational) eval_interlace_den(cx, cx.z, t, "interlace-den");
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  SeqBuilderOutput seqs = build_column_side(cx);
  add_seq_info(t, seqs);
  eval_gen_majorize(cx.c, cx.d, seqs.a, "col-gmaj", "c -<' (d, a~)", t);
  // Column-side degree sum, with equality when x = z.
  long long lhs = 0;
  for (int i = 1; i <= cx.r; ++i) lhs += cx.d4(i, i + cx.x);
  long long rhs = cx.c.sum() - cx.d.sum();
  for (int i = 1; i <= cx.r; ++i) rhs += cx.d2s(i);
  for (int i = 1; i <= cx.x; ++i) rhs -= cx.d2t(i);
  bool holds = cx.x == cx.z ? lhs == rhs : lhs <= rhs;
  add(t, "degree-sum-col",
      std::string("column-side Delta degree sum") +
          (cx.x == cx.z ? " (equality required, x=z)" : ""),
      holds, ii(lhs), ii(rhs));
  return settle(std::move(t));
}

Verdict fin_inf_row_completion(const StructuralData& source, const PrescribedData& target,
                               Ring ring) {
  require_mode(target, Mode::fin_inf_row);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  std::vector<Condition> t;
  eval_eta_count(cx, t);
  eval_interlace_num(cx, cx.z, t, ring == Ring::polynomial ? "interlace-fin" : "interlace-num");
  if (ring == Ring::rational) eval_interlace_den(cx, cx.z, t, "interlace-den");
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  SeqBuilderOutput seqs =
      ring == Ring::polynomial ? build_row_side_polynomial(cx) : build_row_side_rational(cx);
  add_seq_info(t, seqs);
  eval_gen_majorize(cx.v, cx.u, seqs.b, "row-gmaj", "v -<' (u, b~)", t);
  long long lhs = 0;
  for (int i = 1; i <= cx.r; ++i) lhs += cx.d4(i, i + cx.x) - cx.d2t(i + cx.x);
  long long rhs = cx.SV() - cx.SU();
  bool dholds = cx.x == 0 ? lhs == rhs : lhs <= rhs;
  add(t, "degree-sum",
      std::string("Delta degree sum") + (cx.x == 0 ? " (equality required, x=0)" : ""), dholds,
      ii(lhs), ii(rhs));
  if (cx.x == cx.n - cx.r) {
    bool maj = majorize(cx.c, seqs.a);
    add(t, "c-majorize", "c -< a~ (case x = n-r)", maj, seq_str(cx.c.values()),
        seq_str(seqs.a));
  } else {
    int ell = ell_index(cx.c, seqs.a, cx.x);
    add(t, "ell", "ell = min{ j : prefix c exceeds prefix a~ }", true, ii(ell), "");
    long long head_lhs = cx.c.prefix(cx.x + 1) - cx.c.at(ell);
    long long head_rhs = cx.x > 0 ? seqs.a_prefix[static_cast<std::size_t>(cx.x - 1)] : 0;
    add(t, "ell-head", "sum_{i<=x+1} c_i - c_ell >= sum a~", head_lhs >= head_rhs, ii(head_lhs),
        ii(head_rhs));
    for (int j = ell; j <= cx.x - 1; ++j) {
      long long tl = cx.c.prefix(cx.x + 1) - cx.c.prefix(j + 1);
      long long tr = seqs.a_prefix[static_cast<std::size_t>(cx.x - 1)] -
                     seqs.a_prefix[static_cast<std::size_t>(j - 1)];
      add(t, "ell-tail[j=" + ii(j) + "]", "sum_{i=j+2..x+1} c_i >= sum_{i=j+1..x} a~_i",
          tl >= tr, ii(tl), ii(tr));
    }
  }
  return settle(std::move(t));
}

Verdict fin_inf_completion(const StructuralData& source, const PrescribedData& target,
                           Ring ring) {
  require_mode(target, Mode::fin_inf);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  std::vector<Condition> t;
  eval_interlace_num(cx, cx.z, t, ring == Ring::polynomial ? "interlace-fin" : "interlace-num");
  if (ring == Ring::rational) eval_interlace_den(cx, cx.z, t, "interlace-den");
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  const bool case1 = cx.x < cx.z || (cx.x == cx.z && cx.x == cx.n - cx.r);
  if (case1) {
    for (int j = 0; j <= cx.x - 1; ++j) {
      long long lhs = 0;
      for (int i = 1; i <= cx.r; ++i) lhs += cx.d4(i, i + cx.x - j);
      for (int i = 1; i <= cx.x - j; ++i) lhs += cx.d2t(i);
      lhs += cx.SU();
      lhs += cx.c.prefix(j);
      lhs += cx.c.sum() - cx.c.prefix(cx.x);
      bool equality = j == 0 && cx.x == cx.z && cx.z == cx.n - cx.r;
      bool holds = equality ? lhs == 0 : lhs <= 0;
      add(t, "hifj[j=" + ii(j) + "]",
          std::string("Delta sum bound") + (equality ? " (equality required, x=z=n-r)" : ""),
          holds, ii(lhs), "0");
    }
  } else {
    // x = z < n-r: the row indices cannot move, conditions go through a'.
    SeqBuilderOutput seqs = build_fin_inf_only(cx);
    add_seq_info(t, seqs);
    int ell = ell_index(cx.c, seqs.a, cx.x);
    add(t, "ell", "ell = min{ j : prefix c exceeds prefix a' }", true, ii(ell), "");
    long long head_lhs = cx.c.prefix(cx.x + 1) - cx.c.at(ell);
    long long head_rhs = cx.x > 0 ? seqs.a_prefix[static_cast<std::size_t>(cx.x - 1)] : 0;
    add(t, "ell-head", "sum_{i<=x+1} c_i - c_ell >= sum a'", head_lhs >= head_rhs, ii(head_lhs),
        ii(head_rhs));
    for (int j = ell; j <= cx.x - 1; ++j) {
      long long tl = cx.c.prefix(cx.x + 1) - cx.c.prefix(j + 1);
      long long tr = seqs.a_prefix[static_cast<std::size_t>(cx.x - 1)] -
                     seqs.a_prefix[static_cast<std::size_t>(j - 1)];
      add(t, "ell-tail[j=" + ii(j) + "]", "sum_{i=j+2..x+1} c_i >= sum_{i=j+1..x} a'_i",
          tl >= tr, ii(tl), ii(tr));
    }
  }
  return settle(std::move(t));
}

Verdict inf_only_completion(const StructuralData& source, const PrescribedData& target,
                            Ring ring) {
  require_mode(target, Mode::inf_only);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  std::vector<Condition> t;
  eval_interlace_orders(cx, cx.z, t, "interlace-inf");
  if (ring == Ring::polynomial) {
    for (int j = 0; j <= cx.x - 1; ++j) {
      long long lhs = 0;
      for (int i = 1; i <= cx.r; ++i) lhs += std::max(cx.p(i), cx.q(i + cx.x - j));
      for (int i = 1; i <= cx.x - j; ++i) lhs += cx.q(i);
      for (int i = 1; i <= cx.r; ++i) lhs -= cx.p(i);
      long long rhs = cx.c.prefix(cx.x) - cx.c.prefix(j);
      add(t, "maxsum[j=" + ii(j) + "]", "max-sum bound against trailing column indices",
          lhs <= rhs, ii(lhs), ii(rhs));
    }
  }
  // Rational ring: the interlacing alone decides.
  return settle(std::move(t));
}

Verdict fin_first_order_completion(const StructuralData& source, const PrescribedData& target,
                                   Ring ring) {
  require_mode(target, Mode::fin_first_order);
  if (auto h = hypothesis_x_range(source, target)) return *h;
  target.validate_against(source, ring);
  Ctx cx = make_ctx(source, target);
  const long long q1 = *target.first_order;
  ExtInt p1 = cx.p_ext(1);
  if (!(ExtInt::finite(q1) <= p1)) {
    Verdict v;
    v.status = Feasibility::hypothesis_violated;
    add(v.trace, "hypothesis-first-order", "q~_1 <= p~_1 must hold", false, ii(q1),
        p1.to_string());
    return v;
  }
  std::vector<Condition> t;
  eval_interlace_num(cx, cx.z, t, ring == Ring::polynomial ? "interlace-fin" : "interlace-num");
  if (ring == Ring::rational) eval_interlace_den(cx, cx.z, t, "interlace-den");
  for (int j = 0; j <= cx.x - 1; ++j) {
    long long lhs = 0;
    for (int i = 1; i <= cx.r; ++i) lhs += cx.d4nf(i, i + cx.x - j);
    for (int i = 1; i <= cx.x - j; ++i) lhs += cx.d1t(i);
    for (int i = 1; i <= cx.r; ++i) lhs -= cx.d1s(i);
    long long rhs = cx.c.prefix(cx.x) - cx.c.prefix(j) +
                    static_cast<long long>(j - cx.x) * q1;
    add(t, "delta-sum[j=" + ii(j) + "]", "Delta sum against trailing column indices and q~_1",
        lhs <= rhs, ii(lhs), ii(rhs));
  }
  return settle(std::move(t));
}

Verdict check_row_completion(const StructuralData& source, const PrescribedData& target,
                             Ring ring) {
  switch (target.mode) {
    case Mode::complete: return complete_row_completion(source, target, ring);
    case Mode::fin_inf_col: return fin_inf_col_completion(source, target, ring);
    case Mode::fin_inf_row: return fin_inf_row_completion(source, target, ring);
    case Mode::fin_inf: return fin_inf_completion(source, target, ring);
    case Mode::inf_only: return inf_only_completion(source, target, ring);
    case Mode::fin_first_order: return fin_first_order_completion(source, target, ring);
    case Mode::fin_only: {
      if (auto h = hypothesis_x_range(source, target)) return *h;
      target.validate_against(source, ring);
      std::vector<Poly> den =
          target.denominators ? *target.denominators : std::vector<Poly>{};
      return interlace_finite(source, *target.numerators, den, target.z, 0, ring);
    }
  }
  throw InternalError("unknown completion mode");
}

Verdict check_column_completion(const StructuralData& source, const PrescribedData& target,
                                Ring ring) {
  return check_row_completion(source.transposed(), target.transposed_for_columns(), ring);
}

Verdict pencil_row_completion(const StructuralData& source, const StructuralData& target, int x,
                              int y) {
  source.validate();
  target.validate();
  if (!source.is_polynomial() || !target.is_polynomial())
    throw ValidationError("pencil completion needs polynomial (pencil) data");
  for (int o : source.orders)
    if (o < -1) throw ValidationError("source orders below -1: not pencil data");
  for (int o : target.orders)
    if (o < -1) throw ValidationError("target orders below -1: not pencil data");
  if (x < 0 || y < 0) throw ValidationError("pencil completion: x and y must be >= 0");
  if (target.rank != source.rank + x)
    throw ValidationError("pencil completion: target rank must be source rank + x");
  if (target.cols != source.cols)
    throw ValidationError("pencil completion: column count must be preserved");
  if (target.rows != source.rows + x + y)
    throw ValidationError("pencil completion: target rows must be source rows + x + y");

  // The underlying theorem takes an actual pencil D as the target, so both
  // data sets must be realizable and the source must be non-constant.
  if (source.structural_sum() != 0 || target.structural_sum() != 0) {
    Verdict v;
    v.status = Feasibility::hypothesis_violated;
    add(v.trace, "hypothesis-pencil-sum", "pencil data must satisfy the sum identity", false,
        ii(source.structural_sum()) + "/" + ii(target.structural_sum()), "0/0");
    return v;
  }
  if (source.rank == 0 || source.orders.front() != -1) {
    Verdict v;
    v.status = Feasibility::hypothesis_violated;
    add(v.trace, "hypothesis-pencil-nonconstant", "source pencil must be non-constant", false,
        source.rank == 0 ? "rank 0" : "first order " + ii(source.orders.front()), "-1");
    return v;
  }

  const Field& f = source.field;
  const int rbar = source.rank;
  const int rtx = rbar + x;
  auto hom = [](const StructuralData& d, int i) -> HomogeneousFactor {
    return {d.eta[static_cast<std::size_t>(i - 1)],
            d.orders[static_cast<std::size_t>(i - 1)] + 1};
  };
  auto src_hom = [&](int i) -> HomogeneousFactor {
    if (i < 1) return HomogeneousFactor::one(f);
    if (i > rbar) throw InternalError("source homogeneous index out of range");
    return hom(source, i);
  };
  IntSeq cbar = IntSeq::from_ints(source.col_indices);
  IntSeq ubar = IntSeq::from_ints(source.row_indices);
  IntSeq dbar = IntSeq::from_ints(target.col_indices);
  IntSeq vbar = IntSeq::from_ints(target.row_indices);

  std::vector<Condition> t;
  bool inter = true;
  std::string where = "holds for all i";
  for (int i = 1; i <= rbar; ++i) {
    bool lower = HomogeneousFactor::divides(hom(target, i), hom(source, i));
    bool upper = i + x + y > rtx ||
                 HomogeneousFactor::divides(hom(source, i), hom(target, i + x + y));
    if (!(lower && upper)) {
      inter = false;
      where = "fails at i=" + ii(i);
      break;
    }
  }
  add(t, "pencil-interlace", "homogeneous interlacing gamma_i | phi_i | gamma_{i+x+y}", inter,
      where, "");
  add(t, "theta", "count of positive row indices must not drop", vbar.positive_count() >=
      ubar.positive_count(), ii(vbar.positive_count()), ii(ubar.positive_count()));

  long long sum_deg_gamma = 0;
  for (int i = 1; i <= rtx; ++i) sum_deg_gamma += hom(target, i).degree();
  const long long base = vbar.sum() - ubar.sum() + sum_deg_gamma;

  SeqBuilderOutput seqs;
  for (int j = 1; j <= x; ++j) {
    long long s = base - j;
    for (int i = 1; i <= rtx - j; ++i)
      s -= HomogeneousFactor::lcm(src_hom(i - x + j), hom(target, i)).degree();
    seqs.a_prefix.push_back(s);
  }
  for (int j = 1; j <= y; ++j) {
    long long s = base;
    for (int i = 1; i <= rtx; ++i)
      s -= HomogeneousFactor::lcm(src_hom(i - x - j), hom(target, i)).degree();
    seqs.b_prefix.push_back(s);
  }
  seqs.a = diff_prefix(seqs.a_prefix);
  seqs.b = diff_prefix(seqs.b_prefix);
  add_seq_info(t, seqs);

  eval_gen_majorize(cbar, dbar, seqs.a, "col-gmaj", "cbar -<' (dbar, abar)", t);
  eval_gen_majorize(vbar, ubar, seqs.b, "row-gmaj", "vbar -<' (ubar, bbar)", t);

  long long lhs = 0;
  for (int i = 1; i <= rtx; ++i)
    lhs += HomogeneousFactor::lcm(src_hom(i - x), hom(target, i)).degree();
  add(t, "degree-sum", "sum deg lcm(phi_{i-x}, gamma_i) <= sum vbar - sum ubar + sum deg gamma",
      lhs <= base, ii(lhs), ii(base));
  return settle(std::move(t));
}

}  // namespace polycomp
