#include "jvoa/verma.hpp"

#include "jvoa/errors.hpp"

namespace jvoa {

Rational inner(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw Error("inner: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Weight coroot(const Weight& beta) {
  const Rational scale = 2 / inner(beta, beta);
  Weight out = beta;
  for (auto& c : out) c *= scale;
  return out;
}

RootDatumDN::RootDatumDN(int N) : N_(N) {
  if (N < 2) throw IndexOutOfRange("RootDatumDN: rank must be at least 2");
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      Weight plus = eps(i), minus = eps(j);
      plus[j - 1] += 1;
      minus[i - 1] -= 1;
      positive_.push_back(plus);
      positive_.push_back(minus);
      parabolic_.push_back(minus);
      nilradical_.push_back(plus);
    }
}

Weight RootDatumDN::eps(int i) const {
  if (i < 1 || i > N_) throw IndexOutOfRange("eps: index out of range");
  Weight w(N_, Rational(0));
  w[i - 1] = 1;
  return w;
}

std::vector<Weight> RootDatumDN::simple_roots() const {
  std::vector<Weight> out;
  for (int i = 1; i < N_; ++i) {
    Weight a = eps(i + 1);
    a[i - 1] -= 1;
    out.push_back(a);
  }
  Weight b = eps(1);
  b[1] += 1;
  out.push_back(b);
  return out;
}

Weight RootDatumDN::rho() const {
  Weight w(N_, Rational(0));
  for (const auto& a : positive_)
    for (int i = 0; i < N_; ++i) w[i] += a[i] / 2;
  return w;
}

Weight RootDatumDN::rho_closed_form() const {
  Weight w(N_, Rational(0));
  for (int i = 2; i <= N_; ++i) w[i - 1] = i - 1;
  return w;
}

Weight RootDatumDN::lambda(const Rational& r) const { return Weight(N_, Rational(-r / 2)); }

namespace {

Weight shifted(const RootDatumDN& d, const Rational& r) {
  Weight w = d.lambda(r);
  const Weight rho = d.rho();
  for (int i = 0; i < d.rank(); ++i) w[i] += rho[i];
  return w;
}

}  // namespace

Rational coroot_pairing(int N, const Rational& r, int k, int l) {
  if (k < 1 || l > N || k >= l) throw IndexOutOfRange("coroot_pairing: need 1 <= k < l <= N");
  const RootDatumDN d(N);
  Weight beta = d.eps(k);
  beta[l - 1] += 1;
  return inner(shifted(d, r), coroot(beta));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Simple:
      return "Simple";
    case Verdict::ReducibleWitness:
      return "ReducibleWitness";
    case Verdict::InconclusiveIrregular:
      return "InconclusiveIrregular";
  }
  return "?";
}

VermaReport jantzen_verdict(int N, const Rational& r) {
  const RootDatumDN d(N);
  VermaReport out;
  out.N = N;
  out.r = r;
  const Weight mu = shifted(d, r);
  for (const auto& a : d.simple_roots())
    if (inner(mu, coroot(a)) == 0) out.regular_simple = false;
  for (const auto& a : d.positive_roots())
    if (inner(mu, coroot(a)) == 0) out.regular_all = false;
  for (int k = 1; k <= N; ++k)
    for (int l = k + 1; l <= N; ++l) {
      const Rational v = coroot_pairing(N, r, k, l);
      out.pairings.push_back({k, l, v});
      if (is_integer(v) && v > 0) out.positive_integer.push_back({k, l});
    }
  if (!out.regular_simple) {
    out.verdict = Verdict::InconclusiveIrregular;
    out.note = "lambda + rho is singular on a simple root; reducibility at this r comes from the fermionic comparison";
  } else if (!out.positive_integer.empty()) {
    out.verdict = Verdict::ReducibleWitness;
    out.witness = out.positive_integer.front();
    if (!out.regular_all) out.note = "regular on simple roots only; the all-roots reading would be inconclusive";
  } else {
    out.verdict = Verdict::Simple;
  }
  return out;
}

bool filtration_consistency(int N, const Rational& r) {
  if (N < 3) throw IndexOutOfRange("filtration_consistency: need N >= 3");
  bool seen = false;
  std::vector<PairingRow> previous;
  for (int n = 2; n <= N; ++n) {
    const auto report = jantzen_verdict(n, r);
    const bool has = !report.positive_integer.empty();
    if (seen && !has) return false;
    seen = seen || has;
    for (const auto& row : previous) {
      bool found = false;
      for (const auto& cur : report.pairings)
        if (cur.k == row.k && cur.l == row.l) found = cur.value == row.value;
      if (!found) return false;
    }
    previous = report.pairings;
  }
  return true;
}

}  // namespace jvoa
