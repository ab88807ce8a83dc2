#include "nashseq/motivic.hpp"

#include <algorithm>
#include <stdexcept>

#include "nashseq/field.hpp"

namespace nashseq {

std::string ClassSymbol::to_string() const {
  return "[V_{" + std::to_string(p) + "," + std::to_string(k) + "}]";
}

long ClassMonomial::dimension() const {
  long d = 0;
  for (const auto& [s, e] : factors_) d += s.dimension() * static_cast<long>(e);
  return d;
}

unsigned ClassMonomial::exponent_of(const ClassSymbol& s) const {
  for (const auto& [t, e] : factors_)
    if (t == s) return e;
  return 0;
}

ClassMonomial ClassMonomial::without(const ClassSymbol& s) const {
  ClassMonomial r;
  for (const auto& f : factors_)
    if (!(f.first == s)) r.factors_.push_back(f);
  return r;
}

ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b) {
  std::map<ClassSymbol, unsigned> merged;
  for (const auto& [s, e] : a.factors_) merged[s] += e;
  for (const auto& [s, e] : b.factors_) merged[s] += e;
  ClassMonomial r;
  r.factors_.assign(merged.begin(), merged.end());
  return r;
}

std::string ClassMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [sym, e] : factors_) {
    if (!s.empty()) s += "*";
    s += sym.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::uint64_t count_fermat_points(unsigned p, unsigned k, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("point counts need a prime q");
  std::uint64_t total_points = 1;
  for (unsigned j = 0; j < p; ++j) {
    total_points *= q;
    if (total_points > 100000000ULL) throw std::invalid_argument("point count enumeration too large");
  }
  std::vector<std::uint64_t> power(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t r = 1 % q;
    for (unsigned e = 0; e < k; ++e) r = r * x % q;
    power[x] = r;
  }
  std::vector<std::uint64_t> x(p, 0);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < total_points; ++n) {
    std::uint64_t sum = 1 % q;
    for (unsigned j = 0; j < p; ++j) sum = (sum + power[x[j]]) % q;
    if (sum == 0) ++count;
    for (unsigned j = 0; j < p; ++j) {
      if (++x[j] < q) break;
      x[j] = 0;
    }
  }
  return count;
}

std::uint64_t PointCounter::count(const ClassSymbol& s, std::uint64_t q) {
  auto key = std::make_tuple(s.p, s.k, q);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::uint64_t c = count_fermat_points(s.p, s.k, q);
  cache_.emplace(key, c);
  return c;
}

MotivicExpr::MotivicExpr(const RationalFunction& f) { add(ClassMonomial(), f); }

MotivicExpr MotivicExpr::symbol(unsigned p, unsigned k) {
  if (p == 0) throw std::invalid_argument("class symbols need p >= 1");
  MotivicExpr e;
  e.add(ClassMonomial(ClassSymbol{p, k}), RationalFunction(1L));
  return e;
}

MotivicExpr MotivicExpr::L(long e) { return MotivicExpr(RationalFunction::power(e)); }

void MotivicExpr::add(const ClassMonomial& m, const RationalFunction& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalFunction MotivicExpr::coefficient(const ClassMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

std::optional<long> MotivicExpr::virtual_dimension() const {
  std::optional<long> best;
  for (const auto& [m, f] : terms_) {
    long d = *f.degree() + m.dimension();
    if (!best || d > *best) best = d;
  }
  return best;
}

mpq_class MotivicExpr::specialize(std::uint64_t q, PointCounter& counter) const {
  if (!is_prime(q)) throw std::invalid_argument("specialization needs a prime q");
  mpq_class total = 0;
  const mpq_class Lq(mpz_class(static_cast<unsigned long>(q)));
  for (const auto& [m, f] : terms_) {
    mpq_class v = f.evaluate(Lq);
    for (const auto& [s, e] : m.factors()) {
      mpz_class c = static_cast<unsigned long>(counter.count(s, q));
      mpz_class ce;
      mpz_pow_ui(ce.get_mpz_t(), c.get_mpz_t(), e);
      v *= ce;
    }
    total += v;
  }
  return total;
}

mpq_class MotivicExpr::specialize(std::uint64_t q) const {
  PointCounter counter;
  return specialize(q, counter);
}

MotivicExpr MotivicExpr::substitute(const ClassSymbol& s, const MotivicExpr& e) const {
  MotivicExpr r;
  for (const auto& [m, f] : terms_) {
    unsigned a = m.exponent_of(s);
    MotivicExpr piece;
    piece.add(m.without(s), f);
    for (unsigned j = 0; j < a; ++j) piece = piece * e;
    r += piece;
  }
  return r;
}

MotivicExpr& MotivicExpr::operator+=(const MotivicExpr& o) {
  for (const auto& [m, f] : o.terms_) add(m, f);
  return *this;
}

MotivicExpr& MotivicExpr::operator-=(const MotivicExpr& o) {
  for (const auto& [m, f] : o.terms_) add(m, -f);
  return *this;
}

MotivicExpr operator*(const MotivicExpr& a, const MotivicExpr& b) {
  MotivicExpr r;
  for (const auto& [ma, fa] : a.terms_)
    for (const auto& [mb, fb] : b.terms_) r.add(ma * mb, fa * fb);
  return r;
}

MotivicExpr MotivicExpr::operator-() const {
  MotivicExpr r;
  for (const auto& [m, f] : terms_) r.add(m, -f);
  return r;
}

MotivicExpr MotivicExpr::times(const RationalFunction& g) const {
  MotivicExpr r;
  for (const auto& [m, f] : terms_) r.add(m, f * g);
  return r;
}

std::string MotivicExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, f] : terms_) {
    if (!s.empty()) s += " + ";
    std::string c = "(" + f.to_string() + ")";
    s += m.is_unit() ? c : c + "*" + m.to_string();
  }
  return s;
}

namespace {

RationalFunction L_minus_one() { return RationalFunction(UPoly(std::vector<mpq_class>{-1, 1})); }

void check_parameters(unsigned n, unsigned k) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

} // namespace

MotivicExpr class_C(unsigned n, unsigned k) {
  MotivicExpr sum;
  for (unsigned p = 1; p + 1 <= n; ++p) sum += MotivicExpr::symbol(p, k);
  return sum.times(L_minus_one());
}

MotivicExpr class_W(unsigned n, unsigned k) { return MotivicExpr::symbol(n, k).times(L_minus_one()); }

MotivicExpr complex_reduction(const MotivicExpr& e, unsigned k) {
  return e.substitute(ClassSymbol{1, k}, MotivicExpr(static_cast<long>(k)));
}

long AffineForm::coefficient(char var) const {
  switch (var) {
  case 's': return s;
  case 'v': return v;
  case 'l': return l;
  }
  throw std::invalid_argument(std::string("unknown summation variable ") + var);
}

AffineForm AffineForm::substituted(char var, const AffineForm& value) const {
  AffineForm r = *this;
  long a = coefficient(var);
  switch (var) {
  case 's': r.s = 0; break;
  case 'v': r.v = 0; break;
  case 'l': r.l = 0; break;
  }
  return r + a * value;
}

AffineForm operator+(AffineForm a, const AffineForm& b) {
  a.s += b.s;
  a.v += b.v;
  a.l += b.l;
  a.c += b.c;
  return a;
}

AffineForm operator*(long m, AffineForm a) {
  a.s *= m;
  a.v *= m;
  a.l *= m;
  a.c *= m;
  return a;
}

GeometricSum::GeometricSum(MotivicExpr coefficient, AffineForm exponent) {
  terms_.push_back({std::move(coefficient), exponent});
}

GeometricSum GeometricSum::summed(char var, const AffineForm& lo, const AffineForm& hi) const {
  // sum_{x=lo}^{hi} L^{r x} = (L^{r lo} - L^{r (hi+1)}) / (1 - L^r)
  GeometricSum out;
  AffineForm hi1 = hi + AffineForm{0, 0, 0, 1};
  for (const auto& t : terms_) {
    long r = t.exponent.coefficient(var);
    if (r == 0) throw std::domain_error("geometric summation needs a nonzero rate");
    RationalFunction scale = RationalFunction(1L) / (RationalFunction(1L) - RationalFunction::power(r));
    MotivicExpr c = t.coefficient.times(scale);
    out.terms_.push_back({c, t.exponent.substituted(var, lo)});
    out.terms_.push_back({-c, t.exponent.substituted(var, hi1)});
  }
  return out;
}

GeometricSum& GeometricSum::operator+=(const GeometricSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

GeometricSum GeometricSum::times(const MotivicExpr& e) const {
  GeometricSum out;
  for (const auto& t : terms_) out.terms_.push_back({t.coefficient * e, t.exponent});
  return out;
}

MotivicExpr GeometricSum::at(long s) const {
  MotivicExpr total;
  for (const auto& t : terms_) {
    if (t.exponent.v || t.exponent.l) throw std::logic_error("unsummed variable in geometric sum");
    total += t.coefficient * MotivicExpr::L(t.exponent.s * s + t.exponent.c);
  }
  return total;
}

MotivicExpr GeometricSum::limit() const {
  // Merge terms by exponent first so that cancelling growth is not mistaken for divergence.
  std::map<std::pair<long, long>, MotivicExpr> merged;
  for (const auto& t : terms_) {
    if (t.exponent.v || t.exponent.l) throw std::logic_error("unsummed variable in geometric sum");
    merged[{t.exponent.s, t.exponent.c}] += t.coefficient;
  }
  MotivicExpr total;
  for (const auto& [key, c] : merged) {
    if (c.is_zero() || key.first < 0) continue;
    if (key.first > 0) throw std::domain_error("geometric sum diverges");
    total += c * MotivicExpr::L(key.second);
  }
  return total;
}

PartialSumTerms partial_sum_terms(unsigned n, unsigned k, unsigned i) {
  check_parameters(n, k);
  if (i < 1) throw std::invalid_argument("level must be at least 1");
  const long N = n;
  const MotivicExpr C = class_C(n, k);
  const MotivicExpr W = class_W(n, k);
  PartialSumTerms t;
  MotivicExpr s1, s2, s3;
  for (long v = 1; v <= static_cast<long>(i); ++v) s1 += MotivicExpr::L(-N * v);
  for (long v = 1; v <= static_cast<long>(i) / 2; ++v) s2 += MotivicExpr::L(-(2 * N - 1) * v);
  for (long v = 2; v <= static_cast<long>(i); ++v) {
    const long iv = std::min(v - 1, static_cast<long>(i) - v);
    for (long l = 1; l <= iv; ++l) s3 += MotivicExpr::L(-N * v - (N - 1) * l);
  }
  t.first = C * MotivicExpr::L(1) * s1;
  t.second = W * s2;
  t.third = C.times(L_minus_one()) * s3;
  return t;
}

MotivicExpr partial_sum(unsigned n, unsigned k, unsigned i) { return partial_sum_terms(n, k, i).total(); }

PartialSumFamily partial_sum_family(unsigned n, unsigned k, unsigned parity) {
  check_parameters(n, k);
  if (parity > 1) throw std::invalid_argument("parity must be 0 or 1");
  const long N = n, r = parity;
  const MotivicExpr C = class_C(n, k);
  const MotivicExpr W = class_W(n, k);
  PartialSumFamily f;
  const AffineForm one{0, 0, 0, 1};
  const AffineForm two{0, 0, 0, 2};
  const AffineForm i_form{2, 0, 0, r}; // i = 2s + r

  f.first = GeometricSum(C * MotivicExpr::L(1), AffineForm{0, -N, 0, 0}).summed('v', one, i_form);
  f.second = GeometricSum(W, AffineForm{0, -(2 * N - 1), 0, 0}).summed('v', one, AffineForm{1, 0, 0, 0});

  const GeometricSum inner(C.times(L_minus_one()), AffineForm{0, -N, -(N - 1), 0});
  // v <= s + r: the inner range is l <= v - 1.
  GeometricSum low = inner.summed('l', one, AffineForm{0, 1, 0, -1}).summed('v', two, AffineForm{1, 0, 0, r});
  // v > s + r: the inner range is l <= i - v.
  GeometricSum high = inner.summed('l', one, AffineForm{2, -1, 0, r})
                          .summed('v', AffineForm{1, 0, 0, r + 1}, i_form);
  f.third = low;
  f.third += high;
  return f;
}

VolumeTerms volume_terms(unsigned n, unsigned k) {
  VolumeTerms v[2];
  for (unsigned r = 0; r < 2; ++r) {
    PartialSumFamily f = partial_sum_family(n, k, r);
    v[r] = {f.first.limit(), f.second.limit(), f.third.limit()};
  }
  if (!(v[0].first == v[1].first && v[0].second == v[1].second && v[0].third == v[1].third))
    throw std::logic_error("even and odd levels have different limits");
  return v[0];
}

MotivicExpr volume_closed_form(unsigned n, unsigned k) { return volume_terms(n, k).total(); }

} // namespace nashseq
