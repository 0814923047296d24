#pragma once

// Exact coefficient fields: GF(p^k) for prime p, and the rationals.
//
// Every field type F exposes the same member surface (Elem, zero, one,
// from_int, add, sub, mul, neg, inv, is_zero, is_one, eq, to_string,
// characteristic, random) so ring/polynomial code can be templated on F.
// Elements are always kept canonical, so Elem equality is value equality.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace ginzero {

// Deterministic RNG. mt19937_64 is fully specified by the standard; the
// std distributions are not, so sampling goes through below() which uses
// plain rejection. Identical seeds give identical streams on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, m). m = 0 is a caller bug.
  std::uint64_t below(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % m;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return x % m;
  }

  // Uniform draw from [lo, hi] inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<std::int64_t>(below(span));
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 step; used to derive independent child seeds from one master
// seed without correlating the child streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  return mix64(mix64(master) ^ mix64(salt * 0x9e3779b97f4a7c15ULL + 1));
}

namespace detail {

// Arithmetic mod p on uint64 residues. p must fit in 32 bits so products
// fit in uint64.
inline std::uint64_t padd(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t psub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t pmul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

inline std::uint64_t pinv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero residue");
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("residue not invertible (p not prime?)");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Univariate polynomials over GF(p), coefficient vectors low degree first,
// trailing zeros trimmed. Used for the field modulus and the slow-path
// extension arithmetic.
using UPoly = boost::container::small_vector<std::uint32_t, 8>;

inline void utrim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

// Remainder of f modulo monic g.
inline UPoly umod(UPoly f, const UPoly& g, std::uint64_t p) {
  utrim(f);
  const int dg = udeg(g);
  if (dg < 0) throw std::domain_error("umod: zero modulus");
  while (udeg(f) >= dg) {
    const std::uint64_t c = f.back();
    const int shift = udeg(f) - dg;
    if (c != 0) {
      for (int i = 0; i <= dg; ++i) {
        auto& fi = f[static_cast<std::size_t>(i + shift)];
        fi = static_cast<std::uint32_t>(psub(fi, pmul(c, g[static_cast<std::size_t>(i)], p), p));
      }
    }
    f.pop_back();
    utrim(f);
  }
  return f;
}

inline UPoly umul(const UPoly& a, const UPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(padd(prod[i + j], pmul(a[i], b[j], p), p));
    }
  }
  return prod;
}

inline UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& g, std::uint64_t p) {
  return umod(umul(a, b, p), g, p);
}

inline UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& g, std::uint64_t p) {
  UPoly r{1};
  base = umod(std::move(base), g, p);
  while (e > 0) {
    if (e & 1) r = umulmod(r, base, g, p);
    base = umulmod(base, base, g, p);
    e >>= 1;
  }
  return r;
}

inline UPoly ugcd(UPoly a, UPoly b, std::uint64_t p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    const std::uint64_t lc = b.back();
    if (lc != 1) {
      const std::uint64_t il = pinv(lc, p);
      for (auto& c : b) c = static_cast<std::uint32_t>(pmul(c, il, p));
    }
    UPoly r = umod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint64_t il = pinv(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(pmul(c, il, p));
  }
  return a;
}

// Monic inverse of a modulo monic irreducible f, by the extended Euclid
// algorithm over GF(p)[x].
inline UPoly uinvmod(const UPoly& a0, const UPoly& f, std::uint64_t p) {
  UPoly r0 = f;
  UPoly r1 = a0;
  utrim(r1);
  if (r1.empty()) throw std::domain_error("uinvmod: zero element");
  UPoly t0;     // coefficient of a0 in r0, starts 0
  UPoly t1{1};  // and 1 in r1
  while (!r1.empty()) {
    // divide r0 by r1: quotient q, remainder rem
    UPoly q;
    UPoly rem = r0;
    utrim(rem);
    const int d1 = udeg(r1);
    const std::uint64_t lc_inv = pinv(r1.back(), p);
    while (udeg(rem) >= d1) {
      const int shift = udeg(rem) - d1;
      const std::uint64_t c = pmul(rem.back(), lc_inv, p);
      if (static_cast<int>(q.size()) <= shift) q.resize(static_cast<std::size_t>(shift) + 1, 0);
      q[static_cast<std::size_t>(shift)] =
          static_cast<std::uint32_t>(padd(q[static_cast<std::size_t>(shift)], c, p));
      for (int i = 0; i <= d1; ++i) {
        auto& ri = rem[static_cast<std::size_t>(i + shift)];
        ri = static_cast<std::uint32_t>(psub(ri, pmul(c, r1[static_cast<std::size_t>(i)], p), p));
      }
      utrim(rem);
    }
    UPoly qt = umul(q, t1, p);
    UPoly t2(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < t2.size(); ++i) {
      const std::uint64_t u = i < t0.size() ? t0[i] : 0;
      const std::uint64_t v = i < qt.size() ? qt[i] : 0;
      t2[i] = static_cast<std::uint32_t>(psub(u, v, p));
    }
    utrim(t2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  if (udeg(r0) != 0) throw std::domain_error("uinvmod: element not invertible");
  const std::uint64_t scale = pinv(r0[0], p);
  UPoly out(t0.size(), 0);
  for (std::size_t i = 0; i < t0.size(); ++i)
    out[i] = static_cast<std::uint32_t>(pmul(t0[i], scale, p));
  utrim(out);
  return out;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{p^k} == x mod f, and gcd(x^{p^{k/q}} - x, f) = 1 for each prime q | k.
inline bool irreducible(const UPoly& f, std::uint64_t p) {
  const int k = udeg(f);
  if (k < 1) return false;
  if (f[0] == 0) return false;  // divisible by x
  std::vector<std::uint64_t> qs = prime_factors(static_cast<std::uint64_t>(k));
  UPoly frob{0, 1};  // x
  for (int j = 1; j <= k; ++j) {
    frob = upowmod(std::move(frob), p, f, p);
    bool proper = false;
    for (std::uint64_t q : qs)
      if (static_cast<std::uint64_t>(k) / q == static_cast<std::uint64_t>(j)) proper = true;
    if (proper) {
      UPoly diff = frob;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = static_cast<std::uint32_t>(psub(diff[1], 1, p));
      utrim(diff);
      UPoly g = ugcd(diff, f, p);
      if (udeg(g) != 0) return false;
    }
  }
  UPoly x{0, 1};
  return frob == x;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace detail

// Textual description of a coefficient field, for reports.
struct FieldDesc {
  long characteristic = 0;
  unsigned ext_degree = 1;      // k when the field is GF(p^k)
  std::string cardinality;      // p^k expanded, or "infinite"
  long entry_bound = 0;         // random-entry bound used over the rationals
};

// GF(p^k). An element is the base-p packing of its residue polynomial's
// coefficient vector, so elements are plain integers in [0, p^k) and value
// equality is field equality. The modulus is found by enumerating candidates
// x^k + (base-p digits of c) for c = 0, 1, ... and taking the first
// irreducible one, so a given (p, k) always yields the same field anywhere.
//
// Fields with at most 2^16 elements (and k >= 2) multiply through log/exp
// tables built from the lowest-indexed primitive element; char 2 adds with
// a single xor. Larger extensions fall back to polynomial arithmetic.
class GaloisField {
 public:
  using Elem = std::uint64_t;

  GaloisField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (p < 2 || p >= (1ULL << 31) || !detail::is_prime_u64(p))
      throw std::invalid_argument("GaloisField: characteristic must be a prime below 2^31");
    if (k == 0) throw std::invalid_argument("GaloisField: extension degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q_ > (1ULL << 62) / p)
        throw std::invalid_argument("GaloisField: p^k exceeds 2^62");
      q_ *= p;
    }
    if (k_ == 1) {
      mod_ = {0, 1};
    } else {
      bool found = false;
      for (std::uint64_t c = 0; c < q_; ++c) {
        detail::UPoly f(k_ + 1, 0);
        std::uint64_t d = c;
        for (unsigned i = 0; i < k_ && d > 0; ++i) {
          f[i] = static_cast<std::uint32_t>(d % p_);
          d /= p_;
        }
        f[k_] = 1;
        if (detail::irreducible(f, p_)) {
          mod_ = std::move(f);
          found = true;
          break;
        }
      }
      if (!found) throw std::runtime_error("GaloisField: no irreducible modulus found");
      if (q_ <= (1ULL << 21)) build_tables();
    }
  }

  // Smallest GF(p^k) with at least min_size elements.
  static GaloisField with_min_size(std::uint64_t p, std::uint64_t min_size) {
    unsigned k = 1;
    std::uint64_t q = p;
    while (q < min_size) {
      if (q > (1ULL << 62) / p)
        throw std::invalid_argument("GaloisField: requested size exceeds 2^62");
      q *= p;
      ++k;
    }
    return GaloisField(p, k);
  }

  long characteristic() const { return static_cast<long>(p_); }
  unsigned ext_degree() const { return k_; }
  std::uint64_t cardinality() const { return q_; }

  FieldDesc desc() const {
    return FieldDesc{static_cast<long>(p_), k_, std::to_string(q_), 0};
  }

  const detail::UPoly& modulus() const { return mod_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return detail::padd(a, b, p_);
    Elem r = 0;
    Elem place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += place * detail::padd(a % p_, b % p_, p_);
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    Elem place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += place * detail::psub(0, a % p_, p_);
      a /= p_;
      place *= p_;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add(a, neg(b));
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return detail::pmul(a, b, p_);
    if (!exp_.empty()) {
      const std::uint64_t e = log_[a] + log_[b];
      return exp_[e >= q_ - 1 ? e - (q_ - 1) : e];
    }
    return pack(detail::umulmod(unpack(a), unpack(b), mod_, p_));
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    if (k_ == 1) return detail::pinv(a, p_);
    if (!exp_.empty()) {
      const std::uint64_t e = log_[a];
      return exp_[e == 0 ? 0 : q_ - 1 - e];
    }
    return pack(detail::uinvmod(unpack(a), mod_, p_));
  }

  Elem random(Rng& rng) const { return rng.below(q_); }

  std::string to_string(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s = "[";
    for (unsigned i = 0; i < k_; ++i) {
      if (i) s += ",";
      s += std::to_string(a % p_);
      a /= p_;
    }
    s += "]";
    return s;
  }

 private:
  detail::UPoly unpack(Elem a) const {
    detail::UPoly f;
    while (a > 0) {
      f.push_back(static_cast<std::uint32_t>(a % p_));
      a /= p_;
    }
    return f;
  }

  Elem pack(const detail::UPoly& f) const {
    Elem r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * p_ + f[i];
    return r;
  }

  void build_tables() {
    const auto factors = detail::prime_factors(q_ - 1);
    Elem g = 0;
    for (Elem cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (std::uint64_t f : factors) {
        if (slow_pow(cand, (q_ - 1) / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    if (g == 0) throw std::logic_error("GaloisField: no primitive element");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = pack(detail::umulmod(unpack(cur), unpack(g), mod_, p_));
    }
    if (cur != 1) throw std::logic_error("GaloisField: table construction failed");
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    detail::UPoly r{1};
    detail::UPoly base = unpack(a);
    while (e > 0) {
      if (e & 1) r = detail::umulmod(r, base, mod_, p_);
      base = detail::umulmod(base, base, mod_, p_);
      e >>= 1;
    }
    return pack(r);
  }

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  detail::UPoly mod_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// The field of rational numbers; GMP keeps elements canonical.
class Rationals {
 public:
  using Elem = mpq_class;

  explicit Rationals(long entry_bound = 1000000) : entry_bound_(entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("Rationals: entry bound must be positive");
  }

  long characteristic() const { return 0; }
  unsigned ext_degree() const { return 1; }
  long entry_bound() const { return entry_bound_; }

  FieldDesc desc() const { return FieldDesc{0, 1, "infinite", entry_bound_}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }

  Elem from_int(long long v) const {
    return Elem(mpz_class(static_cast<long>(v)));
  }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }

  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("Rationals: inverse of zero");
    return 1 / a;
  }

  // Uniform integer in [-entry_bound, entry_bound].
  Elem random(Rng& rng) const {
    const std::int64_t v = rng.between(-entry_bound_, entry_bound_);
    return from_int(v);
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }

 private:
  long entry_bound_;
};

}  // namespace ginzero
