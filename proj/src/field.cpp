#include "twistlib/field.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>

namespace twist {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational");
  auto is_int = [](const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_int(t)) throw ParseError("bad rational: " + text);
    return Rat(Int(t));
  }
  std::string n = t.substr(0, slash), d = t.substr(slash + 1);
  if (!is_int(n) || !is_int(d)) throw ParseError("bad rational: " + text);
  return make_rat(Int(n), Int(d));
}

// ---------------------------------------------------------------------------

Cyc Cyc::zeta_pow(long k) {
  long m = ((k % 3) + 3) % 3;
  if (m == 0) return Cyc(1);
  if (m == 1) return zeta();
  return Cyc(Rat(-1), Rat(-1));
}

Cyc Cyc::conj() const { return Cyc(r - s, -s); }

Rat Cyc::norm() const { return r * r - r * s + s * s; }

Cyc Cyc::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta3)");
  Rat n = norm();
  Cyc c = conj();
  return Cyc(c.r / n, c.s / n);
}

Cyc operator*(const Cyc& x, const Cyc& y) {
  // (r1 + s1 w)(r2 + s2 w) with w^2 = -1 - w.
  return Cyc(x.r * y.r - x.s * y.s, x.r * y.s + x.s * y.r - x.s * y.s);
}

Cyc operator/(const Cyc& x, const Cyc& y) { return x * y.inv(); }

Cyc cyc_mul(const Cyc& x, const Cyc& y) { return x * y; }
Rat cyc_norm(const Cyc& x) { return x.norm(); }

std::string cyc_str(const Cyc& x) {
  if (x.s == 0) return rat_str(x.r);
  std::string zterm;
  if (x.s == 1)
    zterm = "z3";
  else if (x.s == -1)
    zterm = "-z3";
  else
    zterm = rat_str(x.s) + "*z3";
  if (x.r == 0) return zterm;
  std::string out = rat_str(x.r);
  if (zterm[0] != '-') out += "+";
  return out + zterm;
}

Cyc parse_cyc(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty element of Q(zeta3)");
  Cyc out;
  std::size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = (t[i] == '-') ? -1 : 1;
      ++i;
    }
    if (i >= t.size()) throw ParseError("bad element of Q(zeta3): " + text);
    std::size_t j = i;
    while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
    Rat coef(1);
    bool have_coef = (j > i);
    if (have_coef) coef = parse_rat(t.substr(i, j - i));
    if (sign < 0) coef = -coef;
    if (j < t.size() && t[j] == '*') ++j;
    if (j + 1 < t.size() && t[j] == 'z' && t[j + 1] == '3') {
      out.s += coef;
      i = j + 2;
    } else if (have_coef) {
      out.r += coef;
      i = j;
    } else {
      throw ParseError("bad element of Q(zeta3): " + text);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

SplitType split_type(const Int& q) {
  if (q < 2 || !is_probable_prime(q))
    throw InvalidArgumentError("split_type: " + q.get_str() + " is not prime");
  if (q == 3) return SplitType::Ramified;
  return (q % 3 == 1) ? SplitType::Split : SplitType::Inert;
}

const char* split_type_name(SplitType t) {
  switch (t) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

namespace {

Int pollard_rho(const Int& n) {
  static gmp_randclass rng(gmp_randinit_mt);
  static bool seeded = false;
  if (!seeded) {
    rng.seed(0x5eedu);
    seeded = true;
  }
  while (true) {
    Int c = rng.get_z_range(n - 3) + 1;
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x, d = 1, diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out);

void split_composite(const Int& n, std::vector<std::pair<Int, int>>& out) {
  // Perfect powers defeat plain rho cycles, so peel them first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Int root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), k);
      if (rem == 0) {
        std::vector<std::pair<Int, int>> sub;
        factor_into(root, sub);
        for (auto& [p, e] : sub) out.emplace_back(p, e * static_cast<int>(k));
        return;
      }
    }
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(Int(p), e);
      if (n == 1) return;
      factor_into(n, out);
      return;
    }
  }
  split_composite(n, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_int(const Int& n) {
  if (n == 0) throw InvalidArgumentError("factor_int: zero has no factorization");
  Int m = n < 0 ? Int(-n) : n;
  std::vector<std::pair<Int, int>> raw;
  factor_into(m, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<Int, int>> out;
  for (auto& [p, e] : raw) {
    if (!out.empty() && out.back().first == p)
      out.back().second += e;
    else
      out.emplace_back(p, e);
  }
  return out;
}

bool is_power_free(const Int& n, int p) {
  if (n == 0) return false;
  for (auto& [q, e] : factor_int(n))
    if (e >= p) return false;
  return true;
}

int int_valuation(const Int& n, const Int& q) {
  if (n == 0) throw InvalidArgumentError("int_valuation: v_q(0) is infinite");
  Int m = n;
  int v = 0;
  while (m % q == 0) {
    m /= q;
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t initial_monomial_limit() {
  if (const char* env = std::getenv("TWIST_MONOMIAL_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

std::atomic<std::size_t> g_monomial_limit{initial_monomial_limit()};

}  // namespace

std::size_t monomial_limit() { return g_monomial_limit.load(); }
void set_monomial_limit(std::size_t limit) { g_monomial_limit.store(limit); }

}  // namespace twist
