#pragma once

// Exact bivariate polynomials in the formal variables p and q.
//
// A PQPolynomial is a sparse map from exponent pairs (a, b) to arbitrary
// precision integer coefficients, standing for sum c * p^a * q^b. Zero
// coefficients are never stored, so two polynomials are equal exactly when
// their term maps are equal.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "moonfill/compositions.hpp"

namespace moonfill {

using BigInt = boost::multiprecision::cpp_int;

struct Monomial {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class PQPolynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  PQPolynomial() = default;
  PQPolynomial(std::int64_t constant) { add_term({0, 0}, constant); }  // NOLINT

  static PQPolynomial monomial(int p_exp, int q_exp, BigInt coeff = 1) {
    PQPolynomial r;
    r.add_term({p_exp, q_exp}, std::move(coeff));
    return r;
  }
  static PQPolynomial p() { return monomial(1, 0); }
  static PQPolynomial q() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(int p_exp, int q_exp) const {
    auto it = terms_.find({p_exp, q_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  // Adds coeff * p^a q^b in place, dropping the term if it cancels.
  void add_term(Monomial m, const BigInt& coeff) {
    if (coeff == 0) return;
    if (m.p < 0 || m.q < 0) throw std::invalid_argument("negative exponent");
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PQPolynomial& operator+=(const PQPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PQPolynomial& operator-=(const PQPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  PQPolynomial& operator*=(const PQPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend PQPolynomial operator+(PQPolynomial a, const PQPolynomial& b) {
    a += b;
    return a;
  }
  friend PQPolynomial operator-(PQPolynomial a, const PQPolynomial& b) {
    a -= b;
    return a;
  }
  friend PQPolynomial operator-(const PQPolynomial& a) {
    PQPolynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend PQPolynomial operator*(const PQPolynomial& a, const PQPolynomial& b) {
    PQPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term({ma.p + mb.p, ma.q + mb.q}, ca * cb);
    return r;
  }
  friend bool operator==(const PQPolynomial&, const PQPolynomial&) = default;

  // Value at p = q = 1.
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  BigInt evaluate(const BigInt& pv, const BigInt& qv) const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) {
      BigInt t = c;
      for (int i = 0; i < m.p; ++i) t *= pv;
      for (int i = 0; i < m.q; ++i) t *= qv;
      s += t;
    }
    return s;
  }

 private:
  TermMap terms_;
};

inline PQPolynomial swap_pq(const PQPolynomial& x) {
  PQPolynomial r;
  for (const auto& [m, c] : x.terms()) r.add_term({m.q, m.p}, c);
  return r;
}

inline bool is_symmetric(const PQPolynomial& x) { return swap_pq(x) == x; }

// [r]_{p,q} = p^{r-1} + p^{r-2} q + ... + q^{r-1}; zero for r <= 0.
inline PQPolynomial pq_integer(int r) {
  PQPolynomial out;
  for (int j = 0; j < r; ++j) out.add_term({r - 1 - j, j}, 1);
  return out;
}

inline PQPolynomial pq_factorial(int r) {
  PQPolynomial out = 1;
  for (int i = 1; i <= r; ++i) out *= pq_integer(i);
  return out;
}

// Exact division. Throws std::domain_error when the divisor does not divide
// the dividend.
inline PQPolynomial exact_divide(PQPolynomial dividend, const PQPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  // Leading terms under the order (p exponent, then q exponent) descending.
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  PQPolynomial quotient;
  while (!dividend.is_zero()) {
    const auto [m, c] = *dividend.terms().rbegin();
    if (m.p < lead_m.p || m.q < lead_m.q || c % lead_c != 0)
      throw std::domain_error("polynomial division is not exact");
    PQPolynomial step = PQPolynomial::monomial(m.p - lead_m.p, m.q - lead_m.q, c / lead_c);
    dividend -= step * divisor;
    quotient += step;
  }
  return quotient;
}

// p,q-Gaussian coefficient [n choose k]_{p,q}, zero unless 0 <= k <= n.
// Computed as [n]! / ([k]! [n-k]!) by exact division.
inline PQPolynomial gaussian(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  return exact_divide(pq_factorial(n), pq_factorial(k) * pq_factorial(n - k));
}

// Same coefficient through the recurrence
//   [n, k] = p^{n-k} [n-1, k-1] + q^k [n-1, k].
inline PQPolynomial gaussian_recurrence(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  std::vector<PQPolynomial> row{PQPolynomial(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<PQPolynomial> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      if (j >= 1) next[j] += PQPolynomial::monomial(m - j, 0) * row[j - 1];
      if (j <= m - 1) next[j] += PQPolynomial::monomial(0, j) * row[j];
    }
    row = std::move(next);
  }
  return row[k];
}

// Sum over weak compositions (c_1..c_{k+1}) of n of
//   prod_{j=1}^{k} p^{c_1+..+c_j} q^{c_{j+1}+..+c_{k+1}},
// evaluated term by term.
inline PQPolynomial composition_sum(int n, int k) {
  PQPolynomial out;
  for_each_weak_composition(n, k + 1, [&](const std::vector<int>& c) {
    int a = 0;
    int b = 0;
    int prefix = 0;
    for (int j = 0; j < k; ++j) {
      prefix += c[j];
      a += prefix;
      b += n - prefix;
    }
    out.add_term({a, b}, 1);
  });
  return out;
}

// Canonical rendering: terms by total degree descending, then p exponent
// descending, e.g. "p^3 + 2*p^2*q + 2*p*q^2 + q^3"; "0" for zero.
inline std::string to_string(const PQPolynomial& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<Monomial, BigInt>> terms(x.terms().begin(), x.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = l.first.p + l.first.q;
    int dr = r.first.p + r.first.q;
    if (dl != dr) return dl > dr;
    return l.first.p > r.first.p;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    bool constant = m.p == 0 && m.q == 0;
    if (c == -1 && !constant) {
      os << '-';
    } else if (c != 1 || constant) {
      factors.push_back(c.str());
    }
    if (m.p == 1) factors.emplace_back("p");
    if (m.p > 1) factors.push_back("p^" + std::to_string(m.p));
    if (m.q == 1) factors.emplace_back("q");
    if (m.q > 1) factors.push_back("q^" + std::to_string(m.q));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << '*';
      os << factors[i];
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const PQPolynomial& x) {
  return os << to_string(x);
}

// Parses the canonical grammar (term order is not enforced; " - " between
// terms is accepted as well as a leading sign on any term).
inline PQPolynomial parse_pqpoly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  PQPolynomial out;
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("bad polynomial '") + std::string(text) + "': " + why);
  };
  auto read_uint = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return s.substr(start, i - start);
  };
  bool expect_term = true;
  while (i < s.size()) {
    int sign = 1;
    if (!expect_term) {
      if (s[i] == '+') {
        ++i;
      } else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else {
        fail("expected '+' between terms");
      }
    }
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) fail("dangling sign");
    BigInt coeff = 1;
    Monomial m;
    bool need_factor = true;
    while (need_factor) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff *= BigInt(read_uint());
      } else if (s[i] == 'p' || s[i] == 'q') {
        char var = s[i++];
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = std::stoi(read_uint());
        }
        (var == 'p' ? m.p : m.q) += e;
      } else {
        fail("unexpected character");
      }
      need_factor = i < s.size() && s[i] == '*';
      if (need_factor) {
        ++i;
        if (i >= s.size()) fail("dangling '*'");
      }
    }
    out.add_term(m, sign * coeff);
    expect_term = false;
  }
  return out;
}

}  // namespace moonfill
