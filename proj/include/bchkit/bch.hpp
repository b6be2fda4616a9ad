#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchkit/lie.hpp"
#include "bchkit/ncpoly.hpp"
#include "bchkit/series.hpp"

namespace bchkit {

enum class BchMethod { direct, recurrence };

inline std::string method_name(BchMethod m) {
  return m == BchMethod::direct ? "direct" : "recurrence";
}

// The right-hand side the homogeneous component C_n must satisfy through
// [B, C_n] = sum_{m=2}^{n} 1/m! sum_{k_1+...+k_m = n, k_j >= 1}
//              ad_{C_{k_1}} ... ad_{C_{k_m}}(B)  -  1/n! ad_A^n(B).
// `components[i]` holds C_{i+1}; entries 1..n-1 must be present and
// homogeneous of their degree. Compositions (k_1, ..., k_m) are accumulated
// right to left from B, so every suffix chain ad_{C_{k_j}} ... ad_{C_{k_m}}(B)
// is computed once and shared across tuples.
inline NcPoly recurrence_rhs(std::size_t n, std::span<const NcPoly> components) {
  if (n < 2) throw std::invalid_argument("recurrence_rhs: defined for n >= 2");
  if (components.size() < n - 1)
    throw std::invalid_argument("recurrence_rhs: components C_1..C_{n-1} required");
  const Alphabet& ab = components[0].alphabet();
  if (ab.size() != 2)
    throw std::invalid_argument("recurrence_rhs: components must live on the two-letter alphabet");
  for (std::size_t k = 1; k < n; ++k) {
    const NcPoly& c = components[k - 1];
    if (c.alphabet() != ab) throw std::invalid_argument("recurrence_rhs: alphabet mismatch");
    if (c.is_zero() || !c.is_homogeneous() || c.degree() != k)
      throw std::invalid_argument("recurrence_rhs: component is not homogeneous of its degree");
  }

  const NcPoly la = NcPoly::letter(ab, 0);
  const NcPoly lb = NcPoly::letter(ab, 1);

  // chains[m][s] = sum over ordered tuples (k_1..k_m) with sum s of
  // ad_{C_{k_1}} ... ad_{C_{k_m}}(B).
  std::vector<std::vector<NcPoly>> chains(n + 1, std::vector<NcPoly>(n + 1, NcPoly(ab)));
  for (std::size_t s = 1; s < n; ++s) chains[1][s] = ad(components[s - 1], lb);
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t s = m; s <= n; ++s) {
      NcPoly acc(ab);
      for (std::size_t k = 1; k + m - 1 <= s; ++k)
        if (!chains[m - 1][s - k].is_zero()) acc += ad(components[k - 1], chains[m - 1][s - k]);
      chains[m][s] = std::move(acc);
    }

  NcPoly rhs(ab);
  Integer mfact = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    mfact *= static_cast<unsigned long long>(m);
    rhs += chains[m][n] / Rational(mfact);
  }
  rhs -= ad_pow(la, n, lb) / Rational(factorial(n));
  return rhs;
}

// Solves [B, X] = Q for the unique homogeneous X of degree n over {A, B}
// whose B^n coefficient is zero. Matching coefficients of [B, X] on a word u
// of degree n+1 gives
//   (Q, u) = (X, u minus its leading B) - (X, u minus its trailing B),
// each summand present only when u starts/ends with B. Reading this at
// u = vB forces, for v with no leading B, (X, v) = -(Q, vB); prepending a
// B gives (X, Bv') = (X, v'B) - (Q, Bv'B). Words are therefore resolved in
// order of increasing leading-B count, with the seed (X, B^n) = 0. The
// computed X is verified against Q at the end, which rejects any Q outside
// the image of ad_B.
inline NcPoly invert_ad_b(const NcPoly& q, std::size_t n) {
  if (n < 1) throw std::invalid_argument("invert_ad_b: degree must be at least 1");
  const Alphabet& ab = q.alphabet();
  if (ab.size() != 2)
    throw std::invalid_argument("invert_ad_b: defined over the two-letter alphabet");
  if (!q.is_zero() && !(q.is_homogeneous() && q.degree() == n + 1))
    throw std::invalid_argument("invert_ad_b: right-hand side must be homogeneous of degree n+1");
  const Letter a = 0;
  const Letter b = 1;

  NcPoly::TermMap solved;
  auto solved_coefficient = [&solved](const Word& w) {
    auto it = solved.find(w);
    return it == solved.end() ? Rational(0) : it->second;
  };

  for (std::size_t leading = 0; leading < n; ++leading) {
    const std::size_t rest = n - leading - 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << rest); ++bits) {
      Word v = Word::repeated(b, leading).appended(a);
      for (std::size_t i = 0; i < rest; ++i)
        v = v.appended((bits >> i) & 1 ? b : a);
      Rational c = -q.coefficient(v.appended(b));
      if (leading > 0) c += solved_coefficient(v.dropped_front().appended(b));
      if (c != 0) solved.emplace(v, c);
    }
  }

  const NcPoly x = NcPoly::from_terms(ab, solved);
  if (commutator(NcPoly::letter(ab, b), x) != q)
    throw std::domain_error("invert_ad_b: right-hand side is not in the image of ad_B");
  return x;
}

// Component-only recurrence pipeline: C_1 = A + B, then each C_n is the
// ad_B-inverse of its recurrence right-hand side.
inline std::vector<NcPoly> bch_recurrence_components(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bch_recurrence_components: degree must be at least 1");
  const Alphabet& ab = bch_alphabet();
  std::vector<NcPoly> components;
  components.reserve(n);
  components.push_back(NcPoly::letter(ab, 0) + NcPoly::letter(ab, 1));
  for (std::size_t k = 2; k <= n; ++k)
    components.push_back(invert_ad_b(recurrence_rhs(k, components), k));
  return components;
}

// Components C_1..C_N together with their right-normed rewrites. Building the
// right-normed field runs every component through the Dynkin gate, so a
// result cannot be constructed from non-Lie components.
struct BchResult {
  BchMethod method;
  std::vector<NcPoly> components;
  std::vector<RightNormedCombination> rightnormed;

  std::size_t max_degree() const { return components.size(); }

  const NcPoly& component(std::size_t n) const {
    if (n < 1 || n > components.size()) throw std::out_of_range("BchResult: no such component");
    return components[n - 1];
  }

  const RightNormedCombination& rightnormed_component(std::size_t n) const {
    if (n < 1 || n > rightnormed.size()) throw std::out_of_range("BchResult: no such component");
    return rightnormed[n - 1];
  }
};

inline BchResult bch_result_from_components(std::vector<NcPoly> components, BchMethod method) {
  BchResult result{method, std::move(components), {}};
  result.rightnormed.reserve(result.components.size());
  for (const NcPoly& c : result.components) result.rightnormed.push_back(rightnormed_form(c));
  return result;
}

inline BchResult bch_compute(std::size_t n, BchMethod method) {
  std::vector<NcPoly> components =
      method == BchMethod::direct ? bch_direct(n) : bch_recurrence_components(n);
  return bch_result_from_components(std::move(components), method);
}

inline BchResult bch_recurrence(std::size_t n) { return bch_compute(n, BchMethod::recurrence); }
inline BchResult bch_direct_result(std::size_t n) { return bch_compute(n, BchMethod::direct); }

// Per-degree certificate of a computed result. Failures are entries, never
// exceptions.
struct CertificateReport {
  struct Entry {
    std::size_t degree;
    std::string check;
    bool pass;
  };

  std::vector<Entry> entries;

  bool all_pass() const {
    for (const Entry& e : entries)
      if (!e.pass) return false;
    return true;
  }

  std::size_t passed_count() const {
    std::size_t k = 0;
    for (const Entry& e : entries)
      if (e.pass) ++k;
    return k;
  }
};

// Checks, for every degree n of the result: the component is homogeneous of
// degree n; for n >= 2 it has no pure A^n or B^n term; it passes the Dynkin
// test; and for n >= 2 it satisfies [B, C_n] = recurrence right-hand side,
// with the right-hand side recomputed here rather than reused from the
// construction.
inline CertificateReport certify(const BchResult& result) {
  CertificateReport report;
  const std::size_t n_max = result.components.size();
  if (n_max == 0) return report;
  const Alphabet& ab = result.components[0].alphabet();
  auto push = [&report](std::size_t degree, const char* check, bool pass) {
    report.entries.push_back({degree, check, pass});
  };

  for (std::size_t n = 1; n <= n_max; ++n) {
    const NcPoly& c = result.components[n - 1];
    const bool homogeneous =
        c.alphabet() == ab && !c.is_zero() && c.is_homogeneous() && c.degree() == n;
    push(n, "homogeneous", homogeneous);

    if (n >= 2)
      push(n, "pure-powers",
           c.coefficient(Word::repeated(0, n)) == 0 && c.coefficient(Word::repeated(1, n)) == 0);

    bool dynkin = false;
    try {
      dynkin = rightnormed_bracketing(c) == Rational(n) * c;
    } catch (const std::exception&) {
    }
    push(n, "dynkin", dynkin);

    if (n >= 2) {
      bool recurrence = false;
      try {
        const std::span<const NcPoly> prior(result.components.data(), n - 1);
        recurrence = commutator(NcPoly::letter(ab, 1), c) == recurrence_rhs(n, prior);
      } catch (const std::exception&) {
      }
      push(n, "recurrence", recurrence);
    }
  }
  return report;
}

}  // namespace bchkit
