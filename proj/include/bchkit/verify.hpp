#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchkit/bch.hpp"
#include "bchkit/io.hpp"
#include "bchkit/lie.hpp"
#include "bchkit/ncpoly.hpp"
#include "bchkit/random.hpp"
#include "bchkit/series.hpp"

namespace bchkit {

struct VerifyOptions {
  std::size_t max_degree = 6;  // certificate runs on bch_recurrence(max_degree)
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

// A named property evaluated on fresh random inputs. On failure the runner
// fills `counterexample` with the offending inputs, rendered the same way
// cmd_compute renders polynomials.
struct TrialCheck {
  std::string name;
  std::function<bool(Rng&, std::vector<std::string>&)> run;
};

namespace detail {

inline Alphabet pick_alphabet(Rng& rng) { return Alphabet::standard(2 + rng.below(2)); }

inline void describe(std::vector<std::string>& out, const char* label, const NcPoly& p) {
  out.push_back(std::string(label) + " = " + to_string(p));
}

}  // namespace detail

// The randomized identity suites run by `bchkit verify`: the conjugation
// identity at order 6 on inputs of degree <= 2, the four right-normed
// bracketing lemmas on inputs of degree <= 4 over alphabets of size 2 and 3,
// and the ad_B-inversion round trip on the BCH alphabet.
inline std::vector<TrialCheck> standard_checks() {
  std::vector<TrialCheck> checks;

  checks.push_back({"exp-ad identity", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet alphabet = detail::pick_alphabet(rng);
                      const NcPoly x = random_poly(rng, alphabet, 2, 3, true);
                      const NcPoly y = random_poly(rng, alphabet, 2, 3, true);
                      if (check_exp_ad_identity(x, y, 6)) return true;
                      detail::describe(cex, "X", x);
                      detail::describe(cex, "Y", y);
                      return false;
                    }});

  checks.push_back({"baker identity", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet alphabet = detail::pick_alphabet(rng);
                      const NcPoly p = random_poly(rng, alphabet, 4, 3, true);
                      const NcPoly q = random_poly(rng, alphabet, 4, 3, true);
                      if (check_baker_identity(p, q)) return true;
                      detail::describe(cex, "P", p);
                      detail::describe(cex, "Q", q);
                      return false;
                    }});

  checks.push_back({"derivation rule", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet alphabet = detail::pick_alphabet(rng);
                      const NcPoly p1 = random_lie_polynomial(rng, alphabet, 4);
                      const NcPoly p2 = random_lie_polynomial(rng, alphabet, 4);
                      if (check_derivation(p1, p2)) return true;
                      detail::describe(cex, "P1", p1);
                      detail::describe(cex, "P2", p2);
                      return false;
                    }});

  checks.push_back({"append-letter rule", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet alphabet = detail::pick_alphabet(rng);
                      const NcPoly p = random_lie_polynomial(rng, alphabet, 4);
                      const Letter a = static_cast<Letter>(rng.below(alphabet.size()));
                      if (check_append_letter_identity(p, a)) return true;
                      detail::describe(cex, "P", p);
                      cex.push_back(std::string("a = ") + alphabet.name(a));
                      return false;
                    }});

  checks.push_back({"ad-injectivity", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet alphabet = detail::pick_alphabet(rng);
                      const Letter a = static_cast<Letter>(rng.below(alphabet.size()));
                      NcPoly p = random_poly(rng, alphabet, 4, 4, false);
                      for (const auto& [k, c] : p.pure_power_coefficients(a))
                        p -= NcPoly::monomial(alphabet, Word::repeated(a, k), c);
                      if (check_ad_injectivity(p, a)) return true;
                      detail::describe(cex, "P", p);
                      cex.push_back(std::string("a = ") + alphabet.name(a));
                      return false;
                    }});

  checks.push_back({"ad-inversion round-trip", [](Rng& rng, std::vector<std::string>& cex) {
                      const Alphabet& ab = bch_alphabet();
                      const std::size_t n = 1 + rng.below(4);
                      NcPoly p = random_homogeneous_poly(rng, ab, n, 4);
                      const Word bn = Word::repeated(1, n);
                      p -= NcPoly::monomial(ab, bn, p.coefficient(bn));
                      const NcPoly q = commutator(NcPoly::letter(ab, 1), p);
                      bool ok = false;
                      try {
                        ok = invert_ad_b(q, n) == p;
                      } catch (const std::exception&) {
                      }
                      if (ok) return true;
                      detail::describe(cex, "P", p);
                      detail::describe(cex, "Q", q);
                      return false;
                    }});

  return checks;
}

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> counterexample;  // first failure only
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  CertificateReport certificate;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (c.passed != c.total) return false;
    return certificate.all_pass();
  }

  std::string to_text() const {
    std::string out = "bchkit verification report\n";
    out += "seed=" + std::to_string(options.seed) + " trials=" + std::to_string(options.trials) +
           " certificate-degree=" + std::to_string(options.max_degree) + "\n\n";
    for (const CheckResult& c : checks) {
      out += c.name + ": " + std::to_string(c.passed) + "/" + std::to_string(c.total) + "\n";
      if (!c.counterexample.empty()) {
        out += "  counterexample:\n";
        for (const std::string& line : c.counterexample) out += "    " + line + "\n";
      }
    }
    out += "certificate (recurrence, degrees 1.." + std::to_string(options.max_degree) +
           "): " + std::to_string(certificate.passed_count()) + "/" +
           std::to_string(certificate.entries.size()) + "\n";
    for (const CertificateReport::Entry& e : certificate.entries)
      if (!e.pass)
        out += "  degree " + std::to_string(e.degree) + " " + e.check + ": FAIL\n";
    out += std::string("result: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
    return out;
  }
};

inline VerifyReport run_verification(const VerifyOptions& options,
                                     const std::vector<TrialCheck>& checks) {
  VerifyReport report;
  report.options = options;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Rng rng(mix_seed(options.seed, i));
    CheckResult result{checks[i].name, 0, options.trials, {}};
    for (std::size_t t = 0; t < options.trials; ++t) {
      std::vector<std::string> cex;
      bool ok = false;
      try {
        ok = checks[i].run(rng, cex);
      } catch (const std::exception& e) {
        cex.push_back(std::string("exception: ") + e.what());
      }
      if (ok)
        ++result.passed;
      else if (result.counterexample.empty())
        result.counterexample = std::move(cex);
    }
    report.checks.push_back(std::move(result));
  }
  report.certificate = certify(bch_recurrence(options.max_degree));
  return report;
}

inline VerifyReport run_verification(const VerifyOptions& options) {
  return run_verification(options, standard_checks());
}

}  // namespace bchkit
