// Computes the first BCH components with both pipelines, prints them in the
// word and right-normed bases, and runs the certificate suite.

#include <cstddef>
#include <iostream>

#include <bchkit/bchkit.hpp>

int main() {
  using namespace bchkit;
  const std::size_t degree = 4;

  const BchResult recurrence = bch_recurrence(degree);
  const BchResult direct = bch_direct_result(degree);

  std::cout << "log(exp(A) exp(B)) through degree " << degree << ":\n\n";
  std::cout << render_text(make_records(recurrence, OutputBasis::words));
  std::cout << "\nright-normed form:\n\n";
  std::cout << render_text(make_records(recurrence, OutputBasis::rightnormed));

  bool agree = true;
  for (std::size_t n = 1; n <= degree; ++n)
    agree = agree && direct.component(n) == recurrence.component(n);
  std::cout << "\nmethods agree: " << (agree ? "yes" : "NO") << "\n";

  const CertificateReport report = certify(recurrence);
  std::cout << "certificate: " << report.passed_count() << "/" << report.entries.size()
            << " checks passed\n";
  return report.all_pass() && agree ? 0 : 1;
}
