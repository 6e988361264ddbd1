// Verifies the intersection conditions on two realized complexes, then runs
// the ridge reduction on the book and replays its trace.

#include <cstdio>
#include <string>

#include <ttl/complex.hpp>
#include <ttl/complex_examples.hpp>
#include <ttl/linear_thrackle.hpp>

namespace {

std::string join(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + ids[i];
  return out + "}";
}

void report_on(const char* name, const ttl::RealizedComplex& rc) {
  auto verdict = ttl::facet_ridge_inequality(rc.complex);
  auto check = ttl::verify_linear_thrackle(rc.complex, rc.realization);
  std::printf("%s: %zu facets, %zu ridges, inequality %s, intersections %s\n", name,
              verdict.facets, verdict.ridges, verdict.holds ? "holds" : "fails",
              check.ok ? "all stable balls" : "violated");
  if (!check.ok && !check.violations.empty()) {
    const auto& v = check.violations.front();
    std::printf("  first violation: facets %zu and %zu meet in dimension %d\n", v.a, v.b,
                v.intersection_dim);
  }
}

}  // namespace

int main() {
  report_on("star cone", ttl::star_cone_example());
  report_on("pyramid", ttl::pyramid_example());

  // The book has one crowded ridge; a single separation-witnessed removal
  // frees it, and the recorded trace replays against the original input.
  auto book = ttl::book_example();
  auto result = ttl::reduce_complex(book.complex, book.realization);
  std::printf("book: %zu reduction step(s), %zu facets remain\n", result.trace.size(),
              result.reduced.facets.size());
  for (const auto& step : result.trace)
    std::printf("  at ridge %s removed %s, separated %s from %s\n", join(step.ridge).c_str(),
                join(step.removed).c_str(), join(step.positive_facet).c_str(),
                join(step.negative_facet).c_str());
  std::printf("trace replay: %s\n",
              ttl::replay_reduction(book.complex, book.realization, result) ? "accepted"
                                                                            : "rejected");
  return 0;
}
