// Checks the transversal property on the heptagram chord family, derives the
// injective vertex selection, and writes the picture to an SVG file.

#include <cstdio>
#include <fstream>

#include <ttl/svg.hpp>
#include <ttl/thrackle.hpp>
#include <ttl/thrackle_examples.hpp>

int main() {
  auto instance = ttl::heptagram_example();
  std::printf("heptagram: %zu chords on %zu vertices\n", instance.body_count(),
              instance.vertex_count());

  auto transversal = ttl::check_transversal(instance);
  if (!transversal.ok) {
    std::printf("transversal fails at pair (%zu, %zu)\n", transversal.violating_pair->first,
                transversal.violating_pair->second);
    return 1;
  }
  std::puts("every chord pair holds exactly one transversal point");

  // Each chord claims one endpoint, no two claim the same one.
  auto selection = ttl::vertex_selection(instance);
  ttl::validate_selection(instance, selection);
  for (const auto& [vertex, body] : selection.selected)
    std::printf("  vertex %s <- chord %zu\n", vertex.c_str(), body);
  std::printf("selection is %s\n",
              ttl::selection_surjective(instance, selection) ? "surjective" : "not surjective");

  std::ofstream svg("heptagram.svg", std::ios::binary);
  svg << ttl::render_thrackle_svg(instance);
  std::puts("wrote heptagram.svg");
  return 0;
}
