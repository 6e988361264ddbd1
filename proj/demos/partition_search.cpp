// Walks the two sides of a relaxed Tverberg question on small planar inputs:
// find a qualifying partition when one exists, certify exhaustively when none
// does, then lift the certified witness one dimension up.

#include <cstdio>
#include <string>

#include <ttl/general_position.hpp>
#include <ttl/planar_witness.hpp>
#include <ttl/tverberg.hpp>

namespace {

std::string id_list(const ttl::PointConfiguration& config, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += " ";
    out += config.points[i].id;
  }
  return out;
}

}  // namespace

int main() {
  // Four generic planar points always split into two blocks whose hulls meet.
  auto four = ttl::sample_generic_config(2, 4, 7);
  auto witness = ttl::find_partition(four, 2, 2);
  if (!witness) {
    std::puts("unexpected: no partition on four points");
    return 1;
  }
  std::printf("4 points, r=2: partition found\n");
  for (const auto& block : witness->partition)
    std::printf("  block: %s\n", id_list(four, block).c_str());
  const auto& w = witness->witnesses.front();
  std::printf("  common point: (%s, %s)\n", ttl::rat_to_string(w.point[0]).c_str(),
              ttl::rat_to_string(w.point[1]).c_str());

  // One point fewer and no partition survives; the certificate enumerates
  // every partition with an empty subfamily intersection.
  auto three = ttl::reay_planar_witness(2);
  auto verdict = ttl::verify_no_partition(three, 2, 2);
  std::printf("3 points, r=2: %s (%zu partitions refuted)\n",
              verdict.verified() ? "no partition exists" : "partition slipped through",
              verdict.certificate ? verdict.certificate->entries.size() : 0);

  // Lifting appends k-1 points at height one; the property is preserved a
  // dimension higher, certified over all partitions of the larger set.
  auto lifted = ttl::lift_witness(three, 2);
  auto lifted_verdict = ttl::verify_no_partition(lifted, 2, 2);
  std::printf("lifted to %d points in dimension %d: %s (%zu partitions refuted)\n",
              static_cast<int>(lifted.size()), lifted.dim,
              lifted_verdict.verified() ? "no partition exists" : "partition slipped through",
              lifted_verdict.certificate ? lifted_verdict.certificate->entries.size() : 0);
  return 0;
}
