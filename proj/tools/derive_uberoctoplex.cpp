// Enumerates the 16 channel layouts of the Überoctoplex recipe and prints
// which ones build, their feature counts and how many vertices see the
// center. uberoctoplex_config() freezes the first accepted row.
#include "gallery/constructions.hpp"

#include <cstdio>

int main() {
  std::size_t accepted = 0;
  for (const auto& o : gallery::enumerate_uberoctoplex()) {
    const std::string name = gallery::to_string(o.config);
    if (!o.built) {
      std::printf("%-16s rejected: %s\n", name.c_str(), o.failure.c_str());
      continue;
    }
    std::printf("%-16s V=%zu E=%zu F=%zu observers=%zu%s\n", name.c_str(), o.features.V, o.features.E, o.features.F,
                o.center_observers, o.accepted ? "  accepted" : "");
    accepted += o.accepted ? 1 : 0;
  }
  std::printf("accepted %zu; frozen %s\n", accepted, gallery::to_string(gallery::uberoctoplex_config()).c_str());
  return accepted > 0 ? 0 : 1;
}
