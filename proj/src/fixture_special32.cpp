#include "egr/ingest.hpp"

namespace egr {

// Reference adjacency list for the 32-vertex graph, 1-based.
std::string_view special32_fixture() {
  static constexpr std::string_view kText =
      "32\n"
      "{ 2, 24, 17, 20, 21 }\n"
      "{ 22, 1, 25, 18, 30 }\n"
      "{ 23, 26, 6, 17, 30 }\n"
      "{ 14, 26, 27, 19, 31 }\n"
      "{ 25, 27, 17, 28, 9 }\n"
      "{ 3, 28, 18, 31, 21 }\n"
      "{ 22, 27, 29, 20, 10 }\n"
      "{ 22, 16, 17, 31, 32 }\n"
      "{ 26, 5, 18, 20, 32 }\n"
      "{ 24, 25, 7, 19, 32 }\n"
      "{ 23, 13, 24, 27, 18 }\n"
      "{ 22, 23, 15, 19, 21 }\n"
      "{ 11, 28, 19, 30, 20 }\n"
      "{ 23, 4, 28, 29, 32 }\n"
      "{ 12, 24, 29, 30, 31 }\n"
      "{ 25, 26, 29, 8, 21 }\n"
      "{ 1, 3, 5, 8, 19 }\n"
      "{ 11, 2, 6, 29, 9 }\n"
      "{ 12, 13, 4, 17, 10 }\n"
      "{ 1, 13, 7, 9, 31 }\n"
      "{ 1, 12, 16, 27, 6 }\n"
      "{ 12, 2, 28, 7, 8 }\n"
      "{ 11, 12, 3, 14, 25 }\n"
      "{ 11, 1, 15, 26, 10 }\n"
      "{ 23, 2, 5, 16, 10 }\n"
      "{ 24, 3, 4, 16, 9 }\n"
      "{ 11, 4, 5, 7, 21 }\n"
      "{ 22, 13, 14, 5, 6 }\n"
      "{ 14, 15, 16, 7, 18 }\n"
      "{ 2, 13, 3, 15, 32 }\n"
      "{ 4, 15, 6, 8, 20 }\n"
      "{ 14, 8, 30, 9, 10 }\n";
  return kText;
}

}  // namespace egr
