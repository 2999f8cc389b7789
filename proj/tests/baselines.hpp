#pragma once

// Values frozen from one run of the brute-force oracle in oracle.hpp.
// Sharpness baselines are "attained / realized" tuple counts at the default
// sweep sizes; later runs may raise them but must never lower them.

#include <cstddef>
#include <cstdint>

namespace baselines {

struct Attainment {
  std::size_t attained;
  std::size_t realized;
};

// In-class labeled digraphs on n = 1..4 vertices.
inline constexpr std::uint64_t kDigraphCounts[] = {1, 13, 469, 63577};
inline constexpr std::uint64_t kConnectedDigraphCounts[] = {1, 12, 432, 61344};

// Labeled trees rooted at 0, n = 1..7, and partition counts p(1..12).
inline constexpr std::uint64_t kTreeCounts[] = {1, 1, 3, 16, 125, 1296, 16807};
inline constexpr std::uint64_t kPartitionCounts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};

// Digraphs at v <= 4, trees at n <= 7, partitions at n_p <= 12.
inline constexpr Attainment kConj1{15, 15};
inline constexpr Attainment kConj2{18, 18};
inline constexpr Attainment kConj3{11, 11};
inline constexpr Attainment kConj4{22, 22};
inline constexpr Attainment kConj5{27, 27};
inline constexpr Attainment kPartitionUpper{136, 136};
inline constexpr Attainment kPartitionLower{136, 136};

// Digraphs at v <= 4 per case row.
inline constexpr std::uint64_t kConj1Rows[] = {25896, 36400, 0, 1764, 0, 0, 0};
inline constexpr std::uint64_t kConj3Rows[] = {25845, 38215};
inline constexpr std::uint64_t kConj4Rows[] = {62224, 612, 1224};

}  // namespace baselines
