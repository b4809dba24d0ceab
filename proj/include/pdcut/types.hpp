#ifndef PDCUT_TYPES_HPP
#define PDCUT_TYPES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pdcut {

/// Vertex label, 1..n as read from the input file.
using Vertex = std::uint32_t;

/// Base edge weight as given on input.
using Weight = std::uint64_t;

/// Exact unsigned 128-bit integer used for flattened (stitched) weights and
/// for sums of base weights that may exceed 64 bits.
using Wide = unsigned __int128;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

std::string to_string(Wide value);

/// Parses a decimal string; throws std::invalid_argument on junk or overflow.
Wide parse_wide(std::string_view text);

/// Overflow-checked arithmetic; throws std::overflow_error.
Wide checked_add(Wide a, Wide b);
Wide checked_mul(Wide a, Wide b);

}  // namespace pdcut

#endif  // PDCUT_TYPES_HPP
