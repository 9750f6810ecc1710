#pragma once
#include <cstdint>
#include <vector>

namespace coalsim {

/// Visits every set partition of {0, .., n-1} via restricted growth strings.
/// The visitor receives the blocks as a vector of sorted id vectors.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
    if (n <= 0) return;
    std::vector<int> code(n, 0);  // code[i] = block index of element i
    std::vector<std::vector<int>> blocks;
    while (true) {
        int num_blocks = 0;
        for (int c : code) num_blocks = std::max(num_blocks, c + 1);
        blocks.assign(num_blocks, {});
        for (int i = 0; i < n; ++i) blocks[code[i]].push_back(i);
        visit(const_cast<const std::vector<std::vector<int>>&>(blocks));

        // advance the restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int max_prefix = 0;
            for (int k = 0; k < i; ++k) max_prefix = std::max(max_prefix, code[k]);
            if (code[i] <= max_prefix) break;
        }
        if (i == 0) return;
        ++code[i];
        for (int k = i + 1; k < n; ++k) code[k] = 0;
    }
}

inline std::uint64_t bell_number(int n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const auto&) { ++count; });
    return count;
}

}  // namespace coalsim
