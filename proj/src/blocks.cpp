#include "floorsums/blocks.hpp"

namespace floorsums {

std::vector<QuotientBlock> quotient_blocks(u64 x, u64 n_min, u64 n_max) {
    std::vector<QuotientBlock> out;
    for_each_quotient_block(x, n_min, n_max, [&](const QuotientBlock& b) { out.push_back(b); });
    return out;
}

}  // namespace floorsums
