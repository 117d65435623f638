#include "oddcolor/common.hpp"

#include <algorithm>

namespace oddcolor {

std::size_t Coloring::used_colors() const
{
    std::vector<bool> seen(palette_size, false);
    std::size_t count = 0;
    for (auto c : colors) {
        if (c >= seen.size()) seen.resize(c + 1, false);
        if (!seen[c]) {
            seen[c] = true;
            ++count;
        }
    }
    return count;
}

Bitset make_bitset(std::size_t size, std::span<const std::size_t> items)
{
    Bitset bits(size);
    for (auto x : items) {
        if (x >= size) throw std::out_of_range("element " + std::to_string(x) + " outside universe");
        bits.set(x);
    }
    return bits;
}

std::vector<std::size_t> members(const Bitset& bits)
{
    std::vector<std::size_t> out;
    out.reserve(bits.count());
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(i);
    return out;
}

std::size_t BitsetHash::operator()(const Bitset& bits) const
{
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(bits, std::back_inserter(blocks));
    std::size_t h = std::hash<std::size_t>{}(bits.size());
    for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace oddcolor
