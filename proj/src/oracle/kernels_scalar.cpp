#include "sliced.hpp"

namespace nnfc::sliced {

namespace {

constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

Block atom_block(std::uint32_t bit, std::uint64_t base)
{
    Block b;
    for (int w = 0; w < kWords; ++w) {
        if (bit < 6)
            b[w] = kLowPatterns[bit];
        else if (bit < 8)
            b[w] = ((w >> (bit - 6)) & 1) ? ~0ull : 0ull;
        else
            b[w] = ((base >> bit) & 1) ? ~0ull : 0ull;
    }
    return b;
}

} // namespace

void run_scalar(const Program& prog, std::uint64_t base, std::vector<Block>& stack, Block& out)
{
    std::size_t top = 0;
    for (const Instr& in : prog) {
        switch (in.op) {
        case Op::Atom:
            if (top == stack.size())
                stack.emplace_back();
            stack[top++] = atom_block(in.arg, base);
            break;
        case Op::Not:
            for (auto& w : stack[top - 1])
                w = ~w;
            break;
        case Op::And: {
            Block& acc = stack[top - in.arg];
            for (std::uint32_t k = 1; k < in.arg; ++k)
                for (int w = 0; w < kWords; ++w)
                    acc[w] &= stack[top - in.arg + k][w];
            top -= in.arg - 1;
            break;
        }
        case Op::Or: {
            Block& acc = stack[top - in.arg];
            for (std::uint32_t k = 1; k < in.arg; ++k)
                for (int w = 0; w < kWords; ++w)
                    acc[w] |= stack[top - in.arg + k][w];
            top -= in.arg - 1;
            break;
        }
        }
    }
    out = stack[0];
}

} // namespace nnfc::sliced
