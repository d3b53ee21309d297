#pragma once

// Bit-sliced model enumeration: lane l of a block holds the truth value in model base + l.

#include "nnfc/formula.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nnfc::sliced {

constexpr int kWords = 4;
constexpr int kLanes = 64 * kWords;
using Block = std::array<std::uint64_t, kWords>;

enum class Op : std::uint8_t { Atom, Not, And, Or };

struct Instr {
    Op op;
    std::uint32_t arg; // Atom: model bit; And/Or: operand count
};

using Program = std::vector<Instr>;

struct Layout {
    int size = 1;
    std::vector<std::string> preds; // sorted by name
    std::vector<int> arity;
    std::vector<std::uint32_t> offset;
    std::uint32_t bits = 0;

    std::uint32_t bit(std::size_t pred, const std::vector<int>& tuple) const;
};

Layout make_layout(const std::vector<Formula>& fs, int size);
Program compile(const Formula& f, const Layout& layout);

using Kernel = void (*)(const Program&, std::uint64_t base, std::vector<Block>& stack, Block& out);

void run_scalar(const Program& prog, std::uint64_t base, std::vector<Block>& stack, Block& out);
#if NNFC_WITH_AVX2
void run_avx2(const Program& prog, std::uint64_t base, std::vector<Block>& stack, Block& out);
#endif

} // namespace nnfc::sliced
