#include "sliced.hpp"

#include <immintrin.h>

namespace nnfc::sliced {

static_assert(kWords == 4, "the AVX2 kernel holds one block per 256-bit register");

namespace {

__m256i atom_vec(std::uint32_t bit, std::uint64_t base)
{
    static constexpr std::uint64_t kLow[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    if (bit < 6)
        return _mm256_set1_epi64x(static_cast<long long>(kLow[bit]));
    if (bit == 6)
        return _mm256_set_epi64x(-1, 0, -1, 0);
    if (bit == 7)
        return _mm256_set_epi64x(-1, -1, 0, 0);
    return ((base >> bit) & 1) ? _mm256_set1_epi64x(-1) : _mm256_setzero_si256();
}

} // namespace

void run_avx2(const Program& prog, std::uint64_t base, std::vector<Block>& stack, Block& out)
{
    auto* regs = reinterpret_cast<__m256i*>(stack.data());
    std::size_t top = 0;
    const __m256i ones = _mm256_set1_epi64x(-1);
    for (const Instr& in : prog) {
        switch (in.op) {
        case Op::Atom:
            if (top == stack.size()) {
                stack.emplace_back();
                regs = reinterpret_cast<__m256i*>(stack.data());
            }
            _mm256_storeu_si256(regs + top++, atom_vec(in.arg, base));
            break;
        case Op::Not:
            _mm256_storeu_si256(regs + top - 1, _mm256_xor_si256(_mm256_loadu_si256(regs + top - 1), ones));
            break;
        case Op::And:
        case Op::Or: {
            __m256i acc = _mm256_loadu_si256(regs + top - in.arg);
            for (std::uint32_t k = 1; k < in.arg; ++k) {
                __m256i v = _mm256_loadu_si256(regs + top - in.arg + k);
                acc = in.op == Op::And ? _mm256_and_si256(acc, v) : _mm256_or_si256(acc, v);
            }
            top -= in.arg;
            _mm256_storeu_si256(regs + top++, acc);
            break;
        }
        }
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data()), _mm256_loadu_si256(regs));
}

} // namespace nnfc::sliced
