#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "prime_field.hpp"
#include "uchains.hpp"

namespace jtlab {

// SplitMix64 (Steele, Lea, Flood 2014): a counter plus a fixed mixing function.
class SplitMix64 {
public:
    static constexpr const char* name = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on GF(2^61 - 1) by rejection from 61-bit draws.
    std::uint64_t next_field() noexcept
    {
        for (;;) {
            std::uint64_t v = next() >> 3;
            if (v < gf::kModulus)
                return v;
        }
    }

private:
    std::uint64_t state_;
};

// Maps a generator of block j to x^t times the generator of block i.
struct CentralizerBasisElement {
    std::size_t target = 0;  // block i
    std::size_t source = 0;  // block j
    int shift = 0;           // t
};

struct JordanSample {
    PrimeFieldMatrix matrix;
    std::vector<std::size_t> ranks;  // ranks[m] = rank A^m, down to the first zero
    Partition jordan_type;
};

namespace detail {

inline std::vector<std::size_t> block_offsets(const Partition& P)
{
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (int q : P.parts()) {
        off.push_back(acc);
        acc += static_cast<std::size_t>(q);
    }
    return off;
}

}  // namespace detail

// Blocks largest first; inside a block of size q the basis v_1..v_q satisfies
// J v_m = v_{m-1}, so the ones sit on the superdiagonal.
inline PrimeFieldMatrix jordan_matrix(const Partition& P)
{
    PrimeFieldMatrix J(static_cast<std::size_t>(P.total()));
    auto off = detail::block_offsets(P);
    for (std::size_t b = 0; b < P.length(); ++b)
        for (int m = 1; m < P[b]; ++m)
            J.set(off[b] + m - 1, off[b] + m, 1);
    return J;
}

// All (i, j, t) with max(0, q_i - q_j) <= t <= q_i - 1, in lexicographic order.
inline std::vector<CentralizerBasisElement> centralizer_basis(const Partition& P)
{
    std::vector<CentralizerBasisElement> out;
    for (std::size_t i = 0; i < P.length(); ++i)
        for (std::size_t j = 0; j < P.length(); ++j)
            for (int t = std::max(0, P[i] - P[j]); t <= P[i] - 1; ++t)
                out.push_back({i, j, t});
    return out;
}

// Whether the element contributes to the semisimple quotient, i.e. is a
// t = 0 map between blocks of the same size.
inline bool is_leading(const Partition& P, const CentralizerBasisElement& e)
{
    return e.shift == 0 && P[e.target] == P[e.source];
}

inline PrimeFieldMatrix basis_matrix(const Partition& P, const CentralizerBasisElement& e)
{
    PrimeFieldMatrix M(static_cast<std::size_t>(P.total()));
    auto off = detail::block_offsets(P);
    int qi = P[e.target], qj = P[e.source];
    for (int s = 0; qj - s >= 1 && qi - s - e.shift >= 1; ++s)
        M.set(off[e.target] + (qi - s - e.shift) - 1, off[e.source] + (qj - s) - 1, 1);
    return M;
}

// A generic element of the nilpotent part: every basis coefficient random,
// except leading coefficients on or below the diagonal of each size class.
inline PrimeFieldMatrix sample_UB(const Partition& P, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    PrimeFieldMatrix A(static_cast<std::size_t>(P.total()));
    auto off = detail::block_offsets(P);
    for (const auto& e : centralizer_basis(P)) {
        // Blocks of equal size are adjacent, so block order is class order.
        if (is_leading(P, e) && e.target >= e.source)
            continue;
        std::uint64_t c = rng.next_field();
        int qi = P[e.target], qj = P[e.source];
        for (int s = 0; qj - s >= 1 && qi - s - e.shift >= 1; ++s)
            A.add_to(off[e.target] + (qi - s - e.shift) - 1, off[e.source] + (qj - s) - 1, c);
    }
    return A;
}

inline JordanSample jordan_type(const PrimeFieldMatrix& A)
{
    JordanSample out;
    out.matrix = A;
    std::size_t n = A.dim();
    out.ranks.push_back(n);
    PrimeFieldMatrix power = PrimeFieldMatrix::identity(n);
    while (out.ranks.back() > 0) {
        if (out.ranks.size() > n)
            throw PreconditionError("jordan_type: matrix is not nilpotent");
        power = power * A;
        std::size_t r = power.rank();
        if (r >= out.ranks.back())
            throw PreconditionError("jordan_type: matrix is not nilpotent");
        out.ranks.push_back(r);
    }
    std::vector<int> blocks_at_least;
    for (std::size_t m = 1; m < out.ranks.size(); ++m)
        blocks_at_least.push_back(static_cast<int>(out.ranks[m - 1] - out.ranks[m]));
    out.jordan_type = n == 0 ? Partition() : conjugate(Partition(blocks_at_least));
    return out;
}

// Seeds for the individual trials, drawn from one master stream.
inline std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, int trials)
{
    SplitMix64 master(seed);
    std::vector<std::uint64_t> out;
    for (int i = 0; i < trials; ++i)
        out.push_back(master.next());
    return out;
}

inline Partition q_estimate(const Partition& P, int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw PreconditionError("q_estimate: trials must be positive");
    std::optional<Partition> best;
    for (auto s : trial_seeds(seed, trials)) {
        Partition t = jordan_type(sample_UB(P, s)).jordan_type;
        if (!best || dominance_leq(*best, t)) {
            best = t;
        } else if (!dominance_leq(t, *best)) {
            throw IncomparableTrials("q_estimate for " + to_string(P) + ": trial types " + to_string(*best) +
                                     " and " + to_string(t) + " are incomparable");
        }
    }
    return *best;
}

// Closed forms for r(P) <= 3 and the split four-part case; nullopt otherwise.
inline std::optional<Partition> q_closed_form(const Partition& P)
{
    if (P.empty())
        throw PreconditionError("q_closed_form: empty partition");
    int n = P.total();
    int r = r_of(P);
    if (r == 1)
        return Partition{n};
    if (r == 2) {
        int ob = oblak_index(P);
        return Partition{ob, n - ob};
    }
    if (r == 3) {
        int ob = oblak_index(P), m = mu(P);
        return Partition{ob, n - ob - m, m};
    }
    if (r == 4) {
        auto low = detail::spreads_ascending(P);
        const Partition& P2 = low.front();
        if (low.size() < 2 || !is_almost_rectangular(P2))
            return std::nullopt;
        std::vector<int> rest;
        for (std::size_t k = 1; k < low.size(); ++k)
            rest.insert(rest.end(), low[k].parts().begin(), low[k].parts().end());
        Partition P1(std::move(rest));
        if (r_of(P1) != 3 || mu(P2) > mu(shift_down(P1, 2)))
            return std::nullopt;
        auto q1 = q_closed_form(P1);
        std::vector<int> parts = q1->parts();
        parts.push_back(P2.total());
        return Partition(std::move(parts));
    }
    return std::nullopt;
}

}  // namespace jtlab
