#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace jtlab {

namespace gf {

inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) noexcept
{
    // 2^61 = 1 mod q
    std::uint64_t lo = static_cast<std::uint64_t>(x & kModulus);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    s = (s & kModulus) + (s >> 61);
    return s >= kModulus ? s - kModulus : s;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t s = a + b;
    return s >= kModulus ? s - kModulus : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) noexcept
{
    return a >= b ? a - b : a + kModulus - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept
{
    return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) noexcept
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a)
{
    if (a == 0)
        throw PreconditionError("gf::inv: zero has no inverse");
    return pow(a, kModulus - 2);
}

}  // namespace gf

// Dense square matrix over GF(2^61 - 1), row-major.
class PrimeFieldMatrix {
public:
    explicit PrimeFieldMatrix(std::size_t n = 0) : n_(n), a_(n * n, 0) {}

    static PrimeFieldMatrix identity(std::size_t n)
    {
        PrimeFieldMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    std::size_t dim() const noexcept { return n_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * n_ + j] = v % gf::kModulus; }
    void add_to(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * n_ + j] = gf::add(a_[i * n_ + j], v % gf::kModulus); }

    bool is_zero() const
    {
        for (auto v : a_)
            if (v)
                return false;
        return true;
    }

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& A, const PrimeFieldMatrix& B)
    {
        if (A.n_ != B.n_)
            throw PreconditionError("matrix dimensions differ");
        std::size_t n = A.n_;
        PrimeFieldMatrix C(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                std::uint64_t aik = A.a_[i * n + k];
                if (!aik)
                    continue;
                const std::uint64_t* brow = &B.a_[k * n];
                std::uint64_t* crow = &C.a_[i * n];
                for (std::size_t j = 0; j < n; ++j)
                    if (brow[j])
                        crow[j] = gf::add(crow[j], gf::mul(aik, brow[j]));
            }
        return C;
    }

    // Gaussian elimination with modular inverses.
    std::size_t rank() const
    {
        std::vector<std::uint64_t> m = a_;
        std::size_t n = n_, rank = 0;
        for (std::size_t col = 0; col < n && rank < n; ++col) {
            std::size_t piv = rank;
            while (piv < n && m[piv * n + col] == 0)
                ++piv;
            if (piv == n)
                continue;
            if (piv != rank)
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(m[piv * n + j], m[rank * n + j]);
            std::uint64_t iv = gf::inv(m[rank * n + col]);
            for (std::size_t i = rank + 1; i < n; ++i) {
                std::uint64_t f = m[i * n + col];
                if (!f)
                    continue;
                f = gf::mul(f, iv);
                for (std::size_t j = col; j < n; ++j)
                    m[i * n + j] = gf::sub(m[i * n + j], gf::mul(f, m[rank * n + j]));
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> a_;
};

}  // namespace jtlab
