#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aq {

/* Error taxonomy mirrored by the CLI exit codes: domain errors exit 1,
 * invariant violations exit 2. */
enum class ErrorKind { Domain, Invariant };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void domain_error(const std::string& msg)
{
    throw Error(ErrorKind::Domain, msg);
}

[[noreturn]] inline void invariant_error(const std::string& msg)
{
    throw Error(ErrorKind::Invariant, msg);
}

inline bool is_prime_u32(uint32_t n)
{
    if (n < 2)
        return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* Arithmetic in F_p, p prime, p < 2^16 so products fit in uint32. */
struct Fp {
    uint32_t p;

    explicit Fp(uint32_t p_) : p(p_)
    {
        if (p >= (1u << 16) || !is_prime_u32(p))
            domain_error("p must be a prime < 2^16, got " + std::to_string(p_));
    }

    uint32_t reduce(int64_t v) const
    {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0)
            r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const
    {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % p; }
    uint32_t inv(uint32_t a) const
    {
        if (a == 0)
            invariant_error("division by zero in F_p");
        /* Fermat: a^(p-2) */
        uint32_t e = p - 2, base = a % p, r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

} // namespace aq
