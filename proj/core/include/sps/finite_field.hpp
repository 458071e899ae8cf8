#ifndef SPS_FINITE_FIELD_HPP
#define SPS_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace sps {

/// GF(q) for prime powers q <= 64. Elements are identifiers 0..q-1 with
/// 0 the additive and 1 the multiplicative identity. Prime fields use
/// modular arithmetic; prime powers use tables built from a fixed
/// irreducible polynomial per order.
class FiniteField {
public:
    static constexpr unsigned max_order = 64;

    /// Throws std::invalid_argument for non-prime-powers or q > max_order.
    explicit FiniteField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }

    unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
    unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
    unsigned neg(unsigned x) const { return neg_[x]; }

private:
    unsigned q_ = 0;
    unsigned p_ = 0;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
};

/// Largest prime <= n (odd primes only when requested). Deterministic
/// trial division; throws when no qualifying prime exists.
unsigned prime_below(unsigned n, bool odd_only);

bool is_prime(unsigned n);
bool is_prime_power(unsigned n);

} // namespace sps

#endif
