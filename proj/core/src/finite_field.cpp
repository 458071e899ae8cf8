#include <sps/finite_field.hpp>

#include <stdexcept>
#include <string>

namespace sps {

namespace {

// coefficient vector of the reduction polynomial for q = p^k, constant
// term first, monic leading term omitted; GF(4) uses x^2+x+1
struct PolyEntry {
    unsigned q;
    unsigned p;
    unsigned k;
    unsigned coeffs[6];
};

constexpr PolyEntry kPolys[] = {
    {4, 2, 2, {1, 1}},          // x^2+x+1
    {8, 2, 3, {1, 1, 0}},       // x^3+x+1
    {16, 2, 4, {1, 1, 0, 0}},   // x^4+x+1
    {32, 2, 5, {1, 0, 1, 0, 0}},// x^5+x^2+1
    {64, 2, 6, {1, 1, 0, 0, 0, 0}}, // x^6+x+1
    {9, 3, 2, {1, 0}},          // x^2+1
    {27, 3, 3, {1, 2, 0}},      // x^3+2x+1
    {25, 5, 2, {1, 1}},         // x^2+x+1
    {49, 7, 2, {1, 0}},         // x^2+1
};

const PolyEntry* find_poly(unsigned q) {
    for (const auto& e : kPolys)
        if (e.q == q) return &e;
    return nullptr;
}

void to_digits(unsigned x, unsigned p, unsigned k, unsigned* out) {
    for (unsigned i = 0; i < k; ++i) {
        out[i] = x % p;
        x /= p;
    }
}

unsigned from_digits(const unsigned* d, unsigned p, unsigned k) {
    unsigned x = 0;
    for (unsigned i = k; i-- > 0;) x = x * p + d[i];
    return x;
}

} // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(unsigned n) {
    if (n < 2) return false;
    unsigned p = n;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    while (n % p == 0) n /= p;
    return n == 1;
}

unsigned prime_below(unsigned n, bool odd_only) {
    for (unsigned c = n; c >= 2; --c)
        if (is_prime(c) && (!odd_only || c % 2 == 1)) return c;
    throw std::invalid_argument("prime_below: no qualifying prime <= " + std::to_string(n));
}

FiniteField::FiniteField(unsigned q) : q_(q) {
    if (q < 2 || q > max_order || !is_prime_power(q))
        throw std::invalid_argument("FiniteField: order must be a prime power <= 64");
    p_ = q;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);

    if (p_ == q) {
        for (unsigned x = 0; x < q; ++x) {
            neg_[x] = static_cast<std::uint8_t>((q - x) % q);
            for (unsigned y = 0; y < q; ++y) {
                add_[x * q + y] = static_cast<std::uint8_t>((x + y) % q);
                mul_[x * q + y] = static_cast<std::uint8_t>((x * y) % q);
            }
        }
        return;
    }

    const PolyEntry* poly = find_poly(q);
    if (!poly) throw std::invalid_argument("FiniteField: no reduction polynomial for this order");
    const unsigned k = poly->k;
    const unsigned p = p_;

    for (unsigned x = 0; x < q; ++x) {
        unsigned dx[6];
        to_digits(x, p, k, dx);
        unsigned dn[6];
        for (unsigned i = 0; i < k; ++i) dn[i] = (p - dx[i]) % p;
        neg_[x] = static_cast<std::uint8_t>(from_digits(dn, p, k));

        for (unsigned y = 0; y < q; ++y) {
            unsigned dy[6];
            to_digits(y, p, k, dy);

            unsigned ds[6];
            for (unsigned i = 0; i < k; ++i) ds[i] = (dx[i] + dy[i]) % p;
            add_[x * q + y] = static_cast<std::uint8_t>(from_digits(ds, p, k));

            // schoolbook product then reduction by the monic polynomial
            unsigned prod[11] = {0};
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
            for (unsigned d = 2 * k - 2; d >= k && d < 11; --d) {
                const unsigned c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (unsigned i = 0; i < k; ++i)
                    prod[d - k + i] = (prod[d - k + i] + c * (p - poly->coeffs[i] % p)) % p;
            }
            mul_[x * q + y] = static_cast<std::uint8_t>(from_digits(prod, p, k));
        }
    }
}

} // namespace sps
