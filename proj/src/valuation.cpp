#include "purepoly/valuation.hpp"

#include <algorithm>
#include <numeric>

#include "purepoly/errors.hpp"

namespace purepoly {

long Valuation::value() const {
    if (!finite_) throw PreconditionError("valuation is +infinity");
    return value_;
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for every n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p));
}

std::uint64_t to_prime(const BigInt& p) {
    if (p < 2 || !p.fits_ulong_p()) throw NotPrime(p.get_str());
    std::uint64_t value = p.get_ui();
    require_prime(value);
    return value;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        // Brent's cycle detection with batched gcds.
        std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
        const std::uint64_t batch = 128;
        auto next = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = next(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
                    y = next(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = next(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    if (n == 0) throw PreconditionError("cannot factor 0");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t q = 2; q <= 1'000'000 && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            primes.push_back(q);
            n /= q;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q : primes) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.emplace_back(q, 1);
    }
    return out;
}

Valuation vp(const BigInt& z, std::uint64_t p) {
    require_prime(p);
    if (z == 0) return Valuation::infinity();
    BigInt prime(static_cast<unsigned long>(p));
    BigInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

Valuation vp(const BigRational& q, std::uint64_t p) {
    if (q == 0) {
        require_prime(p);
        return Valuation::infinity();
    }
    return Valuation(vp(q.get_num(), p).value() - vp(q.get_den(), p).value());
}

Valuation gauss_valuation(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    Valuation best = Valuation::infinity();
    for (const auto& c : f.coefficients()) best = std::min(best, vp(c, p));
    return best;
}

std::uint64_t residue_mod_p(const BigRational& a, std::uint64_t p) {
    BigInt modulus(static_cast<unsigned long>(p));
    BigInt num, den_inv;
    mpz_mod(num.get_mpz_t(), a.get_num_mpz_t(), modulus.get_mpz_t());
    if (mpz_invert(den_inv.get_mpz_t(), a.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
        throw PreconditionError("denominator of " + a.get_str() + " is divisible by " + std::to_string(p));
    BigInt r = num * den_inv % modulus;
    return r.get_ui();
}

std::uint64_t ord_p(const BigRational& a, std::uint64_t p) {
    require_prime(p);
    if (vp(a, p) != Valuation(0)) throw PreconditionError("ord_p requires an element of valuation 0");
    const std::uint64_t residue = residue_mod_p(a, p);
    std::uint64_t order = p - 1;
    for (auto [q, e] : factor_u64(p - 1 == 0 ? 1 : p - 1)) {
        (void)e;
        while (order % q == 0 && pow_mod(residue, order / q, p) == 1) order /= q;
    }
    return order;
}

}  // namespace purepoly
