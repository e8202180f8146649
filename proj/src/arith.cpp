#include "tamefiber/arith.hpp"

#include <numeric>
#include <string>

#include "tamefiber/errors.hpp"

namespace tamefiber {

GcdLcm gcd_lcm(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) {
        throw Error(ErrorKind::BadInput, "gcd_lcm expects positive integers");
    }
    return {std::gcd(a, b), std::lcm(a, b)};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    std::int64_t v = a % n;
    return v < 0 ? v + n : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    __int128 p = static_cast<__int128>(mod_floor(a, n)) * mod_floor(b, n);
    return static_cast<std::int64_t>(p % n);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    if (n < 2) {
        throw Error(ErrorKind::BadInput, "modulus must be at least 2, got " + std::to_string(n));
    }
    // Extended Euclid on (a mod n, n).
    std::int64_t old_r = mod_floor(a, n), r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw Error(ErrorKind::NotInvertible,
                    std::to_string(a) + " is not invertible modulo " + std::to_string(n));
    }
    return mod_floor(old_s, n);
}

JHExpansion jh_expand(std::int64_t n, std::int64_t r) {
    if (n < 2) {
        throw Error(ErrorKind::BadInput, "jh_expand needs n >= 2, got " + std::to_string(n));
    }
    r = mod_floor(r, n);
    if (r == 0 || std::gcd(r, n) != 1) {
        throw Error(ErrorKind::BadInput,
                    "jh_expand needs r coprime to n=" + std::to_string(n) + ", got r=" + std::to_string(r));
    }
    JHExpansion out;
    out.n = n;
    out.r = r;
    out.rseq = {n, r};
    while (out.rseq.back() != 0) {
        const std::int64_t prev = out.rseq[out.rseq.size() - 2];
        const std::int64_t cur = out.rseq.back();
        const std::int64_t bl = (prev + cur - 1) / cur;  // ceil(prev / cur)
        out.b.push_back(bl);
        out.rseq.push_back(bl * cur - prev);
    }
    return out;
}

}  // namespace tamefiber
