#include "tamefiber/group_ring.hpp"

#include <sstream>

#include "tamefiber/arith.hpp"
#include "tamefiber/errors.hpp"

namespace tamefiber {

GroupRingElement::GroupRingElement(std::int64_t n) : n_(n) {
    if (n < 1) {
        throw Error(ErrorKind::BadInput, "group ring modulus must be positive, got " + std::to_string(n));
    }
    if (n <= kDenseLimit) {
        dense_.assign(static_cast<std::size_t>(n), BigInt(0));
    }
}

GroupRingElement GroupRingElement::monomial(std::int64_t n, std::int64_t exponent, const BigInt& coeff) {
    GroupRingElement out(n);
    out.add_term(exponent, coeff);
    return out;
}

GroupRingElement GroupRingElement::constant(std::int64_t n, const BigInt& c) {
    return monomial(n, 0, c);
}

BigInt GroupRingElement::coeff(std::int64_t exponent) const {
    const std::int64_t e = mod_floor(exponent, n_);
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(e)];
    auto it = sparse_.find(e);
    return it == sparse_.end() ? BigInt(0) : it->second;
}

void GroupRingElement::add_term(std::int64_t exponent, const BigInt& c) {
    const std::int64_t e = mod_floor(exponent, n_);
    if (!dense_.empty()) {
        dense_[static_cast<std::size_t>(e)] += c;
        return;
    }
    if (c == 0) return;
    auto [it, inserted] = sparse_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) sparse_.erase(it);
    }
}

void GroupRingElement::add_term(std::int64_t exponent, long c) {
    const std::int64_t e = mod_floor(exponent, n_);
    if (!dense_.empty()) {
        auto& slot = dense_[static_cast<std::size_t>(e)];
        if (c >= 0) {
            mpz_add_ui(slot.get_mpz_t(), slot.get_mpz_t(), static_cast<unsigned long>(c));
        } else {
            mpz_sub_ui(slot.get_mpz_t(), slot.get_mpz_t(), static_cast<unsigned long>(-c));
        }
        return;
    }
    add_term(e, BigInt(c));
}

std::vector<std::pair<std::int64_t, BigInt>> GroupRingElement::terms() const {
    std::vector<std::pair<std::int64_t, BigInt>> out;
    if (!dense_.empty()) {
        for (std::size_t e = 0; e < dense_.size(); ++e) {
            if (dense_[e] != 0) out.emplace_back(static_cast<std::int64_t>(e), dense_[e]);
        }
    } else {
        out.assign(sparse_.begin(), sparse_.end());
    }
    return out;
}

std::size_t GroupRingElement::term_count() const {
    if (dense_.empty()) return sparse_.size();
    std::size_t count = 0;
    for (const auto& c : dense_) count += (c != 0);
    return count;
}

void GroupRingElement::require_same_modulus(const GroupRingElement& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorKind::ModulusMismatch,
                    "group ring moduli differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
    require_same_modulus(other);
    for (const auto& [e, c] : other.terms()) add_term(e, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
    require_same_modulus(other);
    for (const auto& [e, c] : other.terms()) add_term(e, BigInt(-c));
    return *this;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(n_);
    for (const auto& [e, c] : terms()) out.add_term(e, BigInt(-c));
    return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.require_same_modulus(b);
    GroupRingElement out(a.n_);
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            std::int64_t e = ea + eb;
            if (e >= a.n_) e -= a.n_;
            out.add_term(e, BigInt(ca * cb));
        }
    }
    return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.n_ == b.n_ && a.terms() == b.terms();
}

std::string GroupRingElement::to_string(const std::string& var) const {
    const auto ts = terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement gr_scale(const GroupRingElement& a, const BigInt& factor) {
    GroupRingElement out(a.modulus());
    if (factor == 0) return out;
    for (const auto& [e, c] : a.terms()) out.add_term(e, BigInt(c * factor));
    return out;
}

GroupRingElement gr_geom(std::int64_t step, std::int64_t count, std::int64_t n) {
    if (count < 0) {
        throw Error(ErrorKind::BadInput, "gr_geom count must be nonnegative");
    }
    GroupRingElement out(n);
    const std::int64_t s = mod_floor(step, n);
    std::int64_t e = 0;
    for (std::int64_t k = 0; k < count; ++k) {
        out.add_term(e, 1L);
        e += s;
        if (e >= n) e -= n;
    }
    return out;
}

BigInt gr_eval_at_one(const GroupRingElement& a) {
    BigInt sum = 0;
    for (const auto& [e, c] : a.terms()) sum += c;
    return sum;
}

}  // namespace tamefiber
