#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atlas/errors.hpp"

namespace atlas {

// Small arbitrary-precision natural number: just enough for exact ball
// bounds (3^{g-1})^r, 2^k counting estimates and g^{2g} growth rows, where
// the values overflow 64 bits long before the inputs stop being reasonable.
// Limbs are base 10^9, little-endian, which makes decimal printing trivial.
class BigNat {
public:
    BigNat() : limbs_{0} {}

    explicit BigNat(std::uint64_t v) {
        limbs_.clear();
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        } while (v != 0);
    }

    static BigNat pow(std::uint64_t base, std::uint64_t exp) {
        BigNat r(1);
        for (std::uint64_t i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    void mul_small(std::uint64_t m) {
        if (m == 0) { limbs_.assign(1, 0); return; }
        // m can exceed a limb; split so every partial product fits 64 bits.
        if (m >= kBase) {
            BigNat hi = *this;
            hi.mul_small(m / kBase);
            hi.shift_limbs(1);
            mul_small(m % kBase);
            add(hi);
            return;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    void add(const BigNat& other) {
        if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + carry
                + (i < other.limbs_.size() ? other.limbs_[i] : 0u);
            limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = static_cast<std::uint32_t>(cur / kBase);
        }
        if (carry) limbs_.push_back(carry);
    }

    // Subtract a small value; caller guarantees *this >= v.
    void sub_small(std::uint64_t v) {
        std::size_t i = 0;
        while (v != 0) {
            if (i >= limbs_.size()) throw DomainError("BigNat::sub_small underflow");
            std::uint64_t take = v % kBase;
            v /= kBase;
            if (limbs_[i] >= take) {
                limbs_[i] -= static_cast<std::uint32_t>(take);
            } else {
                limbs_[i] = static_cast<std::uint32_t>(limbs_[i] + kBase - take);
                v += 1; // borrow
            }
            ++i;
        }
        trim();
    }

    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

    // *this <= o
    bool leq(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        }
        return true;
    }

    bool fits_u64() const {
        return to_string().size() <= 19 || leq(BigNat(UINT64_MAX));
    }

    std::string to_string() const {
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000ull;

    void shift_limbs(std::size_t k) {
        if (limbs_.size() == 1 && limbs_[0] == 0) return;
        limbs_.insert(limbs_.begin(), k, 0u);
    }

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace atlas
