#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace liepois {

// Sign-magnitude arbitrary-precision integer, base 10^9 limbs (little endian).
// Magnitudes stay small here (coefficients of truncated series), so schoolbook
// arithmetic throughout.
class BigInt {
public:
    static constexpr uint32_t kBase = 1000000000u;

    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { negative_ = true; }
        unsigned long long m = negative_ ? ~static_cast<unsigned long long>(v) + 1ull
                                         : static_cast<unsigned long long>(v);
        while (m > 0) {
            limbs_.push_back(static_cast<uint32_t>(m % kBase));
            m /= kBase;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        size_t pos = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') { neg = (s[0] == '-'); pos = 1; }
        if (pos == s.size()) throw std::invalid_argument("BigInt: sign only");
        BigInt out;
        for (size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + s + "\"");
        // consume 9 decimal digits per limb, most significant chunk first
        size_t ndig = s.size() - pos;
        size_t first = ndig % 9;
        if (first > 0) out = BigInt(static_cast<long long>(std::stoll(s.substr(pos, first))));
        for (size_t i = pos + first; i < s.size(); i += 9) {
            out = out * BigInt(static_cast<long long>(kBase));
            out += BigInt(static_cast<long long>(std::stoll(s.substr(i, 9))));
        }
        out.negative_ = neg && !out.is_zero();
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    bool fits_longlong() const {
        // conservative: up to two limbs always fits (< 10^18)
        return limbs_.size() <= 2;
    }
    long long to_longlong() const {
        unsigned long long m = 0;
        for (size_t i = limbs_.size(); i-- > 0;) m = m * kBase + limbs_[i];
        return negative_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.negative_ == b.negative_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return r;
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.negative_ = a.negative_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.negative_ = b.negative_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + b.limbs_.size();
            while (carry > 0) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        trim(r.limbs_);
        r.negative_ = (a.negative_ != b.negative_);
        return r;
    }

    // truncated toward zero, as in C
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // a = q*b + r with |r| < |b| and sign(r) = sign(a)
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
        r.negative_ = a.negative_ && !r.limbs_.empty();
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false;
        b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out = negative_ ? "-" : "";
        out += std::to_string(limbs_.back());
        for (size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // empty means zero

    static void trim(std::vector<uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint32_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = static_cast<uint32_t>(cur / kBase);
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        trim(r);
        return r;
    }

    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            uint32_t d = v[0];
            q.assign(u.size(), 0);
            uint64_t rem = 0;
            for (size_t i = u.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + u[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // Knuth algorithm D in base 10^9
        uint32_t d = kBase / (v.back() + 1);
        std::vector<uint32_t> un = mul_small(u, d);
        std::vector<uint32_t> vn = mul_small(v, d);
        un.resize(u.size() + 1, 0);
        const size_t n = vn.size();
        const size_t qlen = u.size() - n + 1;
        q.assign(qlen, 0);
        for (size_t j = qlen; j-- > 0;) {
            uint64_t num = static_cast<uint64_t>(un[j + n]) * kBase + un[j + n - 1];
            uint64_t qhat = num / vn[n - 1];
            uint64_t rhat = num % vn[n - 1];
            while (qhat >= kBase ||
                   qhat * vn[n - 2] > rhat * kBase + un[j + n - 2]) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= kBase) break;
            }
            // multiply-subtract: un[j..j+n] -= qhat * vn
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * vn[i] + carry;
                carry = p / kBase;
                int64_t cur = static_cast<int64_t>(un[i + j]) -
                              static_cast<int64_t>(p % kBase) - borrow;
                if (cur < 0) {
                    cur += kBase;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                un[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t top = static_cast<int64_t>(un[j + n]) -
                          static_cast<int64_t>(carry) - borrow;
            if (top < 0) {
                // qhat one too large; add back
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<uint32_t>(cur % kBase);
                    c2 = cur / kBase;
                }
                top += static_cast<int64_t>(c2);
            }
            un[j + n] = static_cast<uint32_t>(top);
            q[j] = static_cast<uint32_t>(qhat);
        }
        trim(q);
        un.resize(n);
        // denormalize remainder
        std::vector<uint32_t> rq;
        trim(un);
        if (!un.empty()) {
            rq.assign(un.size(), 0);
            uint64_t rem = 0;
            for (size_t i = un.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + un[i];
                rq[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(rq);
        }
        r = rq;
    }

    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t b) {
        std::vector<uint32_t> r(a.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b + carry;
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) {
            r.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
        trim(r);
        return r;
    }
};

}  // namespace liepois
