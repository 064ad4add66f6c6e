#include "regain/dyadic.hpp"

#include <sstream>

namespace regain {

namespace mp = boost::multiprecision;

void Dyadic::normalize() {
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    std::uint64_t tz = static_cast<std::uint64_t>(mp::lsb(num_ < 0 ? BigInt(-num_) : num_));
    std::uint64_t k = tz < exp_ ? tz : exp_;
    if (k > 0) {
        num_ >>= static_cast<unsigned>(k);
        exp_ -= k;
    }
}

Dyadic Dyadic::scaled(BigInt m, std::uint64_t e) {
    Dyadic d;
    d.num_ = std::move(m);
    d.exp_ = e;
    d.normalize();
    return d;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    std::uint64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    BigInt a = num_ << static_cast<unsigned>(e - exp_);
    BigInt b = o.num_ << static_cast<unsigned>(e - o.exp_);
    return scaled(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    std::uint64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    BigInt a = num_ << static_cast<unsigned>(e - exp_);
    BigInt b = o.num_ << static_cast<unsigned>(e - o.exp_);
    return scaled(a - b, e);
}

Dyadic Dyadic::operator-() const {
    Dyadic d = *this;
    d.num_ = -d.num_;
    return d;
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return scaled(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(std::int64_t k) const {
    if (is_zero()) return Dyadic();
    if (k >= 0) {
        std::uint64_t up = static_cast<std::uint64_t>(k);
        if (up <= exp_) return scaled(num_, exp_ - up);
        return Dyadic(num_ << static_cast<unsigned>(up - exp_));
    }
    return scaled(num_, exp_ + static_cast<std::uint64_t>(-k));
}

Dyadic Dyadic::mul_uint(std::uint64_t n) const {
    return scaled(num_ * n, exp_);
}

std::strong_ordering Dyadic::compare(const Dyadic& o) const {
    // Cheap sign test first; shifted compare only when signs agree.
    int sa = num_.sign();
    int sb = o.num_.sign();
    if (sa != sb) return sa <=> sb;
    std::uint64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    BigInt a = num_ << static_cast<unsigned>(e - exp_);
    BigInt b = o.num_ << static_cast<unsigned>(e - o.exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Dyadic::floor() const {
    if (exp_ == 0) return num_;
    // Self-correcting against either shift semantics on negatives.
    BigInt q = num_ >> static_cast<unsigned>(exp_);
    if ((q << static_cast<unsigned>(exp_)) > num_) --q;
    else if (((q + 1) << static_cast<unsigned>(exp_)) <= num_) ++q;
    return q;
}

BigInt Dyadic::ceil() const {
    if (exp_ == 0) return num_;
    return floor() + 1;  // canonical non-integer: mantissa odd, so fraction is nonzero
}

std::string Dyadic::str() const {
    std::ostringstream os;
    os << num_ << "/2^" << exp_;
    return os.str();
}

Dyadic Dyadic::parse(const std::string& text) {
    auto slash = text.find("/2^");
    if (slash == std::string::npos)
        throw std::invalid_argument("Dyadic::parse: expected 'm/2^e', got '" + text + "'");
    BigInt m(text.substr(0, slash));
    std::uint64_t e = std::stoull(text.substr(slash + 3));
    Dyadic d = scaled(m, e);
    if (d.num_ != m || d.exp_ != e)
        throw std::invalid_argument("Dyadic::parse: '" + text + "' is not in canonical form");
    return d;
}

}  // namespace regain
