#include "automult/value.hpp"

#include <numeric>

namespace automult {

namespace {

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Keeps root orders small enough that modular products below never overflow.
constexpr unsigned long kMaxRootOrder = 1ul << 30;

void check_order(unsigned long d) {
    if (d == 0) throw Error("bad-root", "root of unity needs positive order");
    if (d > kMaxRootOrder) throw Error("bad-root", "root order too large: " + std::to_string(d));
}

}  // namespace

Value::Value(Rat coeff, unsigned long zd, unsigned long ze) : coeff_(std::move(coeff)), zd_(zd), ze_(ze) {
    canonicalize();
}

void Value::canonicalize() {
    coeff_.canonicalize();
    check_order(zd_);
    ze_ %= zd_;
    unsigned long g = gcd_ul(ze_ == 0 ? zd_ : ze_, zd_);
    zd_ /= g;
    ze_ /= g;
    if (coeff_ == 0) {
        zd_ = 1;
        ze_ = 0;
        return;
    }
    if (coeff_ < 0) {
        // Fold the sign into the root: multiply by zeta(2, 1).
        coeff_ = -coeff_;
        unsigned long d = zd_ % 2 == 0 ? zd_ : 2 * zd_;
        unsigned long e = ze_ * (d / zd_) + d / 2;
        zd_ = d;
        ze_ = e % d;
        unsigned long g2 = gcd_ul(ze_ == 0 ? zd_ : ze_, zd_);
        zd_ /= g2;
        ze_ /= g2;
    }
}

Value Value::integer(const Int& n) { return Value(Rat(n), 1, 0); }

Value Value::rational(const Rat& q) { return Value(q, 1, 0); }

Value Value::root_of_unity(unsigned long d, long e) {
    check_order(d);
    long m = e % static_cast<long>(d);
    if (m < 0) m += static_cast<long>(d);
    return Value(Rat(1), d, static_cast<unsigned long>(m));
}

Rat Value::rational_part() const {
    if (!is_rational()) throw Error("not-rational", "value has a complex root part: " + display());
    return zd_ == 2 ? Rat(-coeff_) : coeff_;
}

Value Value::operator*(const Value& other) const {
    Rat c = coeff_ * other.coeff_;
    // e1/d1 + e2/d2 over the common denominator.
    unsigned long d = zd_ / gcd_ul(zd_, other.zd_) * other.zd_;
    check_order(d);
    unsigned long e = ze_ * (d / zd_) + other.ze_ * (d / other.zd_);
    return Value(std::move(c), d, e % d);
}

Value Value::pow(unsigned long e) const {
    if (e == 0) return one();
    Rat c;
    mpz_pow_ui(c.get_num_mpz_t(), coeff_.get_num_mpz_t(), e);
    mpz_pow_ui(c.get_den_mpz_t(), coeff_.get_den_mpz_t(), e);
    // ze * e mod zd without overflow: reduce e mod zd first.
    unsigned long em = zd_ ? e % zd_ : 0;
    return Value(std::move(c), zd_, (ze_ % zd_) * em % zd_);
}

bool Value::operator<(const Value& other) const {
    int c = cmp(coeff_, other.coeff_);
    if (c != 0) return c < 0;
    if (zd_ != other.zd_) return zd_ < other.zd_;
    return ze_ < other.ze_;
}

std::string Value::str() const {
    if (is_rational()) {
        Rat q = rational_part();
        if (q.get_den() == 1) return "int:" + q.get_num().get_str();
        return "rat:" + q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    if (coeff_ != 1)
        throw Error("value-not-serializable",
                    "no token for a scaled complex root of unity: " + display());
    return "zeta:" + std::to_string(zd_) + "," + std::to_string(ze_);
}

std::string Value::display() const {
    if (is_rational()) {
        Rat q = rational_part();
        return q.get_str();
    }
    std::string root = "zeta:" + std::to_string(zd_) + "," + std::to_string(ze_);
    if (coeff_ == 1) return root;
    return coeff_.get_str() + "*" + root;
}

Value Value::parse(const std::string& token) {
    auto bad = [&]() { return Error("bad-value", "cannot parse value token: " + token); };
    auto split = token.find(':');
    if (split == std::string::npos) throw bad();
    std::string kind = token.substr(0, split);
    std::string body = token.substr(split + 1);
    if (body.empty()) throw bad();
    try {
        if (kind == "int") {
            return integer(Int(body));
        } else if (kind == "rat") {
            Rat q(body);
            q.canonicalize();
            return rational(q);
        } else if (kind == "zeta") {
            auto comma = body.find(',');
            if (comma == std::string::npos) throw bad();
            unsigned long d = std::stoul(body.substr(0, comma));
            long e = std::stol(body.substr(comma + 1));
            return root_of_unity(d, e);
        }
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
    throw bad();
}

}  // namespace automult
