#ifndef SETLAT_EXT_REAL_HPP
#define SETLAT_EXT_REAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace setlat {

/// Raised when an operation would evaluate (+inf) + (-inf).
struct indeterminate_error : std::runtime_error {
    indeterminate_error() : std::runtime_error("indeterminate extended-real sum (+inf) + (-inf)") {}
};

/// Extended real number: a finite value, -inf or +inf.
class ExtReal {
  public:
    ExtReal() : v_(0.0) {}
    ExtReal(double v) : v_(v) {}

    static ExtReal pos_inf() { return ExtReal(std::numeric_limits<double>::infinity()); }
    static ExtReal neg_inf() { return ExtReal(-std::numeric_limits<double>::infinity()); }

    bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
    bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }
    bool is_finite() const { return std::isfinite(v_); }

    /// Finite value; throws if infinite.
    double value() const {
        if (!is_finite()) throw std::logic_error("ExtReal: value() on infinite element");
        return v_;
    }
    /// Raw value including +-inf.
    double raw() const { return v_; }

    ExtReal operator+(const ExtReal& o) const {
        if ((is_pos_inf() && o.is_neg_inf()) || (is_neg_inf() && o.is_pos_inf()))
            throw indeterminate_error();
        return ExtReal(v_ + o.v_);
    }
    ExtReal operator-() const { return ExtReal(-v_); }
    bool operator<(const ExtReal& o) const { return v_ < o.v_; }
    bool operator<=(const ExtReal& o) const { return v_ <= o.v_; }
    bool operator==(const ExtReal& o) const { return v_ == o.v_; }

    /// Multiplication by a nonnegative scalar with 0 * inf = 0.
    ExtReal scale(double t) const {
        if (t < 0) throw std::invalid_argument("ExtReal::scale: negative factor");
        if (t == 0.0) return ExtReal(0.0);
        return ExtReal(t * v_);
    }

    std::string str() const {
        if (is_pos_inf()) return "+inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(v_);
    }

  private:
    double v_;
};

inline ExtReal min(const ExtReal& a, const ExtReal& b) { return a <= b ? a : b; }
inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a <= b ? b : a; }

}  // namespace setlat

#endif
