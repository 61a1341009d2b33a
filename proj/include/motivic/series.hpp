#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace motivic {

// Truncated power series in t over a coefficient ring. The truncation order
// is explicit; arithmetic truncates to the minimum order of the operands and
// never consults coefficients beyond it.
template <class C>
class Series {
public:
    explicit Series(int order) : order_(order), c_(order + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series one(int order) {
        Series s(order);
        s.c_[0] = C::one();
        return s;
    }

    int order() const { return order_; }
    const C& at(int n) const { return c_.at(n); }
    C& at(int n) { return c_.at(n); }

    friend Series operator*(const Series& a, const Series& b) {
        const int N = std::min(a.order_, b.order_);
        Series r(N);
        for (int i = 0; i <= N; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= N; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator+(const Series& a, const Series& b) {
        const int N = std::min(a.order_, b.order_);
        Series r(N);
        for (int i = 0; i <= N; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    // Coefficient-wise multiplication by a ring element.
    Series scaled(const C& m) const {
        Series r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * m;
        return r;
    }

    Series truncated(int order) const {
        Series r(std::min(order, order_));
        for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i];
        return r;
    }

    // Equality up to the smaller truncation order.
    friend bool operator==(const Series& a, const Series& b) {
        const int N = std::min(a.order_, b.order_);
        for (int i = 0; i <= N; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    int order_;
    std::vector<C> c_;
};

} // namespace motivic
