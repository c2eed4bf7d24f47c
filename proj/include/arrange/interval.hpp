#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arrange {

/*
  A contiguous integer interval [a, b], or the distinguished Empty value.
  Weights on digraph vertices are always of this shape; general finite
  sets are rejected at parse time.
*/
class WeightInterval {
public:
    WeightInterval() : empty_(true), a_(0), b_(-1) {}

    WeightInterval(long long a, long long b) : empty_(false), a_(a), b_(b) {
        if (a > b) throw std::invalid_argument("WeightInterval: a > b");
    }

    static WeightInterval empty() { return WeightInterval(); }

    bool is_empty() const { return empty_; }

    long long lower() const {
        require_nonempty();
        return a_;
    }
    long long upper() const {
        require_nonempty();
        return b_;
    }

    long long size() const { return empty_ ? 0 : b_ - a_ + 1; }

    bool contains(long long x) const { return !empty_ && a_ <= x && x <= b_; }

    // superset test: does this contain o?
    bool contains(const WeightInterval& o) const {
        if (o.empty_) return true;
        return !empty_ && a_ <= o.a_ && o.b_ <= b_;
    }

    WeightInterval shifted(long long n) const {
        return empty_ ? WeightInterval() : WeightInterval(a_ + n, b_ + n);
    }

    WeightInterval negated() const {
        return empty_ ? WeightInterval() : WeightInterval(-b_, -a_);
    }

    WeightInterval intersect(const WeightInterval& o) const {
        if (empty_ || o.empty_) return WeightInterval();
        long long lo = a_ > o.a_ ? a_ : o.a_;
        long long hi = b_ < o.b_ ? b_ : o.b_;
        if (lo > hi) return WeightInterval();
        return WeightInterval(lo, hi);
    }

    bool operator==(const WeightInterval& o) const {
        if (empty_ != o.empty_) return false;
        return empty_ || (a_ == o.a_ && b_ == o.b_);
    }
    bool operator!=(const WeightInterval& o) const { return !(*this == o); }

    std::string str() const {
        if (empty_) return "{}";
        return "[" + std::to_string(a_) + "," + std::to_string(b_) + "]";
    }

private:
    void require_nonempty() const {
        if (empty_) throw std::logic_error("WeightInterval: endpoint of Empty");
    }

    bool empty_;
    long long a_, b_;
};

} // namespace arrange
