#pragma once

#include "isingff/series.hpp"

#include <vector>

namespace isingff {

// s_0(t) + s_1(t) ln t + s_2(t) ln^2 t + ...
// Products of log-bearing solutions need the higher channels, so the channel
// list grows on demand; plain u2-style values use exactly two channels.
// ln t is never expanded: channels are only carried, combined, and tested.
class LogSeries {
  public:
    LogSeries() = default;
    explicit LogSeries(Series analytic) { ch_.push_back(std::move(analytic)); }
    LogSeries(Series analytic, Series logpart);
    explicit LogSeries(std::vector<Series> channels);

    static LogSeries zero(int order) { return LogSeries(Series::zero(order)); }

    const Series& analytic() const { return ch_[0]; }
    // coefficient series of ln^k t (zero series beyond stored channels)
    Series channel(int k) const;
    int channels() const { return static_cast<int>(ch_.size()); }
    int order() const;
    bool is_zero() const;
    bool log_free() const; // all channels above the analytic one vanish

    LogSeries operator+(const LogSeries& o) const;
    LogSeries operator-(const LogSeries& o) const;
    LogSeries operator-() const;
    LogSeries operator*(const LogSeries& o) const;
    LogSeries operator*(const Series& s) const;
    LogSeries operator*(const Rational& s) const;

    LogSeries shifted(int k) const;
    LogSeries derivative() const; // d/dt(s ln^k t) = s' ln^k t + k s/t ln^(k-1) t
    LogSeries div_poly(const Poly& p) const;
    LogSeries truncated(int order) const;

  private:
    void squeeze();
    std::vector<Series> ch_;
};

} // namespace isingff
