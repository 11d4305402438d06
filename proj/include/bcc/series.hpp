#pragma once

#include <map>

#include "bcc/bigint.hpp"

namespace bcc {

// One coefficient of the two-variable counting series. `count` is the number
// of paths at a given transmitted distance; `weight` their total input
// weight (the partial derivative of the series in the input variable,
// evaluated at 1). The pair multiplies by the product rule.
struct SeriesTerm {
    BigUint count;
    BigUint weight;

    bool is_zero() const { return count.is_zero(); }

    SeriesTerm& operator+=(const SeriesTerm& rhs) {
        count += rhs.count;
        weight += rhs.weight;
        return *this;
    }
    friend SeriesTerm operator*(const SeriesTerm& a, const SeriesTerm& b) {
        return {a.count * b.count, a.weight * b.count + b.weight * a.count};
    }
    bool operator==(const SeriesTerm&) const = default;
};

// Sparse polynomial in the distance variable: map d -> SeriesTerm, truncated
// at d_max. Zero-count terms are never stored.
class SeriesPolynomial {
  public:
    explicit SeriesPolynomial(int d_max) : d_max_(d_max) {}

    int truncation() const { return d_max_; }
    bool empty() const { return terms_.empty(); }
    const std::map<int, SeriesTerm>& terms() const { return terms_; }

    // Accumulates; silently drops degrees beyond the truncation bound.
    void add(int d, const SeriesTerm& term) {
        if (d > d_max_ || term.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(d, term);
        if (!inserted) it->second += term;
    }

    const SeriesTerm* term_at(int d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? nullptr : &it->second;
    }

  private:
    int d_max_;
    std::map<int, SeriesTerm> terms_;
};

}  // namespace bcc
