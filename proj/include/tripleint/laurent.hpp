#ifndef TRIPLEINT_LAURENT_HPP
#define TRIPLEINT_LAURENT_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "tripleint/qpolynomial.hpp"

namespace tripleint {

/// Sparse Laurent polynomial in N variables with coefficients in Z[q].
///
/// Terms are a map from exponent vectors to nonzero QPolynomial
/// coefficients; map ordering makes iteration (and hence printing and
/// constant-term extraction) deterministic. Exponents are machine integers
/// with an explicit range check on every multiply; the workloads here stay
/// far below the bound.
template <int N>
class LaurentPoly {
  public:
    using Exponents = std::array<std::int32_t, N>;
    static constexpr std::int32_t kMaxExponent = 1 << 20;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(QPolynomial c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
        return p;
    }

    static LaurentPoly one() { return constant(QPolynomial::one()); }

    static LaurentPoly monomial(QPolynomial c, const Exponents& e) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, QPolynomial>& terms() const { return terms_; }

    void add_term(const Exponents& e, const QPolynomial& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int k = 0; k < N; ++k) {
                    e[k] = ea[k] + eb[k];
                    if (std::abs(e[k]) > kMaxExponent)
                        throw std::overflow_error("Laurent exponent out of range");
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Coefficient at the zero exponent vector (the constant term).
    QPolynomial constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? QPolynomial() : it->second;
    }

    /// True when every exponent vector sums to zero (degree-0 homogeneity,
    /// the invariant of products built from ratios y_i/y_j).
    bool is_homogeneous() const {
        for (const auto& [e, c] : terms_) {
            if (std::accumulate(e.begin(), e.end(), std::int64_t{0}) != 0) return false;
        }
        return true;
    }

    std::string str(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << "(" << c.str() << ")";
            for (int k = 0; k < N; ++k) {
                if (e[k] == 0) continue;
                out << "*" << names[k];
                if (e[k] != 1) out << "^" << e[k];
            }
        }
        return out.str();
    }

  private:
    std::map<Exponents, QPolynomial> terms_;
};

using Laurent1 = LaurentPoly<1>;
using Laurent2 = LaurentPoly<2>;
using Laurent3 = LaurentPoly<3>;

inline QPolynomial laurent_ct(const Laurent3& f) { return f.constant_term(); }

/// Substitute y3 = 1 in a degree-0 homogeneous 3-variable Laurent
/// polynomial. The third exponent is recoverable as -(e1+e2), so this loses
/// nothing while cutting expansion cost by one dimension.
Laurent2 reduce_homogeneous(const Laurent3& f);

} // namespace tripleint

#endif
