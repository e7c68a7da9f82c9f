#pragma once

#include "qfray/partition.hpp"
#include "qfray/shape.hpp"
#include "qfray/tableau.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qfray {

/// Integer combination of straight-shape Schur Q functions. Keys iterate in
/// descending lexicographic order; zero coefficients are never stored.
class QExpansion {
public:
    using Terms = std::map<StrictPartition, std::int64_t, std::greater<>>;

    QExpansion() = default;

    /// The degree-0 unit Q_{()}.
    static QExpansion one();

    /// Adds c to the coefficient of nu. Throws std::invalid_argument if nu has a
    /// different size from the existing keys.
    void add(const StrictPartition& nu, std::int64_t c);
    std::int64_t coefficient(const StrictPartition& nu) const;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Size of the keys, or -1 for the zero expansion.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

    /// "1*Q[6 2] + 2*Q[5 3]"; negative terms use " - "; the zero expansion is "0".
    std::string str() const;

    bool operator==(const QExpansion&) const = default;

private:
    Terms terms_;
};

/// Integer polynomial in a fixed number of variables, keyed by exponent vector.
class MonomialSeries {
public:
    using Exponents = std::vector<int>;

    explicit MonomialSeries(int variables = 1);

    int variables() const { return vars_; }
    void add(const Exponents& e, std::int64_t c);
    std::int64_t coefficient(const Exponents& e) const;
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lexicographically greatest exponent vector with its coefficient.
    /// Throws std::logic_error on the zero series.
    std::pair<Exponents, std::int64_t> leading() const;

    std::string str() const;

    bool operator==(const MonomialSeries&) const = default;

private:
    int vars_;
    std::map<Exponents, std::int64_t> terms_;
};

struct LrOptions {
    /// Cut walks that cannot return to the x axis, and restrict the top row to 1'/1.
    bool prune = true;
};

/// Number of ballot tableaux (semistandard, canonical, ballot reading word)
/// of the given shape and content nu. Throws std::invalid_argument if the sizes differ.
std::int64_t count_ballot_tableaux(const ShiftedSkewShape& shape, const StrictPartition& nu, LrOptions opts = {});

/// Visits each ballot tableau; return false to stop.
void enumerate_ballot_tableaux(const ShiftedSkewShape& shape, const StrictPartition& nu, LrOptions opts,
                               const TableauVisitor& visit);

/// Coefficient of Q_nu in Q_{lambda/mu}. Throws std::invalid_argument unless
/// mu is contained in lambda and |mu| + |nu| == |lambda|.
std::int64_t lr_coefficient(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                            LrOptions opts = {});

/// Expansion of Q_shape over all strict nu, one task per nu on the OpenMP pool.
QExpansion q_expansion(const ShiftedSkewShape& shape, LrOptions opts = {});
/// Single-threaded loop over nu; same result as q_expansion.
QExpansion q_expansion_serial(const ShiftedSkewShape& shape, LrOptions opts = {});

/// Sum of x^T over all tableaux with values at most m, by a forward pass over
/// reading order that only remembers the cells still needed by later cells.
MonomialSeries monomial_series(const ShiftedSkewShape& shape, int m);
/// Same sum, accumulated tableau by tableau.
MonomialSeries monomial_series_reference(const ShiftedSkewShape& shape, int m);

/// Sum of c * Q_nu(x_1..x_m) over the expansion.
MonomialSeries expansion_to_series(const QExpansion& exp, int m);

/// Canonical text of q_expansion(shape).
std::string fingerprint(const ShiftedSkewShape& shape, LrOptions opts = {});

/// Q_d - Q_e. Throws std::invalid_argument if the sizes differ.
QExpansion q_diff(const ShiftedSkewShape& d, const ShiftedSkewShape& e, LrOptions opts = {});
QExpansion subtract(const QExpansion& a, const QExpansion& b);

/// No negative coefficient. The zero expansion counts as positive.
bool is_q_positive(const QExpansion& exp);

/// Product in the Q basis: Q_nu Q_rho = sum 2^(l(nu)+l(rho)-l(lambda)) f^lambda_{nu rho} Q_lambda.
/// Throws std::logic_error if a nonzero term would need a negative power of two.
QExpansion q_product(const QExpansion& a, const QExpansion& b, LrOptions opts = {});

} // namespace qfray
