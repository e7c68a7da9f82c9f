#include "qfray/expansion.hpp"

#include "qfray/checked.hpp"

#include <exception>
#include <stdexcept>

namespace qfray {

QExpansion QExpansion::one()
{
    QExpansion e;
    e.add(StrictPartition{}, 1);
    return e;
}

void QExpansion::add(const StrictPartition& nu, std::int64_t c)
{
    if (c == 0)
        return;
    if (!terms_.empty() && terms_.begin()->first.size() != nu.size())
        throw std::invalid_argument("expansion terms must share one degree");
    auto [it, inserted] = terms_.try_emplace(nu, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

std::int64_t QExpansion::coefficient(const StrictPartition& nu) const
{
    auto it = terms_.find(nu);
    return it == terms_.end() ? 0 : it->second;
}

std::string QExpansion::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [nu, c] : terms_) {
        std::string mag = c < 0 ? std::to_string(c).substr(1) : std::to_string(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        out += mag + "*Q[" + nu.str() + "]";
    }
    return out;
}

MonomialSeries::MonomialSeries(int variables) : vars_(variables)
{
    if (variables < 1)
        throw std::invalid_argument("a series needs at least one variable");
}

void MonomialSeries::add(const Exponents& e, std::int64_t c)
{
    if (static_cast<int>(e.size()) != vars_)
        throw std::invalid_argument("exponent vector has the wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second = checked_add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

std::int64_t MonomialSeries::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::pair<MonomialSeries::Exponents, std::int64_t> MonomialSeries::leading() const
{
    if (terms_.empty())
        throw std::logic_error("zero series has no leading term");
    return *terms_.rbegin();
}

std::string MonomialSeries::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += std::to_string(it->second);
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0)
                continue;
            out += "*x" + std::to_string(i + 1);
            if (e != 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

QExpansion q_expansion_serial(const ShiftedSkewShape& shape, LrOptions opts)
{
    QExpansion out;
    for (const auto& nu : strict_partitions(shape.size()))
        out.add(nu, count_ballot_tableaux(shape, nu, opts));
    return out;
}

QExpansion q_expansion(const ShiftedSkewShape& shape, LrOptions opts)
{
    auto nus = strict_partitions(shape.size());
    std::vector<std::int64_t> coeffs(nus.size(), 0);
    std::exception_ptr error;
    const auto count = static_cast<long>(nus.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            coeffs[static_cast<std::size_t>(i)] = count_ballot_tableaux(shape, nus[static_cast<std::size_t>(i)], opts);
        } catch (...) {
#pragma omp critical(qfray_expansion_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    QExpansion out;
    for (std::size_t i = 0; i < nus.size(); ++i)
        out.add(nus[i], coeffs[i]);
    return out;
}

MonomialSeries expansion_to_series(const QExpansion& exp, int m)
{
    MonomialSeries out(m);
    for (const auto& [nu, c] : exp.terms()) {
        auto straight = monomial_series(ShiftedSkewShape::from_partitions(nu, {}), m);
        for (const auto& [e, d] : straight.terms())
            out.add(e, checked_mul(c, d));
    }
    return out;
}

std::string fingerprint(const ShiftedSkewShape& shape, LrOptions opts)
{
    return q_expansion(shape, opts).str();
}

QExpansion subtract(const QExpansion& a, const QExpansion& b)
{
    QExpansion out = a;
    for (const auto& [nu, c] : b.terms())
        out.add(nu, checked_sub(0, c));
    return out;
}

QExpansion q_diff(const ShiftedSkewShape& d, const ShiftedSkewShape& e, LrOptions opts)
{
    if (d.size() != e.size())
        throw std::invalid_argument("q_diff needs shapes of equal size");
    return subtract(q_expansion(d, opts), q_expansion(e, opts));
}

bool is_q_positive(const QExpansion& exp)
{
    for (const auto& [nu, c] : exp.terms())
        if (c < 0)
            return false;
    return true;
}

QExpansion q_product(const QExpansion& a, const QExpansion& b, LrOptions opts)
{
    QExpansion out;
    for (const auto& [nu, c] : a.terms())
        for (const auto& [rho, d] : b.terms()) {
            std::int64_t cd = checked_mul(c, d);
            for (const auto& lambda : strict_partitions(nu.size() + rho.size())) {
                if (!contains(lambda, nu))
                    continue;
                std::int64_t f = lr_coefficient(lambda, nu, rho, opts);
                if (f == 0)
                    continue;
                int e = nu.length() + rho.length() - lambda.length();
                if (e < 0)
                    throw std::logic_error("product term Q[" + lambda.str() + "] needs a negative power of two");
                out.add(lambda, checked_mul(cd, checked_mul(checked_pow2(e), f)));
            }
        }
    return out;
}

} // namespace qfray
