#ifndef TMAT_POLY_HPP
#define TMAT_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace tmat {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in up to three named variables with exact
/// integer coefficients. Variables are kept sorted by name; exponent
/// vectors may be negative. No zero coefficient is ever stored.
class SparsePoly {
public:
    using Exps = std::array<int, 3>;

    SparsePoly() = default;                 // zero
    explicit SparsePoly(const BigInt& c);   // constant
    explicit SparsePoly(long c);

    static SparsePoly variable(const std::string& name, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Exps, BigInt>& terms() const { return terms_; }

    /// Coefficient of the given exponent vector (aligned to vars()).
    BigInt coeff(const Exps& e) const;
    /// Constant term.
    BigInt constant_term() const { return coeff({0, 0, 0}); }

    void add_term(const std::vector<std::pair<std::string, int>>& monomial, const BigInt& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const SparsePoly& b) { return a *= b; }

    bool operator==(const SparsePoly& o) const;

    /// base^e. Negative e only for single-term monomials with unit coefficient
    /// magnitude (e.g. (-A^3)^-1); throws input_error otherwise.
    SparsePoly pow(int e) const;

    /// Replace `var` by `value`. All exponents of `var` must be >= 0.
    SparsePoly substitute(const std::string& var, const SparsePoly& value) const;

    /// Evaluate at integer points; every variable must be assigned and all
    /// exponents must be >= 0.
    BigInt eval(const std::map<std::string, BigInt>& point) const;

    /// Human-readable form, terms in descending graded-lex order,
    /// e.g. "3*zeta + 3" or "-A^3".
    std::string pretty() const;

    /// {"vars":[...],"terms":[[coeff,[e...]],...]} with decimal-string
    /// coefficients, terms in ascending graded-lex order.
    nlohmann::json to_json() const;
    static SparsePoly from_json(const nlohmann::json& j);

private:
    std::vector<std::string> vars_; // sorted, size <= 3
    std::map<Exps, BigInt> terms_;  // exponents aligned to vars_, tail zero

    void insert(const Exps& e, const BigInt& c);
    void remap_vars(const std::vector<std::string>& new_vars);
    static std::vector<std::string> merged_vars(const SparsePoly& a, const SparsePoly& b);
    void drop_unused_vars();
};

} // namespace tmat

#endif
