#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsra/rational.hpp"

namespace lsra {

using VarId = uint32_t;

/// Non-multilinear input (some variable with exponent > 1). Carries the
/// offending variable's name when known.
class NonMultilinearError : public std::runtime_error {
public:
    explicit NonMultilinearError(std::string var)
        : std::runtime_error("non-multilinear atom: variable '" + var + "' has exponent > 1"),
          var_(std::move(var)) {}
    const std::string& var() const { return var_; }

private:
    std::string var_;
};

/// Product of distinct real variables; empty set = the constant monomial.
/// Multilinearity (every exponent 1) is structural: vars are strictly sorted.
struct Monomial {
    std::vector<VarId> vars; // strictly ascending

    bool is_constant() const { return vars.empty(); }
    bool contains(VarId x) const;
    size_t degree() const { return vars.size(); }

    bool operator==(const Monomial& o) const { return vars == o.vars; }
    bool operator<(const Monomial& o) const; // degree, then lexicographic

    /// Union of variable sets; throws NonMultilinearError on a shared
    /// variable (an exponent would exceed 1). `var_name` resolves ids for
    /// the error message.
    static Monomial product(const Monomial& a, const Monomial& b,
                            const std::vector<std::string>& var_names);
};

/// Multilinear polynomial as coefficient map over monomials, no zero
/// coefficients stored, terms kept sorted for deterministic iteration.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial variable(VarId x);

    /// Adds c * m, collecting like terms and dropping zeros.
    void add_term(const Monomial& m, const Rational& c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the only term is the constant monomial (or zero).
    bool is_constant() const;
    Rational constant_part() const;
    /// Polynomial with the constant monomial removed.
    Polynomial without_constant() const;

    bool contains_var(VarId x) const;
    std::vector<VarId> variables() const; // ascending, distinct

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    /// Distributive product; throws NonMultilinearError if any variable's
    /// exponent would exceed 1.
    Polynomial multiply(const Polynomial& o, const std::vector<std::string>& var_names) const;

    bool operator==(const Polynomial& o) const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    std::vector<Term> terms_; // sorted by Monomial, no zero coeffs
};

struct Assignment; // fwd (assignment.hpp)

/// Exact value of p under a complete assignment.
Rational poly_eval(const Polynomial& p, const Assignment& alpha);

/// Coefficients of the affine restriction p = a*x + b once all variables
/// but x are fixed by alpha (multilinearity makes p affine in x). a may be 0.
struct AffineRestriction {
    Rational a;
    Rational b;
};
AffineRestriction linearize(const Polynomial& p, VarId x, const Assignment& alpha);

} // namespace lsra
